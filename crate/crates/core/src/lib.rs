//! Negacyclic codes over R = Z4 + uZ4 (u^2 = 0).
//!
//! * [`ring`] and [`poly`]: exact arithmetic in F2, Z4, R and their residue rings.
//! * [`factor`]: factorization of x^n - 1 over F2, lifting to Z4, and the
//!   negacyclic factors of x^n + 1 for odd n.
//! * [`odd_codes`]: odd-length codes `<g + up, ua>`: counts, ranks, freeness.
//! * [`pow2`]: the classification of codes of length 2^k, their annihilators,
//!   duals, sizes, and self-duality.
//! * [`oracle`]: formula-free ground truth built on Howell forms over Z4.

pub mod error;
pub mod factor;
pub mod odd_codes;
pub mod oracle;
pub mod poly;
pub mod pow2;
pub mod ring;

pub use error::{Error, Result};
pub use poly::{Modulus, Poly, PolyF2, PolyR, PolyZ4, Residue};
pub use ring::{RElem, Scalar, F2, Z4};
