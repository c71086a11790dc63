//! Negacyclic codes of length n = 2^k. Here R_n is local with maximal ideal
//! `<u, x+1>`, and every code has one of the shapes listed in [`CodeType`].

mod descriptor;
mod enumerate;
pub mod formulas;
mod params;

pub use descriptor::{basis_text, CodeDescriptor, CodeType, GeneratorPair, HClass};
pub use enumerate::{
    candidates, check_length, enumerate_codes, Catalog, CatalogEntry, Collapsed, MAX_K,
};
pub use params::{compute_t, compute_t1};
mod verify;

pub use verify::{
    verify, xp1_exponent, CheckTally, CodeRow, Discrepancy, TableRowCheck, VerifyReport,
    REFERENCE_TABLE_N2,
};
