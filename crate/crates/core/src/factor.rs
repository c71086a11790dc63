//! Factorization of x^n - 1 over F2 (n odd), Hensel lifting to Z4 by Graeffe's
//! root-squaring, and the induced factorization of x^n + 1.
//!
//! The lifts live in Z4[x] and embed into R[x] unchanged; the lift of a binary
//! factor is unique, so no separate lifting over R is needed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyF2, PolyZ4};
use crate::ring::{Scalar, Z4};

/// Largest extension degree ord_n(2) we are willing to build GF(2^r) for.
const MAX_EXTENSION_DEGREE: u32 = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSet {
    pub n: usize,
    /// Monic irreducible factors of x^n - 1 over F2.
    #[serde(serialize_with = "ser_polys")]
    pub f2_factors: Vec<PolyF2>,
    /// Hensel lifts; `z4_factors[i] mod 2 == f2_factors[i]`.
    #[serde(serialize_with = "ser_polys")]
    pub z4_factors: Vec<PolyZ4>,
    /// Monic images of the lifts under x -> -x; their product is x^n + 1.
    #[serde(serialize_with = "ser_polys")]
    pub nega_factors: Vec<PolyZ4>,
}

fn ser_polys<S: Scalar, Ser: serde::Serializer>(
    polys: &[Poly<S>],
    ser: Ser,
) -> std::result::Result<Ser::Ok, Ser::Error> {
    ser.collect_seq(polys.iter().map(|p| p.to_string()))
}

fn check_odd(n: usize) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    Ok(())
}

/// Orbits of {0, .., n-1} under multiplication by 2 mod n, ordered by least element.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<Vec<usize>>> {
    check_odd(n)?;
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            coset.push(j);
            j = (2 * j) % n;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Multiplicative order of 2 modulo odd n (1 for n = 1).
fn order_of_two(n: usize) -> u32 {
    if n == 1 {
        return 1;
    }
    let mut r = 1;
    let mut v = 2 % n;
    while v != 1 {
        v = (v * 2) % n;
        r += 1;
    }
    r
}

/// GF(2^r) with elements as bit vectors modulo an irreducible polynomial.
struct BinaryField {
    degree: u32,
    modulus: u64,
}

impl BinaryField {
    fn new(degree: u32) -> Self {
        let modulus = (1u64 << degree..1u64 << (degree + 1))
            .find(|&p| p & 1 == 1 && is_irreducible_f2(p))
            .expect("irreducible polynomials exist in every degree");
        BinaryField { degree, modulus }
    }

    fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.degree & 1 == 1 {
                a ^= self.modulus;
            }
        }
        acc
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Some element of multiplicative order exactly `n` (n | 2^r - 1).
    fn element_of_order(&self, n: u64) -> u64 {
        let group = (1u64 << self.degree) - 1;
        let primes = prime_factors(n);
        (2..=group)
            .map(|y| self.pow(y, group / n))
            .find(|&z| primes.iter().all(|&p| self.pow(z, n / p) != 1))
            .unwrap_or(1)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn f2_mod(mut a: u64, m: u64) -> u64 {
    let dm = 63 - m.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= dm {
        a ^= m << (63 - a.leading_zeros() - dm);
    }
    a
}

fn is_irreducible_f2(p: u64) -> bool {
    let deg = 63 - p.leading_zeros();
    (2u64..1 << (deg / 2 + 1))
        .filter(|&d| 63 - d.leading_zeros() <= deg / 2)
        .all(|d| f2_mod(p, d) != 0)
}

/// Monic irreducible factors of x^n - 1 over F2, one minimal polynomial per
/// cyclotomic coset, sorted by (degree, coefficients).
pub fn factor_f2(n: usize) -> Result<Vec<PolyF2>> {
    let cosets = cyclotomic_cosets(n)?;
    let r = order_of_two(n);
    if r > MAX_EXTENSION_DEGREE {
        return Err(Error::Precondition(format!(
            "ord_{n}(2) = {r} exceeds the supported extension degree"
        )));
    }
    let field = BinaryField::new(r);
    let xi = field.element_of_order(n as u64);
    let mut factors: Vec<PolyF2> = cosets
        .iter()
        .map(|coset| {
            // prod_{j in coset} (x - xi^j), coefficients in GF(2^r), low degree first
            let mut poly = vec![1u64];
            for &j in coset {
                let root = field.pow(xi, j as u64);
                let mut next = vec![0u64; poly.len() + 1];
                for (i, &c) in poly.iter().enumerate() {
                    next[i + 1] ^= c;
                    next[i] ^= field.mul(c, root);
                }
                poly = next;
            }
            debug_assert!(poly.iter().all(|&c| c <= 1));
            PolyF2::from_ints(&poly.iter().map(|&c| c as i64).collect::<Vec<_>>())
        })
        .collect();
    sort_factors(&mut factors);
    Ok(factors)
}

fn sort_factors<S: Scalar>(factors: &mut [Poly<S>]) {
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
}

/// One Graeffe step: F with F(x^2) = +-f(x) f(-x), sign chosen so F is monic.
fn graeffe_step(f: &PolyZ4) -> PolyZ4 {
    let even = PolyZ4::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c } else { Z4::ZERO })
            .collect(),
    );
    let odd = f.sub(&even);
    let sq = even.mul(&even).sub(&odd.mul(&odd));
    let next = PolyZ4::new(sq.coeffs().iter().step_by(2).copied().collect());
    if next.leading() == -Z4::ONE {
        next.neg()
    } else {
        next
    }
}

/// The unique monic divisor of x^n - 1 over Z4 reducing to `g` mod 2.
pub fn hensel_lift_z4(g: &PolyF2, n: usize) -> Result<PolyZ4> {
    check_odd(n)?;
    let target = PolyZ4::x_pow_plus(n, -1);
    let mut f = g.to_z4();
    // the step is independent of the starting lift, so this settles after one pass
    for _ in 0..8 {
        let next = graeffe_step(&f);
        if next == f {
            break;
        }
        f = next;
    }
    if f.to_f2() != *g || !f.is_monic() || !f.divides(&target)? {
        return Err(Error::NotADivisor(f.to_string(), n));
    }
    Ok(f)
}

/// Factor lists of x^n - 1 over F2 and Z4 and of x^n + 1 over Z4, index-aligned.
pub fn negacyclic_factors(n: usize) -> Result<FactorSet> {
    let f2_factors = factor_f2(n)?;
    let z4_factors = f2_factors
        .iter()
        .map(|g| hensel_lift_z4(g, n))
        .collect::<Result<Vec<_>>>()?;
    let nega_factors = z4_factors
        .iter()
        .map(|f| {
            let h = f.phi_negate();
            if h.leading() == -Z4::ONE {
                h.neg()
            } else {
                h
            }
        })
        .collect();
    Ok(FactorSet {
        n,
        f2_factors,
        z4_factors,
        nega_factors,
    })
}

pub fn product<S: Scalar>(polys: &[Poly<S>]) -> Poly<S> {
    polys.iter().fold(Poly::one(), |acc, p| acc.mul(p))
}
