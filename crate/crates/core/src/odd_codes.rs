//! Odd-length negacyclic codes `C = <g + up, ua>` over R.
//!
//! Degrees of the zero residue are taken as n, so a zero generator contributes
//! no shifts to a spanning family.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{negacyclic_factors, product};
use crate::oracle::{r_span, z4_closure, IdealSpan, Submodule};
use crate::poly::{Modulus, PolyR, PolyZ4, Residue};
use crate::ring::{RElem, Z4};

fn check_odd(n: usize) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    Ok(())
}

fn reduce(f: &PolyZ4, n: usize) -> PolyZ4 {
    Residue::from_poly(f, n, Modulus::Nega).to_poly()
}

fn degree_or_n(f: &PolyZ4, n: usize) -> usize {
    f.degree().unwrap_or(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCode {
    pub n: usize,
    pub g: PolyZ4,
    pub p: PolyZ4,
    pub a: PolyZ4,
}

impl OddCode {
    /// All three polynomials are reduced mod x^n + 1.
    pub fn new(n: usize, g: &PolyZ4, p: &PolyZ4, a: &PolyZ4) -> Result<Self> {
        check_odd(n)?;
        Ok(OddCode {
            n,
            g: reduce(g, n),
            p: reduce(p, n),
            a: reduce(a, n),
        })
    }

    /// The code `<gen, ua>` with `gen = g + up` split into its parts.
    pub fn from_generator(n: usize, gen: &PolyR, a: &PolyZ4) -> Result<Self> {
        let (g, p) = gen.split_u();
        Self::new(n, &g, &p, a)
    }

    /// k1 = deg g.
    pub fn k1(&self) -> usize {
        degree_or_n(&self.g, self.n)
    }

    /// k2 = deg a.
    pub fn k2(&self) -> usize {
        degree_or_n(&self.a, self.n)
    }

    fn z4(&self, f: &PolyZ4) -> Residue<Z4> {
        Residue::from_poly(f, self.n, Modulus::Nega)
    }

    /// `g + up`.
    pub fn first(&self) -> Residue<RElem> {
        Residue::from_z4_parts(&self.z4(&self.g), &self.z4(&self.p))
    }

    /// `ua`.
    pub fn second(&self) -> Residue<RElem> {
        self.z4(&self.a).to_r().scale(RElem::U)
    }

    pub fn span(&self) -> Result<IdealSpan> {
        IdealSpan::closure(self.n, &[self.first(), self.second()])
    }

    /// g mod 2 is nonzero.
    pub fn g_is_regular(&self) -> bool {
        !self.g.to_f2().is_zero()
    }
}

impl std::fmt::Display for OddCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "<{}, u*({})>",
            PolyR::from_parts(&self.g, &self.p),
            self.a
        )
    }
}

/// Number of negacyclic codes of odd length n: 7^m for m factors of x^n + 1.
pub fn count_codes(n: usize) -> Result<u128> {
    let m = negacyclic_factors(n)?.nega_factors.len();
    Ok(7u128.pow(m as u32))
}

/// Number of ideals of R[x]/(x^n + 1) for odd n. A factor of degree d gives a
/// local component with residue field F_{2^d} and maximal ideal M = <2, u>,
/// M^2 = <2u>, M/M^2 of dimension 2: its ideals are 0, M^2, the 2^d + 1 lines,
/// M and the whole component, so 2^d + 5 in all.
pub fn count_ideals(n: usize) -> Result<u128> {
    Ok(negacyclic_factors(n)?
        .nega_factors
        .iter()
        .map(|f| (1u128 << f.degree().unwrap_or(0)) + 5)
        .product())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpanningBranch {
    /// Rank 2n - k1 - k2, shifts (n - k1, n - k2).
    General,
    /// g regular and a monic: rank n - k2, shifts (n - k1, k1 - k2).
    RegularMonic,
}

#[derive(Clone, Debug)]
pub struct Spanning {
    pub branch: SpanningBranch,
    pub rank: usize,
    /// Number of shifts `x^i (g + up)`.
    pub first_shifts: usize,
    /// Number of shifts `x^i ua`.
    pub second_shifts: usize,
    pub family: Vec<Residue<RElem>>,
}

impl Spanning {
    /// R-linear span of the family.
    pub fn span(&self, n: usize) -> Submodule {
        r_span(n, &self.family)
    }
}

/// Rank and spanning family read off the generator degrees.
pub fn rank_and_spanning(code: &OddCode) -> Result<Spanning> {
    let (first, second) = (code.first(), code.second());
    if first.is_zero() && code.a.is_zero() {
        return Err(Error::DegenerateGenerators);
    }
    let (n, k1, k2) = (code.n, code.k1(), code.k2());
    let (branch, first_shifts, second_shifts) = if code.g_is_regular() && code.a.is_monic() {
        if k1 < k2 {
            return Err(Error::Precondition(format!(
                "g regular and a monic need deg a <= deg g, got {k2} > {k1}"
            )));
        }
        (SpanningBranch::RegularMonic, n - k1, k1 - k2)
    } else {
        (SpanningBranch::General, n - k1, n - k2)
    };
    let family = (0..first_shifts)
        .map(|i| first.shift(i))
        .chain((0..second_shifts).map(|i| second.shift(i)))
        .collect();
    Ok(Spanning {
        branch,
        rank: first_shifts + second_shifts,
        first_shifts,
        second_shifts,
        family,
    })
}

/// No member of `family` lies in the R-span of the others. Single removals
/// suffice: a spanning proper subset omits some member.
pub fn is_minimal_spanning(n: usize, family: &[Residue<RElem>]) -> bool {
    (0..family.len()).all(|i| {
        let rest: Vec<_> = family
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, f)| f.clone())
            .collect();
        !r_span(n, &rest).contains(&crate::oracle::to_vector(&family[i]))
    })
}

/// Monic divisors of x^n + 1 over Z4: products of subsets of the negacyclic factors,
/// sorted by degree then coefficients.
pub fn nega_divisors(n: usize) -> Result<Vec<PolyZ4>> {
    let factors = negacyclic_factors(n)?.nega_factors;
    let mut out: Vec<PolyZ4> = (0..1u32 << factors.len())
        .map(|mask| {
            let chosen: Vec<PolyZ4> = factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, f)| f.clone())
                .collect();
            product(&chosen)
        })
        .collect();
    out.sort_by_key(|f| {
        (
            f.degree(),
            f.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>(),
        )
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Freeness {
    pub free: bool,
    /// Monic divisor of x^n + 1 generating the code.
    #[serde(serialize_with = "ser_opt_poly")]
    pub generator: Option<PolyZ4>,
    pub free_rank: Option<usize>,
}

fn ser_opt_poly<S: serde::Serializer>(
    p: &Option<PolyZ4>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => ser.serialize_some(&p.to_string()),
        None => ser.serialize_none(),
    }
}

/// `<gen>` is free iff it has a monic generator dividing x^n + 1. Monic divisors
/// over R are the Hensel lifts, so the candidates are [`nega_divisors`]; a
/// candidate generates `<gen>` iff it is a unit multiple of gen.
pub fn is_free(n: usize, gen: &PolyR) -> Result<Freeness> {
    check_odd(n)?;
    let target = IdealSpan::principal(&Residue::from_poly(gen, n, Modulus::Nega));
    let xn1 = PolyZ4::x_pow_plus(n, 1);
    for d in nega_divisors(n)? {
        if d.degree() == Some(n) {
            // d = x^n + 1 is zero in R_n
            if target.size_log2() == 0 {
                return Ok(Freeness {
                    free: true,
                    generator: Some(d),
                    free_rank: Some(0),
                });
            }
            continue;
        }
        let span = IdealSpan::principal(&Residue::from_poly(&d.to_r(), n, Modulus::Nega));
        if span == target && d.is_monic() && d.divides(&xn1)? {
            let rank = n - d.degree().unwrap_or(0);
            return Ok(Freeness {
                free: true,
                generator: Some(d),
                free_rank: Some(rank),
            });
        }
    }
    Ok(Freeness {
        free: false,
        generator: None,
        free_rank: None,
    })
}

/// Residue code (Z4 parts of codewords) and torsion code `{b : ub in C}`.
pub fn res_tor(code: &OddCode) -> Result<(Submodule, Submodule)> {
    let span = code.span()?;
    Ok((span.res(), span.tor()))
}

/// `C = C1 + uC2`: C1 the Z4 parts of codewords, C2 the torsion code.
pub fn component_split(span: &IdealSpan) -> (Submodule, Submodule) {
    (span.res(), span.tor())
}

/// Closed under `(c_0, .., c_{n-1}) -> (-c_{n-1}, c_0, .., c_{n-2})`.
pub fn is_negacyclic(m: &Submodule) -> bool {
    let n = m.ncols();
    m.rows().iter().all(|r| {
        let mut s = vec![(4 - r[n - 1]) & 3];
        s.extend_from_slice(&r[..n - 1]);
        m.contains(&s)
    })
}

/// Z4 span of the negacyclic shifts of `gens`.
pub fn z4_code(n: usize, gens: &[PolyZ4]) -> Submodule {
    let gens: Vec<Residue<Z4>> = gens
        .iter()
        .map(|g| Residue::from_poly(g, n, Modulus::Nega))
        .collect();
    z4_closure(n, &gens)
}

/// Z4 code `<f>` is free iff some monic divisor of x^n + 1 generates it.
pub fn z4_code_is_free(n: usize, m: &Submodule) -> Result<bool> {
    Ok(nega_divisors(n)?
        .iter()
        .any(|d| z4_code(n, std::slice::from_ref(d)) == *m))
}
