use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::howell::{left_kernel, Submodule};
use crate::error::{Error, Result};
use crate::poly::{Modulus, Residue};
use crate::ring::{RElem, Z4};

/// Largest n for which [`enumerate_ideals`] runs.
pub const ENUMERATION_GUARD: usize = 4;

/// Element of R_n = R[x]/(x^n+1) as a vector in Z4^{2n}: the Z4 part's
/// coefficients followed by the u part's.
pub fn to_vector(f: &Residue<RElem>) -> Vec<u8> {
    assert_eq!(f.modulus(), Modulus::Nega, "oracle works in R[x]/(x^n+1)");
    let mut v: Vec<u8> = f.coeffs().iter().map(|c| c.a0()).collect();
    v.extend(f.coeffs().iter().map(|c| c.a1()));
    v
}

pub fn from_vector(v: &[u8]) -> Residue<RElem> {
    let n = v.len() / 2;
    Residue::from_coeffs(
        (0..n).map(|i| RElem::new(v[i], v[n + i])).collect(),
        n,
        Modulus::Nega,
    )
}

/// Multiplication by x^k on a vector of Z4^{2n}.
fn shift(v: &[u8], k: usize) -> Vec<u8> {
    let n = v.len() / 2;
    let mut out = vec![0u8; 2 * n];
    for half in 0..2 {
        for i in 0..n {
            let j = i + k;
            let mut c = v[half * n + i];
            if (j / n) % 2 == 1 {
                c = (4 - c) & 3;
            }
            out[half * n + j % n] = c;
        }
    }
    out
}

/// Multiplication by u.
fn times_u(v: &[u8]) -> Vec<u8> {
    let n = v.len() / 2;
    let mut out = vec![0u8; 2 * n];
    out[n..].copy_from_slice(&v[..n]);
    out
}

/// Product in R_n on vectors.
fn mul_vectors(a: &[u8], b: &[u8]) -> Vec<u8> {
    let n = a.len() / 2;
    let mut out = vec![0u8; 2 * n];
    for i in 0..n {
        for (half, coef) in [(0, a[i]), (1, a[n + i])] {
            if coef == 0 {
                continue;
            }
            let s = shift(b, i);
            let s = if half == 1 { times_u(&s) } else { s };
            for (o, x) in out.iter_mut().zip(&s) {
                *o = (*o + coef * x) & 3;
            }
        }
    }
    out
}

/// Ideal of R_n in canonical (Howell) form. Equal ideals have equal values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IdealSpan {
    n: usize,
    module: Submodule,
}

impl IdealSpan {
    /// Wraps a module after checking closure under x and u.
    fn from_module(n: usize, module: Submodule) -> Self {
        let span = IdealSpan { n, module };
        assert!(span.is_closed(), "submodule is not an ideal of R_{n}");
        span
    }

    pub fn zero(n: usize) -> Self {
        IdealSpan {
            n,
            module: Submodule::zero(2 * n),
        }
    }

    pub fn full(n: usize) -> Self {
        IdealSpan {
            n,
            module: Submodule::full(2 * n),
        }
    }

    /// The ideal generated by `gens`.
    pub fn closure(n: usize, gens: &[Residue<RElem>]) -> Result<Self> {
        for g in gens {
            if g.n() != n {
                return Err(Error::MixedLengths(n, g.n()));
            }
        }
        let vectors: Vec<Vec<u8>> = gens.iter().map(to_vector).collect();
        Ok(Self::closure_of_vectors(n, &vectors))
    }

    fn closure_of_vectors(n: usize, gens: &[Vec<u8>]) -> Self {
        // R-coefficients are Z4-combinations of 1 and u, so x^i g and u x^i g suffice
        let rows = gens.iter().flat_map(|g| {
            (0..n).flat_map(move |i| {
                let s = shift(g, i);
                let us = times_u(&s);
                [s, us]
            })
        });
        Self::from_module(n, Submodule::new(rows, 2 * n))
    }

    pub fn principal(g: &Residue<RElem>) -> Self {
        Self::closure_of_vectors(g.n(), &[to_vector(g)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn module(&self) -> &Submodule {
        &self.module
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        self.module.rows()
    }

    pub fn size(&self) -> u128 {
        self.module.size()
    }

    pub fn size_log2(&self) -> u32 {
        self.module.size_log2()
    }

    pub fn is_closed(&self) -> bool {
        self.module
            .rows()
            .iter()
            .all(|r| self.module.contains(&shift(r, 1)) && self.module.contains(&times_u(r)))
    }

    pub fn contains(&self, f: &Residue<RElem>) -> bool {
        self.module.contains(&to_vector(f))
    }

    pub fn contains_ideal(&self, other: &IdealSpan) -> bool {
        self.module.contains_all(&other.module)
    }

    pub fn sum(&self, other: &IdealSpan) -> IdealSpan {
        assert_eq!(self.n, other.n);
        IdealSpan {
            n: self.n,
            module: self.module.sum(&other.module),
        }
    }

    /// Generators as residues (the Howell rows).
    pub fn generators(&self) -> Vec<Residue<RElem>> {
        self.rows().iter().map(|r| from_vector(r)).collect()
    }

    /// `{f : f g = 0 for all g in I}`.
    pub fn annihilator(&self) -> IdealSpan {
        let n = self.n;
        let gens = self.rows();
        if gens.is_empty() {
            return IdealSpan::full(n);
        }
        let map: Vec<Vec<u8>> = (0..2 * n)
            .map(|b| {
                let mut e = vec![0u8; 2 * n];
                e[b] = 1;
                gens.iter().flat_map(|g| mul_vectors(&e, g)).collect()
            })
            .collect();
        Self::from_module(n, left_kernel(&map, 2 * n * gens.len()))
    }

    /// Euclidean dual `{y : x . y = 0 for all x in C}` with the inner product taken in R.
    pub fn dual(&self) -> IdealSpan {
        let n = self.n;
        let gens = self.rows();
        if gens.is_empty() {
            return IdealSpan::full(n);
        }
        // y = (c, d); x = (a, b): x.y = sum a c + u sum (a d + b c)
        let map: Vec<Vec<u8>> = (0..2 * n)
            .map(|coord| {
                gens.iter()
                    .flat_map(|x| {
                        if coord < n {
                            [x[coord], x[n + coord]]
                        } else {
                            [0, x[coord - n]]
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_module(n, left_kernel(&map, 2 * gens.len()))
    }

    /// Image under the automorphism x -> x^{-1}.
    pub fn reciprocal_image(&self) -> IdealSpan {
        let rows = self
            .rows()
            .iter()
            .map(|r| to_vector(&from_vector(r).reciprocal_image()));
        Self::from_module(self.n, Submodule::new(rows, 2 * self.n))
    }

    /// Residue code: the Z4 parts of all codewords.
    pub fn res(&self) -> Submodule {
        let n = self.n;
        Submodule::new(self.rows().iter().map(|r| r[..n].to_vec()), n)
    }

    /// Torsion code `{b : ub in C}`.
    pub fn tor(&self) -> Submodule {
        let n = self.n;
        // Howell property: rows with pivot in the u block span everything with zero Z4 part
        Submodule::new(
            self.rows()
                .iter()
                .filter(|r| r[..n].iter().all(|&v| v == 0))
                .map(|r| r[n..].to_vec()),
            n,
        )
    }

    /// Smallest e in 0..=limit with `coef * (x+1)^e` in the ideal.
    pub fn min_xp1_exponent(&self, coef: RElem, limit: usize) -> Option<usize> {
        (0..=limit)
            .find(|&e| self.contains(&Residue::xp1_pow(e, self.n, Modulus::Nega).scale(coef)))
    }
}

/// R-submodule (not necessarily an ideal) spanned by `family`: all R-combinations.
pub fn r_span(n: usize, family: &[Residue<RElem>]) -> Submodule {
    Submodule::new(
        family.iter().flat_map(|f| {
            let v = to_vector(f);
            let uv = times_u(&v);
            [v, uv]
        }),
        2 * n,
    )
}

/// Minimal number of generators of an R-submodule of R^n: R is local with
/// residue field F2, so this is dim_F2 M / (2M + uM).
pub fn module_rank(m: &Submodule) -> u32 {
    let rad = Submodule::new(
        m.rows().iter().flat_map(|r| {
            let two: Vec<u8> = r.iter().map(|&v| (2 * v) & 3).collect();
            [two, times_u(r)]
        }),
        m.ncols(),
    );
    m.size_log2() - rad.size_log2()
}

/// Z4-submodule of Z4^n generated by `gens` and closed under the negacyclic shift.
pub fn z4_closure(n: usize, gens: &[Residue<Z4>]) -> Submodule {
    Submodule::new(
        gens.iter().flat_map(|g| {
            (0..n).map(move |i| g.shift(i).coeffs().iter().map(|c| c.value()).collect())
        }),
        n,
    )
}

/// Every ideal of R_n, sorted. Seeds with all principal ideals, then closes under
/// sums with principal ideals (every ideal is a finite sum of principal ones).
pub fn enumerate_ideals(n: usize) -> Result<Vec<IdealSpan>> {
    if n == 0 || n > ENUMERATION_GUARD {
        return Err(Error::TooLarge(n));
    }
    let count = 16usize.pow(n as u32);
    let principal: HashSet<IdealSpan> = (0..count)
        .into_par_iter()
        .map(|code| {
            let v: Vec<u8> = (0..2 * n).map(|i| ((code >> (2 * i)) & 3) as u8).collect();
            IdealSpan::closure_of_vectors(n, &[v])
        })
        .collect();
    let mut principal: Vec<IdealSpan> = principal.into_iter().collect();
    principal.sort();

    let mut all: HashSet<IdealSpan> = principal.iter().cloned().collect();
    let mut queue: VecDeque<IdealSpan> = principal.iter().cloned().collect();
    while let Some(ideal) = queue.pop_front() {
        let sums: Vec<IdealSpan> = principal.par_iter().map(|p| ideal.sum(p)).collect();
        for s in sums {
            if !all.contains(&s) {
                all.insert(s.clone());
                queue.push_back(s);
            }
        }
    }
    let mut out: Vec<IdealSpan> = all.into_iter().collect();
    out.sort();
    Ok(out)
}
