//! Closed-form annihilators, duals, cardinalities and self-duality predicates
//! for the descriptor families. Nothing here consults the oracle.

use crate::error::{Error, Result};
use crate::poly::{Modulus, Residue};
use crate::ring::RElem;

use super::descriptor::{from_basis, xp1, CodeDescriptor, CodeType, HClass};

/// An ideal given by formula generators, with the case branch that produced it.
#[derive(Clone, Debug)]
pub struct FormulaIdeal {
    pub case: String,
    pub gens: Vec<Residue<RElem>>,
}

fn y(k: i64, n: usize) -> Result<Residue<RElem>> {
    if k < 0 {
        return Err(Error::BadParameters(format!(
            "negative exponent {k} of (x+1)"
        )));
    }
    Ok(xp1(k as usize, n))
}

/// Annihilator of the code, read off the case formulas.
pub fn annihilator(d: &CodeDescriptor) -> Result<FormulaIdeal> {
    let n = d.n;
    let ni = n as i64;
    let (s, t, m, m1, l) = (d.s as i64, d.t as i64, d.m as i64, d.m1 as i64, d.l as i64);
    let u = RElem::U;
    let two_u = RElem::new(0, 2);
    let h = from_basis(&d.h, n);
    let h1 = from_basis(&d.h1, n);
    let h2 = from_basis(&d.h2, n);
    let zero_tail = d.tail_is_zero();
    // 1 + (x+1)^{n/2}
    let half = Residue::one(n, Modulus::Nega).add(&xp1(n / 2, n));
    let u_low = || y(2 * ni - s, n).map(|g| g.scale(u));
    let case = |label: &str| format!("{}:{label}", d.kind);

    let (label, gens) = match d.kind {
        CodeType::T0_zero => (case("whole ring"), vec![Residue::one(n, Modulus::Nega)]),
        CodeType::T0_unit => (case("zero"), vec![]),
        CodeType::T1 => (
            case("u-multiple"),
            vec![y(2 * ni - m, n)?, Residue::constant(u, n, Modulus::Nega)],
        ),
        CodeType::T2_0 => {
            if zero_tail {
                (case("h=0"), vec![y(2 * ni - s, n)?])
            } else if t < 2 * s - ni {
                let g = y(2 * ni - s, n)?.add(&y(2 * ni - 2 * s + t, n)?.mul(&h).scale(u));
                (case("t<2s-n"), vec![g])
            } else {
                let g =
                    y(2 * ni - s, n)?.add(&y(ni - 2 * s + t, n)?.mul(&half).mul(&h).scale(two_u));
                (case("t>=2s-n"), vec![g])
            }
        }
        CodeType::T2_1 => {
            if !zero_tail && t < 2 * s - 2 * ni {
                let g = y(s - t, n)?.add(&h.scale(u));
                (case("t<2s-2n"), vec![g, u_low()?])
            } else {
                let tail = if zero_tail {
                    Residue::zero(n, Modulus::Nega)
                } else {
                    y(2 * ni - 2 * s + t, n)?.mul(&h).scale(u)
                };
                (case("t>=2s-2n"), vec![y(2 * ni - s, n)?.add(&tail)])
            }
        }
        CodeType::T2_2 => {
            if 2 * s - 3 * ni <= t {
                let g =
                    y(2 * ni - s, n)?.add(&y(3 * ni - 2 * s + t, n)?.mul(&half).mul(&h).scale(u));
                (case("t>=2s-3n"), vec![g])
            } else {
                (case("t<2s-3n"), vec![y(ni - t, n)?, u_low()?])
            }
        }
        CodeType::T2_3 => {
            let inner = h1.scale(RElem::new(2, 0)).add(&y(l, n)?.mul(&h2));
            let g = y(s - t, n)?.add(&inner.scale(u));
            (case("mixed"), vec![g, u_low()?])
        }
        CodeType::T3_0 => {
            let tail = if zero_tail {
                Residue::zero(n, Modulus::Nega)
            } else {
                y(2 * ni - m - s + t, n)?.mul(&h).scale(u)
            };
            (case("s<n"), vec![y(2 * ni - m, n)?.add(&tail), u_low()?])
        }
        CodeType::T3_1 => {
            if zero_tail || t >= s + m - 2 * ni {
                let tail = if zero_tail {
                    Residue::zero(n, Modulus::Nega)
                } else {
                    y(2 * ni - m - s + t, n)?.mul(&h).scale(u)
                };
                (
                    case("t>=s+m-2n"),
                    vec![y(2 * ni - m, n)?.add(&tail), u_low()?],
                )
            } else {
                (
                    case("t<s+m-2n"),
                    vec![y(s - t, n)?.add(&h.scale(u)), u_low()?],
                )
            }
        }
        CodeType::T3_2 => (case("2u-tail"), vec![y(2 * ni - m, n)?, u_low()?]),
        CodeType::T3_3 => {
            if t >= s + m1 - 2 * ni {
                // the second exponent is read with m1 in place of m
                let g = y(ni - m1, n)?.add(&y(2 * ni - m1 - s + t, n)?.mul(&half).mul(&h).scale(u));
                (case("t>=s+m1-2n"), vec![g, u_low()?])
            } else {
                (case("t<s+m1-2n"), vec![y(ni - t, n)?, u_low()?])
            }
        }
        CodeType::T3_4 => {
            if t + l >= s + m - 2 * ni {
                let g = y(2 * ni - m, n)?.add(&y(2 * ni - m - s + t + l, n)?.mul(&h2).scale(u));
                (case("t+l>=s+m-2n"), vec![g, u_low()?])
            } else {
                (case("t+l<s+m-2n"), vec![y(2 * ni - l, n)?, u_low()?])
            }
        }
        CodeType::T3_5 => {
            if t + l >= s + m1 - ni {
                let h_prime = h1.mul(&y(ni - l, n)?).add(&h2.mul(&half));
                let g = y(ni - m1, n)?.add(&y(ni - m1 - s + t + l, n)?.mul(&h_prime).scale(u));
                (case("t+l>=s+m1-n"), vec![g, u_low()?])
            } else {
                (case("t+l<s+m1-n"), vec![y(2 * ni - l, n)?, u_low()?])
            }
        }
    };
    Ok(FormulaIdeal { case: label, gens })
}

/// Dual code: the image of the annihilator formula under x -> x^{-1}.
pub fn dual(d: &CodeDescriptor) -> Result<FormulaIdeal> {
    let ann = annihilator(d)?;
    Ok(FormulaIdeal {
        case: ann.case,
        gens: ann.gens.iter().map(|g| g.reciprocal_image()).collect(),
    })
}

/// log2 of the code size from the case formulas.
pub fn cardinality_log2(d: &CodeDescriptor) -> Result<u32> {
    let n = d.n as i64;
    let (s, t, m, m1, l) = (d.s as i64, d.t as i64, d.m as i64, d.m1 as i64, d.l as i64);
    let value = match d.kind {
        CodeType::T0_zero => 0,
        CodeType::T0_unit => 4 * n,
        CodeType::T1 => 2 * n - m,
        CodeType::T2_0 => 2 * (2 * n - s),
        CodeType::T2_1 => {
            if !d.tail_is_zero() && t < 2 * s - 2 * n {
                2 * n - t
            } else {
                2 * (2 * n - s)
            }
        }
        CodeType::T2_2 => {
            if t < 2 * s - 3 * n {
                n - t
            } else {
                2 * (2 * n - s)
            }
        }
        CodeType::T2_3 => {
            if l + t >= 2 * s - 2 * n {
                2 * (2 * n - s)
            } else if l + t > s - n {
                2 * n - l - t
            } else {
                return Err(Error::BadParameters(format!("l + t <= s - n in {d}")));
            }
        }
        CodeType::T3_0 | CodeType::T3_1 | CodeType::T3_2 | CodeType::T3_4 => 4 * n - (m + s),
        CodeType::T3_3 | CodeType::T3_5 => 3 * n - (m1 + s),
    };
    u32::try_from(value)
        .map_err(|_| Error::BadParameters(format!("negative size exponent for {d}")))
}

pub fn cardinality(d: &CodeDescriptor) -> Result<u128> {
    Ok(1u128 << cardinality_log2(d)?)
}

/// Membership in the listed self-orthogonal families.
pub fn is_self_orthogonal(d: &CodeDescriptor) -> bool {
    let n = d.n;
    match d.kind {
        CodeType::T0_zero | CodeType::T1 => true,
        CodeType::T0_unit | CodeType::T2_0 | CodeType::T3_0 => false,
        CodeType::T2_1 | CodeType::T2_2 | CodeType::T2_3 => true,
        CodeType::T3_1 | CodeType::T3_2 | CodeType::T3_4 => d.s + d.m >= 2 * n,
        CodeType::T3_3 | CodeType::T3_5 => d.s + d.m1 >= n,
    }
}

/// Membership in the listed self-dual families.
pub fn is_self_dual(d: &CodeDescriptor) -> bool {
    let n = d.n;
    match d.kind {
        CodeType::T2_1 => d.s == n || d.t == 0 || d.h_class() == HClass::Zero,
        CodeType::T3_1 | CodeType::T3_2 | CodeType::T3_4 => d.s + d.m == 2 * n,
        CodeType::T3_3 | CodeType::T3_5 => d.s + d.m1 == n,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::IdealSpan;

    fn d(s: &str) -> CodeDescriptor {
        s.parse().unwrap()
    }

    fn span(f: &FormulaIdeal, n: usize) -> IdealSpan {
        IdealSpan::closure(n, &f.gens).unwrap()
    }

    #[test]
    fn u_multiple_annihilator() {
        let a = annihilator(&d("T1,n=2,m=0")).unwrap();
        let u = IdealSpan::closure(2, &d("T1,n=2,m=0").generators().to_vec()).unwrap();
        assert_eq!(span(&a, 2), u);
    }

    #[test]
    fn square_is_own_annihilator() {
        let c8 = d("T2_1,n=2,s=2,h=0");
        let closed = IdealSpan::closure(2, &c8.generators().to_vec()).unwrap();
        assert_eq!(span(&annihilator(&c8).unwrap(), 2), closed);
    }

    #[test]
    fn sizes() {
        assert_eq!(cardinality(&d("T2_2,n=2,s=3,t=0,h=1")).unwrap(), 4);
        assert_eq!(cardinality(&d("T1,n=2,m=1")).unwrap(), 8);
        assert_eq!(cardinality(&d("T0_unit,n=2")).unwrap(), 256);
        assert_eq!(cardinality(&d("T0_zero,n=2")).unwrap(), 1);
    }

    #[test]
    fn flags() {
        assert!(is_self_orthogonal(&d("T2_1,n=2,s=3,h=0")));
        assert!(is_self_dual(&d("T2_1,n=2,s=2,t=0,h=1")));
        let c7 = d("T2_0,n=2,s=1,h=0");
        assert!(!is_self_orthogonal(&c7) && !is_self_dual(&c7));
    }
}
