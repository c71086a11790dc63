use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::IdealSpan;
use crate::poly::PolyF2;
use crate::ring::F2;

use super::descriptor::{CodeDescriptor, CodeType, HClass};
use super::params::{compute_t, compute_t1};

/// Largest k accepted for n = 2^k.
pub const MAX_K: u32 = 4;

pub fn check_length(n: usize) -> Result<()> {
    if n < 2 || !n.is_power_of_two() || n.trailing_zeros() > MAX_K {
        return Err(Error::UnsupportedLength(n));
    }
    Ok(())
}

/// Binary polynomials with constant term 1 and degree at most `bound`, in the (x+1)-basis.
fn units_up_to(bound: i64) -> Vec<PolyF2> {
    if bound < 0 {
        return Vec::new();
    }
    let bound = bound as usize;
    (0..1u64 << bound)
        .map(|mask| {
            let mut c = vec![F2::new(1)];
            c.extend((0..bound).map(|j| F2::new(((mask >> j) & 1) as u8)));
            PolyF2::new(c)
        })
        .collect()
}

/// Every descriptor admitted by the per-type parameter ranges, before dedup.
pub fn candidates(n: usize) -> Result<Vec<CodeDescriptor>> {
    check_length(n)?;
    let ni = n as i64;
    let mut out = Vec::new();
    let base = |kind| CodeDescriptor::new(kind, n);
    out.push(base(CodeType::T0_zero));
    out.push(base(CodeType::T0_unit));
    for m in 0..2 * n {
        out.push(CodeDescriptor {
            m,
            ..base(CodeType::T1)
        });
    }

    // plain tail: h zero, or (t, h) with h a unit under the degree bound
    let plain = |kind: CodeType, s: usize, bound: &dyn Fn(usize) -> i64, t_max: usize| {
        let mut v = vec![CodeDescriptor { s, ..base(kind) }];
        for t in 0..t_max {
            for h in units_up_to(bound(t)) {
                v.push(CodeDescriptor {
                    s,
                    t,
                    h,
                    ..base(kind)
                });
            }
        }
        v
    };
    for s in 1..n {
        let si = s as i64;
        out.extend(plain(CodeType::T2_0, s, &|t| si - t as i64 - 1, s));
    }
    for s in n..2 * n {
        let si = s as i64;
        let bound = |t: usize| {
            let t = t as i64;
            if t < si - ni {
                2 * ni - si - 1
            } else {
                ni - t - 1
            }
        };
        out.extend(plain(CodeType::T2_1, s, &bound, n));
    }
    for s in n + 1..2 * n {
        let si = s as i64;
        for t in 0..s - n {
            let ti = t as i64;
            let bound = if ti < 2 * si - 3 * ni {
                2 * ni - si - 1
            } else {
                si - ni - ti - 1
            };
            for h in units_up_to(bound) {
                out.push(CodeDescriptor {
                    s,
                    t,
                    h,
                    ..base(CodeType::T2_2)
                });
            }
            for l in s - n - t + 1..n - t {
                let t1 = compute_t1(s, t, HClass::Mixed { l }, n)? as i64;
                for h1 in units_up_to(t1 - ti - 1) {
                    for h2 in units_up_to(ni - ti - l as i64 - 1) {
                        out.push(CodeDescriptor {
                            s,
                            t,
                            l,
                            h1: h1.clone(),
                            h2,
                            ..base(CodeType::T2_3)
                        });
                    }
                }
            }
        }
    }

    // two generators
    for s in 1..n {
        for m in 0..s {
            out.push(CodeDescriptor {
                s,
                m,
                ..base(CodeType::T3_0)
            });
        }
        for t in 0..s {
            for m in t + 1..s {
                for h in units_up_to(m as i64 - t as i64 - 1) {
                    out.push(CodeDescriptor {
                        s,
                        t,
                        m,
                        h,
                        ..base(CodeType::T3_0)
                    });
                }
            }
        }
    }
    for s in n..2 * n {
        for m in 0..compute_t(s, 0, HClass::Zero, n)? {
            out.push(CodeDescriptor {
                s,
                m,
                ..base(CodeType::T3_1)
            });
        }
        for t in 0..n {
            let big_t = compute_t(s, t, HClass::Unit, n)?;
            for m in t + 1..big_t {
                for h in units_up_to(m.min(n) as i64 - t as i64 - 1) {
                    out.push(CodeDescriptor {
                        s,
                        t,
                        m,
                        h,
                        ..base(CodeType::T3_1)
                    });
                }
            }
        }
    }
    for s in n + 1..2 * n {
        for t in 0..s - n {
            let ti = t as i64;
            let t1 = compute_t1(s, t, HClass::TwoTimesUnit, n)?;
            for m in t + 1..n {
                for h in units_up_to(m.min(t1) as i64 - ti - 1) {
                    out.push(CodeDescriptor {
                        s,
                        t,
                        m,
                        h,
                        ..base(CodeType::T3_2)
                    });
                }
            }
            for m1 in t + 1..t1 {
                for h in units_up_to(m1 as i64 - ti - 1) {
                    out.push(CodeDescriptor {
                        s,
                        t,
                        m1,
                        h,
                        ..base(CodeType::T3_3)
                    });
                }
            }
            for l in s - n - t + 1..n - t {
                let t1 = compute_t1(s, t, HClass::Mixed { l }, n)?;
                let h2s = units_up_to(ni - ti - l as i64 - 1);
                for m in t + l + 1..n {
                    for h1 in units_up_to(t1 as i64 - 1) {
                        for h2 in &h2s {
                            out.push(CodeDescriptor {
                                s,
                                t,
                                l,
                                m,
                                h1: h1.clone(),
                                h2: h2.clone(),
                                ..base(CodeType::T3_4)
                            });
                        }
                    }
                }
                for m1 in t + 2..t1 {
                    for h1 in units_up_to(m1 as i64 - 1) {
                        for h2 in &h2s {
                            out.push(CodeDescriptor {
                                s,
                                t,
                                l,
                                m1,
                                h1: h1.clone(),
                                h2: h2.clone(),
                                ..base(CodeType::T3_5)
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A descriptor whose span coincided with an earlier one.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Collapsed {
    pub descriptor: CodeDescriptor,
    /// 1-based index of the kept code.
    pub kept: usize,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub descriptor: CodeDescriptor,
    pub span: IdealSpan,
}

/// Distinct codes of length n in deterministic order, with their oracle spans.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
    pub candidate_count: usize,
    pub collapsed: Vec<Collapsed>,
    index: HashMap<IdealSpan, usize>,
}

impl Catalog {
    /// Candidates closed by the oracle; a candidate whose span already occurred is dropped.
    pub fn build(n: usize) -> Result<Catalog> {
        let cands = candidates(n)?;
        let spans: Vec<IdealSpan> = cands
            .par_iter()
            .map(|d| IdealSpan::closure(n, &d.generators().to_vec()))
            .collect::<Result<_>>()?;
        let mut entries = Vec::new();
        let mut index = HashMap::new();
        let mut collapsed = Vec::new();
        for (descriptor, span) in cands.iter().zip(spans) {
            match index.get(&span) {
                Some(&i) => collapsed.push(Collapsed {
                    descriptor: descriptor.clone(),
                    kept: i + 1,
                }),
                None => {
                    index.insert(span.clone(), entries.len());
                    entries.push(CatalogEntry {
                        descriptor: descriptor.clone(),
                        span,
                    });
                }
            }
        }
        Ok(Catalog {
            n,
            entries,
            candidate_count: cands.len(),
            collapsed,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn descriptors(&self) -> Vec<CodeDescriptor> {
        self.entries.iter().map(|e| e.descriptor.clone()).collect()
    }

    /// 1-based catalog index of a span.
    pub fn index_of(&self, span: &IdealSpan) -> Option<usize> {
        self.index.get(span).map(|i| i + 1)
    }

    pub fn get(&self, index: usize) -> Option<&CatalogEntry> {
        index.checked_sub(1).and_then(|i| self.entries.get(i))
    }

    /// Catalog entry of the code with the same span as `d`.
    pub fn lookup(&self, d: &CodeDescriptor) -> Result<Option<usize>> {
        let span = IdealSpan::closure(self.n, &d.generators().to_vec())?;
        Ok(self.index_of(&span))
    }
}

/// Distinct descriptors of length n, sorted.
pub fn enumerate_codes(n: usize) -> Result<Vec<CodeDescriptor>> {
    Ok(Catalog::build(n)?.descriptors())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_grid() {
        assert!(units_up_to(-1).is_empty());
        assert_eq!(units_up_to(0), vec![PolyF2::one()]);
        assert_eq!(units_up_to(3).len(), 8);
    }

    #[test]
    fn lengths() {
        assert!(matches!(candidates(3), Err(Error::UnsupportedLength(3))));
        assert!(matches!(candidates(1), Err(Error::UnsupportedLength(1))));
        assert!(matches!(candidates(32), Err(Error::UnsupportedLength(32))));
    }

    #[test]
    fn length_two_catalog() {
        let cat = Catalog::build(2).unwrap();
        assert_eq!(cat.len(), 23);
        // <(x+1)^3+2u, u(x+1)> = <(x+1)^3, u(x+1)> because 2u = x^{-1}(x+1) u(x+1)
        assert_eq!(cat.collapsed.len(), 1);
        assert_eq!(
            cat.collapsed[0].descriptor.to_string(),
            "T3_2,n=2,s=3,t=0,m=1,h=1"
        );
        let s2: Vec<String> = cat
            .descriptors()
            .iter()
            .filter(|d| d.kind == CodeType::T2_1 && d.s == 2 && !d.tail_is_zero())
            .map(|d| d.generators_text())
            .collect();
        assert_eq!(
            s2,
            ["<(x+1)^2+u>", "<(x+1)^2+u*(1+(x+1))>", "<(x+1)^2+u*(x+1)>"]
        );
        assert!(cat
            .descriptors()
            .iter()
            .all(|d| d.kind != CodeType::T3_0 || d.tail_is_zero()));
    }
}
