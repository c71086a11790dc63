//! Howell normal form of submodules of Z4^m.
//!
//! A matrix is in Howell form when it is in row echelon form, every pivot is 1
//! or 2, entries above a pivot are reduced modulo it, and for every column c the
//! rows whose pivot lies at or after c span every element of the module that
//! vanishes before c. Two generating sets span the same module exactly when
//! their Howell forms agree.

use serde::Serialize;

/// Submodule of Z4^m held in Howell normal form. Entries are in 0..=3.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Submodule {
    ncols: usize,
    rows: Vec<Vec<u8>>,
}

fn pivot(row: &[u8]) -> Option<usize> {
    row.iter().position(|&v| v != 0)
}

fn axpy(dst: &mut [u8], c: u8, src: &[u8]) {
    // dst -= c * src
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = (*d + 4 * 3 - c * s) & 3;
    }
}

/// Howell form of the row span of `rows` (each of length `ncols`).
pub fn howell_form(rows: impl IntoIterator<Item = Vec<u8>>, ncols: usize) -> Vec<Vec<u8>> {
    let mut pool: Vec<Vec<u8>> = rows
        .into_iter()
        .map(|mut r| {
            debug_assert_eq!(r.len(), ncols);
            r.iter_mut().for_each(|v| *v &= 3);
            r
        })
        .filter(|r| r.iter().any(|&v| v != 0))
        .collect();
    let mut out: Vec<Vec<u8>> = Vec::new();
    for c in 0..ncols {
        if pool.is_empty() {
            break;
        }
        // invariant: every pool row vanishes on columns < c and the pool spans
        // all module elements with that property
        if let Some(i) = pool.iter().position(|r| r[c] & 1 == 1) {
            let mut p = pool.swap_remove(i);
            if p[c] == 3 {
                p.iter_mut().for_each(|v| *v = (4 - *v) & 3);
            }
            for r in pool.iter_mut().chain(out.iter_mut()) {
                let k = r[c];
                if k != 0 {
                    axpy(r, k, &p);
                }
            }
            out.push(p);
        } else if let Some(i) = pool.iter().position(|r| r[c] == 2) {
            let p = pool.swap_remove(i);
            for r in pool.iter_mut() {
                if r[c] == 2 {
                    axpy(r, 1, &p);
                }
            }
            for r in out.iter_mut() {
                if r[c] >= 2 {
                    axpy(r, 1, &p);
                }
            }
            let twice: Vec<u8> = p.iter().map(|&v| (2 * v) & 3).collect();
            if twice.iter().any(|&v| v != 0) {
                pool.push(twice);
            }
            out.push(p);
        }
        pool.retain(|r| r.iter().any(|&v| v != 0));
    }
    out
}

impl Submodule {
    pub fn new(rows: impl IntoIterator<Item = Vec<u8>>, ncols: usize) -> Self {
        Submodule {
            ncols,
            rows: howell_form(rows, ncols),
        }
    }

    pub fn zero(ncols: usize) -> Self {
        Submodule {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn full(ncols: usize) -> Self {
        Self::new(
            (0..ncols).map(|i| {
                let mut r = vec![0; ncols];
                r[i] = 1;
                r
            }),
            ncols,
        )
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Howell rows.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Residue of `v` after greedy reduction against the Howell rows.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut v: Vec<u8> = v.iter().map(|&x| x & 3).collect();
        for r in &self.rows {
            let c = pivot(r).expect("Howell rows are nonzero");
            let k = v[c];
            if k == 0 {
                continue;
            }
            if r[c] == 1 {
                axpy(&mut v, k, r);
            } else if k == 2 {
                axpy(&mut v, 1, r);
            } else {
                // odd entry under a pivot of 2 cannot be cleared
                return v;
            }
        }
        v
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_all(&self, other: &Submodule) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        assert_eq!(self.ncols, other.ncols);
        Submodule::new(self.rows.iter().chain(&other.rows).cloned(), self.ncols)
    }

    /// log2 of the number of elements.
    pub fn size_log2(&self) -> u32 {
        self.rows
            .iter()
            .map(|r| if r[pivot(r).unwrap()] == 1 { 2 } else { 1 })
            .sum()
    }

    pub fn size(&self) -> u128 {
        1u128 << self.size_log2()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// `{2v : v in M}`.
    pub fn doubled(&self) -> Submodule {
        Submodule::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&v| (2 * v) & 3).collect()),
            self.ncols,
        )
    }
}

/// Kernel of `v -> v M` where `M` has one row per coordinate of `v`.
pub fn left_kernel(map_rows: &[Vec<u8>], image_cols: usize) -> Submodule {
    let k = map_rows.len();
    let augmented = map_rows.iter().enumerate().map(|(i, row)| {
        debug_assert_eq!(row.len(), image_cols);
        let mut r = row.clone();
        r.resize(image_cols + k, 0);
        r[image_cols + i] = 1;
        r
    });
    // Howell property: rows whose pivot lies past the image block span exactly
    // the combinations that map to zero
    let h = howell_form(augmented, image_cols + k);
    Submodule::new(
        h.into_iter()
            .filter(|r| pivot(r).is_some_and(|c| c >= image_cols))
            .map(|r| r[image_cols..].to_vec()),
        k,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(howell_form(vec![vec![2]], 1), vec![vec![2]]);
        assert_eq!(
            howell_form(vec![vec![1, 1], vec![0, 2]], 2),
            howell_form(vec![vec![1, 3], vec![0, 2]], 2)
        );
        assert_eq!(howell_form(vec![vec![2], vec![2]], 1), vec![vec![2]]);
    }

    #[test]
    fn howell_property_adds_hidden_row() {
        // <(2, 1)> contains 2*(2,1) = (0,2), which echelon form alone would hide
        let m = Submodule::new(vec![vec![2, 1]], 2);
        assert_eq!(m.rows(), &[vec![2, 1], vec![0, 2]]);
        assert_eq!(m.size(), 4);
        assert!(m.contains(&[0, 2]));
        assert!(!m.contains(&[0, 1]));
    }

    fn brute_span(rows: &[Vec<u8>], m: usize) -> std::collections::BTreeSet<Vec<u8>> {
        let mut set = std::collections::BTreeSet::new();
        set.insert(vec![0u8; m]);
        loop {
            let mut grew = false;
            let current: Vec<Vec<u8>> = set.iter().cloned().collect();
            for v in &current {
                for r in rows {
                    let w: Vec<u8> = v.iter().zip(r).map(|(a, b)| (a + b) & 3).collect();
                    grew |= set.insert(w);
                }
            }
            if !grew {
                return set;
            }
        }
    }

    fn arb_rows() -> impl Strategy<Value = Vec<Vec<u8>>> {
        proptest::collection::vec(proptest::collection::vec(0u8..4, 4), 0..5)
    }

    proptest! {
        #[test]
        fn size_and_membership_match_brute_force(rows in arb_rows()) {
            let m = Submodule::new(rows.clone(), 4);
            let span = brute_span(&rows, 4);
            prop_assert_eq!(m.size(), span.len() as u128);
            for a in 0..256u32 {
                let v: Vec<u8> = (0..4).map(|i| ((a >> (2 * i)) & 3) as u8).collect();
                prop_assert_eq!(m.contains(&v), span.contains(&v));
            }
        }

        #[test]
        fn canonical_and_idempotent(rows in arb_rows(), perm_seed in any::<u64>()) {
            let h = howell_form(rows.clone(), 4);
            prop_assert_eq!(howell_form(h.clone(), 4), h.clone());
            let mut shuffled = rows.clone();
            // deterministic permutation and an extra redundant combination
            let len = shuffled.len();
            if len > 1 {
                shuffled.rotate_left((perm_seed as usize) % len);
                let extra: Vec<u8> = shuffled[0].iter().zip(&shuffled[1]).map(|(a, b)| (a + 3 * b) & 3).collect();
                shuffled.push(extra);
            }
            prop_assert_eq!(howell_form(shuffled, 4), h);
        }

        #[test]
        fn kernel_is_exact(map in proptest::collection::vec(proptest::collection::vec(0u8..4, 3), 3)) {
            let k = left_kernel(&map, 3);
            for a in 0..64u32 {
                let v: Vec<u8> = (0..3).map(|i| ((a >> (2 * i)) & 3) as u8).collect();
                let image: Vec<u8> = (0..3)
                    .map(|j| (0..3).map(|i| v[i] * map[i][j]).sum::<u8>() & 3)
                    .collect();
                prop_assert_eq!(k.contains(&v), image.iter().all(|&x| x == 0));
            }
        }
    }
}
