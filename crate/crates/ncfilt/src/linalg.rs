//! Sparse exact linear algebra over the rationals.
//!
//! Columns are sparse vectors indexed by `usize` (callers densify whatever
//! key type they use).  Elimination keeps, for every pivot row, the reduced
//! column together with the combination of original columns producing it, so
//! solving and membership both come with exact certified coefficients.

use crate::scalar::Scalar;
use num::traits::Zero;
use std::collections::BTreeMap;

pub type SparseVec = BTreeMap<usize, Scalar>;

fn axpy(dst: &mut SparseVec, c: &Scalar, src: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&r, v) in src {
        let entry = dst.entry(r).or_insert_with(Scalar::zero);
        *entry += v * c;
        if entry.is_zero() {
            dst.remove(&r);
        }
    }
}

/// Incremental Gaussian elimination with pivoting on the largest row index.
#[derive(Default, Clone)]
pub struct Eliminator {
    /// pivot row -> (column with unit pivot at that row, combination)
    pivots: BTreeMap<usize, (SparseVec, SparseVec)>,
    ncols: usize,
}

impl Eliminator {
    pub fn new() -> Self {
        Eliminator::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut col: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        loop {
            let Some((&row, _)) = col.iter().next_back() else { break };
            let Some((pcol, pcombo)) = self.pivots.get(&row) else { break };
            let c = -col[&row].clone();
            axpy(&mut col, &c, pcol);
            axpy(&mut combo, &c, pcombo);
        }
        (col, combo)
    }

    /// Adds a column; returns true if it enlarged the span.
    pub fn add_column(&mut self, col: SparseVec) -> bool {
        let mut combo = SparseVec::new();
        combo.insert(self.ncols, Scalar::from_integer(1.into()));
        self.ncols += 1;
        let (col, combo) = self.reduce(col, combo);
        match col.iter().next_back() {
            None => false,
            Some((&row, c)) => {
                let inv = Scalar::from_integer(1.into()) / c.clone();
                let mut ucol = SparseVec::new();
                axpy(&mut ucol, &inv, &col);
                let mut ucombo = SparseVec::new();
                axpy(&mut ucombo, &inv, &combo);
                self.pivots.insert(row, (ucol, ucombo));
                true
            }
        }
    }

    /// Expresses `target` in the added columns if possible: returns the
    /// coefficient of each original column index.
    pub fn solve(&self, target: SparseVec) -> Option<SparseVec> {
        let (col, combo) = self.reduce(target, SparseVec::new());
        if col.is_empty() {
            let mut sol = SparseVec::new();
            for (k, v) in combo {
                sol.insert(k, -v);
            }
            Some(sol)
        } else {
            None
        }
    }

    /// True when `target` lies in the span of the added columns.
    pub fn contains(&self, target: SparseVec) -> bool {
        self.solve(target).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn vec_of(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, v)| (i, int(v))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut el = Eliminator::new();
        assert!(el.add_column(vec_of(&[(0, 1), (1, 1)])));
        assert!(el.add_column(vec_of(&[(1, 1), (2, 1)])));
        assert!(!el.add_column(vec_of(&[(0, 1), (2, -1)])));
        assert_eq!(el.rank(), 2);
        assert!(el.contains(vec_of(&[(0, 2), (1, 1), (2, -1)])));
        assert!(!el.contains(vec_of(&[(0, 1)])));
    }

    #[test]
    fn solve_returns_exact_coefficients() {
        let mut el = Eliminator::new();
        el.add_column(vec_of(&[(0, 2)]));
        el.add_column(vec_of(&[(0, 1), (1, 3)]));
        let sol = el.solve(vec_of(&[(0, 4), (1, 3)])).unwrap();
        // 4e0 + 3e1 = (3/2) * col0 + 1 * col1
        assert_eq!(sol.get(&0), Some(&crate::scalar::ratio(3, 2)));
        assert_eq!(sol.get(&1), Some(&int(1)));
    }
}
