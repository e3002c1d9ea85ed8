//! Monomial orders on words and the extended degree value.

use crate::word::Word;
use std::cmp::Ordering;
use std::fmt;

/// Degree of an element; the zero element has degree `NegInf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Fin(i64),
}

impl Degree {
    pub fn fin(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Fin(d) => Some(d),
        }
    }

    /// Degree of a product; `NegInf` absorbs.
    pub fn plus(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Fin(a), Degree::Fin(b)) => Degree::Fin(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Fin(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Weighted degree first, then word length, then lexicographic on indices.
    Weighted,
    /// Word length, then lexicographic; weights are ignored.  Available for
    /// cross-checks through the CLI `--order lex-tiebreak` switch.
    LenLex,
}

/// A monomial order compatible with concatenation: `u < v` implies
/// `wu < wv` and `uw < vw`.  Both kinds are well-orders on the degree box
/// because weights are nonnegative and ties fall through to finite data.
#[derive(Clone, Debug)]
pub struct MonomialOrder {
    pub weights: Vec<u32>,
    pub kind: OrderKind,
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u32>) -> Self {
        MonomialOrder { weights, kind: OrderKind::Weighted }
    }

    pub fn len_lex(ngens: usize) -> Self {
        MonomialOrder { weights: vec![1; ngens], kind: OrderKind::LenLex }
    }

    pub fn wdeg(&self, w: &Word) -> u64 {
        w.weighted_degree(&self.weights)
    }

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        match self.kind {
            OrderKind::Weighted => self
                .wdeg(a)
                .cmp(&self.wdeg(b))
                .then_with(|| a.len().cmp(&b.len()))
                .then_with(|| a.letters().cmp(b.letters())),
            OrderKind::LenLex => {
                a.len().cmp(&b.len()).then_with(|| a.letters().cmp(b.letters()))
            }
        }
    }

    /// Membership in the truncation box.  Weighted degree is bounded by the
    /// cap, and so is the number of weight-zero letters: together this keeps
    /// every stratum finite even when some generators sit in degree zero.
    pub fn in_box(&self, w: &Word, cap: u32) -> bool {
        self.wdeg(w) <= cap as u64 && w.zero_weight_count(&self.weights) <= cap as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    #[test]
    fn degree_ordering_and_sum() {
        assert!(Degree::NegInf < Degree::Fin(-5));
        assert!(Degree::Fin(1) < Degree::Fin(2));
        assert_eq!(Degree::NegInf.plus(Degree::Fin(3)), Degree::NegInf);
        assert_eq!(Degree::Fin(2).plus(Degree::Fin(3)), Degree::Fin(5));
    }

    #[test]
    fn weighted_order_breaks_ties_by_length_then_lex() {
        let ord = MonomialOrder::weighted(vec![0, 1]);
        // x has weight 0, y weight 1.
        assert_eq!(ord.compare(&w(&[0]), &w(&[1])), Ordering::Less);
        // xx (weight 0) below y (weight 1) despite being longer.
        assert_eq!(ord.compare(&w(&[0, 0]), &w(&[1])), Ordering::Less);
        // same weight, same length: lex on indices.
        assert_eq!(ord.compare(&w(&[0, 1]), &w(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn concatenation_compatibility_spot() {
        let ord = MonomialOrder::weighted(vec![0, 1, 2]);
        let (u, v, c) = (w(&[0, 1]), w(&[1, 0]), w(&[2, 0]));
        assert_eq!(ord.compare(&u, &v), Ordering::Less);
        assert_eq!(ord.compare(&c.concat(&u), &c.concat(&v)), Ordering::Less);
        assert_eq!(ord.compare(&u.concat(&c), &v.concat(&c)), Ordering::Less);
    }

    #[test]
    fn box_bounds_zero_weight_letters() {
        let ord = MonomialOrder::weighted(vec![0, 1]);
        assert!(ord.in_box(&w(&[0, 0, 0]), 3));
        assert!(!ord.in_box(&w(&[0, 0, 0, 0]), 3));
        assert!(!ord.in_box(&w(&[1, 1, 1, 1]), 3));
        // weight-positive letters are not length-limited beyond their weight.
        assert!(ord.in_box(&w(&[0, 1, 0, 1, 0]), 3));
    }
}
