//! Noncommutative polynomials: finitely supported maps from words to scalars.
//!
//! Invariant: no explicit zero coefficients are stored, so structural equality
//! is semantic equality.  Multiplication is the free product (concatenation of
//! words); reduction modulo relations lives in [`crate::rewrite`].

use crate::order::{Degree, MonomialOrder};
use crate::scalar::{self, Scalar};
use crate::word::Word;
use num::traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::monomial(Word::empty(), scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::monomial(Word::empty(), c)
    }

    pub fn gen(i: usize) -> Self {
        NCPoly::monomial(Word::gen(i), scalar::one())
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in structural word order (deterministic iteration).
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, k)| (w.clone(), k.clone() * c)).collect() }
    }

    /// Free product: words concatenate, no reduction is applied.
    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        out
    }

    /// `left * self * right` with word arguments; used by rewriting.
    pub fn framed(&self, left: &Word, right: &Word) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> NCPoly {
        let mut out = NCPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn commutator(&self, other: &NCPoly) -> NCPoly {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Largest word under `order`, with its coefficient.
    pub fn lead(&self, order: &MonomialOrder) -> Option<(&Word, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(u, _), (v, _)| order.compare(u, v))
            .map(|(w, c)| (w, c))
    }

    /// Weighted degree of the polynomial: max over terms, `NegInf` for zero.
    pub fn wdeg(&self, order: &MonomialOrder) -> Degree {
        self.terms
            .keys()
            .map(|w| Degree::Fin(order.wdeg(w) as i64))
            .max()
            .unwrap_or(Degree::NegInf)
    }

    /// Sum of the terms of maximal weighted degree (the symbol numerator).
    pub fn top_part(&self, order: &MonomialOrder) -> NCPoly {
        match self.wdeg(order) {
            Degree::NegInf => NCPoly::zero(),
            Degree::Fin(d) => NCPoly {
                terms: self
                    .terms
                    .iter()
                    .filter(|(w, _)| order.wdeg(w) as i64 == d)
                    .map(|(w, c)| (w.clone(), c.clone()))
                    .collect(),
            },
        }
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(w, c)| format!("{}*{:?}", c, w)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn w(letters: &[u32]) -> Word {
        Word::from_letters(letters.to_vec())
    }

    #[test]
    fn no_zero_coefficients_survive() {
        let p = NCPoly::monomial(w(&[0]), int(2));
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.num_terms(), 0);
        assert_eq!(NCPoly::monomial(w(&[1]), int(0)).num_terms(), 0);
    }

    #[test]
    fn free_mul_concatenates() {
        let p = NCPoly::gen(0).add(&NCPoly::one());
        let q = NCPoly::gen(1);
        let r = p.mul(&q);
        assert_eq!(r.coeff(&w(&[0, 1])), int(1));
        assert_eq!(r.coeff(&w(&[1])), int(1));
        assert_eq!(r.num_terms(), 2);
    }

    #[test]
    fn degree_of_zero_is_neg_inf() {
        let ord = MonomialOrder::weighted(vec![1, 1]);
        assert_eq!(NCPoly::zero().wdeg(&ord), Degree::NegInf);
        assert_eq!(NCPoly::one().wdeg(&ord), Degree::Fin(0));
    }

    #[test]
    fn lead_and_top_part_respect_weights() {
        let ord = MonomialOrder::weighted(vec![0, 1]);
        // p = yx + xy + x: top part under weights (0,1) is yx + xy.
        let p = NCPoly::monomial(w(&[1, 0]), int(1))
            .add(&NCPoly::monomial(w(&[0, 1]), int(1)))
            .add(&NCPoly::monomial(w(&[0]), int(1)));
        assert_eq!(p.lead(&ord).unwrap().0, &w(&[1, 0]));
        let top = p.top_part(&ord);
        assert_eq!(top.num_terms(), 2);
        assert_eq!(top.coeff(&w(&[0, 1])), int(1));
    }
}
