//! Commutative polynomials in finitely many variables over the rationals.
//!
//! Exponent vectors have fixed length `nvars`; the zero polynomial stores no
//! terms, and stored coefficients are never zero.

use crate::scalar::Scalar;
use num::traits::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;

pub type Expo = Vec<u32>;

pub fn expo_total(e: &[u32]) -> u32 {
    e.iter().sum()
}

pub fn expo_add(a: &[u32], b: &[u32]) -> Expo {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn expo_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// b − a componentwise; caller ensures `a` divides `b`.
pub fn expo_sub(b: &[u32], a: &[u32]) -> Expo {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn expo_lcm(a: &[u32], b: &[u32]) -> Expo {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Term orders on commutative monomials; variable 0 is most significant
/// under Lex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CTermOrder {
    DegRevLex,
    Lex,
}

impl CTermOrder {
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            CTermOrder::DegRevLex => {
                match expo_total(a).cmp(&expo_total(b)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        // Larger exponent in the rightmost difference loses.
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            CTermOrder::Lex => {
                for i in 0..a.len() {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPoly {
    pub nvars: usize,
    terms: BTreeMap<Expo, Scalar>,
}

impl CPoly {
    pub fn zero(nvars: usize) -> Self {
        CPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = CPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        CPoly::constant(nvars, Scalar::from_integer(1.into()))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        CPoly::monomial(e, Scalar::from_integer(1.into()))
    }

    pub fn monomial(expo: Expo, c: Scalar) -> Self {
        let mut p = CPoly::zero(expo.len());
        p.add_term(expo, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, expo: Expo, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&expo) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&expo);
                }
            }
            None => {
                self.terms.insert(expo, c);
            }
        }
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CPoly {
        let mut out = CPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> CPoly {
        if c.is_zero() {
            return CPoly::zero(self.nvars);
        }
        let mut out = CPoly::zero(self.nvars);
        for (e, v) in self.terms() {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn mul_term(&self, expo: &[u32], c: &Scalar) -> CPoly {
        if c.is_zero() {
            return CPoly::zero(self.nvars);
        }
        let mut out = CPoly::zero(self.nvars);
        for (e, v) in self.terms() {
            out.terms.insert(expo_add(e, expo), v * c);
        }
        out
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut out = CPoly::zero(self.nvars);
        for (e, c) in other.terms() {
            out = out.add(&self.mul_term(e, c));
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| expo_total(e)).max()
    }

    pub fn lead(&self, ord: &CTermOrder) -> Option<(&Expo, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
    }
}
