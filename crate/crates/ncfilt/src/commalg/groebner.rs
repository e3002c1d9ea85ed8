//! Buchberger completion for submodules of free modules over a commutative
//! polynomial ring, with an elimination block order for syzygy extraction.

use super::cpoly::{expo_divides, expo_lcm, expo_sub, expo_total, CTermOrder, Expo};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num::traits::Zero;
use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

/// Element of a free module A^ncomps over k[x_1..x_nvars].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    pub ncomps: usize,
    pub nvars: usize,
    terms: BTreeMap<(usize, Expo), Scalar>,
}

/// Module monomial order: positions below `elim` dominate all others; inside
/// a block, the term order decides first and lower position wins ties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModOrder {
    pub term: CTermOrder,
    pub elim: usize,
}

impl ModOrder {
    pub fn top(term: CTermOrder) -> Self {
        ModOrder { term, elim: 0 }
    }

    pub fn compare(&self, a: (usize, &[u32]), b: (usize, &[u32])) -> Ordering {
        let block = |p: usize| usize::from(p >= self.elim);
        match block(b.0).cmp(&block(a.0)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.term.compare(a.1, b.1) {
            Ordering::Equal => b.0.cmp(&a.0),
            ord => ord,
        }
    }
}

impl MPoly {
    pub fn zero(ncomps: usize, nvars: usize) -> Self {
        MPoly { ncomps, nvars, terms: BTreeMap::new() }
    }

    pub fn unit(ncomps: usize, nvars: usize, pos: usize) -> Self {
        MPoly::monomial(ncomps, nvars, pos, vec![0; nvars], Scalar::from_integer(1.into()))
    }

    pub fn monomial(ncomps: usize, nvars: usize, pos: usize, expo: Expo, c: Scalar) -> Self {
        let mut p = MPoly::zero(ncomps, nvars);
        p.add_term(pos, expo, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, Expo), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, pos: usize, expo: Expo, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (pos, expo);
        match self.terms.get_mut(&key) {
            Some(entry) => {
                *entry += c;
                if entry.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for ((p, e), c) in other.terms() {
            out.add_term(*p, e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = MPoly::zero(self.ncomps, self.nvars);
        for ((p, e), c) in self.terms() {
            out.terms.insert((*p, e.clone()), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        let mut out = MPoly::zero(self.ncomps, self.nvars);
        if c.is_zero() {
            return out;
        }
        for ((p, e), v) in self.terms() {
            out.terms.insert((*p, e.clone()), v * c);
        }
        out
    }

    /// Multiplication by the ring monomial c·x^expo.
    pub fn mul_term(&self, expo: &[u32], c: &Scalar) -> MPoly {
        let mut out = MPoly::zero(self.ncomps, self.nvars);
        if c.is_zero() {
            return out;
        }
        for ((p, e), v) in self.terms() {
            out.terms.insert((*p, super::cpoly::expo_add(e, expo)), v * c);
        }
        out
    }

    pub fn mul_cpoly(&self, f: &super::cpoly::CPoly) -> MPoly {
        let mut out = MPoly::zero(self.ncomps, self.nvars);
        for (e, c) in f.terms() {
            out = out.add(&self.mul_term(e, c));
        }
        out
    }

    pub fn lead(&self, ord: &ModOrder) -> Option<((usize, Expo), Scalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare((a.0, &a.1), (b.0, &b.1)))
            .map(|((p, e), c)| ((*p, e.clone()), c.clone()))
    }

    pub fn monic(&self, ord: &ModOrder) -> MPoly {
        match self.lead(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Scalar::from_integer(1.into()) / c;
                self.scale(&inv)
            }
        }
    }

    pub fn max_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(_, e)| expo_total(e)).max()
    }
}

/// Full normal form: every term of the result is reduced.
pub fn reduce(f: &MPoly, gens: &[MPoly], ord: &ModOrder) -> MPoly {
    let leads: Vec<_> = gens.iter().filter_map(|g| g.lead(ord).map(|l| (g, l))).collect();
    let mut work = f.clone();
    let mut rem = MPoly::zero(f.ncomps, f.nvars);
    while let Some(((p, e), c)) = work.lead(ord) {
        let mut reduced = false;
        for (g, ((gp, ge), gc)) in &leads {
            if *gp == p && expo_divides(ge, &e) {
                let shift = expo_sub(&e, ge);
                let factor = &c / gc;
                work = work.sub(&g.mul_term(&shift, &factor));
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.add_term(p, e.clone(), c.clone());
            work.add_term(p, e, -c);
        }
    }
    rem
}

/// S-element of two module elements with leads in the same position.
pub fn spair(f: &MPoly, g: &MPoly, ord: &ModOrder) -> Option<MPoly> {
    let ((fp, fe), fc) = f.lead(ord)?;
    let ((gp, ge), gc) = g.lead(ord)?;
    if fp != gp {
        return None;
    }
    let lcm = expo_lcm(&fe, &ge);
    let a = f.mul_term(&expo_sub(&lcm, &fe), &(Scalar::from_integer(1.into()) / fc));
    let b = g.mul_term(&expo_sub(&lcm, &ge), &(Scalar::from_integer(1.into()) / gc));
    Some(a.sub(&b))
}

// No coprime-lead shortcut here: Buchberger's product criterion is unsound
// for module elements with tails in other positions.
pub fn buchberger(input: &[MPoly], ord: &ModOrder) -> Vec<MPoly> {
    let mut basis: Vec<MPoly> =
        input.iter().filter(|f| !f.is_zero()).map(|f| f.monic(ord)).collect();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in 0..i {
            queue.push_back((j, i));
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        let Some(s) = spair(&basis[i], &basis[j], ord) else { continue };
        let r = reduce(&s, &basis, ord);
        if !r.is_zero() {
            let k = basis.len();
            for m in 0..k {
                queue.push_back((m, k));
            }
            basis.push(r.monic(ord));
        }
    }
    basis
}

/// Reduced Groebner basis: minimal monic leads, fully tail-reduced, sorted
/// descending by lead.  Canonical for the submodule and order.
pub fn reduced_gb(basis: Vec<MPoly>, ord: &ModOrder) -> Vec<MPoly> {
    let leads: Vec<_> = basis.iter().map(|g| g.lead(ord)).collect();
    let mut kept: Vec<bool> = basis.iter().map(|g| !g.is_zero()).collect();
    for i in 0..basis.len() {
        if !kept[i] {
            continue;
        }
        let Some(((p, e), _)) = &leads[i] else { continue };
        for j in 0..basis.len() {
            if i == j || !kept[j] {
                continue;
            }
            let Some(((q, f), _)) = &leads[j] else { continue };
            let divides = q == p && expo_divides(f, e);
            let equal = q == p && f == e;
            if divides && (!equal || j < i) {
                kept[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MPoly> =
        basis.iter().zip(&kept).filter(|(_, k)| **k).map(|(g, _)| g.clone()).collect();
    let mut out = Vec::new();
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<MPoly> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let r = reduce(g, &others, ord);
        if !r.is_zero() {
            out.push(r.monic(ord));
        }
    }
    out.sort_by(|a, b| {
        let la = a.lead(ord).expect("nonzero");
        let lb = b.lead(ord).expect("nonzero");
        ord.compare((lb.0 .0, &lb.0 .1), (la.0 .0, &la.0 .1))
    });
    out
}

/// Reduced Groebner basis of the submodule generated by `input`.
pub fn gb(input: &[MPoly], ord: &ModOrder) -> Vec<MPoly> {
    reduced_gb(buchberger(input, ord), ord)
}

/// Generators of the syzygy module of `rows` ⊆ A^m: all (a_1..a_s) with
/// Σ a_i·rows_i = 0.  Computed by eliminating the first block in A^(m+s).
pub fn syzygies(rows: &[MPoly], term: CTermOrder) -> Result<Vec<MPoly>> {
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let m = rows[0].ncomps;
    let nvars = rows[0].nvars;
    if rows.iter().any(|r| r.ncomps != m || r.nvars != nvars) {
        return Err(Error::Invalid("syzygy rows must share shape".into()));
    }
    let s = rows.len();
    let mut aug = Vec::with_capacity(s);
    for (i, row) in rows.iter().enumerate() {
        let mut h = MPoly::zero(m + s, nvars);
        for ((p, e), c) in row.terms() {
            h.add_term(*p, e.clone(), c.clone());
        }
        h.add_term(m + i, vec![0; nvars], Scalar::from_integer(1.into()));
        aug.push(h);
    }
    let ord = ModOrder { term, elim: m };
    let basis = gb(&aug, &ord);
    let mut out = Vec::new();
    for g in basis {
        if g.terms().all(|((p, _), _)| *p >= m) {
            let mut stripped = MPoly::zero(s, nvars);
            for ((p, e), c) in g.terms() {
                stripped.add_term(p - m, e.clone(), c.clone());
            }
            out.push(stripped);
        }
    }
    Ok(out)
}
