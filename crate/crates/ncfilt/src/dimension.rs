//! Left modules over the presented algebras: capped completion of module
//! relations into suffix-anchored rewrite rules, dimension counts of the
//! induced filtration, Gelfand-Kirillov dimension, and canonical dimension
//! under the certified two-filtrations hypotheses.
//!
//! Module monomials are w·e_j with the algebra acting on the left, so module
//! rules fire only at the right end of the word, next to the generator.

use crate::commalg::growth_degree;
use crate::error::{Error, Result};
use crate::filtration::GradedDims;
use crate::order::Degree;
use crate::poly::NCPoly;
use crate::presentation::{Filtration, Presentation};
use crate::rewrite::{CompletionStatus, RewriteSystem};
use crate::scalar::Scalar;
use crate::twofilt::{two_filtrations, TwoFiltOutcome};
use crate::word::Word;
use num::traits::Zero;
use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

/// Element of a free left module with basis e_0..e_{rank-1}.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MElem {
    terms: BTreeMap<(Word, usize), Scalar>,
}

impl MElem {
    pub fn zero() -> Self {
        MElem::default()
    }

    pub fn unit(j: usize) -> Self {
        MElem::monomial(Word::empty(), j, Scalar::from_integer(1.into()))
    }

    pub fn monomial(w: Word, j: usize, c: Scalar) -> Self {
        let mut e = MElem::zero();
        e.add_term(w, j, c);
        e
    }

    pub fn from_poly(p: &NCPoly, j: usize) -> Self {
        let mut e = MElem::zero();
        for (w, c) in p.terms() {
            e.add_term(w.clone(), j, c.clone());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, usize), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, j: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (w, j);
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

    pub fn add(&self, other: &MElem) -> MElem {
        let mut out = self.clone();
        for ((w, j), c) in other.terms() {
            out.add_term(w.clone(), *j, c.clone());
        }
        out
    }

    pub fn neg(&self) -> MElem {
        let mut out = MElem::zero();
        for ((w, j), c) in self.terms() {
            out.terms.insert((w.clone(), *j), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MElem) -> MElem {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> MElem {
        let mut out = MElem::zero();
        if c.is_zero() {
            return out;
        }
        for ((w, j), v) in self.terms() {
            out.terms.insert((w.clone(), *j), v * c);
        }
        out
    }

    /// Left action by a word: prepends it to every module monomial.
    pub fn act_word(&self, v: &Word) -> MElem {
        let mut out = MElem::zero();
        for ((w, j), c) in self.terms() {
            out.terms.insert((v.concat(w), *j), c.clone());
        }
        out
    }

    /// Left action by an algebra element.
    pub fn act(&self, p: &NCPoly) -> MElem {
        let mut out = MElem::zero();
        for (v, a) in p.terms() {
            out = out.add(&self.act_word(v).scale(a));
        }
        out
    }
}

/// A finitely presented left module: rows are elements of the free module
/// whose span is divided out.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    pub algebra: Presentation,
    pub gen_weights: Vec<u32>,
    pub relations: Vec<MElem>,
}

impl ModulePresentation {
    /// The cyclic module A/⟨polys⟩ with its generator in weight 0.
    pub fn cyclic(algebra: Presentation, polys: &[NCPoly]) -> Self {
        let relations = polys.iter().map(|p| MElem::from_poly(p, 0)).collect();
        ModulePresentation { algebra, gen_weights: vec![0], relations }
    }

    pub fn rank(&self) -> usize {
        self.gen_weights.len()
    }

    fn validate(&self) -> Result<()> {
        self.algebra.validate()?;
        for r in &self.relations {
            for ((w, j), _) in r.terms() {
                if *j >= self.rank() {
                    return Err(Error::Invalid(format!("module position {j} out of range")));
                }
                for &l in w.letters() {
                    if l as usize >= self.algebra.ngens() {
                        return Err(Error::Invalid(format!("letter {l} out of range")));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ModuleRule {
    pub lead: (Word, usize),
    pub tail: MElem,
}

/// Capped rewrite system for a module presentation: the algebra's completed
/// rules plus suffix-anchored module rules, confluent inside the box.
#[derive(Clone, Debug)]
pub struct ModuleRewrite {
    algebra_rs: RewriteSystem,
    weights: Vec<u32>,
    rules: Vec<ModuleRule>,
    cap: u32,
    status: CompletionStatus,
}

impl ModuleRewrite {
    fn mono_degree(&self, w: &Word, j: usize) -> i64 {
        self.algebra_rs.order().wdeg(w) as i64 + self.weights[j] as i64
    }

    fn mono_in_box(&self, w: &Word, j: usize) -> bool {
        self.mono_degree(w, j) <= self.cap as i64
            && w.zero_weight_count(&self.algebra_rs.order().weights) <= self.cap as u64
    }

    fn compare(&self, a: (&Word, usize), b: (&Word, usize)) -> Ordering {
        match self.mono_degree(a.0, a.1).cmp(&self.mono_degree(b.0, b.1)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match self.algebra_rs.order().compare(a.0, b.0) {
            Ordering::Equal => b.1.cmp(&a.1),
            ord => ord,
        }
    }

    fn lead_of<'a>(&self, e: &'a MElem) -> Option<((&'a Word, usize), &'a Scalar)> {
        e.terms()
            .max_by(|((w1, j1), _), ((w2, j2), _)| self.compare((w1, *j1), (w2, *j2)))
            .map(|((w, j), c)| ((w, *j), c))
    }

    /// Full normal form: algebra rules anywhere in the word, module rules at
    /// the suffix.  Exact as an identity in the module regardless of cap.
    pub fn nf(&self, e: &MElem) -> MElem {
        let mut work = e.clone();
        loop {
            let mut step: Option<MElem> = None;
            'scan: for ((w, j), c) in work.terms() {
                for rule in self.algebra_rs.rules() {
                    if let Some(pos) = w.find(&rule.lead) {
                        let prefix = w.slice(0, pos);
                        let suffix = w.slice(pos + rule.lead.len(), w.len());
                        let replaced = rule.tail.framed(&prefix, &suffix).scale(c);
                        let mut delta = MElem::from_poly(&replaced, *j);
                        delta.add_term(w.clone(), *j, -c.clone());
                        step = Some(delta);
                        break 'scan;
                    }
                }
                for rule in &self.rules {
                    let (v, rj) = &rule.lead;
                    if *rj == *j && w.ends_with(v) {
                        let prefix = w.slice(0, w.len() - v.len());
                        let mut delta = rule.tail.act_word(&prefix).scale(c);
                        delta.add_term(w.clone(), *j, -c.clone());
                        step = Some(delta);
                        break 'scan;
                    }
                }
            }
            match step {
                Some(delta) => work = work.add(&delta),
                None => return work,
            }
        }
    }

    pub fn rules(&self) -> &[ModuleRule] {
        &self.rules
    }

    pub fn algebra(&self) -> &RewriteSystem {
        &self.algebra_rs
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn status(&self) -> &CompletionStatus {
        &self.status
    }

    pub fn is_complete(&self) -> bool {
        matches!(self.status, CompletionStatus::CompleteToCap)
    }

    pub fn complete(m: &ModulePresentation, f: &Filtration, cap: u32) -> Result<Self> {
        m.validate()?;
        f.check_against(&m.algebra)?;
        let algebra_rs = RewriteSystem::complete(&m.algebra, &f.order(), cap)?;
        let mut notes: Vec<String> = match algebra_rs.status() {
            CompletionStatus::CompleteToCap => Vec::new(),
            CompletionStatus::CapExceeded { notes } => notes.clone(),
        };
        let mut mrs = ModuleRewrite {
            algebra_rs,
            weights: m.gen_weights.clone(),
            rules: Vec::new(),
            cap,
            status: CompletionStatus::CompleteToCap,
        };
        let mut queue: VecDeque<MElem> = m.relations.iter().cloned().collect();
        while let Some(elem) = queue.pop_front() {
            let reduced = mrs.nf(&elem);
            if reduced.is_zero() {
                continue;
            }
            let ((lw, lj), lc) = {
                let ((w, j), c) = mrs.lead_of(&reduced).expect("nonzero");
                ((w.clone(), j), c.clone())
            };
            if !mrs.mono_in_box(&lw, lj) {
                notes.push(format!("module rule lead at position {lj} beyond cap {cap}"));
                continue;
            }
            let inv = Scalar::from_integer(1.into()) / lc;
            let mut tail = reduced.scale(&inv).neg();
            tail.add_term(lw.clone(), lj, Scalar::from_integer(1.into()));
            let new_rule = ModuleRule { lead: (lw.clone(), lj), tail };

            // Retire rules whose lead the new lead reduces (same position,
            // new lead a suffix), requeueing them as elements.
            let mut kept = Vec::new();
            for rule in std::mem::take(&mut mrs.rules) {
                let (v, rj) = &rule.lead;
                if *rj == lj && v.ends_with(&lw) {
                    let mut elem = rule.tail.neg();
                    elem.add_term(v.clone(), *rj, Scalar::from_integer(1.into()));
                    queue.push_back(elem);
                } else {
                    kept.push(rule);
                }
            }
            mrs.rules = kept;
            mrs.rules.push(new_rule);

            // Re-reduce the remaining tails against the enlarged system.
            let snapshot = mrs.clone();
            for rule in &mut mrs.rules {
                rule.tail = snapshot.nf(&rule.tail);
            }

            // Critical pairs of algebra leads sticking out to the left of
            // the new module lead.
            for arule in mrs.algebra_rs.rules().to_vec() {
                let u = &arule.lead;
                let max_o = u.len().min(lw.len());
                for o in 1..=max_o {
                    if u.slice(u.len() - o, u.len()) != lw.slice(0, o) {
                        continue;
                    }
                    let z = u.concat(&lw.slice(o, lw.len()));
                    if !mrs.mono_in_box(&z, lj) {
                        notes.push(format!("module overlap at position {lj} beyond cap {cap}"));
                        continue;
                    }
                    let via_algebra = MElem::from_poly(
                        &arule.tail.mul(&NCPoly::monomial(
                            lw.slice(o, lw.len()),
                            Scalar::from_integer(1.into()),
                        )),
                        lj,
                    );
                    let prefix = u.slice(0, u.len() - o);
                    let via_module = {
                        let rule = mrs
                            .rules
                            .iter()
                            .find(|r| r.lead == (lw.clone(), lj))
                            .expect("just inserted");
                        rule.tail.act_word(&prefix)
                    };
                    queue.push_back(via_algebra.sub(&via_module));
                }
            }
        }
        mrs.rules.sort_by(|a, b| {
            a.lead.1.cmp(&b.lead.1).then_with(|| a.lead.0.cmp(&b.lead.0))
        });
        notes.sort();
        notes.dedup();
        mrs.status = if notes.is_empty() {
            CompletionStatus::CompleteToCap
        } else {
            CompletionStatus::CapExceeded { notes }
        };
        Ok(mrs)
    }

    pub fn is_normal_mono(&self, w: &Word, j: usize) -> bool {
        for rule in self.algebra_rs.rules() {
            if w.find(&rule.lead).is_some() {
                return false;
            }
        }
        for rule in &self.rules {
            if rule.lead.1 == j && w.ends_with(&rule.lead.0) {
                return false;
            }
        }
        true
    }

    /// All normal module monomials in the box.  Normal monomials are closed
    /// under dropping the first letter, so the search prepends letters and
    /// only needs to test prefixes (algebra) and whole words (module).
    pub fn normal_monos(&self) -> Vec<(Word, usize)> {
        let ngens = self.algebra_rs.order().weights.len();
        let mut out = Vec::new();
        for j in 0..self.weights.len() {
            if !self.mono_in_box(&Word::empty(), j) || !self.is_normal_mono(&Word::empty(), j) {
                continue;
            }
            let mut stack = vec![Word::empty()];
            out.push((Word::empty(), j));
            while let Some(w) = stack.pop() {
                for l in 0..ngens {
                    let grown = Word::gen(l).concat(&w);
                    if !self.mono_in_box(&grown, j) {
                        continue;
                    }
                    let algebra_redex = self
                        .algebra_rs
                        .rules()
                        .iter()
                        .any(|r| r.lead.len() <= grown.len() && grown.slice(0, r.lead.len()) == r.lead);
                    let module_redex =
                        self.rules.iter().any(|r| r.lead.1 == j && r.lead.0 == grown);
                    if algebra_redex || module_redex {
                        continue;
                    }
                    out.push((grown.clone(), j));
                    stack.push(grown);
                }
            }
        }
        out
    }
}

/// Dimensions of the induced filtration: degree d counts normal module
/// monomials with wdeg(w) + weight(j) = d.
pub fn module_filtration_dims(mrs: &ModuleRewrite, cap: u32) -> Result<GradedDims> {
    if cap > mrs.cap() {
        return Err(Error::Invalid(format!(
            "dimension request at cap {cap} beyond the completed cap {}",
            mrs.cap()
        )));
    }
    let mut dims = vec![0u64; cap as usize + 1];
    for (w, j) in mrs.normal_monos() {
        let d = mrs.mono_degree(&w, j);
        if d <= cap as i64 {
            dims[d as usize] += 1;
        }
    }
    Ok(GradedDims(dims))
}

/// Growth degree of the cumulative dimension sequence.
pub fn gkdim_module(m: &ModulePresentation, f: &Filtration, cap: u32) -> Result<Degree> {
    let mrs = ModuleRewrite::complete(m, f, cap)?;
    let dims = module_filtration_dims(&mrs, cap)?;
    growth_degree(&dims.cumulative())
}

/// GK dimension together with the two-filtrations certificate for the base
/// algebra that makes it equal the canonical dimension.
#[derive(Clone, Debug)]
pub struct CdimReport {
    pub value: Degree,
    pub certificate: TwoFiltOutcome,
}

pub fn cdim_filtered(m: &ModulePresentation, f: &Filtration, cap: u32) -> Result<CdimReport> {
    let outcome = two_filtrations(&m.algebra, f, cap).map_err(|e| {
        Error::HypothesisNotCertified(format!("two-filtrations construction failed: {e}"))
    })?;
    if !outcome.report.pass {
        return Err(Error::HypothesisNotCertified(
            "gr under the derived filtration is not commutative connected".into(),
        ));
    }
    let value = gkdim_module(m, f, cap)?;
    Ok(CdimReport { value, certificate: outcome })
}
