//! The two-filtrations construction: starting from a filtration whose
//! graded algebra has enough central symbols, compute the exponents
//! (e₀, e₁, e₂) and a new filtration G whose associated graded is
//! commutative and connected.
//!
//! Symbol centrality is certified through the degree criterion: the symbols
//! of u and v commute exactly when deg([u, v]) ≤ deg(u) + deg(v) − 1.  All
//! certificates are capped and say so.

use crate::error::{Error, Result};
use crate::order::Degree;
use crate::poly::NCPoly;
use crate::presentation::{Filtration, Presentation};
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;
use crate::word::Word;
use std::fmt;

/// Classification of the generators: `a` = degree 0 with central symbol,
/// `b` = positive degree with central symbol, `c` = the rest, acting as
/// module generators over the central part (together with the identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSplit {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    /// F-degrees of all generators, indexed by generator.
    pub degrees: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    A,
    B,
    C,
}

impl GeneratorSplit {
    pub fn class_of(&self) -> Vec<Class> {
        let mut classes = vec![Class::C; self.degrees.len()];
        for &i in &self.a {
            classes[i] = Class::A;
        }
        for &i in &self.b {
            classes[i] = Class::B;
        }
        classes
    }

    fn validate(&self, ngens: usize) -> Result<()> {
        let mut seen = vec![false; ngens];
        for &i in self.a.iter().chain(&self.b).chain(&self.c) {
            if i >= ngens || seen[i] {
                return Err(Error::Invalid("split lists must partition the generators".into()));
            }
            seen[i] = true;
        }
        if !seen.iter().all(|&s| s) || self.degrees.len() != ngens {
            return Err(Error::Invalid("split lists must partition the generators".into()));
        }
        for &i in &self.a {
            if self.degrees[i] != 0 {
                return Err(Error::Invalid(format!("a-generator {i} has positive degree")));
            }
        }
        for &i in &self.b {
            if self.degrees[i] == 0 {
                return Err(Error::Invalid(format!("b-generator {i} has degree 0")));
            }
        }
        Ok(())
    }
}

/// The five identity families of the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityClass {
    /// [a_i, b_j]
    AB,
    /// [b_i, b_j]
    BB,
    /// [a_i, c_k]
    AC,
    /// [b_i, c_k]
    BC,
    /// c_i · c_j (a product, so the degree bound carries no −1)
    CC,
}

impl fmt::Display for IdentityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdentityClass::AB => "[a,b]",
            IdentityClass::BB => "[b,b]",
            IdentityClass::AC => "[a,c]",
            IdentityClass::BC => "[b,c]",
            IdentityClass::CC => "c*c",
        };
        write!(f, "{s}")
    }
}

/// One normal-form term in sorted shape: a-letters, then b-letters, then at
/// most one c-letter (absent = the identity module generator).
#[derive(Clone, Debug)]
pub struct SortedTerm {
    pub coeff: Scalar,
    pub a_part: Word,
    pub b_part: Word,
    pub c_letter: Option<usize>,
}

/// One fully expanded identity with its decomposition and the F-degree
/// bound it is required (and checked) to satisfy.
#[derive(Clone, Debug)]
pub struct StructureIdentity {
    pub class: IdentityClass,
    pub left: usize,
    pub right: usize,
    pub expansion: NCPoly,
    pub terms: Vec<SortedTerm>,
    pub f_bound: i64,
}

#[derive(Clone, Debug)]
pub struct StructureData {
    pub identities: Vec<StructureIdentity>,
    /// Largest a-part length over all terms: the e₀ candidate.
    pub max_a_degree: u32,
}

/// The exponents of the construction; e₁ and e₂ are determined by e₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exponents {
    pub e0: u32,
    pub e1: u32,
    pub e2: u32,
}

impl Exponents {
    pub fn from_e0(e0: u32) -> Self {
        let e1 = e0 + 1;
        Exponents { e0, e1, e2: e0 + e1 + 1 }
    }
}

#[derive(Clone, Debug)]
pub struct CommutationFailure {
    pub left: usize,
    pub right: usize,
    pub degree: Degree,
    pub bound: i64,
}

/// Result of checking that gr under a candidate filtration is commutative
/// and connected, degree by degree up to the cap.
#[derive(Clone, Debug)]
pub struct TwoFiltReport {
    pub cap: u32,
    pub complete: bool,
    pub gr0_dim: u64,
    pub connected: bool,
    pub failures: Vec<CommutationFailure>,
    pub pass: bool,
}

/// Everything the pipeline produces for one input filtration.
#[derive(Clone, Debug)]
pub struct TwoFiltOutcome {
    pub split: GeneratorSplit,
    pub structure: StructureData,
    pub exponents: Exponents,
    pub g: Filtration,
    pub report: TwoFiltReport,
}

fn commutator_degree(rs: &RewriteSystem, i: usize, j: usize) -> Result<Degree> {
    let comm = NCPoly::gen(i).commutator(&NCPoly::gen(j));
    Ok(rs.nf(&comm)?.wdeg(rs.order()))
}

/// Proposes a generator split: degree-0 generators with cap-certified
/// central symbols go to `a`, positive-degree ones to `b`, everything else
/// to `c`.  Centrality of a symbol is certified pairwise against all
/// generators; since symbols generate gr, this extends to all of gr.
pub fn derive_split(
    pres: &Presentation,
    f: &Filtration,
    rs: &RewriteSystem,
    cap: u32,
) -> Result<GeneratorSplit> {
    f.check_against(pres)?;
    if f.degrees != rs.order().weights {
        return Err(Error::Invalid("rewrite system was completed under different weights".into()));
    }
    if cap > rs.cap() {
        return Err(Error::Invalid(format!(
            "split certification at cap {cap} needs a system completed at least that far"
        )));
    }
    if !rs.is_complete() {
        return Err(Error::SplitNotFound(format!(
            "completion exceeded the cap {}; symbol centrality cannot be certified",
            rs.cap()
        )));
    }
    let n = pres.ngens();
    let mut central = vec![true; n];
    for i in 0..n {
        for j in 0..n {
            let bound = f.degrees[i] as i64 + f.degrees[j] as i64 - 1;
            if commutator_degree(rs, i, j)? > Degree::Fin(bound) {
                central[i] = false;
                break;
            }
        }
    }
    let mut split = GeneratorSplit { a: vec![], b: vec![], c: vec![], degrees: f.degrees.clone() };
    for i in 0..n {
        match (central[i], f.degrees[i]) {
            (true, 0) => split.a.push(i),
            (true, _) => split.b.push(i),
            (false, _) => split.c.push(i),
        }
    }
    Ok(split)
}

fn sort_word(w: &Word, classes: &[Class]) -> Option<(Word, Word, Option<usize>)> {
    let mut a_letters = Vec::new();
    let mut b_letters = Vec::new();
    let mut c_letter = None;
    // 0: in the a-prefix, 1: in the b-run, 2: after the c-letter.
    let mut stage = 0u8;
    for &l in w.letters() {
        if stage == 2 {
            return None;
        }
        match classes[l as usize] {
            Class::A => {
                if stage > 0 {
                    return None;
                }
                a_letters.push(l);
            }
            Class::B => {
                stage = 1;
                b_letters.push(l);
            }
            Class::C => {
                stage = 2;
                c_letter = Some(l as usize);
            }
        }
    }
    Some((Word::from_letters(a_letters), Word::from_letters(b_letters), c_letter))
}

fn extract_identity(
    class: IdentityClass,
    left: usize,
    right: usize,
    f_bound: i64,
    rs: &RewriteSystem,
    classes: &[Class],
) -> Result<StructureIdentity> {
    let raw = match class {
        IdentityClass::CC => NCPoly::gen(left).mul(&NCPoly::gen(right)),
        _ => NCPoly::gen(left).commutator(&NCPoly::gen(right)),
    };
    let expansion = rs.nf(&raw)?;
    if expansion.wdeg(rs.order()) > Degree::Fin(f_bound) {
        return Err(Error::VerificationFailed(format!(
            "{class} identity for ({left}, {right}) has degree {} above the bound {f_bound}",
            expansion.wdeg(rs.order())
        )));
    }
    let mut terms = Vec::new();
    for (w, coeff) in expansion.terms() {
        let (a_part, b_part, c_letter) = sort_word(w, classes).ok_or_else(|| {
            Error::FormExtractionFailed(format!(
                "{class} identity for ({left}, {right}) contains the unsorted word {w:?}"
            ))
        })?;
        terms.push(SortedTerm { coeff: coeff.clone(), a_part, b_part, c_letter });
    }
    Ok(StructureIdentity { class, left, right, expansion, terms, f_bound })
}

/// Expands the five identity families and decomposes every normal-form term
/// into the sorted a·b·c shape, checking the F-degree bound of each family.
pub fn extract_structure(split: &GeneratorSplit, rs: &RewriteSystem) -> Result<StructureData> {
    let n = split.degrees.len();
    split.validate(n)?;
    let classes = split.class_of();
    let deg = |i: usize| split.degrees[i] as i64;

    // Degree-0 central generators must commute exactly: [F₀, F₀] ⊆ F₋₁ = 0.
    for (pos, &i) in split.a.iter().enumerate() {
        for &j in &split.a[..pos] {
            let comm = rs.nf(&NCPoly::gen(i).commutator(&NCPoly::gen(j)))?;
            if !comm.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "degree-0 generators {i} and {j} do not commute"
                )));
            }
        }
    }

    let mut identities = Vec::new();
    for &i in &split.a {
        for &j in &split.b {
            identities.push(extract_identity(IdentityClass::AB, i, j, deg(j) - 1, rs, &classes)?);
        }
    }
    for (pos, &j) in split.b.iter().enumerate() {
        for &i in &split.b[..pos] {
            identities
                .push(extract_identity(IdentityClass::BB, i, j, deg(i) + deg(j) - 1, rs, &classes)?);
        }
    }
    for &i in &split.a {
        for &k in &split.c {
            identities.push(extract_identity(IdentityClass::AC, i, k, deg(k) - 1, rs, &classes)?);
        }
    }
    for &i in &split.b {
        for &k in &split.c {
            identities
                .push(extract_identity(IdentityClass::BC, i, k, deg(i) + deg(k) - 1, rs, &classes)?);
        }
    }
    for &i in &split.c {
        for &j in &split.c {
            identities.push(extract_identity(IdentityClass::CC, i, j, deg(i) + deg(j), rs, &classes)?);
        }
    }
    let max_a_degree =
        identities.iter().flat_map(|id| id.terms.iter().map(|t| t.a_part.len() as u32)).max().unwrap_or(0);
    Ok(StructureData { identities, max_a_degree })
}

/// e₀ = largest total a-degree of any recorded coefficient; e₁ and e₂ follow.
pub fn compute_exponents(sd: &StructureData) -> Exponents {
    Exponents::from_e0(sd.max_a_degree)
}

/// The new filtration: a ↦ 1, b ↦ e₂·deg^F, c ↦ e₂·deg^F + e₁.
pub fn build_g(split: &GeneratorSplit, e: &Exponents) -> Filtration {
    let mut degrees = vec![0u32; split.degrees.len()];
    for &i in &split.a {
        degrees[i] = 1;
    }
    for &i in &split.b {
        degrees[i] = e.e2 * split.degrees[i];
    }
    for &i in &split.c {
        degrees[i] = e.e2 * split.degrees[i] + e.e1;
    }
    Filtration::new(degrees)
}

fn term_g_degree(t: &SortedTerm, split: &GeneratorSplit, e: &Exponents) -> i64 {
    let b_weight: i64 =
        t.b_part.letters().iter().map(|&l| split.degrees[l as usize] as i64).sum();
    let c_weight = t
        .c_letter
        .map(|k| e.e2 as i64 * split.degrees[k] as i64 + e.e1 as i64)
        .unwrap_or(0);
    t.a_part.len() as i64 + e.e2 as i64 * b_weight + c_weight
}

/// Checks that every recorded term sits strictly below the G-degree of its
/// identity's left-hand side, which is what makes gr^G commutative and kills
/// the c·c products.
pub fn check_g_bounds(sd: &StructureData, split: &GeneratorSplit, e: &Exponents) -> Result<()> {
    let g = build_g(split, e);
    for id in &sd.identities {
        let lhs = g.degrees[id.left] as i64 + g.degrees[id.right] as i64 - 1;
        for t in &id.terms {
            let d = term_g_degree(t, split, e);
            if d > lhs {
                return Err(Error::VerificationFailed(format!(
                    "{} identity for ({}, {}) has a term of G-degree {d} above the bound {lhs}",
                    id.class, id.left, id.right
                )));
            }
        }
    }
    Ok(())
}

/// Recompletes under the G-weights and checks connectedness (dim gr^G₀ = 1)
/// and pairwise symbol commutation via the degree criterion.
pub fn verify_commutative_connected(
    pres: &Presentation,
    g: &Filtration,
    cap: u32,
) -> Result<TwoFiltReport> {
    g.check_against(pres)?;
    let rs = RewriteSystem::complete(pres, &g.order(), cap)?;
    let complete = rs.is_complete();
    let gr0_dim = rs.graded_counts()[0];
    let connected = gr0_dim == 1;
    let mut failures = Vec::new();
    let n = pres.ngens();
    for i in 0..n {
        for j in 0..i {
            let bound = g.degrees[i] as i64 + g.degrees[j] as i64 - 1;
            let degree = commutator_degree(&rs, i, j)?;
            if degree > Degree::Fin(bound) {
                failures.push(CommutationFailure { left: i, right: j, degree, bound });
            }
        }
    }
    let pass = complete && connected && failures.is_empty();
    Ok(TwoFiltReport { cap, complete, gr0_dim, connected, failures, pass })
}

/// Full pipeline: complete under F, derive the split, extract structure,
/// compute exponents, build G, verify.
pub fn two_filtrations(pres: &Presentation, f: &Filtration, cap: u32) -> Result<TwoFiltOutcome> {
    let rs = RewriteSystem::complete(pres, &f.order(), cap)?;
    let split = derive_split(pres, f, &rs, cap)?;
    let structure = extract_structure(&split, &rs)?;
    let exponents = compute_exponents(&structure);
    check_g_bounds(&structure, &split, &exponents)?;
    let g = build_g(&split, &exponents);
    let report = verify_commutative_connected(pres, &g, cap)?;
    Ok(TwoFiltOutcome { split, structure, exponents, g, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{skew_poly, tensor, u_lie, weyl, LieData};
    use crate::presentation::Generator;
    use crate::scalar::int;

    #[test]
    fn weyl1_order_filtration_pipeline() {
        let (pres, order, _) = weyl(1);
        let out = two_filtrations(&pres, &order, 8).unwrap();
        assert_eq!(out.split.a, vec![0]);
        assert_eq!(out.split.b, vec![1]);
        assert!(out.split.c.is_empty());
        assert_eq!(out.exponents, Exponents { e0: 0, e1: 1, e2: 2 });
        assert_eq!(out.g.degrees, vec![1, 2]);
        assert!(out.report.pass);
        // The one AB identity is [x, y] = -1.
        assert_eq!(out.structure.identities.len(), 1);
        let id = &out.structure.identities[0];
        assert_eq!(id.expansion, NCPoly::constant(int(-1)));
        assert_eq!(id.terms.len(), 1);
        assert!(id.terms[0].a_part.is_empty() && id.terms[0].c_letter.is_none());
    }

    #[test]
    fn weyl2_order_filtration_pipeline() {
        let (pres, order, _) = weyl(2);
        let out = two_filtrations(&pres, &order, 8).unwrap();
        assert_eq!(out.split.a, vec![0, 1]);
        assert_eq!(out.split.b, vec![2, 3]);
        assert_eq!(out.exponents.e2, 2);
        assert_eq!(out.g.degrees, vec![1, 1, 2, 2]);
        assert!(out.report.pass);
    }

    #[test]
    fn sl2_pipeline() {
        let (pres, filt) = u_lie(&LieData::sl2()).unwrap();
        let out = two_filtrations(&pres, &filt, 8).unwrap();
        assert!(out.split.a.is_empty());
        assert_eq!(out.split.b, vec![0, 1, 2]);
        assert_eq!(out.exponents, Exponents::from_e0(0));
        assert_eq!(out.g.degrees, vec![2, 2, 2]);
        assert!(out.report.pass);
    }

    #[test]
    fn commutative_polynomial_ring_pipeline() {
        let rel = NCPoly::monomial(Word::from_letters(vec![1, 0]), int(1))
            .add(&NCPoly::monomial(Word::from_letters(vec![0, 1]), int(-1)));
        let pres = Presentation::new(
            vec![
                Generator { name: "x".into(), degree: 1 },
                Generator { name: "y".into(), degree: 1 },
            ],
            vec![rel],
        );
        let filt = Filtration::new(vec![1, 1]);
        let out = two_filtrations(&pres, &filt, 6).unwrap();
        assert!(out.split.a.is_empty());
        assert_eq!(out.split.b, vec![0, 1]);
        assert_eq!(out.g.degrees, vec![2, 2]);
        assert!(out.report.pass);
    }

    #[test]
    fn tensor_of_weyls_pipeline() {
        let (p1, order, _) = weyl(1);
        let (prod, filt) = tensor(&p1, &order, &p1, &order).unwrap();
        let out = two_filtrations(&prod, &filt, 8).unwrap();
        assert_eq!(out.split.a, vec![0, 2]);
        assert_eq!(out.split.b, vec![1, 3]);
        assert_eq!(out.exponents, Exponents::from_e0(0));
        assert_eq!(out.g.degrees, vec![1, 2, 1, 2]);
        assert!(out.report.pass);
    }

    #[test]
    fn quadratic_coefficient_bumps_exponents() {
        // [a, b] = a², so e₀ = 2.
        let rel = NCPoly::monomial(Word::from_letters(vec![1, 0]), int(1))
            .add(&NCPoly::monomial(Word::from_letters(vec![0, 1]), int(-1)))
            .add(&NCPoly::monomial(Word::from_letters(vec![0, 0]), int(1)));
        let pres = Presentation::new(
            vec![
                Generator { name: "a".into(), degree: 0 },
                Generator { name: "b".into(), degree: 1 },
            ],
            vec![rel],
        );
        let filt = Filtration::new(vec![0, 1]);
        let out = two_filtrations(&pres, &filt, 8).unwrap();
        assert_eq!(out.exponents, Exponents { e0: 2, e1: 3, e2: 6 });
        assert_eq!(out.g.degrees, vec![1, 6]);
        assert!(out.report.pass);
    }

    #[test]
    fn skew_ring_fails_form_extraction() {
        let base = Presentation::new(vec![Generator { name: "t".into(), degree: 0 }], vec![]);
        let skew = skew_poly(&base, &[NCPoly::gen(0).neg()]).unwrap();
        let filt = Filtration::from_presentation(&skew);
        let err = two_filtrations(&skew, &filt, 6);
        assert!(matches!(err, Err(Error::FormExtractionFailed(_))));
        // Both symbols fail centrality, so everything lands in c.
        let rs = RewriteSystem::complete(&skew, &filt.order(), 6).unwrap();
        let split = derive_split(&skew, &filt, &rs, 6).unwrap();
        assert!(split.a.is_empty() && split.b.is_empty());
        assert_eq!(split.c, vec![0, 1]);
    }

    #[test]
    fn order_filtration_itself_fails_connectedness() {
        let (pres, order, _) = weyl(1);
        let report = verify_commutative_connected(&pres, &order, 6).unwrap();
        assert!(!report.connected);
        assert_eq!(report.gr0_dim, 7);
        assert!(!report.pass);
        assert!(report.failures.is_empty());
    }
}
