//! Ore witness search in the degree box, the folding map on enveloping
//! normal forms with its nonvanishing certificate, and the differential and
//! diagonal-support checks on filtrations and bimodules.

use crate::constructors::{enveloping, skew_poly};
use crate::dimension::{MElem, ModulePresentation, ModuleRewrite};
use crate::error::{Error, Result};
use crate::linalg::{Eliminator, SparseVec};
use crate::order::Degree;
use crate::poly::NCPoly;
use crate::presentation::{Filtration, Generator, Presentation};
use crate::rewrite::RewriteSystem;
use crate::scalar;
use crate::word::Word;
use std::collections::BTreeMap;
use std::fmt;

/// Right-division query: does `a * s^k` fall into `A * s` for some `k`?
#[derive(Clone, Debug)]
pub struct OreQuery {
    pub s: NCPoly,
    pub a: NCPoly,
    pub k_max: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OreVerdict {
    /// `a * s^k = a' * s` holds exactly in the quotient.
    Witness { a_prime: NCPoly, k: u32 },
    /// A certificate that no power works; carries its rendering.
    ObstructionCertified(String),
    /// The box or the power bound ran out before anything was decided.
    Inconclusive { cap: u32, k_max: u32 },
}

fn nf_within_box(rs: &RewriteSystem, p: &NCPoly) -> Result<Option<NCPoly>> {
    match rs.nf(p) {
        Ok(q) => Ok(Some(q)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn densify(p: &NCPoly, rows: &mut BTreeMap<Word, usize>) -> SparseVec {
    let mut v = SparseVec::new();
    for (w, c) in p.terms() {
        let next = rows.len();
        let row = *rows.entry(w.clone()).or_insert(next);
        v.insert(row, c.clone());
    }
    v
}

/// Elimination data for right division by a fixed `s`: the columns
/// `nf(w * s)` over the normal words `w` whose product with `s` stays inside
/// the box.  Building the columns dominates the cost, so one engine serves
/// any number of numerators.
pub struct OreEngine<'a> {
    rs: &'a RewriteSystem,
    s: NCPoly,
    rows: BTreeMap<Word, usize>,
    columns: Vec<Word>,
    elim: Eliminator,
}

impl<'a> OreEngine<'a> {
    pub fn new(rs: &'a RewriteSystem, s: &NCPoly) -> Result<Self> {
        let s = rs.nf(s)?;
        if s.is_zero() {
            return Err(Error::Invalid("Ore query with s = 0".into()));
        }
        if s.terms().all(|(w, _)| w.is_empty()) {
            return Err(Error::Invalid("Ore query with invertible constant s".into()));
        }
        let cap = rs.cap();
        let order = rs.order();
        let s_wdeg = s.terms().map(|(w, _)| order.wdeg(w)).max().unwrap_or(0);
        let s_zeros = s
            .terms()
            .map(|(w, _)| w.zero_weight_count(&order.weights))
            .max()
            .unwrap_or(0);

        let mut rows: BTreeMap<Word, usize> = BTreeMap::new();
        let mut columns: Vec<Word> = Vec::new();
        let mut elim = Eliminator::new();
        for w in rs.normal_words() {
            if order.wdeg(&w) + s_wdeg > cap as u64
                || w.zero_weight_count(&order.weights) + s_zeros > cap as u64
            {
                continue;
            }
            let prod = NCPoly::monomial(w.clone(), scalar::one()).mul(&s);
            let Some(col) = nf_within_box(rs, &prod)? else {
                continue;
            };
            elim.add_column(densify(&col, &mut rows));
            columns.push(w);
        }
        Ok(OreEngine { rs, s, rows, columns, elim })
    }

    /// Least `k <= k_max` with `a * s^k = a' * s` exactly, if the box admits
    /// one.  Every returned witness is re-verified by normal forms; running
    /// out of box or powers is reported as inconclusive, never as absence.
    pub fn search(&self, a: &NCPoly, k_max: u32) -> Result<OreVerdict> {
        let inconclusive = || OreVerdict::Inconclusive { cap: self.rs.cap(), k_max };
        let mut target = self.rs.nf(a)?;
        for k in 1..=k_max {
            target = match nf_within_box(self.rs, &target.mul(&self.s))? {
                Some(t) => t,
                None => return Ok(inconclusive()),
            };
            if let Some(sol) = self.elim.solve(densify(&target, &mut self.rows.clone())) {
                let mut a_prime = NCPoly::zero();
                for (idx, c) in sol {
                    a_prime = a_prime.add(&NCPoly::monomial(self.columns[idx].clone(), c));
                }
                if self.rs.nf(&a_prime.mul(&self.s))? != target {
                    return Err(Error::VerificationFailed(
                        "elimination produced a witness that does not re-verify".into(),
                    ));
                }
                return Ok(OreVerdict::Witness { a_prime, k });
            }
        }
        Ok(inconclusive())
    }
}

/// Searches for the smallest `k <= k_max` with `a * s^k` in the left ideal
/// `A * s`, working entirely inside the completion box.
pub fn ore_witness_search(rs: &RewriteSystem, query: &OreQuery) -> Result<OreVerdict> {
    OreEngine::new(rs, &query.s)?.search(&query.a, query.k_max)
}

/// Checks a proposed witness: `a * s^k = a' * s` in the quotient.
pub fn verify_witness(
    rs: &RewriteSystem,
    s: &NCPoly,
    a: &NCPoly,
    a_prime: &NCPoly,
    k: u32,
) -> Result<bool> {
    let lhs = rs.nf(&a.mul(&s.pow(k)))?;
    let rhs = rs.nf(&a_prime.mul(s))?;
    Ok(lhs == rhs)
}

/// The folding map on an enveloping algebra with `n_unprimed` generators in
/// the first tensor factor: a normal word `u * v'` (unprimed block, then
/// primed block) maps to `u * reverse(unprime(v'))`, reduced in the base.
/// The reversal is forced by the opposite multiplication carried by the
/// primed letters: a primed normal word spells its base factors backwards.
pub fn mu(
    p: &NCPoly,
    n_unprimed: usize,
    rs_env: &RewriteSystem,
    rs_base: &RewriteSystem,
) -> Result<NCPoly> {
    let reduced = rs_env.nf(p)?;
    let mut folded = NCPoly::zero();
    for (w, c) in reduced.terms() {
        let letters = w.letters();
        let split = letters
            .iter()
            .position(|&l| (l as usize) >= n_unprimed)
            .unwrap_or(letters.len());
        if letters[split..].iter().any(|&l| (l as usize) < n_unprimed) {
            return Err(Error::Invalid(
                "enveloping normal form is not split into unprimed then primed letters".into(),
            ));
        }
        let unprimed = w.slice(0, split);
        let primed = w
            .slice(split, w.len())
            .map_letters(|l| l - n_unprimed as u32)
            .reversed();
        folded.add_term(unprimed.concat(&primed), c.clone());
    }
    rs_base.nf(&folded)
}

/// Evidence that left multiples of `a x 1` by powers of `s = t x 1 - 1 x t`
/// never reach the right ideal generated by `s` in the enveloping algebra of
/// the sign-twisted skew extension of `k[t]`.
#[derive(Clone, Debug)]
pub struct MuCertificate {
    pub n_max: u32,
    pub words_checked: usize,
}

impl fmt::Display for MuCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mu(s^n * (a x 1)) = (2t)^n * a is nonzero for n = 1..{}, while mu vanishes on \
             z * s for every normal word z up to degree {} ({} words checked); no power \
             s^k * (a x 1) lies in the right ideal generated by s",
            self.n_max, self.n_max, self.words_checked
        )
    }
}

impl MuCertificate {
    pub fn verdict(&self) -> OreVerdict {
        OreVerdict::ObstructionCertified(self.to_string())
    }
}

/// Builds the sign-twisted extension `B` of `k[t]` and its enveloping
/// algebra, then certifies the folding obstruction up to degree `n_max`:
/// `mu(s^n * (a x 1)) = (2t)^n * a` and `mu(z * s) = 0` for every normal
/// word `z` of degree at most `n_max`, where `s = t x 1 - 1 x t`.
pub fn mu_obstruction(n_max: u32) -> Result<MuCertificate> {
    let base = Presentation::new(vec![Generator { name: "t".into(), degree: 1 }], vec![]);
    let b = skew_poly(&base, &[NCPoly::gen(0).neg()])?;
    let be = enveloping(&b)?;
    let cap = n_max + 2;
    let rs_b = RewriteSystem::complete(&b, &Filtration::from_presentation(&b).order(), cap)?;
    let rs_be = RewriteSystem::complete(&be, &Filtration::from_presentation(&be).order(), cap)?;

    // Letters in be: 0 = t, 1 = a, 2 = t', 3 = a'.
    let (t, a, t_op) = (0usize, 1usize, 2usize);
    let s = NCPoly::gen(t).sub(&NCPoly::gen(t_op));
    for n in 1..=n_max {
        let image = mu(&s.pow(n).mul(&NCPoly::gen(a)), 2, &rs_be, &rs_b)?;
        let expect = NCPoly::gen(t).scale(&scalar::int(2)).pow(n).mul(&NCPoly::gen(a));
        if image != expect {
            return Err(Error::VerificationFailed(format!(
                "mu(s^{n} * (a x 1)) deviates from (2t)^{n} * a"
            )));
        }
    }
    let mut words_checked = 0usize;
    let order = rs_be.order();
    for w in rs_be.normal_words() {
        if order.wdeg(&w) > n_max as u64 {
            continue;
        }
        let image = mu(&NCPoly::monomial(w.clone(), scalar::one()).mul(&s), 2, &rs_be, &rs_b)?;
        if !image.is_zero() {
            return Err(Error::VerificationFailed(format!(
                "mu does not vanish on {w:?} * s"
            )));
        }
        words_checked += 1;
    }
    Ok(MuCertificate { n_max, words_checked })
}

/// One violated commutator bound: `[c, m]` landed above filtration level
/// `deg(c) + wdeg(m) - 1`.
#[derive(Clone, Debug)]
pub struct DiffFailure {
    pub c_gen: usize,
    pub word: Word,
    pub got: i64,
    pub bound: i64,
}

#[derive(Clone, Debug)]
pub struct DiffReport {
    pub cap: u32,
    pub checked: u64,
    /// Index `d`: all commutators against normal words of degree `d` stayed
    /// within their bound (vacuously true where nothing was checked).
    pub by_degree: Vec<bool>,
    pub failures: Vec<DiffFailure>,
    pub pass: bool,
}

/// Checks that the subalgebra generated by the `c_gens` acts differentially
/// on the filtration: `[c, F_i]` inside `F_{deg(c) + i - 1}`, verified on
/// every normal word in the box with room for the product.
pub fn differential_filtration_check(
    pres: &Presentation,
    filt: &Filtration,
    c_gens: &[usize],
    cap: u32,
) -> Result<DiffReport> {
    filt.check_against(pres)?;
    for &c in c_gens {
        if c >= pres.ngens() {
            return Err(Error::Invalid(format!("generator index {c} out of range")));
        }
    }
    let order = filt.order();
    let rs = RewriteSystem::complete(pres, &order, cap)?;
    if !rs.is_complete() {
        return Err(Error::HypothesisNotCertified(
            "completion left the box; commutator degrees would not be canonical".into(),
        ));
    }
    let words = rs.normal_words();
    let mut by_degree = vec![true; cap as usize + 1];
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for &c in c_gens {
        let c_deg = order.weights[c] as i64;
        let c_zeros = u64::from(order.weights[c] == 0);
        let c_poly = NCPoly::gen(c);
        for m in &words {
            let m_deg = order.wdeg(m) as i64;
            if m_deg + c_deg > cap as i64
                || m.zero_weight_count(&order.weights) + c_zeros > cap as u64
            {
                continue;
            }
            let comm = rs.nf(&c_poly.commutator(&NCPoly::monomial(m.clone(), scalar::one())))?;
            let bound = c_deg + m_deg - 1;
            checked += 1;
            if let Degree::Fin(got) = comm.wdeg(&order) {
                if got > bound {
                    by_degree[m_deg as usize] = false;
                    failures.push(DiffFailure { c_gen: c, word: m.clone(), got, bound });
                }
            }
        }
    }
    let pass = failures.is_empty();
    Ok(DiffReport { cap, checked, by_degree, failures, pass })
}

#[derive(Clone, Debug)]
pub struct DiagonalSupportReport {
    pub k_max: u32,
    /// Completion certified: a `None` below is then a real failure to
    /// annihilate, not a truncation artifact.
    pub complete: bool,
    /// Least `k` with the k-fold diagonal products killing each module
    /// generator, `None` if no `k <= k_max` works.
    pub per_generator: Vec<Option<u32>>,
    pub pass: bool,
}

fn multisets(n: usize, k: u32) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: u32, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k - 1, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Tests whether a module over the enveloping algebra of a commutative `c`
/// is supported on the diagonal: some power of the differences `g_i - g_i'`
/// must annihilate every generator.  Commutativity lets products over
/// multisets of indices stand in for all products, and annihilating the
/// generators annihilates their cyclic submodules.
pub fn diagonal_support_check(
    c: &Presentation,
    module: &ModulePresentation,
    k_max: u32,
    cap: u32,
) -> Result<DiagonalSupportReport> {
    let env = enveloping(c)?;
    if module.algebra != env {
        return Err(Error::Invalid(
            "module is not presented over the enveloping algebra of the given ring".into(),
        ));
    }
    let filt = Filtration::from_presentation(&env);
    let rs = RewriteSystem::complete(&env, &filt.order(), cap)?;
    let ngens = env.ngens();
    for i in 0..ngens {
        for j in 0..i {
            if !rs.nf(&NCPoly::gen(i).commutator(&NCPoly::gen(j)))?.is_zero() {
                return Err(Error::Invalid(
                    "diagonal support check requires a commutative enveloping algebra".into(),
                ));
            }
        }
    }
    let mrs = ModuleRewrite::complete(module, &filt, cap)?;
    let n = c.ngens();
    let diffs: Vec<NCPoly> =
        (0..n).map(|i| NCPoly::gen(i).sub(&NCPoly::gen(n + i))).collect();
    let mut per_generator = Vec::with_capacity(module.rank());
    for j in 0..module.rank() {
        let mut least = None;
        'powers: for k in 1..=k_max {
            for multiset in multisets(n, k) {
                let mut prod = NCPoly::one();
                for &i in &multiset {
                    prod = prod.mul(&diffs[i]);
                }
                if !mrs.nf(&MElem::unit(j).act(&prod)).is_zero() {
                    continue 'powers;
                }
            }
            least = Some(k);
            break;
        }
        per_generator.push(least);
    }
    let pass = per_generator.iter().all(|k| k.is_some());
    Ok(DiagonalSupportReport { k_max, complete: mrs.is_complete(), per_generator, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::weyl;
    use crate::scalar::int;

    fn a1_system(cap: u32) -> RewriteSystem {
        let (pres, order, _) = weyl(1);
        RewriteSystem::complete(&pres, &order.order(), cap).unwrap()
    }

    #[test]
    fn ore_search_finds_the_immediate_witness() {
        let rs = a1_system(8);
        let query = OreQuery { s: NCPoly::gen(0), a: NCPoly::gen(1), k_max: 4 };
        let verdict = ore_witness_search(&rs, &query).unwrap();
        assert_eq!(verdict, OreVerdict::Witness { a_prime: NCPoly::gen(1), k: 1 });
    }

    #[test]
    fn pinned_witness_verifies_and_sign_flip_does_not() {
        let rs = a1_system(8);
        let (x, y) = (NCPoly::gen(0), NCPoly::gen(1));
        let xy = x.mul(&y);
        let good = xy.add(&NCPoly::one());
        let bad = xy.sub(&NCPoly::one());
        assert!(verify_witness(&rs, &x, &y, &good, 2).unwrap());
        assert!(!verify_witness(&rs, &x, &y, &bad, 2).unwrap());
    }

    #[test]
    fn degenerate_queries_are_rejected() {
        let rs = a1_system(6);
        let zero = OreQuery { s: NCPoly::zero(), a: NCPoly::gen(1), k_max: 2 };
        assert!(matches!(ore_witness_search(&rs, &zero), Err(Error::Invalid(_))));
        let unit = OreQuery { s: NCPoly::constant(int(3)), a: NCPoly::gen(1), k_max: 2 };
        assert!(matches!(ore_witness_search(&rs, &unit), Err(Error::Invalid(_))));
    }

    #[test]
    fn tight_box_reports_inconclusive() {
        let rs = a1_system(2);
        let y = NCPoly::gen(1);
        let query = OreQuery { s: y.clone(), a: y.mul(&y), k_max: 8 };
        assert_eq!(
            ore_witness_search(&rs, &query).unwrap(),
            OreVerdict::Inconclusive { cap: 2, k_max: 8 }
        );
    }

    #[test]
    fn folding_map_reverses_the_primed_block() {
        let base = Presentation::new(vec![Generator { name: "t".into(), degree: 1 }], vec![]);
        let b = skew_poly(&base, &[NCPoly::gen(0).neg()]).unwrap();
        let be = enveloping(&b).unwrap();
        let rs_b =
            RewriteSystem::complete(&b, &Filtration::from_presentation(&b).order(), 8).unwrap();
        let rs_be =
            RewriteSystem::complete(&be, &Filtration::from_presentation(&be).order(), 8).unwrap();
        // a' t' represents 1 x (t a): folds to t * a reduced in the base.
        let word = Word::from_letters(vec![3, 2]);
        let image = mu(&NCPoly::monomial(word, int(1)), 2, &rs_be, &rs_b).unwrap();
        assert_eq!(image, NCPoly::monomial(Word::from_letters(vec![0, 1]), int(1)));
        // s * (a x 1) folds to the commutator [t, a] = 2 t a.
        let s = NCPoly::gen(0).sub(&NCPoly::gen(2));
        let image = mu(&s.mul(&NCPoly::gen(1)), 2, &rs_be, &rs_b).unwrap();
        assert_eq!(image, NCPoly::monomial(Word::from_letters(vec![0, 1]), int(2)));
    }

    #[test]
    fn obstruction_certificate_holds_to_degree_four() {
        let cert = mu_obstruction(4).unwrap();
        assert_eq!(cert.n_max, 4);
        assert!(cert.words_checked > 10);
        assert!(matches!(cert.verdict(), OreVerdict::ObstructionCertified(_)));
    }

    #[test]
    fn weyl_order_filtration_is_differential() {
        let (pres, order, _) = weyl(1);
        let report = differential_filtration_check(&pres, &order, &[0, 1], 6).unwrap();
        assert!(report.pass);
        assert!(report.checked > 0);
        assert!(report.by_degree.iter().all(|&b| b));
    }

    #[test]
    fn sign_twisted_extension_is_not_differential() {
        let base = Presentation::new(vec![Generator { name: "t".into(), degree: 1 }], vec![]);
        let b = skew_poly(&base, &[NCPoly::gen(0).neg()]).unwrap();
        let filt = Filtration::from_presentation(&b);
        let report = differential_filtration_check(&b, &filt, &[1], 6).unwrap();
        assert!(!report.pass);
        // [a, t] = -2 t a has degree 2, one above the allowed level.
        let hit = report
            .failures
            .iter()
            .find(|f| f.word == Word::gen(0))
            .expect("failure at the base variable");
        assert_eq!((hit.got, hit.bound), (2, 1));
    }

    fn polynomial_line() -> Presentation {
        Presentation::new(vec![Generator { name: "x".into(), degree: 1 }], vec![])
    }

    #[test]
    fn diagonal_bimodule_is_killed_at_the_first_power() {
        let c = polynomial_line();
        let env = enveloping(&c).unwrap();
        let diag = NCPoly::gen(0).sub(&NCPoly::gen(1));
        let module = ModulePresentation::cyclic(env, &[diag]);
        let report = diagonal_support_check(&c, &module, 4, 8).unwrap();
        assert!(report.complete);
        assert_eq!(report.per_generator, vec![Some(1)]);
        assert!(report.pass);
    }

    #[test]
    fn free_bimodule_is_not_diagonally_supported() {
        let c = polynomial_line();
        let env = enveloping(&c).unwrap();
        let module = ModulePresentation::cyclic(env, &[]);
        let report = diagonal_support_check(&c, &module, 4, 8).unwrap();
        assert!(report.complete);
        assert_eq!(report.per_generator, vec![None]);
        assert!(!report.pass);
    }

    #[test]
    fn truncated_derivation_module_needs_exactly_j_plus_one_powers() {
        let c = polynomial_line();
        let env = enveloping(&c).unwrap();
        let width = 3usize;
        let mut relations = Vec::new();
        for j in 0..=width {
            // (x' - x) e_j - j e_{j-1}
            let mut r = MElem::monomial(Word::gen(1), j, int(1));
            r.add_term(Word::gen(0), j, int(-1));
            if j > 0 {
                r.add_term(Word::empty(), j - 1, int(-(j as i64)));
            }
            relations.push(r);
        }
        let module = ModulePresentation {
            algebra: env,
            gen_weights: vec![0; width + 1],
            relations,
        };
        let report = diagonal_support_check(&c, &module, 8, 10).unwrap();
        assert!(report.complete);
        let expect: Vec<Option<u32>> = (0..=width).map(|j| Some(j as u32 + 1)).collect();
        assert_eq!(report.per_generator, expect);
        assert!(report.pass);
    }

    #[test]
    fn parity_eigenmodule_of_the_sign_twist_escapes_the_diagonal() {
        let c = Presentation::new(vec![Generator { name: "t".into(), degree: 1 }], vec![]);
        let env = enveloping(&c).unwrap();
        // e_j carries t' = (-1)^j t, the parity action of the twist.
        let mut relations = Vec::new();
        for j in 0..2usize {
            let mut r = MElem::monomial(Word::gen(1), j, int(1));
            let sign = if j % 2 == 0 { -1 } else { 1 };
            r.add_term(Word::gen(0), j, int(sign));
            relations.push(r);
        }
        let module =
            ModulePresentation { algebra: env, gen_weights: vec![0, 0], relations };
        let report = diagonal_support_check(&c, &module, 5, 8).unwrap();
        assert!(report.complete);
        assert_eq!(report.per_generator, vec![Some(1), None]);
        assert!(!report.pass);
    }

    #[test]
    fn mismatched_module_algebra_is_rejected() {
        let c = polynomial_line();
        let module = ModulePresentation::cyclic(c.clone(), &[]);
        assert!(matches!(
            diagonal_support_check(&c, &module, 2, 4),
            Err(Error::Invalid(_))
        ));
    }
}
