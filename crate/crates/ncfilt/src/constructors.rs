//! Builders for the standard example algebras and closure operations:
//! Weyl algebras, enveloping algebras of Lie algebras and Lie algebroids,
//! skew polynomial rings, tensor products, opposites, and enveloping
//! algebras A ⊗ A^op.

use crate::error::{Error, Result};
use crate::poly::NCPoly;
use crate::presentation::{fresh_name, Filtration, Generator, Presentation};
use crate::rewrite::RewriteSystem;
use crate::scalar::{self, Scalar};
use crate::word::Word;
use num::traits::Zero;
use std::collections::BTreeSet;

fn commutation(hi: usize, lo: usize) -> NCPoly {
    NCPoly::monomial(Word::from_letters(vec![hi as u32, lo as u32]), scalar::one())
        .add(&NCPoly::monomial(Word::from_letters(vec![lo as u32, hi as u32]), -scalar::one()))
}

/// The n-th Weyl algebra with its two standard filtrations: the order
/// filtration (x_i in degree 0, y_i in degree 1) and the Bernstein
/// filtration (all generators in degree 1).  Presentation degrees default
/// to the order filtration.
pub fn weyl(n: usize) -> (Presentation, Filtration, Filtration) {
    assert!(n >= 1, "weyl algebra index must be positive");
    let name = |prefix: &str, i: usize| {
        if n == 1 {
            prefix.to_string()
        } else {
            format!("{prefix}{}", i + 1)
        }
    };
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(Generator { name: name("x", i), degree: 0 });
    }
    for i in 0..n {
        gens.push(Generator { name: name("y", i), degree: 1 });
    }
    let (x, y) = (|i: usize| i, |i: usize| n + i);
    let mut relations = Vec::new();
    for i in 0..n {
        relations.push(commutation(y(i), x(i)).sub(&NCPoly::one()));
    }
    for i in 0..n {
        for j in 0..i {
            relations.push(commutation(x(i), x(j)));
        }
    }
    for i in 0..n {
        for j in 0..i {
            relations.push(commutation(y(i), y(j)));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                relations.push(commutation(y(i), x(j)));
            }
        }
    }
    let pres = Presentation::new(gens, relations);
    let mut order = vec![0u32; n];
    order.extend(vec![1u32; n]);
    (pres, Filtration::new(order), Filtration::new(vec![1; 2 * n]))
}

/// A finite-dimensional Lie structure: scalar structure constants, and for
/// Lie algebroids the polynomial anchor and bracket tables over a base
/// algebra.
#[derive(Clone, Debug)]
pub struct LieData {
    pub names: Vec<String>,
    /// constants[i][j][k]: coefficient of basis element k in [l_i, l_j].
    pub constants: Vec<Vec<Vec<Scalar>>>,
    pub algebroid: Option<AlgebroidData>,
}

/// Lie algebroid tables over a commutative base presentation C: the anchor
/// values f_{iq} = α(l_i)(c_q) and bracket coefficients g_{ijk} with
/// [l_i, l_j] = Σ_k g_{ijk}(c)·l_k, all polynomials in the base generators.
#[derive(Clone, Debug)]
pub struct AlgebroidData {
    pub base: Presentation,
    /// anchor[i][q] = f_{iq}, over base generator indices.
    pub anchor: Vec<Vec<NCPoly>>,
    /// bracket[i][j][k] = g_{ijk}, over base generator indices.
    pub bracket: Vec<Vec<Vec<NCPoly>>>,
    /// Extra C-module relations among the l_i, over the combined indexing
    /// (base generators first, then l-generators).
    pub module_relations: Vec<NCPoly>,
}

impl LieData {
    /// Zero brackets on the given basis.
    pub fn new(names: Vec<String>) -> Self {
        let n = names.len();
        LieData {
            names,
            constants: vec![vec![vec![scalar::zero(); n]; n]; n],
            algebroid: None,
        }
    }

    /// Sets [l_i, l_j] = Σ terms, and the antisymmetric mirror.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) {
        let n = self.names.len();
        self.constants[i][j] = vec![scalar::zero(); n];
        self.constants[j][i] = vec![scalar::zero(); n];
        for (k, c) in terms {
            self.constants[i][j][*k] = c.clone();
            self.constants[j][i][*k] = -c.clone();
        }
    }

    /// sl₂ with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = −2f.
    pub fn sl2() -> Self {
        let mut data = LieData::new(vec!["e".into(), "f".into(), "h".into()]);
        data.set_bracket(0, 1, &[(2, scalar::int(1))]);
        data.set_bracket(2, 0, &[(0, scalar::int(2))]);
        data.set_bracket(2, 1, &[(1, scalar::int(-2))]);
        data
    }

    fn check_scalar_tables(&self) -> Result<()> {
        let n = self.names.len();
        let c = &self.constants;
        if c.len() != n || c.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::InvalidLieData("structure-constant table has wrong shape".into()));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(Error::InvalidLieData(format!(
                            "antisymmetry fails at [{}, {}]",
                            self.names[i], self.names[j]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for p in 0..n {
                        let mut sum = scalar::zero();
                        for m in 0..n {
                            sum += c[i][j][m].clone() * c[m][k][p].clone()
                                + c[j][k][m].clone() * c[m][i][p].clone()
                                + c[k][i][m].clone() * c[m][j][p].clone();
                        }
                        if !sum.is_zero() {
                            return Err(Error::InvalidLieData(format!(
                                "Jacobi identity fails on ({}, {}, {})",
                                self.names[i], self.names[j], self.names[k]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Universal enveloping algebra of a Lie algebra over scalar structure
/// constants, with the degree-1 filtration.
pub fn u_lie(data: &LieData) -> Result<(Presentation, Filtration)> {
    if data.algebroid.is_some() {
        return Err(Error::InvalidLieData(
            "algebroid tables present; use u_lie_algebroid".into(),
        ));
    }
    data.check_scalar_tables()?;
    let n = data.names.len();
    let gens: Vec<Generator> =
        data.names.iter().map(|name| Generator { name: name.clone(), degree: 1 }).collect();
    let mut relations = Vec::new();
    for j in 0..n {
        for i in 0..j {
            // x_j x_i = x_i x_j - [x_i, x_j]
            let mut rel = commutation(j, i);
            for k in 0..n {
                rel.add_term(Word::gen(k), data.constants[i][j][k].clone());
            }
            relations.push(rel);
        }
    }
    let pres = Presentation::new(gens, relations);
    pres.validate()?;
    Ok((pres, Filtration::new(vec![1; n])))
}

/// Word length bound for the internal base-ideal checks.
fn max_word_len<'a>(polys: impl Iterator<Item = &'a NCPoly>) -> usize {
    polys.flat_map(|p| p.terms().map(|(w, _)| w.len())).max().unwrap_or(0)
}

/// Derivation of the commutative base sending generator q to `values[q]`,
/// extended by the Leibniz rule.
fn derive(p: &NCPoly, values: &[NCPoly]) -> NCPoly {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        for pos in 0..w.len() {
            let letter = w.letters()[pos] as usize;
            let left = w.slice(0, pos);
            let right = w.slice(pos + 1, w.len());
            out = out.add(&values[letter].framed(&left, &right).scale(c));
        }
    }
    out
}

/// Universal enveloping algebra of a Lie algebroid (C, L): base generators
/// in degree 0, module generators in degree 1, with the anchor and bracket
/// relation families.  The anchor and bracket tables are verified to define
/// a Lie algebroid modulo the base ideal.
pub fn u_lie_algebroid(data: &LieData) -> Result<(Presentation, Filtration)> {
    let alg = data
        .algebroid
        .as_ref()
        .ok_or_else(|| Error::InvalidLieData("no algebroid tables given".into()))?;
    alg.base.validate()?;
    let n = data.names.len();
    let m = alg.base.ngens();
    if alg.anchor.len() != n || alg.anchor.iter().any(|row| row.len() != m) {
        return Err(Error::InvalidLieData("anchor table has wrong shape".into()));
    }
    if alg.bracket.len() != n
        || alg.bracket.iter().any(|t| t.len() != n || t.iter().any(|r| r.len() != n))
    {
        return Err(Error::InvalidLieData("bracket table has wrong shape".into()));
    }

    // Reduction modulo the base ideal, capped well above every polynomial
    // the checks can produce.
    let table_len = max_word_len(
        alg.anchor
            .iter()
            .flatten()
            .chain(alg.bracket.iter().flatten().flatten())
            .chain(alg.base.relations.iter()),
    );
    let chk_cap = (2 * table_len + 4) as u32;
    let base_order = crate::order::MonomialOrder::weighted(vec![1; m]);
    let base_rs = RewriteSystem::complete(&alg.base, &base_order, chk_cap)?;
    let vanishes = |p: &NCPoly| -> Result<bool> { Ok(base_rs.nf(p)?.is_zero()) };

    for q in 0..m {
        for r in 0..q {
            if !vanishes(&NCPoly::gen(q).commutator(&NCPoly::gen(r)))? {
                return Err(Error::InvalidLieData("base algebra is not commutative".into()));
            }
        }
    }
    // Anchor derivations preserve the base ideal.
    for i in 0..n {
        for rel in &alg.base.relations {
            if !vanishes(&derive(rel, &alg.anchor[i]))? {
                return Err(Error::InvalidLieData(format!(
                    "anchor of {} does not preserve the base ideal",
                    data.names[i]
                )));
            }
        }
    }
    // Bracket antisymmetry modulo the ideal.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let skew = alg.bracket[i][j][k].add(&alg.bracket[j][i][k]);
                if !vanishes(&skew)? {
                    return Err(Error::InvalidLieData(format!(
                        "bracket antisymmetry fails at [{}, {}]",
                        data.names[i], data.names[j]
                    )));
                }
            }
        }
    }
    // Anchor is a Lie homomorphism: α([l_i, l_j]) = [α(l_i), α(l_j)] on
    // base generators.
    for i in 0..n {
        for j in 0..i {
            for q in 0..m {
                let mut lhs = NCPoly::zero();
                for k in 0..n {
                    lhs = lhs.add(&alg.bracket[i][j][k].mul(&alg.anchor[k][q]));
                }
                let rhs = derive(&alg.anchor[j][q], &alg.anchor[i])
                    .sub(&derive(&alg.anchor[i][q], &alg.anchor[j]));
                if !vanishes(&lhs.sub(&rhs))? {
                    return Err(Error::InvalidLieData(format!(
                        "anchor is not a Lie homomorphism on [{}, {}]",
                        data.names[i], data.names[j]
                    )));
                }
            }
        }
    }
    // Jacobi on the module part: coefficient of l_p in the cyclic sum.
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for p in 0..n {
                    let mut sum = NCPoly::zero();
                    for mm in 0..n {
                        sum = sum
                            .add(&alg.bracket[i][j][mm].mul(&alg.bracket[mm][k][p]))
                            .add(&alg.bracket[j][k][mm].mul(&alg.bracket[mm][i][p]))
                            .add(&alg.bracket[k][i][mm].mul(&alg.bracket[mm][j][p]));
                    }
                    sum = sum
                        .sub(&derive(&alg.bracket[i][j][p], &alg.anchor[k]))
                        .sub(&derive(&alg.bracket[j][k][p], &alg.anchor[i]))
                        .sub(&derive(&alg.bracket[k][i][p], &alg.anchor[j]));
                    if !vanishes(&sum)? {
                        return Err(Error::InvalidLieData(format!(
                            "Jacobi identity fails on ({}, {}, {})",
                            data.names[i], data.names[j], data.names[k]
                        )));
                    }
                }
            }
        }
    }

    let mut taken: BTreeSet<String> = alg.base.gens.iter().map(|g| g.name.clone()).collect();
    let mut gens: Vec<Generator> = alg
        .base
        .gens
        .iter()
        .map(|g| Generator { name: g.name.clone(), degree: 0 })
        .collect();
    for name in &data.names {
        let fresh = fresh_name(name, &taken);
        taken.insert(fresh.clone());
        gens.push(Generator { name: fresh, degree: 1 });
    }
    let l = |i: usize| m + i;

    let mut relations = alg.base.relations.clone();
    relations.extend(alg.module_relations.iter().cloned());
    for i in 0..n {
        for q in 0..m {
            // l_i c_q = c_q l_i + f_{iq}
            relations.push(commutation(l(i), q).sub(&alg.anchor[i][q]));
        }
    }
    for j in 0..n {
        for i in 0..j {
            // l_j l_i = l_i l_j - [l_i, l_j]
            let mut rel = commutation(l(j), l(i));
            for k in 0..n {
                rel = rel.add(&alg.bracket[i][j][k].mul(&NCPoly::gen(l(k))));
            }
            relations.push(rel);
        }
    }
    let pres = Presentation::new(gens, relations);
    pres.validate()?;
    let mut degrees = vec![0u32; m];
    degrees.extend(vec![1u32; n]);
    Ok((pres, Filtration::new(degrees)))
}

/// Skew polynomial extension base[a; σ]: adds a generator `a` with the
/// relations a·c = σ(c)·a.  `twist` gives σ on the base generators; it must
/// preserve the base relations.
pub fn skew_poly(base: &Presentation, twist: &[NCPoly]) -> Result<Presentation> {
    base.validate()?;
    let m = base.ngens();
    if twist.len() != m {
        return Err(Error::Invalid(format!("twist gives {} images for {} generators", twist.len(), m)));
    }
    let subst = |p: &NCPoly| -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut prod = NCPoly::constant(c.clone());
            for &letter in w.letters() {
                prod = prod.mul(&twist[letter as usize]);
            }
            out = out.add(&prod);
        }
        out
    };
    if m > 0 {
        let twist_len = max_word_len(twist.iter()).max(1);
        let rel_len = max_word_len(base.relations.iter());
        let chk_cap = (twist_len * rel_len + 4) as u32;
        let base_order = crate::order::MonomialOrder::weighted(vec![1; m]);
        let base_rs = RewriteSystem::complete(base, &base_order, chk_cap)?;
        for rel in &base.relations {
            if !base_rs.nf(&subst(rel))?.is_zero() {
                return Err(Error::TwistNotHomomorphism(format!(
                    "twist does not preserve the relation {}",
                    base.render_poly(rel)
                )));
            }
        }
    }

    let taken: BTreeSet<String> = base.gens.iter().map(|g| g.name.clone()).collect();
    let a = m;
    let mut gens = base.gens.clone();
    gens.push(Generator { name: fresh_name("a", &taken), degree: 1 });
    let mut relations = base.relations.clone();
    for q in 0..m {
        // a c_q = σ(c_q) a
        let lead = NCPoly::monomial(Word::from_letters(vec![a as u32, q as u32]), scalar::one());
        relations.push(lead.sub(&twist[q].mul(&NCPoly::gen(a))));
    }
    let mut out = Presentation::new(gens, relations);
    out.central = base.central.clone();
    Ok(out)
}

/// Tensor product: disjoint-union generators (second factor renamed on
/// clashes) with cross-commutation relations; degrees are inherited, so the
/// filtration is the convolution filtration.
pub fn tensor(
    p1: &Presentation,
    f1: &Filtration,
    p2: &Presentation,
    f2: &Filtration,
) -> Result<(Presentation, Filtration)> {
    f1.check_against(p1)?;
    f2.check_against(p2)?;
    let n1 = p1.ngens();
    let mut taken: BTreeSet<String> = p1.gens.iter().map(|g| g.name.clone()).collect();
    let mut gens: Vec<Generator> = p1
        .gens
        .iter()
        .zip(&f1.degrees)
        .map(|(g, &d)| Generator { name: g.name.clone(), degree: d })
        .collect();
    for (g, &d) in p2.gens.iter().zip(&f2.degrees) {
        let name = fresh_name(&g.name, &taken);
        taken.insert(name.clone());
        gens.push(Generator { name, degree: d });
    }
    let mut relations = p1.relations.clone();
    for r in &p2.relations {
        relations.push(r.map_words(|w| w.map_letters(|l| l + n1 as u32)));
    }
    for v in 0..p2.ngens() {
        for u in 0..n1 {
            relations.push(commutation(n1 + v, u));
        }
    }
    let mut out = Presentation::new(gens, relations);
    out.central = p1
        .central
        .iter()
        .copied()
        .chain(p2.central.iter().map(|&i| i + n1))
        .collect();
    let degrees: Vec<u32> = f1.degrees.iter().chain(&f2.degrees).copied().collect();
    Ok((out, Filtration::new(degrees)))
}

/// Opposite algebra: same generators, every relation word reversed.
pub fn opposite(p: &Presentation) -> Presentation {
    let mut out = p.clone();
    out.relations = p.relations.iter().map(|r| r.map_words(|w| w.reversed())).collect();
    out
}

/// Enveloping algebra A ⊗ A^op, second factor primed.
pub fn enveloping(p: &Presentation) -> Result<Presentation> {
    let mut op = opposite(p);
    for g in &mut op.gens {
        g.name.push('\'');
    }
    let f = Filtration::from_presentation(p);
    let f_op = Filtration::from_presentation(&op);
    Ok(tensor(p, &f, &op, &f_op)?.0)
}
