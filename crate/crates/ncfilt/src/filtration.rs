//! Filtration-level constructions: degree and symbol, associated graded,
//! Rees algebra, specialization, and the lifted Rees filtration.
//!
//! A filtration is determined by nonnegative generator degrees: the degree-d
//! piece is spanned by the words of weighted degree at most d.  Dimensions
//! are always reported inside the degree box of the active cap.

use crate::error::{Error, Result};
use crate::order::Degree;
use crate::poly::NCPoly;
use crate::presentation::{Filtration, Generator, Presentation};
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;
use crate::word::Word;
use num::traits::{One, Zero};
use std::fmt;

/// Dimensions of the graded pieces `0..=cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims(pub Vec<u64>);

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl GradedDims {
    /// Convolution: graded dimensions of a tensor product factor-wise.
    pub fn convolve(&self, other: &GradedDims) -> GradedDims {
        let n = self.0.len().min(other.0.len());
        let mut out = vec![0u64; n];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                if i + j < n {
                    out[i + j] += a * b;
                }
            }
        }
        GradedDims(out)
    }

    pub fn cumulative(&self) -> Vec<u64> {
        let mut sum = 0;
        self.0
            .iter()
            .map(|d| {
                sum += d;
                sum
            })
            .collect()
    }
}

/// Dimensions indexed by (filtration degree i, grading degree j), `0..=cap`
/// in both coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedDims {
    pub entries: Vec<Vec<u64>>,
}

impl BigradedDims {
    pub fn cap(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }
}

/// Filtration degree of `p` and its symbol: the image of `p` in the graded
/// piece of its degree, represented by the top-weight terms of the normal
/// form.  The zero element has degree `NegInf` and symbol zero.
pub fn deg_and_symbol(p: &NCPoly, rs: &RewriteSystem) -> Result<(Degree, NCPoly)> {
    let nf = rs.nf(p)?;
    Ok((nf.wdeg(rs.order()), nf.top_part(rs.order())))
}

/// Degree of a single generator as an algebra element.
pub fn gen_degree(i: usize, rs: &RewriteSystem) -> Result<Degree> {
    Ok(rs.nf(&NCPoly::gen(i))?.wdeg(rs.order()))
}

/// Presentation of the associated graded algebra: same generators and
/// degrees, one relation per completed rule keeping only the words of the
/// rule's top weight.
pub fn gr_presentation(pres: &Presentation, filt: &Filtration, rs: &RewriteSystem) -> Result<Presentation> {
    filt.check_against(pres)?;
    let order = rs.order();
    let mut relations = Vec::new();
    for rule in rs.rules() {
        let d = order.wdeg(&rule.lead) as i64;
        let mut rel = NCPoly::monomial(rule.lead.clone(), Scalar::one());
        for (w, c) in rule.tail.terms() {
            if order.wdeg(w) as i64 == d {
                rel.add_term(w.clone(), -c.clone());
            }
        }
        relations.push(rel);
    }
    let mut out = Presentation::new(pres.gens.clone(), relations);
    out.gens = pres
        .gens
        .iter()
        .zip(&filt.degrees)
        .map(|(g, &d)| Generator { name: g.name.clone(), degree: d })
        .collect();
    out.central = pres.central.clone();
    Ok(out)
}

/// Dimensions of the graded pieces of `gr` inside the degree box: the number
/// of normal words of each weighted degree.
pub fn gr_dims(pres: &Presentation, filt: &Filtration, cap: u32) -> Result<GradedDims> {
    filt.check_against(pres)?;
    let rs = RewriteSystem::complete(pres, &filt.order(), cap)?;
    Ok(GradedDims(rs.graded_counts()))
}

/// Rees algebra presentation: one extra central generator of degree 1, each
/// relation homogenized term by term with the balancing power of t on the
/// right.
pub fn rees_presentation(pres: &Presentation, filt: &Filtration) -> Result<Presentation> {
    filt.check_against(pres)?;
    pres.validate()?;
    let t = pres.ngens();
    let taken = pres.gens.iter().map(|g| g.name.clone()).collect();
    let t_name = crate::presentation::fresh_name("t", &taken);
    let order = filt.order();
    let mut gens: Vec<Generator> = pres
        .gens
        .iter()
        .zip(&filt.degrees)
        .map(|(g, &d)| Generator { name: g.name.clone(), degree: d })
        .collect();
    gens.push(Generator { name: t_name, degree: 1 });

    let mut relations = Vec::new();
    for r in &pres.relations {
        if r.is_zero() {
            continue;
        }
        let d = match r.wdeg(&order) {
            Degree::Fin(d) => d as u64,
            Degree::NegInf => continue,
        };
        let mut hom = NCPoly::zero();
        for (w, c) in r.terms() {
            let pad = d - order.wdeg(w);
            hom.add_term(w.concat(&Word::gen(t).pow(pad as u32)), c.clone());
        }
        relations.push(hom);
    }
    // t is central: t g = g t for every original generator.
    for i in 0..pres.ngens() {
        let tw = Word::gen(t).concat(&Word::gen(i));
        let wt = Word::gen(i).concat(&Word::gen(t));
        relations
            .push(NCPoly::monomial(tw, Scalar::one()).add(&NCPoly::monomial(wt, -Scalar::one())));
    }
    let mut out = Presentation::new(gens, relations);
    out.central = pres.central.clone();
    out.central.insert(t);
    Ok(out)
}

/// Substitutes `lambda` for the designated central degree-1 generator.
///
/// At lambda = 1 this recovers the original algebra, at lambda = 0 the
/// associated graded.  The generator is the last centrally flagged
/// degree-1 generator, or the one named explicitly.
pub fn specialize(pres: &Presentation, lambda: &Scalar, name: Option<&str>) -> Result<Presentation> {
    let t = match name {
        Some(n) => {
            let i = pres
                .gen_index(n)
                .ok_or_else(|| Error::MissingReesGenerator(format!("no generator named {n}")))?;
            if !pres.central.contains(&i) || pres.gens[i].degree != 1 {
                return Err(Error::MissingReesGenerator(format!(
                    "{n} is not a central degree-1 generator"
                )));
            }
            i
        }
        None => *pres
            .central
            .iter()
            .filter(|&&i| pres.gens[i].degree == 1)
            .next_back()
            .ok_or_else(|| {
                Error::MissingReesGenerator("presentation has no central degree-1 generator".into())
            })?,
    };

    let reindex = |l: u32| if (l as usize) > t { l - 1 } else { l };
    let mut relations = Vec::new();
    for r in &pres.relations {
        let mut sub = NCPoly::zero();
        for (w, c) in r.terms() {
            let count = w.letters().iter().filter(|&&l| l as usize == t).count() as u32;
            let coeff = c.clone() * num::pow::pow(lambda.clone(), count as usize);
            if coeff.is_zero() {
                continue;
            }
            let rest: Vec<u32> = w
                .letters()
                .iter()
                .filter(|&&l| l as usize != t)
                .map(|&l| reindex(l))
                .collect();
            sub.add_term(Word::from_letters(rest), coeff);
        }
        if !sub.is_zero() {
            relations.push(sub);
        }
    }
    let gens: Vec<Generator> =
        pres.gens.iter().enumerate().filter(|&(i, _)| i != t).map(|(_, g)| g.clone()).collect();
    let central = pres
        .central
        .iter()
        .filter(|&&i| i != t)
        .map(|&i| if i > t { i - 1 } else { i })
        .collect();
    let mut out = Presentation::new(gens, relations);
    out.central = central;
    Ok(out)
}

/// Bigraded dimensions of the Rees algebra under the lifted filtration,
/// computed from the decomposition into boxes `(gr_i A) t^j, j >= i`: entry
/// (i, j) is `dim gr_i A` for `j >= i` and zero otherwise.
pub fn lift_rees_filtration_dims(
    pres: &Presentation,
    filt: &Filtration,
    cap: u32,
) -> Result<BigradedDims> {
    let dims = gr_dims(pres, filt, cap)?;
    let n = cap as usize + 1;
    let mut entries = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if j >= i {
                entries[i][j] = dims.0[i];
            }
        }
    }
    Ok(BigradedDims { entries })
}

/// Direct bigraded count on a Rees presentation: every normal word is graded
/// by (weight of the non-t letters, total weight).  Cross-checks the closed
/// form above.
pub fn rees_bigraded_counts(rees: &Presentation, t_name: &str, cap: u32) -> Result<BigradedDims> {
    let t = rees
        .gen_index(t_name)
        .ok_or_else(|| Error::MissingReesGenerator(format!("no generator named {t_name}")))?;
    let filt = Filtration::from_presentation(rees);
    let rs = RewriteSystem::complete(rees, &filt.order(), cap)?;
    let n = cap as usize + 1;
    let mut entries = vec![vec![0u64; n]; n];
    for w in rs.normal_words() {
        let j = rs.order().wdeg(&w) as usize;
        let i = w
            .letters()
            .iter()
            .filter(|&&l| l as usize != t)
            .map(|&l| filt.degrees[l as usize] as usize)
            .sum::<usize>();
        if i < n && j < n {
            entries[i][j] += 1;
        }
    }
    Ok(BigradedDims { entries })
}
