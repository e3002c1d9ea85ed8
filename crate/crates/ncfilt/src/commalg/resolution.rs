//! Free resolutions by iterated syzygies, Ext against the ring via the
//! dualized resolution, the grade of a module, and canonical dimension.

use super::cpoly::{CPoly, CTermOrder};
use super::groebner::{gb, reduce, syzygies, MPoly, ModOrder};
use crate::error::{Error, Result};
use crate::order::Degree;

/// A^ambient ←ᵈ¹ A^s₁ ←ᵈ² A^s₂ ← …, with steps[q] the rows of d_{q+1};
/// the cokernel of d₁ is the resolved module.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub ambient: usize,
    pub nvars: usize,
    pub steps: Vec<Vec<MPoly>>,
}

impl Resolution {
    pub fn ranks(&self) -> Vec<usize> {
        std::iter::once(self.ambient).chain(self.steps.iter().map(|s| s.len())).collect()
    }
}

/// Resolves A^ambient / ⟨rows⟩ by repeated syzygy computation; terminates by
/// the syzygy theorem (with slack for redundant generating sets).
pub fn free_resolution(
    rows: &[MPoly],
    ambient: usize,
    nvars: usize,
    term: CTermOrder,
) -> Result<Resolution> {
    if rows.iter().any(|r| r.ncomps != ambient || r.nvars != nvars) {
        return Err(Error::Invalid("presentation rows must live in A^ambient".into()));
    }
    let first: Vec<MPoly> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut steps = Vec::new();
    if !first.is_empty() {
        steps.push(first);
        loop {
            let next = syzygies(steps.last().expect("nonempty"), term)?;
            if next.is_empty() {
                break;
            }
            steps.push(next);
            if steps.len() > nvars + 4 {
                return Err(Error::Invalid("free resolution did not terminate".into()));
            }
        }
    }
    Ok(Resolution { ambient, nvars, steps })
}

/// Rows of the transpose: `rows` present a map A^s → A^target; the result
/// presents the dual map A^target → A^s.
fn transpose(rows: &[MPoly], target: usize) -> Vec<MPoly> {
    let s = rows.len();
    let nvars = rows.first().map_or(0, |r| r.nvars);
    let mut out = vec![MPoly::zero(s, nvars); target];
    for (j, row) in rows.iter().enumerate() {
        for ((p, e), c) in row.terms() {
            out[*p].add_term(j, e.clone(), c.clone());
        }
    }
    out
}

/// Ext^q(M, A) presented as ker(d_{q+1}ᵀ) / im(d_qᵀ): kernel generators,
/// image generators, and relations expressing the quotient on the kernel
/// generators (the module A^u / ⟨relations⟩ with u = kernel_gens.len()).
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub q: usize,
    pub ambient_rank: usize,
    pub kernel_gens: Vec<MPoly>,
    pub image_gens: Vec<MPoly>,
    pub relations: Vec<MPoly>,
    pub is_zero: bool,
}

/// Relations of the quotient span(gens)/span(im) on the given generators:
/// the projection of the syzygies of gens ++ im to the gens block.
fn quotient_relations(gens: &[MPoly], im: &[MPoly], term: CTermOrder) -> Result<Vec<MPoly>> {
    let u = gens.len();
    if u == 0 {
        return Ok(Vec::new());
    }
    let nvars = gens[0].nvars;
    let combined: Vec<MPoly> = gens.iter().chain(im).cloned().collect();
    let syz = syzygies(&combined, term)?;
    let mut out = Vec::new();
    for s in syz {
        let mut proj = MPoly::zero(u, nvars);
        for ((p, e), c) in s.terms() {
            if *p < u {
                proj.add_term(*p, e.clone(), c.clone());
            }
        }
        if !proj.is_zero() {
            out.push(proj);
        }
    }
    Ok(out)
}

pub fn ext_modules(
    rows: &[MPoly],
    ambient: usize,
    nvars: usize,
    term: CTermOrder,
    max_q: usize,
) -> Result<Vec<ExtModule>> {
    let res = free_resolution(rows, ambient, nvars, term)?;
    let levels = res.steps.len();
    let rank = |q: usize| if q == 0 { ambient } else { res.steps[q - 1].len() };
    let ord = ModOrder::top(term);
    let mut out = Vec::new();
    for q in 0..=max_q {
        if q > levels {
            out.push(ExtModule {
                q,
                ambient_rank: 0,
                kernel_gens: Vec::new(),
                image_gens: Vec::new(),
                relations: Vec::new(),
                is_zero: true,
            });
            continue;
        }
        let r = rank(q);
        let kernel_gens = if q < levels {
            syzygies(&transpose(&res.steps[q], r), term)?
        } else {
            (0..r).map(|i| MPoly::unit(r, nvars, i)).collect()
        };
        let image_gens: Vec<MPoly> = if q >= 1 {
            transpose(&res.steps[q - 1], rank(q - 1)).into_iter().filter(|m| !m.is_zero()).collect()
        } else {
            Vec::new()
        };
        let im_basis = gb(&image_gens, &ord);
        let is_zero = kernel_gens.iter().all(|k| reduce(k, &im_basis, &ord).is_zero());
        let relations = quotient_relations(&kernel_gens, &image_gens, term)?;
        out.push(ExtModule { q, ambient_rank: r, kernel_gens, image_gens, relations, is_zero });
    }
    Ok(out)
}

/// grade(M) = least q with Ext^q(M, A) ≠ 0; None means M = 0 (over the
/// regular ring, all Ext up to nvars vanishing forces the zero module).
pub fn grade(rows: &[MPoly], ambient: usize, nvars: usize, term: CTermOrder) -> Result<Option<usize>> {
    let exts = ext_modules(rows, ambient, nvars, term, nvars)?;
    Ok(exts.iter().position(|e| !e.is_zero))
}

/// Certificate that the module is really a module over the quotient ring
/// A/⟨quotient_ideal⟩, which is finite over itself as ambient; required when
/// the module is meant to live over a proper quotient.
#[derive(Clone, Debug)]
pub struct CanonicalComplexSpec {
    pub quotient_ideal: Vec<CPoly>,
}

/// Canonical dimension n − grade(M), computed over the ambient polynomial
/// ring; −∞ for the zero module.  With a quotient certificate, first checks
/// that the ideal annihilates the module.
pub fn cdim_commutative(
    rows: &[MPoly],
    ambient: usize,
    nvars: usize,
    term: CTermOrder,
    spec: Option<&CanonicalComplexSpec>,
) -> Result<Degree> {
    if let Some(spec) = spec {
        let ord = ModOrder::top(term);
        let basis = gb(rows, &ord);
        for f in &spec.quotient_ideal {
            if f.nvars != nvars {
                return Err(Error::Invalid("quotient ideal in wrong variable count".into()));
            }
            for pos in 0..ambient {
                let moved = MPoly::unit(ambient, nvars, pos).mul_cpoly(f);
                if !reduce(&moved, &basis, &ord).is_zero() {
                    return Err(Error::NotFiniteOverAmbient(format!(
                        "quotient certificate fails: ideal generator does not annihilate e_{pos}"
                    )));
                }
            }
        }
    }
    match grade(rows, ambient, nvars, term)? {
        None => Ok(Degree::NegInf),
        Some(j) => Ok(Degree::Fin(nvars as i64 - j as i64)),
    }
}

/// Checks grade(Ext^q(M, A)) ≥ q for every nonvanishing Ext of the module.
pub fn auslander_spot_check(
    rows: &[MPoly],
    ambient: usize,
    nvars: usize,
    term: CTermOrder,
) -> Result<bool> {
    let exts = ext_modules(rows, ambient, nvars, term, nvars)?;
    for ext in &exts {
        if ext.is_zero {
            continue;
        }
        let u = ext.kernel_gens.len();
        match grade(&ext.relations, u, nvars, term)? {
            None => return Ok(false),
            Some(j) if j < ext.q => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}
