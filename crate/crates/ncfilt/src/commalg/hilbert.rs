//! Hilbert functions by standard-monomial counting, and the growth degree
//! of an eventually polynomial dimension sequence.

use super::cpoly::{expo_divides, Expo};
use super::groebner::{ModOrder, MPoly};
use crate::error::{Error, Result};
use crate::order::Degree;

fn for_each_expo(nvars: usize, total: u32, f: &mut impl FnMut(&[u32])) {
    let mut expo = vec![0u32; nvars];
    fn rec(expo: &mut Vec<u32>, i: usize, left: u32, f: &mut impl FnMut(&[u32])) {
        if i + 1 == expo.len() {
            expo[i] = left;
            f(expo);
            return;
        }
        for v in 0..=left {
            expo[i] = v;
            rec(expo, i + 1, left - v, f);
        }
    }
    if nvars == 0 {
        if total == 0 {
            f(&expo);
        }
        return;
    }
    rec(&mut expo, 0, total, f);
}

/// Dimensions of (A^ncomps / ⟨gb⟩) per total degree 0..=cap, counting
/// standard module monomials against the Groebner leads.
pub fn hilbert_function(gb: &[MPoly], ncomps: usize, nvars: usize, ord: &ModOrder, cap: u32) -> Vec<u64> {
    let mut leads: Vec<Vec<Expo>> = vec![Vec::new(); ncomps];
    for g in gb {
        if let Some(((p, e), _)) = g.lead(ord) {
            leads[p].push(e);
        }
    }
    let mut dims = Vec::with_capacity(cap as usize + 1);
    for d in 0..=cap {
        let mut count = 0u64;
        for pos_leads in &leads {
            for_each_expo(nvars, d, &mut |e| {
                if !pos_leads.iter().any(|l| expo_divides(l, e)) {
                    count += 1;
                }
            });
        }
        dims.push(count);
    }
    dims
}

/// Least g whose g-th finite difference is constant on the final window of
/// the sequence; the degree of the eventual polynomial.  All-zero input is
/// −∞; sequences too short to stabilize report InsufficientData.
pub fn growth_degree(seq: &[u64]) -> Result<Degree> {
    if seq.iter().all(|&v| v == 0) {
        return Ok(Degree::NegInf);
    }
    let window = (seq.len() / 4).max(3);
    let mut cur: Vec<i128> = seq.iter().map(|&v| v as i128).collect();
    let mut g = 0i64;
    while cur.len() >= window {
        let tail = &cur[cur.len() - window..];
        if tail.iter().all(|v| v == &tail[0]) {
            return Ok(Degree::Fin(g));
        }
        cur = cur.windows(2).map(|w| w[1] - w[0]).collect();
        g += 1;
    }
    Err(Error::InsufficientData(format!(
        "no {window}-entry window became constant after {g} differences"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commalg::cpoly::{CPoly, CTermOrder};
    use crate::commalg::groebner::gb;

    fn ideal_row(p: &CPoly) -> MPoly {
        let mut out = MPoly::zero(1, p.nvars);
        for (e, c) in p.terms() {
            out.add_term(0, e.clone(), c.clone());
        }
        out
    }

    #[test]
    fn polynomial_ring_dimensions() {
        let ord = ModOrder::top(CTermOrder::DegRevLex);
        let dims = hilbert_function(&[], 1, 2, &ord, 5);
        assert_eq!(dims, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn coordinate_axes_dimensions() {
        // k[x,y,z]/(xy, xz, yz): three lines through the origin.
        let vars: Vec<CPoly> = (0..3).map(|i| CPoly::var(3, i)).collect();
        let gens: Vec<MPoly> = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| ideal_row(&vars[i].mul(&vars[j])))
            .collect();
        let ord = ModOrder::top(CTermOrder::DegRevLex);
        let basis = gb(&gens, &ord);
        let dims = hilbert_function(&basis, 1, 3, &ord, 6);
        assert_eq!(dims, vec![1, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn growth_degrees() {
        // Cumulative dimension counts of k[x,y], a line, a point, nothing.
        let quadratic: Vec<u64> = (0..9).map(|d| (d + 1) * (d + 2) / 2).collect();
        assert_eq!(growth_degree(&quadratic).unwrap(), Degree::Fin(2));
        let linear: Vec<u64> = (1..10).collect();
        assert_eq!(growth_degree(&linear).unwrap(), Degree::Fin(1));
        assert_eq!(growth_degree(&[1; 9]).unwrap(), Degree::Fin(0));
        assert_eq!(growth_degree(&[0; 9]).unwrap(), Degree::NegInf);
        assert!(matches!(
            growth_degree(&[1, 2, 4, 8, 16, 32, 64, 128, 256]),
            Err(Error::InsufficientData(_))
        ));
    }
}
