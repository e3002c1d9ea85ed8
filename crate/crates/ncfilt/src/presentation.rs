//! Finite presentations of algebras and their filtrations.

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::NCPoly;
use crate::scalar;
use crate::word::Word;
use num::traits::{One, Signed};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Filtration degree carried by the presentation (nonnegative).
    pub degree: u32,
}

/// Generators, defining relations, and annotation flags.
///
/// Relations are polynomials asserted to vanish.  The `central` set marks
/// generators declared central by construction (the Rees variable, for
/// instance); the flag is an annotation used by specialization and printing,
/// the corresponding commutation relations are still spelled out explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub gens: Vec<Generator>,
    pub relations: Vec<NCPoly>,
    pub central: BTreeSet<usize>,
}

impl Presentation {
    pub fn new(gens: Vec<Generator>, relations: Vec<NCPoly>) -> Self {
        Presentation { gens, relations, central: BTreeSet::new() }
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.degree).collect()
    }

    /// Checks well-formedness: nonempty unique names and letters in range.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for g in &self.gens {
            if g.name.is_empty() {
                return Err(Error::Invalid("empty generator name".into()));
            }
            if !seen.insert(g.name.clone()) {
                return Err(Error::Invalid(format!("duplicate generator name {}", g.name)));
            }
        }
        for r in &self.relations {
            for (w, _) in r.terms() {
                if w.letters().iter().any(|&l| l as usize >= self.gens.len()) {
                    return Err(Error::Invalid("relation uses an out-of-range generator".into()));
                }
            }
        }
        for &i in &self.central {
            if i >= self.gens.len() {
                return Err(Error::Invalid("central flag on missing generator".into()));
            }
        }
        Ok(())
    }

    /// Renders a polynomial over this presentation's generators in the
    /// surface syntax: terms in descending structural word order,
    /// `2*x*y - 1/2*h + 3`.
    pub fn render_poly(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let terms: Vec<_> = p.terms().collect();
        for (k, (w, c)) in terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || w.is_empty() {
                factors.push(scalar::display(&abs));
            }
            for &l in w.letters() {
                factors.push(self.gens[l as usize].name.clone());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&l| self.gens[l as usize].name.clone())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// First name in `base`, `base'`, `base''`, ... not already taken.
pub fn fresh_name(base: &str, taken: &BTreeSet<String>) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// A filtration given by nonnegative generator degrees.
///
/// The presentation carries default degrees; a `Filtration` lets the same
/// presentation be filtered in more than one way (order versus Bernstein
/// filtration on a Weyl algebra, say).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub degrees: Vec<u32>,
}

impl Filtration {
    pub fn new(degrees: Vec<u32>) -> Self {
        Filtration { degrees }
    }

    pub fn from_presentation(pres: &Presentation) -> Self {
        Filtration { degrees: pres.degrees() }
    }

    pub fn check_against(&self, pres: &Presentation) -> Result<()> {
        if self.degrees.len() != pres.ngens() {
            return Err(Error::Invalid(format!(
                "filtration has {} degrees for {} generators",
                self.degrees.len(),
                pres.ngens()
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::weighted(self.degrees.clone())
    }
}
