//! Degree-capped rewriting: completion, normal forms, confluence reports.
//!
//! Relations are oriented into rules `lead -> tail` with every tail word
//! strictly below the lead in the monomial order.  Completion resolves all
//! overlap ambiguities whose overlap word lies inside the degree box; the
//! result is a rewriting system whose normal forms are canonical
//! representatives for every element in the box.  Anything that would need a
//! rule or a reduction outside the box is reported in the completion status,
//! never silently dropped.

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::NCPoly;
use crate::presentation::Presentation;
use crate::scalar::Scalar;
use crate::word::Word;
use num::traits::One;
use std::collections::{BTreeSet, VecDeque};

/// A monic rewrite rule: `lead` rewrites to `tail`, `tail < lead`.
///
/// The lead never occurs as a subword of a tail word: the order is
/// concatenation-compatible, so containment would contradict `tail < lead`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lead: Word,
    pub tail: NCPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    /// Every overlap with overlap word inside the box is resolved.
    CompleteToCap,
    /// Some rule or reduction left the box; normal forms below the cap that
    /// were computed are still sound, but completeness is not certified.
    CapExceeded { notes: Vec<String> },
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    order: MonomialOrder,
    cap: u32,
    rules: Vec<Rule>,
    status: CompletionStatus,
}

/// One overlap ambiguity between two rules, and whether it resolved.
#[derive(Clone, Debug)]
pub struct OverlapCase {
    pub left_lead: Word,
    pub right_lead: Word,
    pub overlap_word: Word,
    pub resolved: bool,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub cases: Vec<OverlapCase>,
    pub all_resolved: bool,
}

fn find_redex(word: &Word, rules: &[Rule]) -> Option<(usize, usize)> {
    let letters = word.letters();
    for pos in 0..=letters.len() {
        for (ri, rule) in rules.iter().enumerate() {
            let llen = rule.lead.len();
            if llen == 0 || pos + llen > letters.len() {
                continue;
            }
            if letters[pos..pos + llen] == rule.lead.letters()[..] {
                return Some((pos, ri));
            }
        }
    }
    None
}

fn reduce_once(
    p: &NCPoly,
    rules: &[Rule],
    order: &MonomialOrder,
    cap: u32,
) -> Result<Option<NCPoly>> {
    // Deterministic strategy: rewrite the largest reducible word, leftmost
    // occurrence, first matching rule.
    let mut target: Option<(Word, usize, usize)> = None;
    for (w, _) in p.terms() {
        if let Some((pos, ri)) = find_redex(w, rules) {
            let better = match &target {
                None => true,
                Some((best, _, _)) => order.compare(w, best) == std::cmp::Ordering::Greater,
            };
            if better {
                target = Some((w.clone(), pos, ri));
            }
        }
    }
    let Some((w, pos, ri)) = target else { return Ok(None) };
    let rule = &rules[ri];
    let c = p.coeff(&w);
    let left = w.slice(0, pos);
    let right = w.slice(pos + rule.lead.len(), w.len());
    let replacement = rule.tail.framed(&left, &right).scale(&c);
    for (rw, _) in replacement.terms() {
        if !order.in_box(rw, cap) {
            return Err(Error::CapExceeded {
                cap,
                context: format!("reduction produced a word of degree {}", order.wdeg(rw)),
            });
        }
    }
    let mut out = p.clone();
    out.add_term(w, -c);
    Ok(Some(out.add(&replacement)))
}

fn reduce_full(p: &NCPoly, rules: &[Rule], order: &MonomialOrder, cap: u32) -> Result<NCPoly> {
    let mut cur = p.clone();
    while let Some(next) = reduce_once(&cur, rules, order, cap)? {
        cur = next;
    }
    Ok(cur)
}

impl RewriteSystem {
    /// Runs capped completion on the presentation's relations.
    ///
    /// Relations must lie inside the degree box.  A relation reducing to a
    /// nonzero constant cannot be oriented and is an error (the presented
    /// algebra collapses).
    pub fn complete(pres: &Presentation, order: &MonomialOrder, cap: u32) -> Result<Self> {
        pres.validate()?;
        if order.weights.len() != pres.ngens() {
            return Err(Error::Invalid(format!(
                "order has {} weights for {} generators",
                order.weights.len(),
                pres.ngens()
            )));
        }
        for r in &pres.relations {
            for (w, _) in r.terms() {
                if !order.in_box(w, cap) {
                    return Err(Error::CapExceeded {
                        cap,
                        context: format!(
                            "relation {} lies outside the degree box",
                            pres.render_poly(r)
                        ),
                    });
                }
            }
        }

        let mut rules: Vec<Rule> = Vec::new();
        let mut queue: VecDeque<NCPoly> = pres.relations.iter().cloned().collect();
        let mut notes: Vec<String> = Vec::new();
        // Leads ever seen; a lead can be retired by interreduction but a
        // subword of it keeps its words reducible forever, so each word is
        // added as a lead at most once and completion terminates.
        let mut seen_leads: BTreeSet<Word> = BTreeSet::new();

        loop {
            while let Some(p) = queue.pop_front() {
                let p = match reduce_full(&p, &rules, order, cap) {
                    Ok(q) => q,
                    Err(Error::CapExceeded { context, .. }) => {
                        notes.push(context);
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                if p.is_zero() {
                    continue;
                }
                let (lead, c) = {
                    let (w, c) = p.lead(order).expect("nonzero");
                    (w.clone(), c.clone())
                };
                if lead.is_empty() {
                    return Err(Error::NonOrientableRelation(
                        "a relation reduces to a nonzero constant".into(),
                    ));
                }
                if !order.in_box(&lead, cap) {
                    notes.push(format!(
                        "completion needs a rule of degree {} beyond the cap",
                        order.wdeg(&lead)
                    ));
                    continue;
                }
                let fresh_lead = seen_leads.insert(lead.clone());
                debug_assert!(fresh_lead, "lead added twice; completion would not terminate");
                let mut tail = p.scale(&(-Scalar::one() / c));
                tail.add_term(lead.clone(), Scalar::one());
                // Retire rules whose lead contains the new lead; requeue them.
                let mut kept: Vec<Rule> = Vec::new();
                for rule in rules.drain(..) {
                    if rule.lead.find(&lead).is_some() {
                        let mut poly = rule.tail.neg();
                        poly.add_term(rule.lead.clone(), Scalar::one());
                        queue.push_back(poly);
                    } else {
                        kept.push(rule);
                    }
                }
                rules = kept;
                rules.push(Rule { lead, tail });
                // Keep tails reduced against the full rule set.
                for i in 0..rules.len() {
                    let tail = rules[i].tail.clone();
                    match reduce_full(&tail, &rules, order, cap) {
                        Ok(t) => rules[i].tail = t,
                        Err(Error::CapExceeded { context, .. }) => notes.push(context),
                        Err(e) => return Err(e),
                    }
                }
            }

            // All queued relations absorbed; look for unresolved overlaps.
            let mut progress = false;
            'pairs: for i in 0..rules.len() {
                for j in 0..rules.len() {
                    for o in rules[i].lead.proper_overlaps(&rules[j].lead) {
                        let overlap =
                            rules[i].lead.concat(&rules[j].lead.slice(o, rules[j].lead.len()));
                        if !order.in_box(&overlap, cap) {
                            continue;
                        }
                        let s = overlap_s_poly(&rules[i], &rules[j], o);
                        match reduce_full(&s, &rules, order, cap) {
                            Ok(r) if r.is_zero() => {}
                            Ok(r) => {
                                queue.push_back(r);
                                progress = true;
                                break 'pairs;
                            }
                            Err(Error::CapExceeded { context, .. }) => notes.push(context),
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
            if !progress {
                break;
            }
        }

        let mut rules = rules;
        rules.sort_by(|a, b| order.compare(&a.lead, &b.lead));
        notes.sort();
        notes.dedup();
        let status = if notes.is_empty() {
            CompletionStatus::CompleteToCap
        } else {
            CompletionStatus::CapExceeded { notes }
        };
        Ok(RewriteSystem { order: order.clone(), cap, rules, status })
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn status(&self) -> &CompletionStatus {
        &self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == CompletionStatus::CompleteToCap
    }

    /// Canonical representative of `p` modulo the relations, inside the box.
    pub fn nf(&self, p: &NCPoly) -> Result<NCPoly> {
        for (w, _) in p.terms() {
            if !self.order.in_box(w, self.cap) {
                return Err(Error::CapExceeded {
                    cap: self.cap,
                    context: format!("input word of degree {} exceeds the cap", self.order.wdeg(w)),
                });
            }
        }
        reduce_full(p, &self.rules, &self.order, self.cap)
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        find_redex(w, &self.rules).is_none()
    }

    /// All normal words in the degree box, in DFS order (letters ascending).
    ///
    /// Prefixes of normal words are normal, so the search only ever visits
    /// normal words and their immediate failing extensions.
    pub fn normal_words(&self) -> Vec<Word> {
        let ngens = self.order.weights.len();
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        self.dfs_normal(&mut cur, ngens, &mut |letters| {
            out.push(Word::from_letters(letters.to_vec()));
        });
        out
    }

    fn dfs_normal(&self, cur: &mut Vec<u32>, ngens: usize, visit: &mut impl FnMut(&[u32])) {
        visit(cur);
        for l in 0..ngens as u32 {
            cur.push(l);
            let w = Word::from_letters(cur.clone());
            if self.order.in_box(&w, self.cap) && !self.creates_redex_at_end(cur) {
                self.dfs_normal(cur, ngens, visit);
            }
            cur.pop();
        }
    }

    fn creates_redex_at_end(&self, letters: &[u32]) -> bool {
        self.rules.iter().any(|rule| {
            let llen = rule.lead.len();
            llen > 0 && llen <= letters.len() && letters[letters.len() - llen..] == rule.lead.letters()[..]
        })
    }

    /// Number of normal words of each weighted degree `0..=cap`.
    pub fn graded_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.cap as usize + 1];
        let ngens = self.order.weights.len();
        let mut cur: Vec<u32> = Vec::new();
        self.dfs_normal(&mut cur, ngens, &mut |letters| {
            let d: u64 = letters.iter().map(|&l| self.order.weights[l as usize] as u64).sum();
            counts[d as usize] += 1;
        });
        counts
    }

    /// Re-examines every in-box overlap ambiguity against the final rules.
    pub fn overlap_confluence_report(&self) -> ConfluenceReport {
        let mut cases = Vec::new();
        let mut all_resolved = true;
        for i in 0..self.rules.len() {
            for j in 0..self.rules.len() {
                for o in self.rules[i].lead.proper_overlaps(&self.rules[j].lead) {
                    let overlap = self.rules[i]
                        .lead
                        .concat(&self.rules[j].lead.slice(o, self.rules[j].lead.len()));
                    if !self.order.in_box(&overlap, self.cap) {
                        continue;
                    }
                    let s = overlap_s_poly(&self.rules[i], &self.rules[j], o);
                    let resolved = match reduce_full(&s, &self.rules, &self.order, self.cap) {
                        Ok(r) => r.is_zero(),
                        Err(_) => false,
                    };
                    all_resolved &= resolved;
                    cases.push(OverlapCase {
                        left_lead: self.rules[i].lead.clone(),
                        right_lead: self.rules[j].lead.clone(),
                        overlap_word: overlap,
                        resolved,
                    });
                }
            }
        }
        ConfluenceReport { cases, all_resolved }
    }
}

/// S-polynomial of the ambiguity `left.lead = p.o`, `right.lead = o.s`,
/// overlap word `p.o.s`: difference of the two one-step reductions.
fn overlap_s_poly(left: &Rule, right: &Rule, o: usize) -> NCPoly {
    let suffix = right.lead.slice(o, right.lead.len());
    let prefix = left.lead.slice(0, left.lead.len() - o);
    let via_left = left.tail.framed(&Word::empty(), &suffix);
    let via_right = right.tail.framed(&prefix, &Word::empty());
    via_left.sub(&via_right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{Filtration, Generator};
    use crate::scalar::int;

    fn weyl1() -> (Presentation, Filtration) {
        let rel = NCPoly::monomial(Word::from_letters(vec![1, 0]), int(1))
            .add(&NCPoly::monomial(Word::from_letters(vec![0, 1]), int(-1)))
            .add(&NCPoly::constant(int(-1)));
        let pres = Presentation::new(
            vec![
                Generator { name: "x".into(), degree: 0 },
                Generator { name: "y".into(), degree: 1 },
            ],
            vec![rel],
        );
        let filt = Filtration::new(vec![1, 1]); // Bernstein
        (pres, filt)
    }

    #[test]
    fn weyl_completes_with_one_rule() {
        let (pres, filt) = weyl1();
        let rs = RewriteSystem::complete(&pres, &filt.order(), 8).unwrap();
        assert!(rs.is_complete());
        assert_eq!(rs.rules().len(), 1);
        assert_eq!(rs.rules()[0].lead, Word::from_letters(vec![1, 0]));
    }

    #[test]
    fn weyl_normal_form_yxx() {
        let (pres, filt) = weyl1();
        let rs = RewriteSystem::complete(&pres, &filt.order(), 8).unwrap();
        let p = NCPoly::monomial(Word::from_letters(vec![1, 0, 0]), int(1));
        let nf = rs.nf(&p).unwrap();
        // y x^2 = x^2 y + 2x
        let expect = NCPoly::monomial(Word::from_letters(vec![0, 0, 1]), int(1))
            .add(&NCPoly::monomial(Word::from_letters(vec![0]), int(2)));
        assert_eq!(nf, expect);
    }

    #[test]
    fn weyl_bernstein_counts() {
        let (pres, filt) = weyl1();
        let rs = RewriteSystem::complete(&pres, &filt.order(), 8).unwrap();
        let counts = rs.graded_counts();
        assert_eq!(counts, vec![1, 2, 3, 4, 5, 6, 7, 8, 9]);
    }

    #[test]
    fn order_filtration_truncates_degree_zero_stratum() {
        let (pres, _) = weyl1();
        let order_filt = Filtration::new(vec![0, 1]);
        let rs = RewriteSystem::complete(&pres, &order_filt.order(), 6).unwrap();
        assert!(rs.is_complete());
        let counts = rs.graded_counts();
        // x^p y^i with p <= 6: seven words in every weighted degree i <= 6.
        assert_eq!(counts, vec![7, 7, 7, 7, 7, 7, 7]);
    }

    #[test]
    fn nonzero_constant_relation_is_not_orientable() {
        let pres = Presentation::new(
            vec![Generator { name: "x".into(), degree: 1 }],
            vec![NCPoly::gen(0), NCPoly::gen(0).sub(&NCPoly::one())],
        );
        let err = RewriteSystem::complete(&pres, &MonomialOrder::weighted(vec![1]), 4);
        assert!(matches!(err, Err(Error::NonOrientableRelation(_))));
    }

    #[test]
    fn cap_exceeded_input_is_reported() {
        let (pres, filt) = weyl1();
        let rs = RewriteSystem::complete(&pres, &filt.order(), 4).unwrap();
        let p = NCPoly::monomial(Word::from_letters(vec![1; 5]), int(1));
        assert!(matches!(rs.nf(&p), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn sl2_completion_has_three_rules() {
        // e, f, h with [e,f]=h, [h,e]=2e, [h,f]=-2f.
        let (e, f, h) = (0u32, 1u32, 2u32);
        let rel = |hi: u32, lo: u32, tail: NCPoly| {
            NCPoly::monomial(Word::from_letters(vec![hi, lo]), int(1))
                .add(&NCPoly::monomial(Word::from_letters(vec![lo, hi]), int(-1)))
                .sub(&tail)
        };
        let pres = Presentation::new(
            vec![
                Generator { name: "e".into(), degree: 1 },
                Generator { name: "f".into(), degree: 1 },
                Generator { name: "h".into(), degree: 1 },
            ],
            vec![
                // fe - ef + h = 0  <=>  [f,e] = -h
                rel(f, e, NCPoly::monomial(Word::from_letters(vec![h]), int(-1))),
                // he - eh - 2e = 0
                rel(h, e, NCPoly::monomial(Word::from_letters(vec![e]), int(2))),
                // hf - fh + 2f = 0
                rel(h, f, NCPoly::monomial(Word::from_letters(vec![f]), int(-2))),
            ],
        );
        let rs = RewriteSystem::complete(&pres, &MonomialOrder::weighted(vec![1, 1, 1]), 8).unwrap();
        assert!(rs.is_complete());
        assert_eq!(rs.rules().len(), 3);
        let report = rs.overlap_confluence_report();
        assert!(report.all_resolved);
        assert_eq!(report.cases.len(), 1);
        // PBW: normal words e^i f^j h^k.
        let counts = rs.graded_counts();
        let binom = |n: u64| (n + 1) * (n + 2) / 2;
        for d in 0..=8u64 {
            assert_eq!(counts[d as usize], binom(d));
        }
    }

    #[test]
    fn completion_is_deterministic() {
        let (pres, filt) = weyl1();
        let a = RewriteSystem::complete(&pres, &filt.order(), 8).unwrap();
        let b = RewriteSystem::complete(&pres, &filt.order(), 8).unwrap();
        assert_eq!(a.rules().len(), b.rules().len());
        for (ra, rb) in a.rules().iter().zip(b.rules()) {
            assert_eq!(ra.lead, rb.lead);
            assert_eq!(ra.tail, rb.tail);
        }
    }
}
