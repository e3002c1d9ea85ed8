//! Report accumulation: a human-readable section followed by stable
//! machine-readable `key: value` lines.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
    Both,
}

/// Output of one command.  Machine lines carry one fact each and are
/// parseable without the human section; the `failed` flag drives the exit
/// status.
#[derive(Clone, Debug, Default)]
pub struct Report {
    human: Vec<String>,
    facts: Vec<(String, String)>,
    failed: bool,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.human.push(s.into());
    }

    /// Adds a multi-line block (a printed presentation, say) to the human
    /// section.
    pub fn block(&mut self, s: &str) {
        for l in s.lines() {
            self.human.push(l.to_string());
        }
    }

    pub fn fact(&mut self, key: &str, value: impl fmt::Display) {
        self.facts.push((key.to_string(), value.to_string()));
    }

    /// Records the pass/fail verdict; a failing verdict makes the whole
    /// invocation exit nonzero.
    pub fn verdict(&mut self, pass: bool) {
        self.named_verdict(if pass { "pass" } else { "fail" }, pass);
    }

    /// A verdict word other than pass/fail (`inconclusive`); `ok` still
    /// decides the exit status.
    pub fn named_verdict(&mut self, word: &str, ok: bool) {
        if !ok {
            self.failed = true;
        }
        self.fact("verdict", word);
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        if matches!(format, Format::Human | Format::Both) {
            for l in &self.human {
                out.push_str(l);
                out.push('\n');
            }
        }
        if matches!(format, Format::Machine | Format::Both) {
            for (k, v) in &self.facts {
                out.push_str(k);
                out.push_str(": ");
                out.push_str(v);
                out.push('\n');
            }
        }
        out
    }
}

/// `(a, b, c)` rendering for machine-line values.
pub fn tuple<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let body = items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
    format!("({body})")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_render_independently() {
        let mut r = Report::new();
        r.line("two exponents computed");
        r.fact("cap", 8);
        r.verdict(true);
        assert_eq!(r.render(Format::Machine), "cap: 8\nverdict: pass\n");
        assert_eq!(r.render(Format::Human), "two exponents computed\n");
        assert_eq!(r.render(Format::Both), "two exponents computed\ncap: 8\nverdict: pass\n");
        assert!(!r.failed());
    }

    #[test]
    fn failing_verdict_sets_the_flag() {
        let mut r = Report::new();
        r.verdict(false);
        assert!(r.failed());
        let mut r = Report::new();
        r.named_verdict("inconclusive", false);
        assert!(r.failed());
    }

    #[test]
    fn tuple_rendering() {
        assert_eq!(tuple([0, 1, 2]), "(0, 1, 2)");
        assert_eq!(tuple(Vec::<u64>::new()), "()");
    }
}
