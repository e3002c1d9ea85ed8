//! The presentation DSL: parsing `.fa` sources and printing them back in
//! canonical form.
//!
//! Grammar:
//!
//! ```text
//! file    := "algebra" NAME "{" gens rel* central? "}"
//! gens    := "gens" NAME ":" NAT ("," NAME ":" NAT)* ";"
//! rel     := "rel" poly ";"
//! central := "central" NAME ("," NAME)* ";"
//! poly    := ("+" | "-")? term (("+" | "-") term)*
//! term    := factor ("*" factor)*
//! factor  := NAT ("/" NAT)? | NAME
//! ```
//!
//! Whitespace is insignificant; `#` starts a line comment.  Names are
//! identifiers with optional trailing apostrophes (as produced by the
//! opposite and enveloping constructions).

use ncfilt::scalar::{self, Scalar};
use ncfilt::{Filtration, Generator, NCPoly, Presentation, Word};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

const KEYWORDS: [&str; 4] = ["algebra", "gens", "rel", "central"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, msg: msg.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Nat(String),
    Punct(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Nat(s) => write!(f, "number {s}"),
            Tok::Punct(c) => write!(f, "`{c}`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let mut chars = line.char_indices().peekable();
        while let Some(&(ci, c)) = chars.peek() {
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let (line_no, col_no) = (li + 1, ci + 1);
            if c.is_ascii_alphabetic() || c == '_' {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                while let Some(&(_, '\'')) = chars.peek() {
                    name.push('\'');
                    chars.next();
                }
                out.push(Token { tok: Tok::Ident(name), line: line_no, col: col_no });
            } else if c.is_ascii_digit() {
                let mut digits = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token { tok: Tok::Nat(digits), line: line_no, col: col_no });
            } else if "{}:;,*+-/".contains(c) {
                chars.next();
                out.push(Token { tok: Tok::Punct(c), line: line_no, col: col_no });
            } else {
                return err(line_no, col_no, format!("unexpected character `{c}`"));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos)
    }

    /// Position for error messages: the current token, or just past the end.
    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos).or_else(|| self.toks.last()) {
            Some(t) => (t.line, t.col + if self.pos >= self.toks.len() { 1 } else { 0 }),
            None => (1, 1),
        }
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        let (l, co) = self.here();
        match self.advance() {
            Some(t) if t.tok == Tok::Punct(c) => Ok(()),
            Some(t) => err(t.line, t.col, format!("expected `{c}`, found {}", t.tok)),
            None => err(l, co, format!("expected `{c}`, found end of input")),
        }
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some(t) if t.tok == Tok::Punct(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let (l, co) = self.here();
        match self.advance() {
            Some(t) if t.tok == Tok::Ident(kw.to_string()) => Ok(()),
            Some(t) => err(t.line, t.col, format!("expected `{kw}`, found {}", t.tok)),
            None => err(l, co, format!("expected `{kw}`, found end of input")),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(t) if t.tok == Tok::Ident(kw.to_string())) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        let (l, co) = self.here();
        match self.advance() {
            Some(Token { tok: Tok::Ident(s), line, col }) => Ok((s.clone(), *line, *col)),
            Some(t) => err(t.line, t.col, format!("expected {what}, found {}", t.tok)),
            None => err(l, co, format!("expected {what}, found end of input")),
        }
    }

    fn nat(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        let (l, co) = self.here();
        match self.advance() {
            Some(Token { tok: Tok::Nat(s), line, col }) => Ok((s.clone(), *line, *col)),
            Some(t) => err(t.line, t.col, format!("expected {what}, found {}", t.tok)),
            None => err(l, co, format!("expected {what}, found end of input")),
        }
    }

    /// One factor of a term: a rational literal or a generator name.
    fn factor(
        &mut self,
        gens: &BTreeMap<String, usize>,
    ) -> Result<(Scalar, Vec<u32>), ParseError> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Nat(_)) => {
                let (num, l, c) = self.nat("number")?;
                let text = if self.eat_punct('/') {
                    let (den, dl, dc) = self.nat("denominator")?;
                    if den.chars().all(|d| d == '0') {
                        return err(dl, dc, "zero denominator");
                    }
                    format!("{num}/{den}")
                } else {
                    num
                };
                match scalar::parse(&text) {
                    Some(s) => Ok((s, vec![])),
                    None => err(l, c, format!("invalid number {text}")),
                }
            }
            Some(Tok::Ident(_)) => {
                let (name, l, c) = self.ident("generator")?;
                match gens.get(&name) {
                    Some(&i) => Ok((scalar::one(), vec![i as u32])),
                    None => err(l, c, format!("unknown generator {name}")),
                }
            }
            _ => {
                let (l, c) = self.here();
                err(l, c, "expected a generator or a number")
            }
        }
    }

    fn term(&mut self, gens: &BTreeMap<String, usize>) -> Result<(Scalar, Word), ParseError> {
        let mut coeff = scalar::one();
        let mut letters = Vec::new();
        loop {
            let (c, ls) = self.factor(gens)?;
            coeff = coeff * c;
            letters.extend(ls);
            if !self.eat_punct('*') {
                break;
            }
        }
        Ok((coeff, Word::from_letters(letters)))
    }

    fn poly(&mut self, gens: &BTreeMap<String, usize>) -> Result<NCPoly, ParseError> {
        let mut out = NCPoly::zero();
        let mut negative = self.eat_punct('-');
        if !negative {
            self.eat_punct('+');
        }
        loop {
            let (coeff, word) = self.term(gens)?;
            let signed = if negative { -coeff } else { coeff };
            out = out.add(&NCPoly::monomial(word, signed));
            if self.eat_punct('-') {
                negative = true;
            } else if self.eat_punct('+') {
                negative = false;
            } else {
                break;
            }
        }
        Ok(out)
    }
}

/// A named presentation; the filtration is the one carried by the
/// generator degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub pres: Presentation,
}

impl AlgebraFile {
    pub fn new(name: impl Into<String>, pres: Presentation) -> Self {
        AlgebraFile { name: name.into(), pres }
    }

    pub fn filtration(&self) -> Filtration {
        Filtration::from_presentation(&self.pres)
    }

    pub fn parse(src: &str) -> Result<AlgebraFile, ParseError> {
        let toks = lex(src)?;
        let mut p = Parser { toks: &toks, pos: 0 };
        p.keyword("algebra")?;
        let (name, _, _) = p.ident("algebra name")?;
        p.punct('{')?;
        p.keyword("gens")?;
        let mut gens: Vec<Generator> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        loop {
            let (gname, l, c) = p.ident("generator name")?;
            if KEYWORDS.contains(&gname.as_str()) {
                return err(l, c, format!("reserved word {gname} cannot name a generator"));
            }
            p.punct(':')?;
            let (deg, dl, dc) = p.nat("filtration degree")?;
            let degree: u32 = match deg.parse() {
                Ok(d) => d,
                Err(_) => return err(dl, dc, format!("degree {deg} out of range")),
            };
            if index.insert(gname.clone(), gens.len()).is_some() {
                return err(l, c, format!("duplicate generator name {gname}"));
            }
            gens.push(Generator { name: gname, degree });
            if !p.eat_punct(',') {
                break;
            }
        }
        p.punct(';')?;
        let mut relations = Vec::new();
        while p.eat_keyword("rel") {
            relations.push(p.poly(&index)?);
            p.punct(';')?;
        }
        let mut central = BTreeSet::new();
        if p.eat_keyword("central") {
            loop {
                let (cname, l, c) = p.ident("central generator name")?;
                match index.get(&cname) {
                    Some(&i) => {
                        central.insert(i);
                    }
                    None => return err(l, c, format!("unknown generator {cname}")),
                }
                if !p.eat_punct(',') {
                    break;
                }
            }
            p.punct(';')?;
        }
        p.punct('}')?;
        if let Some(t) = p.peek() {
            return err(t.line, t.col, "trailing input after `}`");
        }
        let mut pres = Presentation::new(gens, relations);
        pres.central = central;
        Ok(AlgebraFile { name, pres })
    }

    /// Canonical rendering; `parse(print(f)) == f`.
    pub fn print(&self) -> String {
        let mut out = format!("algebra {} {{\n", self.name);
        let gens: Vec<String> =
            self.pres.gens.iter().map(|g| format!("{}:{}", g.name, g.degree)).collect();
        out.push_str(&format!("  gens {};\n", gens.join(", ")));
        for r in &self.pres.relations {
            out.push_str(&format!("  rel {};\n", self.pres.render_poly(r)));
        }
        if !self.pres.central.is_empty() {
            let names: Vec<&str> =
                self.pres.central.iter().map(|&i| self.pres.gens[i].name.as_str()).collect();
            out.push_str(&format!("  central {};\n", names.join(", ")));
        }
        out.push_str("}\n");
        out
    }
}

/// Parses a standalone polynomial against the generators of `pres`
/// (command-line `--s`, `--a`, `--module` arguments).
pub fn parse_poly_str(pres: &Presentation, src: &str) -> Result<NCPoly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks: &toks, pos: 0 };
    let index: BTreeMap<String, usize> =
        pres.gens.iter().enumerate().map(|(i, g)| (g.name.clone(), i)).collect();
    let poly = p.poly(&index)?;
    if let Some(t) = p.peek() {
        return err(t.line, t.col, format!("trailing input {}", t.tok));
    }
    Ok(poly)
}
