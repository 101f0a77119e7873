//! Words in `s1`, `s2` and the derived generators `a = s1 s2`, `b = s1 s2 s1`, `c = (s1 s2)^3`.
//!
//! Grammar:
//!
//! ```text
//! word    := term {term}
//! term    := atom ['^' integer]
//! atom    := 's1' | 's2' | 'a' | 'b' | 'c' | '(' word ')'
//! integer := ['-'] digits        (nonzero)
//! ```
//!
//! Parenthesized groups are expanded while parsing; `a`, `b`, `c` stay symbolic.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::reps::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    G1,
    G2,
    A,
    B,
    C,
}

impl Generator {
    pub fn symbol(self) -> &'static str {
        match self {
            Generator::G1 => "s1",
            Generator::G2 => "s2",
            Generator::A => "a",
            Generator::B => "b",
            Generator::C => "c",
        }
    }

    /// Expansion in `g1`, `g2`.
    fn letters(self) -> &'static [Generator] {
        use Generator::*;
        match self {
            G1 => &[G1],
            G2 => &[G2],
            A => &[G1, G2],
            B => &[G1, G2, G1],
            C => &[G1, G2, G1, G2, G1, G2],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    pub factors: Vec<(Generator, i64)>,
}

impl BraidWord {
    pub fn new(factors: Vec<(Generator, i64)>) -> BraidWord {
        BraidWord { factors }
    }

    pub fn empty() -> BraidWord {
        BraidWord::default()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::new(self.factors.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        BraidWord::new(factors)
    }

    /// Same word with `a`, `b`, `c` replaced by their `s1`/`s2` spellings.
    pub fn expand_macros(&self) -> BraidWord {
        let mut out = Vec::new();
        for &(g, e) in &self.factors {
            let letters = g.letters();
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    out.extend(letters.iter().map(|&l| (l, 1)));
                } else {
                    out.extend(letters.iter().rev().map(|&l| (l, -1)));
                }
            }
        }
        BraidWord::new(out)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(g, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(g.symbol())?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<BraidWord> {
        parse(s)
    }
}

/// Text form of a word; inverse of [`parse`] for nonempty words.
pub fn print(w: &BraidWord) -> String {
    w.to_string()
}

pub fn parse(text: &str) -> Result<BraidWord> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        len: text.len(),
    };
    let w = p.word()?;
    p.skip_ws();
    if let Some(&(at, c)) = p.chars.get(p.pos) {
        return Err(syntax(at, format!("unexpected '{c}'")));
    }
    Ok(w)
}

const MAX_EXPONENT: u64 = 10_000;
const MAX_EXPANDED: u64 = 100_000;

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(at, _)| at)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<BraidWord> {
        let mut out = BraidWord::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => break,
                _ => out.factors.extend(self.term()?.factors),
            }
        }
        if out.is_empty() {
            return Err(syntax(self.offset(), "expected a generator or '('"));
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<BraidWord> {
        let start = self.offset();
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        self.skip_ws();
        let e = self.integer()?;
        if atom_is_generator(&atom) {
            let (g, _) = atom.factors[0];
            return Ok(BraidWord::new(vec![(g, e)]));
        }
        if atom.factors.len() as u64 * e.unsigned_abs() > MAX_EXPANDED {
            return Err(syntax(start, "expanded word is too long"));
        }
        let unit = if e > 0 { atom } else { atom.inverse() };
        let mut out = BraidWord::empty();
        for _ in 0..e.unsigned_abs() {
            out.factors.extend_from_slice(&unit.factors);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<BraidWord> {
        let at = self.offset();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some('s') => {
                self.pos += 1;
                let g = match self.peek() {
                    Some('1') => Generator::G1,
                    Some('2') => Generator::G2,
                    _ => return Err(syntax(at, "expected s1 or s2")),
                };
                self.pos += 1;
                Ok(BraidWord::new(vec![(g, 1)]))
            }
            Some('a') => self.single(Generator::A),
            Some('b') => self.single(Generator::B),
            Some('c') => self.single(Generator::C),
            Some(c) => Err(syntax(at, format!("unexpected '{c}'"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }

    fn single(&mut self, g: Generator) -> Result<BraidWord> {
        self.pos += 1;
        Ok(BraidWord::new(vec![(g, 1)]))
    }

    fn integer(&mut self) -> Result<i64> {
        let at = self.offset();
        let mut text = String::new();
        if self.peek() == Some('-') {
            text.push('-');
            self.pos += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            text.push(c);
            self.pos += 1;
        }
        let e: i64 = text.parse().map_err(|_| syntax(at, "expected an integer exponent"))?;
        if e == 0 {
            return Err(syntax(at, "exponent must be nonzero"));
        }
        if e.unsigned_abs() > MAX_EXPONENT {
            return Err(syntax(at, format!("exponent exceeds {MAX_EXPONENT} in absolute value")));
        }
        Ok(e)
    }
}

fn atom_is_generator(w: &BraidWord) -> bool {
    w.factors.len() == 1 && w.factors[0].1 == 1
}

/// Merges adjacent factors with the same generator and drops zero exponents.
pub fn free_reduce(w: &BraidWord) -> BraidWord {
    let mut out: Vec<(Generator, i64)> = Vec::new();
    for &(g, e) in &w.factors {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((last, le)) if *last == g => {
                *le += e;
                if *le == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    BraidWord::new(out)
}

/// Evaluates words in one representation, caching generator inverses.
pub struct Evaluator<'a> {
    rep: &'a Representation,
    g1_inv: Matrix,
    g2_inv: Matrix,
}

impl<'a> Evaluator<'a> {
    pub fn new(rep: &'a Representation) -> Result<Evaluator<'a>> {
        let singular = || Error::ConstructionCheck("invertibility of the generators".into());
        let g1_inv = rep.g1.inverse()?.ok_or_else(singular)?;
        let g2_inv = rep.g2.inverse()?.ok_or_else(singular)?;
        Ok(Evaluator { rep, g1_inv, g2_inv })
    }

    fn letter(&self, g: Generator, inverse: bool) -> &Matrix {
        match (g, inverse) {
            (Generator::G1, false) => &self.rep.g1,
            (Generator::G2, false) => &self.rep.g2,
            (Generator::G1, true) => &self.g1_inv,
            (Generator::G2, true) => &self.g2_inv,
            _ => unreachable!("macros are expanded"),
        }
    }

    pub fn evaluate(&self, w: &BraidWord) -> Matrix {
        let ctx = self.rep.context();
        let mut acc = Matrix::identity(ctx, self.rep.dim());
        for &(g, e) in &w.factors {
            let factor = if g.letters().len() == 1 {
                self.letter(g, e < 0).pow(e.unsigned_abs() as u32)
            } else {
                let unit = g.letters().iter().fold(Matrix::identity(ctx, self.rep.dim()), |m, &l| {
                    &m * self.letter(l, false)
                });
                let unit = if e > 0 {
                    unit
                } else {
                    g.letters()
                        .iter()
                        .rev()
                        .fold(Matrix::identity(ctx, self.rep.dim()), |m, &l| &m * self.letter(l, true))
                };
                unit.pow(e.unsigned_abs() as u32)
            };
            acc = &acc * &factor;
        }
        acc
    }
}

/// Matrix of a word in a representation.
pub fn evaluate(w: &BraidWord, rep: &Representation) -> Result<Matrix> {
    Ok(Evaluator::new(rep)?.evaluate(w))
}
