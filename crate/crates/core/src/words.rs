//! Free-group words over an open-ended alphabet of named generators.
//!
//! A [`Word`] is always freely reduced. Every constructor funnels through
//! [`Word::reduce`], so two words are equal as free-group elements exactly
//! when they are equal as values.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A named generator. Comparison is by name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(Arc<str>);

impl Generator {
    pub fn new(name: impl AsRef<str>) -> Self {
        Generator(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    /// `+1` and `-1` only.
    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// A generator raised to `+1` or `-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Generator,
    pub sign: Sign,
}

impl Letter {
    pub fn new(gen: Generator, sign: Sign) -> Self {
        Letter { gen, sign }
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            gen: self.gen.clone(),
            sign: self.sign.flip(),
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.gen),
            // combining overline: ā, b̄
            Sign::Neg => write!(f, "{}\u{0304}", self.gen),
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    /// Free reduction by a single left-to-right stack pass.
    pub fn reduce<I>(letters: I) -> Word
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut out: Vec<Letter> = Vec::new();
        for letter in letters {
            match out.last() {
                Some(last) if last.cancels(&letter) => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Word(out)
    }

    pub fn letter(gen: &Generator, sign: Sign) -> Word {
        Word(vec![Letter::new(gen.clone(), sign)])
    }

    pub fn gen(gen: &Generator) -> Word {
        Word::letter(gen, Sign::Pos)
    }

    /// `gen^exponent`, expanded letter by letter.
    pub fn gen_pow(gen: &Generator, exponent: i64) -> Word {
        let sign = if exponent < 0 { Sign::Neg } else { Sign::Pos };
        let count = exponent.unsigned_abs() as usize;
        Word(vec![Letter::new(gen.clone(), sign); count])
    }

    /// Parses the text syntax: a lowercase letter is a generator, the
    /// matching uppercase letter its inverse. Whitespace is ignored.
    pub fn parse(text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for ch in text.chars() {
            if ch.is_whitespace() {
                continue;
            }
            if ch.is_ascii_lowercase() {
                letters.push(Letter::new(Generator::new(ch.to_string()), Sign::Pos));
            } else if ch.is_ascii_uppercase() {
                let lower = ch.to_ascii_lowercase().to_string();
                letters.push(Letter::new(Generator::new(lower), Sign::Neg));
            } else {
                return Err(Error::WordSyntax(format!("unexpected character {ch:?}")));
            }
        }
        Ok(Word::reduce(letters))
    }

    /// Inverse of [`Word::parse`] for single-character generator names.
    /// Longer names are written as `name` / `name^-1` separated by spaces.
    pub fn to_ascii(&self) -> String {
        if self.0.iter().all(|l| is_single_lower(l.gen.name())) {
            self.0
                .iter()
                .map(|l| match l.sign {
                    Sign::Pos => l.gen.name().to_string(),
                    Sign::Neg => l.gen.name().to_ascii_uppercase(),
                })
                .collect()
        } else {
            self.0
                .iter()
                .map(|l| match l.sign {
                    Sign::Pos => l.gen.name().to_string(),
                    Sign::Neg => format!("{}^-1", l.gen.name()),
                })
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let count = exponent.unsigned_abs() as usize;
        Word::reduce(std::iter::repeat_n(base.0, count).flatten())
    }

    /// `g^x = x̄ g x`.
    pub fn conjugate(&self, by: &Word) -> Word {
        Word::reduce(
            by.inverse()
                .0
                .into_iter()
                .chain(self.0.iter().cloned())
                .chain(by.0.iter().cloned()),
        )
    }

    /// Inserts `insert` before the letter at `position` and reduces.
    ///
    /// Panics if `position > self.len()`.
    pub fn splice(&self, position: usize, insert: &Word) -> Word {
        let (head, tail) = self.0.split_at(position);
        Word::reduce(
            head.iter()
                .chain(insert.0.iter())
                .chain(tail.iter())
                .cloned(),
        )
    }

    /// Homomorphic image under `assignment`.
    pub fn substitute(&self, assignment: &BTreeMap<Generator, Word>) -> Result<Word> {
        let mut letters = Vec::new();
        for letter in &self.0 {
            let image = assignment
                .get(&letter.gen)
                .ok_or_else(|| Error::MissingGenerator(letter.gen.name().to_string()))?;
            match letter.sign {
                Sign::Pos => letters.extend(image.0.iter().cloned()),
                Sign::Neg => letters.extend(image.inverse().0),
            }
        }
        Ok(Word::reduce(letters))
    }

    pub fn exponent_sum(&self, gen: &Generator) -> i64 {
        self.0
            .iter()
            .filter(|l| &l.gen == gen)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.0.iter().map(|l| &l.gen)
    }

    /// Splits `self` as `u · core · ū` with `core` cyclically reduced.
    pub fn cyclic_decomposition(&self) -> (Word, Word) {
        let letters = &self.0;
        let mut lo = 0;
        let mut hi = letters.len();
        while hi - lo >= 2 && letters[lo].cancels(&letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        (Word(letters[..lo].to_vec()), Word(letters[lo..hi].to_vec()))
    }

    /// Finds `x` with `base^x = self`, if `self` is a conjugate of `base`.
    pub fn conjugator_from(&self, base: &Word) -> Option<Word> {
        let (outer_t, core_t) = self.cyclic_decomposition();
        let (outer_b, core_b) = base.cyclic_decomposition();
        if core_t.len() != core_b.len() {
            return None;
        }
        if core_t.is_empty() {
            return Some(Word::identity());
        }
        let n = core_b.len();
        for shift in 0..n {
            let rotated = core_b.0[shift..].iter().chain(core_b.0[..shift].iter());
            if rotated.eq(core_t.0.iter()) {
                // core_t = ȳ core_b y with y = core_b[..shift]
                let y = Word(core_b.0[..shift].to_vec());
                let x = &(&outer_b * &y) * &outer_t.inverse();
                debug_assert_eq!(&base.conjugate(&x), self);
                return Some(x);
            }
        }
        None
    }
}

fn is_single_lower(name: &str) -> bool {
    let mut chars = name.chars();
    matches!((chars.next(), chars.next()), (Some(c), None) if c.is_ascii_lowercase())
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::reduce(self.0.iter().chain(rhs.0.iter()).cloned())
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        Word::reduce(self.0.into_iter().chain(rhs.0))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::reduce(iter)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_ascii())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for letter in &self.0 {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// `[g, h] = ḡ h̄ g h`.
pub fn commutator(g: &Word, h: &Word) -> Word {
    Word::reduce(
        g.inverse()
            .0
            .into_iter()
            .chain(h.inverse().0)
            .chain(g.0.iter().cloned())
            .chain(h.0.iter().cloned()),
    )
}

/// Product of words, freely reduced.
pub fn product<'a, I>(words: I) -> Word
where
    I: IntoIterator<Item = &'a Word>,
{
    Word::reduce(words.into_iter().flat_map(|w| w.0.iter().cloned()))
}
