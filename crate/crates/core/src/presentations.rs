//! Finitely presented groups and builders for the Whitehead-link and
//! pretzel-link families.
//!
//! Relations `L = R` are stored as single relators `L·R̄`. Builders fix the
//! relator order, so downstream code may refer to relators by index:
//! [`WIRTINGER`], [`FIRST_FILLING`], [`SECOND_FILLING`] for the Whitehead
//! family and [`PRETZEL`] for the pretzel family.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::words::{Generator, Word};

pub const WIRTINGER: usize = 0;
pub const FIRST_FILLING: usize = 1;
pub const SECOND_FILLING: usize = 2;
pub const PRETZEL: usize = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Checks that generator names are unique, every relator uses only
    /// listed generators, and no relator is trivial.
    pub fn new(generators: Vec<Generator>, relators: Vec<Word>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.name().to_string()));
            }
        }
        for (i, r) in relators.iter().enumerate() {
            if r.is_identity() {
                return Err(Error::EmptyRelator(i));
            }
            if let Some(g) = r.generators().find(|g| !generators.contains(g)) {
                return Err(Error::UnknownGenerator(g.name().to_string()));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator(&self, index: usize) -> Option<&Word> {
        self.relators.get(index)
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name() == name)
    }

    pub fn index_of(&self, gen: &Generator) -> Option<usize> {
        self.generators.iter().position(|g| g == gen)
    }

    /// Errors with the first generator of `word` missing from the alphabet.
    pub fn check_word(&self, word: &Word) -> Result<()> {
        match word.generators().find(|g| !self.generators.contains(g)) {
            Some(g) => Err(Error::UnknownGenerator(g.name().to_string())),
            None => Ok(()),
        }
    }

    /// Returns a presentation of the quotient by one more relator.
    pub fn with_relator(&self, relator: Word) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.push(relator);
        Presentation::new(self.generators.clone(), relators)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<_> = self.generators.iter().map(|g| g.name()).collect();
        let rels: Vec<_> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "⟨{} | {}⟩", gens.join(", "), rels.join(", "))
    }
}

/// A Dehn filling slope `m/n`, stored with `n ≥ 0` and `gcd(|m|, n) = 1`.
///
/// `1/0` is representable; whether it is admissible is up to the builder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    m: i64,
    n: i64,
}

impl Slope {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::InvalidSlope {
                m,
                n,
                reason: "denominator must be non-negative",
            });
        }
        if m.unsigned_abs().gcd(&n.unsigned_abs()) != 1 {
            return Err(Error::InvalidSlope {
                m,
                n,
                reason: "numerator and denominator must be coprime",
            });
        }
        Ok(Slope { m, n })
    }

    pub fn integral(m: i64) -> Result<Self> {
        Slope::new(m, 1)
    }

    pub fn numerator(&self) -> i64 {
        self.m
    }

    pub fn denominator(&self) -> i64 {
        self.n
    }

    /// Accepts `p/q` or a bare integer `p`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::WordSyntax(format!("cannot parse slope {text:?}"));
        let text = text.trim();
        match text.split_once('/') {
            Some((p, q)) => {
                let p = p.trim().parse().map_err(|_| bad())?;
                let q = q.trim().parse().map_err(|_| bad())?;
                Slope::new(p, q)
            }
            None => Slope::new(text.parse().map_err(|_| bad())?, 1),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.m, self.n)
    }
}

fn ab() -> (Generator, Generator) {
    (Generator::new("a"), Generator::new("b"))
}

fn parse(text: &str) -> Word {
    Word::parse(text).expect("builder literals are well formed")
}

/// Both sides of the Wirtinger relation `aba b̄ā bab = bab āb̄ aba`.
pub fn whitehead_relation() -> (Word, Word) {
    (parse("abaBAbab"), parse("babABaba"))
}

/// `π₁` of the Whitehead link exterior: `⟨a, b | aba b̄ā bab = bab āb̄ aba⟩`.
pub fn whitehead_exterior() -> Presentation {
    let (a, b) = ab();
    let (lhs, rhs) = whitehead_relation();
    Presentation::new(vec![a, b], vec![&lhs * &rhs.inverse()])
        .expect("Wirtinger relator is non-trivial")
}

/// Longitude of the `a`-component, `b̄^{ab āb̄}·b = b a b̄ ā b̄ a b ā`.
pub fn longitude_word() -> Word {
    let conj = parse("abAB");
    &parse("B").conjugate(&conj) * &parse("b")
}

/// Longitude of the `b`-component.
///
/// The two components of the Whitehead link are exchanged by an isotopy, so
/// this is [`longitude_word`] under the swap `a ↔ b`. The source derivation
/// never writes this word down; the swap is an assumption of this builder.
pub fn b_longitude_word() -> Word {
    let (a, b) = ab();
    let swap: BTreeMap<_, _> = [(a.clone(), Word::gen(&b)), (b, Word::gen(&a))].into();
    longitude_word()
        .substitute(&swap)
        .expect("swap covers both generators")
}

fn filling_relator(longitude: &Word, meridian: &Generator, slope: Slope) -> Word {
    &longitude.pow(slope.denominator()) * &Word::gen_pow(meridian, slope.numerator())
}

/// Filling along the `a`-component: adds `(longitude)ⁿ·aᵐ`.
pub fn whitehead_filled(slope: Slope) -> Result<Presentation> {
    if slope.denominator() < 1 {
        return Err(Error::InvalidSlope {
            m: slope.numerator(),
            n: slope.denominator(),
            reason: "the first filling needs a denominator of at least 1",
        });
    }
    let (a, _) = ab();
    whitehead_exterior().with_relator(filling_relator(&longitude_word(), &a, slope))
}

/// Fills both cusps: first the `a`-component along `first`, then the
/// `b`-component along `second` (`1/0` allowed, which kills `b`).
pub fn double_filled(first: Slope, second: Slope) -> Result<Presentation> {
    let (_, b) = ab();
    whitehead_filled(first)?.with_relator(filling_relator(&b_longitude_word(), &b, second))
}

/// Both sides of `a b̄ⁿ⁻¹ a b̄ a b = b a b̄ a b̄ⁿ⁻¹ a`.
pub fn pretzel_relation(n: i64) -> (Word, Word) {
    let (a, b) = ab();
    let a = Word::gen(&a);
    let bbar_pow = Word::gen_pow(&b, -(n - 1));
    let lhs = crate::words::product([&a, &bbar_pow, &a, &parse("Bab")]);
    let rhs = crate::words::product([&parse("baBa"), &bbar_pow, &a]);
    (lhs, rhs)
}

/// Link group of the pretzel link `P(-2, 3, 2n)`, `n ≠ 0`.
pub fn pretzel(n: i64) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::Hypothesis(
            "n = 0 gives the connected sum of the trefoil and the Hopf link, \
             which has a different presentation"
                .into(),
        ));
    }
    let (a, b) = ab();
    let (lhs, rhs) = pretzel_relation(n);
    Presentation::new(vec![a, b], vec![&lhs * &rhs.inverse()])
}
