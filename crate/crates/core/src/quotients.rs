//! Homomorphisms from presented groups onto small symmetric groups.
//!
//! A word is evaluated left to right: the image of `xy` is "apply `x`, then
//! `y`", so `i^(xy) = (i^x)^y`. The search enumerates generator-image tuples
//! by ascending degree, then lexicographically in one-line notation with the
//! first generator most significant, and always returns the first hit in
//! that order even when the scan runs in parallel.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::presentations::Presentation;
use crate::words::{Generator, Sign, Word};

/// A permutation of `{0, …, d-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::MalformedWitness("permutation of degree 0".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::MalformedWitness(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Permutation(images))
    }

    /// From the 1-based one-line notation used in certificate files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or_else(|| Error::MalformedWitness("permutation entry 0".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(shifted)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.degree(), next.degree(), "degree mismatch");
        Permutation(self.0.iter().map(|&x| next.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_based())
    }
}

/// All permutations of degree `d`, in lexicographic order.
pub fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..degree).collect();
    let mut out = vec![Permutation(current.clone())];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..degree).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..degree).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation(current.clone()));
    }
}

/// A finite quotient exhibiting non-triviality of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientWitness {
    pub degree: usize,
    pub images: BTreeMap<Generator, Permutation>,
}

/// Image of `w` under the assignment, composed left to right.
pub fn evaluate(w: &Word, images: &BTreeMap<Generator, Permutation>, degree: usize) -> Result<Permutation> {
    let mut acc = Permutation::identity(degree);
    for letter in w.letters() {
        let image = images
            .get(&letter.gen)
            .ok_or_else(|| Error::MissingGenerator(letter.gen.name().to_string()))?;
        if image.degree() != degree {
            return Err(Error::MalformedWitness(format!(
                "image of {} has degree {}, expected {degree}",
                letter.gen,
                image.degree()
            )));
        }
        acc = match letter.sign {
            Sign::Pos => acc.then(image),
            Sign::Neg => acc.then(&image.inverse()),
        };
    }
    Ok(acc)
}

fn common_degree(p: &Presentation, images: &BTreeMap<Generator, Permutation>) -> Result<usize> {
    let mut degree = None;
    for g in p.generators() {
        let image = images
            .get(g)
            .ok_or_else(|| Error::MissingGenerator(g.name().to_string()))?;
        match degree {
            None => degree = Some(image.degree()),
            Some(d) if d != image.degree() => {
                return Err(Error::MalformedWitness(format!(
                    "generator images have degrees {d} and {}",
                    image.degree()
                )))
            }
            Some(_) => {}
        }
    }
    Ok(degree.unwrap_or(1))
}

/// True iff every relator of `p` maps to the identity.
pub fn check_homomorphism(p: &Presentation, images: &BTreeMap<Generator, Permutation>) -> Result<bool> {
    let degree = common_degree(p, images)?;
    for r in p.relators() {
        if !evaluate(r, images, degree)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks a witness against `element`: a homomorphism on which `element`
/// does not vanish.
pub fn verify_quotient_witness(
    witness: &QuotientWitness,
    element: &Word,
    p: &Presentation,
) -> Result<bool> {
    if let Some(g) = witness.images.keys().find(|g| p.index_of(g).is_none()) {
        return Err(Error::UnknownGenerator(g.name().to_string()));
    }
    let degree = common_degree(p, &witness.images)?;
    if degree != witness.degree {
        return Err(Error::MalformedWitness(format!(
            "declared degree {} but images have degree {degree}",
            witness.degree
        )));
    }
    Ok(check_homomorphism(p, &witness.images)?
        && !evaluate(element, &witness.images, degree)?.is_identity())
}

/// Word compiled to indices into a per-candidate image table:
/// `2·generator` for a positive letter, `2·generator + 1` for an inverse.
fn compile(w: &Word, p: &Presentation) -> Result<Vec<usize>> {
    w.letters()
        .iter()
        .map(|l| {
            let i = p
                .index_of(&l.gen)
                .ok_or_else(|| Error::UnknownGenerator(l.gen.name().to_string()))?;
            Ok(2 * i + usize::from(l.sign == Sign::Neg))
        })
        .collect()
}

fn is_trivial_under(word: &[usize], table: &[&[usize]], degree: usize) -> bool {
    (0..degree).all(|start| word.iter().fold(start, |x, &k| table[k][x]) == start)
}

/// The candidate space at one degree: `(d!)^g` tuples, indexed in
/// mixed radix with the first generator most significant.
pub struct CandidateSpace {
    perms: Vec<Permutation>,
    inverses: Vec<Permutation>,
    generators: usize,
}

impl CandidateSpace {
    pub fn new(degree: usize, generators: usize) -> Self {
        let perms = all_permutations(degree);
        let inverses = perms.iter().map(Permutation::inverse).collect();
        CandidateSpace {
            perms,
            inverses,
            generators,
        }
    }

    pub fn len(&self) -> u128 {
        (self.perms.len() as u128).pow(self.generators as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Permutation indices of candidate `index`.
    pub fn digits(&self, mut index: u128) -> Vec<usize> {
        let base = self.perms.len() as u128;
        let mut digits = vec![0; self.generators];
        for d in digits.iter_mut().rev() {
            *d = (index % base) as usize;
            index /= base;
        }
        digits
    }

    pub fn tuple(&self, index: u128) -> Vec<&Permutation> {
        self.digits(index).into_iter().map(|i| &self.perms[i]).collect()
    }

    fn table(&self, index: u128) -> Vec<&[usize]> {
        self.digits(index)
            .into_iter()
            .flat_map(|i| [self.perms[i].images(), self.inverses[i].images()])
            .collect()
    }
}

/// First homomorphism, in the documented order, that kills every relator of
/// `p` but not `element`. `None` when the space up to `max_degree` is
/// exhausted.
pub fn find_quotient_witness(
    p: &Presentation,
    element: &Word,
    max_degree: usize,
) -> Result<Option<QuotientWitness>> {
    let relators = p
        .relators()
        .iter()
        .map(|r| compile(r, p))
        .collect::<Result<Vec<_>>>()?;
    let element_code = compile(element, p)?;
    if element.is_identity() {
        return Ok(None);
    }
    for degree in 2..=max_degree {
        let space = CandidateSpace::new(degree, p.generators().len());
        let total = u64::try_from(space.len())
            .map_err(|_| Error::Overflow(format!("candidate count {}", space.len())))?;
        let hit = (0..total).into_par_iter().find_first(|&index| {
            let table = space.table(index as u128);
            relators.iter().all(|r| is_trivial_under(r, &table, degree))
                && !is_trivial_under(&element_code, &table, degree)
        });
        if let Some(index) = hit {
            let images = p
                .generators()
                .iter()
                .cloned()
                .zip(space.tuple(index as u128).into_iter().cloned())
                .collect();
            return Ok(Some(QuotientWitness { degree, images }));
        }
    }
    Ok(None)
}
