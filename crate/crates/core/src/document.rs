//! JSON certificate files.
//!
//! Words are arrays of signed integers: generator `i` (1-based position in
//! `presentation.generators`) is written `i`, its inverse `-i`. Permutations
//! use 1-based one-line notation. Serializing a parsed document reproduces
//! the input bytes for any file this module wrote.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::abelian::{AbelianGroup, AbelianImage};
use crate::certify::{GtCertificate, IdentityProof, NontrivialityWitness, ProofStep};
use crate::error::{Error, Result};
use crate::presentations::Presentation;
use crate::quotients::{Permutation, QuotientWitness};
use crate::words::{Generator, Letter, Sign, Word};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub format_version: u32,
    pub presentation: PresentationDoc,
    pub element: Vec<i64>,
    pub conjugators: Vec<Vec<i64>>,
    pub proof: ProofDoc,
    pub witness: WitnessDoc,
    pub metadata: Metadata,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProofDoc {
    pub start: Vec<i64>,
    pub steps: Vec<StepDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepDoc {
    pub position: usize,
    pub relator_index: usize,
    pub sign: i64,
    pub conjugator: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum WitnessDoc {
    Abelian { group: GroupDoc, image: ImageDoc },
    Quotient {
        degree: usize,
        images: BTreeMap<String, Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageDoc {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

/// Provenance only; the verifier ignores it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    pub generator: String,
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub r: Option<String>,
    pub tool_version: String,
}

impl Metadata {
    pub fn new(generator: &str, m: Option<i64>, n: Option<i64>, r: Option<String>) -> Self {
        Metadata {
            generator: generator.to_string(),
            m,
            n,
            r,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

fn encode_word(w: &Word, p: &Presentation) -> Result<Vec<i64>> {
    w.letters()
        .iter()
        .map(|l| {
            let i = p
                .index_of(&l.gen)
                .ok_or_else(|| Error::UnknownGenerator(l.gen.name().to_string()))?;
            Ok((i as i64 + 1) * l.sign.as_i64())
        })
        .collect()
}

fn decode_word(code: &[i64], generators: &[Generator]) -> Result<Word> {
    let letters = code
        .iter()
        .map(|&x| {
            let gen = usize::try_from(x.unsigned_abs())
                .ok()
                .and_then(|i| i.checked_sub(1))
                .and_then(|i| generators.get(i))
                .ok_or_else(|| Error::Document(format!("letter {x} names no generator")))?;
            let sign = if x < 0 { Sign::Neg } else { Sign::Pos };
            Ok(Letter::new(gen.clone(), sign))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::reduce(letters))
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()))
}

fn to_i64s(xs: &[BigInt]) -> Result<Vec<i64>> {
    xs.iter().map(to_i64).collect()
}

fn to_bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

impl CertificateDocument {
    pub fn from_certificate(c: &GtCertificate, metadata: Metadata) -> Result<Self> {
        let p = &c.presentation;
        let presentation = PresentationDoc {
            generators: p.generators().iter().map(|g| g.name().to_string()).collect(),
            relators: p
                .relators()
                .iter()
                .map(|r| encode_word(r, p))
                .collect::<Result<_>>()?,
        };
        let steps = c
            .triviality
            .steps
            .iter()
            .map(|s| {
                Ok(StepDoc {
                    position: s.position,
                    relator_index: s.relator_index,
                    sign: s.sign.as_i64(),
                    conjugator: encode_word(&s.conjugator, p)?,
                })
            })
            .collect::<Result<_>>()?;
        let witness = match &c.nontriviality {
            NontrivialityWitness::Abelian { image, group } => WitnessDoc::Abelian {
                group: GroupDoc {
                    free_rank: group.free_rank,
                    torsion: to_i64s(&group.torsion)?,
                },
                image: ImageDoc {
                    free: to_i64s(&image.free)?,
                    torsion: to_i64s(&image.torsion)?,
                },
            },
            NontrivialityWitness::Quotient(q) => WitnessDoc::Quotient {
                degree: q.degree,
                images: q
                    .images
                    .iter()
                    .map(|(g, perm)| (g.name().to_string(), perm.to_one_based()))
                    .collect(),
            },
        };
        Ok(CertificateDocument {
            format_version: FORMAT_VERSION,
            presentation,
            element: encode_word(&c.element, p)?,
            conjugators: c
                .conjugators
                .iter()
                .map(|x| encode_word(x, p))
                .collect::<Result<_>>()?,
            proof: ProofDoc {
                start: encode_word(&c.triviality.start, p)?,
                steps,
            },
            witness,
            metadata,
        })
    }

    pub fn to_certificate(&self) -> Result<GtCertificate> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Document(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        let generators: Vec<Generator> = self
            .presentation
            .generators
            .iter()
            .map(Generator::new)
            .collect();
        let word = |code: &[i64]| decode_word(code, &generators);
        let relators = self
            .presentation
            .relators
            .iter()
            .map(|r| word(r))
            .collect::<Result<_>>()?;
        let presentation = Presentation::new(generators.clone(), relators)?;
        let steps = self
            .proof
            .steps
            .iter()
            .map(|s| {
                Ok(ProofStep {
                    position: s.position,
                    relator_index: s.relator_index,
                    sign: Sign::from_i64(s.sign)
                        .ok_or_else(|| Error::Document(format!("step sign {} is not ±1", s.sign)))?,
                    conjugator: word(&s.conjugator)?,
                })
            })
            .collect::<Result<_>>()?;
        let nontriviality = match &self.witness {
            WitnessDoc::Abelian { group, image } => NontrivialityWitness::Abelian {
                group: AbelianGroup {
                    free_rank: group.free_rank,
                    torsion: to_bigs(&group.torsion),
                },
                image: AbelianImage {
                    free: to_bigs(&image.free),
                    torsion: to_bigs(&image.torsion),
                },
            },
            WitnessDoc::Quotient { degree, images } => QuotientWitness {
                degree: *degree,
                images: images
                    .iter()
                    .map(|(name, perm)| Ok((Generator::new(name), Permutation::from_one_based(perm)?)))
                    .collect::<Result<_>>()?,
            }
            .into(),
        };
        Ok(GtCertificate {
            presentation,
            element: word(&self.element)?,
            conjugators: self
                .conjugators
                .iter()
                .map(|x| word(x))
                .collect::<Result<_>>()?,
            triviality: IdentityProof {
                start: word(&self.proof.start)?,
                steps,
            },
            nontriviality,
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document is always serializable");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }
}

impl From<QuotientWitness> for NontrivialityWitness {
    fn from(q: QuotientWitness) -> Self {
        NontrivialityWitness::Quotient(q)
    }
}
