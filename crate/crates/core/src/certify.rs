//! Certificates and their verifier.
//!
//! An [`IdentityProof`] shows a word is trivial in a presented group: each
//! [`ProofStep`] splices a conjugated relator `x̄·r^±·x` into the current
//! word at a position, and the word is freely reduced after every step. A
//! proof is valid when the replay ends at the empty word.
//!
//! A [`GtCertificate`] packages a generalized torsion claim: an element `g`,
//! conjugators `a₁…a_k` (`k ≥ 1`), an identity proof for `g^{a₁}⋯g^{a_k}`
//! and a witness that `g` itself is non-trivial.

use std::fmt;

use crate::abelian::{AbelianGroup, AbelianImage, Abelianization};
use crate::error::{Error, Result};
use crate::presentations::Presentation;
use crate::quotients::{verify_quotient_witness, QuotientWitness};
use crate::words::{product, Sign, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub position: usize,
    pub relator_index: usize,
    pub sign: Sign,
    pub conjugator: Word,
}

impl ProofStep {
    /// The conjugated relator this step splices in.
    pub fn inserted_word(&self, p: &Presentation) -> Option<Word> {
        let r = p.relator(self.relator_index)?;
        let r = match self.sign {
            Sign::Pos => r.clone(),
            Sign::Neg => r.inverse(),
        };
        Some(r.conjugate(&self.conjugator))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityProof {
    pub start: Word,
    pub steps: Vec<ProofStep>,
}

/// Every intermediate word of a replay, starting with `proof.start`.
pub fn replay_trace(proof: &IdentityProof, p: &Presentation) -> Result<Vec<Word>> {
    p.check_word(&proof.start)
        .map_err(|e| Error::MalformedProof { step: 0, reason: format!("start word: {e}") })?;
    let mut trace = vec![proof.start.clone()];
    for (i, step) in proof.steps.iter().enumerate() {
        let step_no = i + 1;
        let current = trace.last().expect("trace is never empty");
        if step.position > current.len() {
            return Err(Error::MalformedProof {
                step: step_no,
                reason: format!("position {} past word length {}", step.position, current.len()),
            });
        }
        p.check_word(&step.conjugator)
            .map_err(|e| Error::MalformedProof { step: step_no, reason: e.to_string() })?;
        let inserted = step.inserted_word(p).ok_or_else(|| Error::MalformedProof {
            step: step_no,
            reason: format!(
                "relator index {} out of range (presentation has {})",
                step.relator_index,
                p.relators().len()
            ),
        })?;
        trace.push(current.splice(step.position, &inserted));
    }
    Ok(trace)
}

/// Final word of the replay.
pub fn replay(proof: &IdentityProof, p: &Presentation) -> Result<Word> {
    Ok(replay_trace(proof, p)?.pop().expect("trace is never empty"))
}

/// `Ok(true)` iff the replay ends at the identity. Malformed steps are
/// errors, not `false`.
pub fn verify_identity(proof: &IdentityProof, p: &Presentation) -> Result<bool> {
    Ok(replay(proof, p)?.is_identity())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NontrivialityWitness {
    Abelian {
        image: AbelianImage,
        group: AbelianGroup,
    },
    Quotient(QuotientWitness),
}

impl NontrivialityWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            NontrivialityWitness::Abelian { .. } => "abelian",
            NontrivialityWitness::Quotient(_) => "quotient",
        }
    }
}

/// Recomputes the witness from `p` and checks it separates `element` from
/// the identity.
pub fn verify_witness(witness: &NontrivialityWitness, element: &Word, p: &Presentation) -> Result<bool> {
    match witness {
        NontrivialityWitness::Abelian { image, group } => {
            if !image.fits(group) {
                return Err(Error::MalformedWitness(
                    "image coordinates do not match the group decomposition".into(),
                ));
            }
            let ab = Abelianization::new(p);
            let recomputed = ab.image(element)?;
            Ok(ab.group() == group && &recomputed == image && !image.is_zero())
        }
        NontrivialityWitness::Quotient(q) => verify_quotient_witness(q, element, p),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtCertificate {
    pub presentation: Presentation,
    pub element: Word,
    pub conjugators: Vec<Word>,
    pub triviality: IdentityProof,
    pub nontriviality: NontrivialityWitness,
}

impl GtCertificate {
    /// `g^{a₁}⋯g^{a_k}`, freely reduced.
    pub fn conjugate_product(&self) -> Word {
        let factors: Vec<Word> = self
            .conjugators
            .iter()
            .map(|c| self.element.conjugate(c))
            .collect();
        product(&factors)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    NonEmptyProduct,
    StartAgreement,
    IdentityProof,
    Witness,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Check::NonEmptyProduct => "non-empty-product",
            Check::StartAgreement => "start-agreement",
            Check::IdentityProof => "identity-proof",
            Check::Witness => "nontriviality-witness",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// The input was malformed, so the check could not run.
    Error(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail(why) => write!(f, "FAIL ({why})"),
            Verdict::Error(why) => write!(f, "ERROR ({why})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<(Check, Verdict)>,
    /// Number of intermediate words produced by the replay, when it ran.
    pub replay_length: Option<usize>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.passed())
    }

    pub fn failing_checks(&self) -> Vec<Check> {
        self.checks
            .iter()
            .filter(|(_, v)| !v.passed())
            .map(|(c, _)| *c)
            .collect()
    }

    pub fn verdict(&self, check: Check) -> &Verdict {
        &self
            .checks
            .iter()
            .find(|(c, _)| *c == check)
            .expect("every check is reported")
            .1
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (check, verdict) in &self.checks {
            writeln!(f, "  {check:<22} {verdict}")?;
        }
        if let Some(n) = self.replay_length {
            writeln!(f, "  replay trace: {n} words")?;
        }
        write!(f, "{}", if self.is_valid() { "VALID" } else { "INVALID" })
    }
}

pub fn verify_certificate(c: &GtCertificate) -> VerificationReport {
    let p = &c.presentation;
    let mut checks = Vec::with_capacity(4);

    checks.push((
        Check::NonEmptyProduct,
        if c.conjugators.is_empty() {
            Verdict::Fail("no conjugates: the product must be non-empty".into())
        } else {
            Verdict::Pass
        },
    ));

    let start = match p
        .check_word(&c.element)
        .and_then(|_| c.conjugators.iter().try_for_each(|x| p.check_word(x)))
    {
        Err(e) => Verdict::Error(e.to_string()),
        Ok(()) if c.conjugate_product() == c.triviality.start => Verdict::Pass,
        Ok(()) => Verdict::Fail("proof start differs from the product of conjugates".into()),
    };
    checks.push((Check::StartAgreement, start));

    let mut replay_length = None;
    let identity = match replay_trace(&c.triviality, p) {
        Err(e) => Verdict::Error(e.to_string()),
        Ok(trace) => {
            replay_length = Some(trace.len());
            let last = trace.last().expect("trace is never empty");
            if last.is_identity() {
                Verdict::Pass
            } else {
                Verdict::Fail(format!("replay ends at {} (length {})", last.to_ascii(), last.len()))
            }
        }
    };
    checks.push((Check::IdentityProof, identity));

    let witness = match verify_witness(&c.nontriviality, &c.element, p) {
        Err(e) => Verdict::Error(e.to_string()),
        Ok(true) => Verdict::Pass,
        Ok(false) => Verdict::Fail(format!("{} witness does not separate the element", c.nontriviality.kind())),
    };
    checks.push((Check::Witness, witness));

    VerificationReport {
        checks,
        replay_length,
    }
}

/// Incrementally builds an [`IdentityProof`], applying each step as it is
/// recorded.
#[derive(Clone, Debug)]
pub struct ProofBuilder<'p> {
    presentation: &'p Presentation,
    start: Word,
    current: Word,
    steps: Vec<ProofStep>,
}

impl<'p> ProofBuilder<'p> {
    pub fn new(presentation: &'p Presentation, start: Word) -> Self {
        ProofBuilder {
            presentation,
            current: start.clone(),
            start,
            steps: Vec::new(),
        }
    }

    pub fn current(&self) -> &Word {
        &self.current
    }

    pub fn push(&mut self, step: ProofStep) -> Result<()> {
        let step_no = self.steps.len() + 1;
        if step.position > self.current.len() {
            return Err(Error::MalformedProof {
                step: step_no,
                reason: "position past end of word".into(),
            });
        }
        let inserted = step.inserted_word(self.presentation).ok_or_else(|| {
            Error::MalformedProof {
                step: step_no,
                reason: "relator index out of range".into(),
            }
        })?;
        self.current = self.current.splice(step.position, &inserted);
        self.steps.push(step);
        Ok(())
    }

    /// Finds a sign and conjugator presenting `target` as a conjugate of
    /// relator `relator_index` or its inverse.
    fn as_conjugate(&self, target: &Word, relator_index: usize) -> Result<(Sign, Word)> {
        let r = self
            .presentation
            .relator(relator_index)
            .ok_or_else(|| Error::Derivation(format!("no relator {relator_index}")))?;
        if let Some(x) = target.conjugator_from(r) {
            return Ok((Sign::Pos, x));
        }
        if let Some(x) = target.conjugator_from(&r.inverse()) {
            return Ok((Sign::Neg, x));
        }
        Err(Error::Derivation(format!(
            "{} is not a conjugate of relator {relator_index}",
            target.to_ascii()
        )))
    }

    /// Multiplies the current word on the left by `target`, which must be a
    /// conjugate of relator `relator_index` or its inverse.
    pub fn left_multiply(&mut self, target: &Word, relator_index: usize) -> Result<()> {
        let (sign, conjugator) = self.as_conjugate(target, relator_index)?;
        self.push(ProofStep {
            position: 0,
            relator_index,
            sign,
            conjugator,
        })
    }

    /// Replaces the subword `from` found at `position` by `to`, where
    /// `from·t̄o` is a conjugate of relator `relator_index` or its inverse.
    ///
    /// Realized as one insertion of `f̄rom·to` right after the subword.
    pub fn rewrite(&mut self, position: usize, from: &Word, to: &Word, relator_index: usize) -> Result<()> {
        let end = position + from.len();
        if end > self.current.len() || self.current.letters()[position..end] != *from.letters() {
            return Err(Error::Derivation(format!(
                "{} does not occur at position {position} of {}",
                from.to_ascii(),
                self.current.to_ascii()
            )));
        }
        // f̄rom·to = (from·t̄o)⁻¹ conjugated by from
        let (sign, x) = self.as_conjugate(&(from * &to.inverse()), relator_index)?;
        self.push(ProofStep {
            position: end,
            relator_index,
            sign: sign.flip(),
            conjugator: &x * from,
        })
    }

    /// Fails unless the current word is the identity.
    pub fn finish(self) -> Result<IdentityProof> {
        if !self.current.is_identity() {
            return Err(Error::Derivation(format!(
                "proof ends at {} instead of the identity",
                self.current.to_ascii()
            )));
        }
        Ok(IdentityProof {
            start: self.start,
            steps: self.steps,
        })
    }
}
