//! Certificate generators for the Whitehead-filling and pretzel families.
//!
//! Each generator builds its identity proof by following the hand
//! derivation step by step rather than by search, so proofs are short and
//! deterministic. The verifier in [`crate::certify`] re-checks everything.
//!
//! Whitehead fillings `W(m/n)`, `m ≥ 2n`: with `λ = b a b̄ ā b̄ a b ā` and
//! `U = a^{b̄ā} a^b`, the Wirtinger relation gives `λ = U ā²`, so the filling
//! relator `λⁿ aᵐ` becomes `(U ā²)ⁿ aᵐ = U U^{a²} ⋯ U^{a^{2(n-1)}} a^{m-2n}`,
//! a product of `m` conjugates of `a`.
//!
//! Pretzel links `P(-2, 3, 2n)`, `n ≥ 1`: with `U = a b̄ⁿ⁻¹ a` the relation
//! reads `U a^b = a^{b̄} U`, hence `[a, w] = 1` for `w = b ā bⁿ⁻¹ ā b`, and
//! `[a, w]` expands into `n + 1` conjugates of `[a, b]`.

use crate::abelian::Abelianization;
use crate::certify::{GtCertificate, IdentityProof, NontrivialityWitness, ProofBuilder};
use crate::error::{Error, Result};
use crate::presentations::{
    double_filled, pretzel, pretzel_relation, whitehead_filled, Presentation, Slope,
    FIRST_FILLING, PRETZEL, WIRTINGER,
};
use crate::quotients::find_quotient_witness;
use crate::words::{commutator, product, Generator, Sign, Word};

/// Default bound for the permutation-quotient search.
pub const DEFAULT_MAX_DEGREE: usize = 6;

/// Smallest degree at which the search finds a witness for `[a, b]` in the
/// pretzel group, for every `n` in `1..=8`. Found by exhaustive search.
pub const PRETZEL_WITNESS_DEGREE: usize = 3;

fn a() -> Generator {
    Generator::new("a")
}

fn b() -> Generator {
    Generator::new("b")
}

fn literal(text: &str) -> Word {
    Word::parse(text).expect("literal words are well formed")
}

/// A product of conjugates of one base element, with its expansion cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateProduct {
    base: Word,
    conjugators: Vec<Word>,
    expansion: Word,
}

impl ConjugateProduct {
    pub fn new(base: Word, conjugators: Vec<Word>) -> Self {
        let factors: Vec<Word> = conjugators.iter().map(|c| base.conjugate(c)).collect();
        let expansion = product(&factors);
        ConjugateProduct {
            base,
            conjugators,
            expansion,
        }
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn conjugators(&self) -> &[Word] {
        &self.conjugators
    }

    pub fn expansion(&self) -> &Word {
        &self.expansion
    }

    pub fn len(&self) -> usize {
        self.conjugators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conjugators.is_empty()
    }
}

fn require_denominator(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::Hypothesis(format!("requires n ≥ 1 (got n = {n})")));
    }
    Ok(())
}

fn require_m_at_least_2n(m: i64, n: i64) -> Result<()> {
    require_denominator(n)?;
    if m < 2 * n {
        return Err(Error::Hypothesis(format!("requires m ≥ 2n (got m = {m}, n = {n})")));
    }
    Ok(())
}

/// `(b a b̄ ā b̄ a b ā)ⁿ · aᵐ`, the filling relator with the longitude
/// written out letter by letter.
pub fn longitude_power(m: i64, n: i64) -> Result<Word> {
    require_denominator(n)?;
    Ok(&literal("baBABabA").pow(n) * &Word::gen_pow(&a(), m))
}

/// `(b̄^{ab āb̄} · b)ⁿ · aᵐ`, the same relator with the longitude written as
/// a conjugate. Freely equal to [`longitude_power`].
pub fn longitude_power_conjugate_form(m: i64, n: i64) -> Result<Word> {
    require_denominator(n)?;
    let lon = &literal("B").conjugate(&literal("abAB")) * &literal("b");
    Ok(&lon.pow(n) * &Word::gen_pow(&a(), m))
}

/// `U = a^{b̄ā} a^b`.
pub fn u_word() -> Word {
    let a = Word::gen(&a());
    &a.conjugate(&literal("BA")) * &a.conjugate(&literal("b"))
}

/// `(a^{b̄ā} a^b ā²)ⁿ · aᵐ`: the filling relator after substituting the
/// Wirtinger consequence `λ = U ā²` into every longitude block.
pub fn block_power(m: i64, n: i64) -> Result<Word> {
    require_denominator(n)?;
    let block = &u_word() * &Word::gen_pow(&a(), -2);
    Ok(&block.pow(n) * &Word::gen_pow(&a(), m))
}

/// `U U^{a²} ⋯ U^{a^{2(n-1)}} a^{m-2n}` as `m` conjugates of `a`:
/// `[b̄ā, b, b̄ā·a², b·a², …, b̄ā·a^{2(n-1)}, b·a^{2(n-1)}, ε, …, ε]`.
pub fn telescoped_conjugates(m: i64, n: i64) -> Result<ConjugateProduct> {
    require_m_at_least_2n(m, n)?;
    let mut conjugators = Vec::with_capacity(m as usize);
    for j in 0..n {
        let shift = Word::gen_pow(&a(), 2 * j);
        conjugators.push(&literal("BA") * &shift);
        conjugators.push(&literal("b") * &shift);
    }
    conjugators.extend(std::iter::repeat_n(Word::identity(), (m - 2 * n) as usize));
    Ok(ConjugateProduct::new(Word::gen(&a()), conjugators))
}

/// Identity proof for the telescoped product over a Whitehead filling.
///
/// Step `k` (for `k < n`) multiplies on the left by `λᵏ (λ (Uā²)⁻¹) λ⁻ᵏ`,
/// a conjugate of the Wirtinger relator, turning one `Uā²` block back into
/// a longitude. The word is then the filling relator, killed by its inverse.
fn whitehead_identity_proof(p: &Presentation, start: Word, n: i64) -> Result<IdentityProof> {
    let lambda = literal("baBABabA");
    let block = &u_word() * &Word::gen_pow(&a(), -2);
    let exchange = &lambda * &block.inverse();
    let mut builder = ProofBuilder::new(p, start);
    for k in 0..n {
        let target = exchange.conjugate(&lambda.pow(-k));
        builder.left_multiply(&target, WIRTINGER)?;
    }
    let filling = p
        .relator(FIRST_FILLING)
        .ok_or_else(|| Error::Derivation("presentation has no filling relator".into()))?;
    if builder.current() != filling {
        return Err(Error::Derivation(format!(
            "expected the filling relator after {n} exchanges, got {}",
            builder.current().to_ascii()
        )));
    }
    builder.left_multiply(&filling.inverse(), FIRST_FILLING)?;
    builder.finish()
}

fn abelian_witness(p: &Presentation, element: &Word) -> Result<NontrivialityWitness> {
    let ab = Abelianization::new(p);
    let image = ab.image(element)?;
    if image.is_zero() {
        return Err(Error::Hypothesis(format!(
            "{} vanishes in H₁ = {}, so abelianization cannot witness it",
            element.to_ascii(),
            ab.group()
        )));
    }
    Ok(NontrivialityWitness::Abelian {
        image,
        group: ab.group().clone(),
    })
}

/// Certifies that `a` is a generalized torsion element of `π₁ W(m/n)`.
pub fn whitehead_certificate(m: i64, n: i64) -> Result<GtCertificate> {
    require_m_at_least_2n(m, n)?;
    let presentation = whitehead_filled(Slope::new(m, n)?)?;
    let conjugates = telescoped_conjugates(m, n)?;
    let triviality = whitehead_identity_proof(&presentation, conjugates.expansion().clone(), n)?;
    let nontriviality = abelian_witness(&presentation, conjugates.base())?;
    Ok(GtCertificate {
        presentation,
        element: conjugates.base().clone(),
        conjugators: conjugates.conjugators().to_vec(),
        triviality,
        nontriviality,
    })
}

/// Certifies that `a` stays a generalized torsion element after also
/// filling the second cusp along `second`. The identity proof is the one
/// for `W(m/n)`; only the witness is recomputed.
pub fn filled_quotient_certificate(m: i64, n: i64, second: Slope) -> Result<GtCertificate> {
    let base = whitehead_certificate(m, n)?;
    let presentation = double_filled(Slope::new(m, n)?, second)?;
    let nontriviality = abelian_witness(&presentation, &base.element)?;
    Ok(GtCertificate {
        presentation,
        nontriviality,
        ..base
    })
}

/// Writes `[a, w]`, for `w` a word in `ā` and `b` only, as a product of
/// conjugates of `[a, b]` and returns the conjugators.
///
/// Unrolling `[a, uv] = [a, v]·[a, u]^v` from the right gives one factor per
/// `b` in `w`, conjugated by the part of `w` after it, last letter first;
/// the `ā` letters contribute `[a, ā] = 1`.
pub fn decompose_commutator(w: &Word) -> Result<Vec<Word>> {
    let (a, b) = (a(), b());
    if let Some(bad) = w
        .letters()
        .iter()
        .find(|l| !((l.gen == a && l.sign == Sign::Neg) || (l.gen == b && l.sign == Sign::Pos)))
    {
        return Err(Error::Hypothesis(format!(
            "letter {bad} not allowed: the word may contain only ā and b"
        )));
    }
    let letters = w.letters();
    Ok((0..letters.len())
        .rev()
        .filter(|&i| letters[i].gen == b)
        .map(|i| Word::reduce(letters[i + 1..].iter().cloned()))
        .collect())
}

fn require_pretzel_parameter(n: i64) -> Result<()> {
    match n {
        0 => Err(Error::Hypothesis(
            "requires n ≥ 1: n = 0 is the connected sum of the trefoil and the Hopf link, \
             which is outside this construction"
                .into(),
        )),
        n if n < 0 => Err(Error::Hypothesis(format!(
            "requires n ≥ 1: for n < 0 (got n = {n}) the commutator argument does not apply"
        ))),
        _ => Ok(()),
    }
}

/// `w = b ā bⁿ⁻¹ ā b`, the word with `[a, w] = 1` in the pretzel group.
pub fn pretzel_relation_word(n: i64) -> Result<Word> {
    require_pretzel_parameter(n)?;
    Ok(product([
        &literal("bA"),
        &Word::gen_pow(&b(), n - 1),
        &literal("Ab"),
    ]))
}

/// Certifies that `[a, b]` is a generalized torsion element of the link
/// group of `P(-2, 3, 2n)`, `n ≥ 1`.
///
/// The product of conjugates freely equals `[a, w] = ā b̄ (U a^b) Ū b`; one
/// rewrite of `U a^b` into `a^{b̄} U` collapses it to the identity.
/// Non-triviality of `[a, b]` comes from a permutation quotient found by
/// search up to `max_degree`.
pub fn pretzel_certificate(n: i64, max_degree: usize) -> Result<GtCertificate> {
    require_pretzel_parameter(n)?;
    let presentation = pretzel(n)?;
    let element = commutator(&Word::gen(&a()), &Word::gen(&b()));
    let w = pretzel_relation_word(n)?;
    let conjugates = ConjugateProduct::new(element.clone(), decompose_commutator(&w)?);

    let (lhs, rhs) = pretzel_relation(n);
    let start = conjugates.expansion().clone();
    let position = start
        .letters()
        .windows(lhs.len())
        .position(|window| window == lhs.letters())
        .ok_or_else(|| Error::Derivation("U·a^b does not occur in [a, w]".into()))?;
    let mut builder = ProofBuilder::new(&presentation, start);
    builder.rewrite(position, &lhs, &rhs, PRETZEL)?;
    let triviality = builder.finish()?;

    let witness = find_quotient_witness(&presentation, &element, max_degree)?
        .ok_or(Error::SearchExhausted { max_degree })?;

    Ok(GtCertificate {
        presentation,
        element,
        conjugators: conjugates.conjugators().to_vec(),
        triviality,
        nontriviality: NontrivialityWitness::Quotient(witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_certificate;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn longitude_power_examples() {
        assert_eq!(longitude_power(5, 1).unwrap(), w("baBABabaaaa"));
        assert_eq!(longitude_power(0, 1).unwrap(), w("baBABabA"));
        for (m, n) in [(5, 1), (2, 1), (4, 2), (7, 3)] {
            assert_eq!(
                longitude_power(m, n).unwrap(),
                longitude_power_conjugate_form(m, n).unwrap()
            );
        }
        assert!(longitude_power(5, 0).is_err());
    }

    #[test]
    fn telescoped_examples() {
        let c = telescoped_conjugates(5, 1).unwrap();
        let expected: Vec<Word> = ["BA", "b", "", "", ""].iter().map(|s| w(s)).collect();
        assert_eq!(c.conjugators(), expected.as_slice());

        let c = telescoped_conjugates(2, 1).unwrap();
        assert_eq!(c.conjugators(), &[w("BA"), w("b")]);

        let c = telescoped_conjugates(7, 3).unwrap();
        let expected: Vec<Word> = ["BA", "b", "Ba", "baa", "Baaa", "baaaa", ""]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(c.conjugators(), expected.as_slice());
        assert_eq!(c.expansion(), &block_power(7, 3).unwrap());

        assert!(matches!(telescoped_conjugates(3, 2), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn u_word_expands() {
        assert_eq!(u_word(), w("abaBABab"));
    }

    #[test]
    fn whitehead_proof_has_one_step_per_block_plus_filling() {
        let c = whitehead_certificate(7, 3).unwrap();
        assert_eq!(c.triviality.steps.len(), 4);
        assert_eq!(c.conjugators.len(), 7);
        assert!(verify_certificate(&c).is_valid());
    }

    #[test]
    fn whitehead_certificate_rejects_bad_parameters() {
        assert!(matches!(whitehead_certificate(3, 2), Err(Error::Hypothesis(_))));
        assert!(matches!(whitehead_certificate(4, 2), Err(Error::InvalidSlope { .. })));
        assert!(matches!(whitehead_certificate(0, 1), Err(Error::Hypothesis(_))));
        assert!(matches!(whitehead_certificate(5, 0), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn weeks_and_other_second_fillings() {
        for second in [Slope::new(5, 2), Slope::new(1, 0), Slope::new(1, 1), Slope::new(-3, 7)] {
            let c = filled_quotient_certificate(5, 1, second.unwrap()).unwrap();
            assert_eq!(c.presentation.relators().len(), 3);
            assert!(verify_certificate(&c).is_valid());
        }
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompose_commutator(&w("b")).unwrap(), vec![w("")]);
        assert_eq!(decompose_commutator(&w("Ab")).unwrap(), vec![w("")]);
        assert_eq!(decompose_commutator(&w("bAAb")).unwrap(), vec![w(""), w("AAb")]);
        assert!(decompose_commutator(&w("ab")).is_err());
        assert!(decompose_commutator(&w("B")).is_err());
        assert!(decompose_commutator(&Word::identity()).unwrap().is_empty());
    }

    #[test]
    fn pretzel_relation_word_examples() {
        assert_eq!(pretzel_relation_word(1).unwrap(), w("bAAb"));
        assert_eq!(pretzel_relation_word(4).unwrap(), w("bAbbbAb"));
        assert!(pretzel_relation_word(0).is_err());
        assert!(pretzel_relation_word(-2).is_err());
        // b²·(Ū)^b with U = a b̄ⁿ⁻¹ a
        for n in 1..=8 {
            let u = product([&w("a"), &Word::gen_pow(&b(), -(n - 1)), &w("a")]);
            let alt = &w("bb") * &u.inverse().conjugate(&w("b"));
            assert_eq!(pretzel_relation_word(n).unwrap(), alt);
        }
    }

    #[test]
    fn pretzel_proof_is_a_single_rewrite() {
        let c = pretzel_certificate(4, DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(c.triviality.steps.len(), 1);
        assert_eq!(c.conjugators.len(), 5);
        assert!(verify_certificate(&c).is_valid());
    }

    #[test]
    fn pretzel_search_failure_is_reported() {
        assert_eq!(
            pretzel_certificate(2, 2),
            Err(Error::SearchExhausted { max_degree: 2 })
        );
    }

    #[test]
    fn pretzel_witness_degree_is_minimal() {
        for n in 1..=8 {
            let c = pretzel_certificate(n, DEFAULT_MAX_DEGREE).unwrap();
            match &c.nontriviality {
                NontrivialityWitness::Quotient(q) => assert_eq!(q.degree, PRETZEL_WITNESS_DEGREE),
                other => panic!("unexpected witness {other:?}"),
            }
        }
    }
}
