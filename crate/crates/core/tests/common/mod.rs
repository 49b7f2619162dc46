#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use gentorsion::certify::{Check, GtCertificate, NontrivialityWitness};
use gentorsion::derive::{
    filled_quotient_certificate, pretzel_certificate, whitehead_certificate, DEFAULT_MAX_DEGREE,
};
use gentorsion::document::{CertificateDocument, Metadata};
use gentorsion::presentations::{Presentation, Slope};
use gentorsion::quotients::Permutation;
use gentorsion::words::{Generator, Letter, Sign, Word};
use rand::Rng;

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn random_letters<R: Rng>(rng: &mut R, len: usize, gens: &[&str]) -> Vec<Letter> {
    (0..len)
        .map(|_| {
            let g = Generator::new(gens[rng.gen_range(0..gens.len())]);
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            Letter::new(g, sign)
        })
        .collect()
}

/// Free reduction by cancelling a randomly chosen adjacent inverse pair
/// until none is left.
pub fn reduce_in_random_order<R: Rng>(mut letters: Vec<Letter>, rng: &mut R) -> Vec<Letter> {
    loop {
        let pairs: Vec<usize> = (0..letters.len().saturating_sub(1))
            .filter(|&i| letters[i].cancels(&letters[i + 1]))
            .collect();
        if pairs.is_empty() {
            return letters;
        }
        let i = pairs[rng.gen_range(0..pairs.len())];
        letters.drain(i..i + 2);
    }
}

/// Words over {ā, b}.
pub fn random_abar_b_word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::reduce((0..len).map(|_| {
        if rng.gen_bool(0.5) {
            Letter::new(Generator::new("a"), Sign::Neg)
        } else {
            Letter::new(Generator::new("b"), Sign::Pos)
        }
    }))
}

/// Structure of `Z^g / rowspace(rows)` for a square non-singular integer
/// matrix, found by enumerating `(Z/N)^g` with `N = |det|`.
///
/// Returns the group order and, for each `k` dividing `N`, the number of
/// elements killed by `k`.
pub fn cokernel_by_enumeration(rows: &[Vec<i64>], det: i64) -> (u64, Vec<(i64, u64)>) {
    let g = rows.len();
    let n = det.abs();
    let size = (n as u64).pow(g as u32);
    let encode = |v: &[i64]| v.iter().fold(0u64, |acc, &x| acc * n as u64 + x.rem_euclid(n) as u64);
    let decode = |mut code: u64| {
        let mut v = vec![0i64; g];
        for x in v.iter_mut().rev() {
            *x = (code % n as u64) as i64;
            code /= n as u64;
        }
        v
    };
    // subgroup generated by the rows, mod N
    let mut sub: HashSet<u64> = HashSet::new();
    let zero = vec![0i64; g];
    sub.insert(encode(&zero));
    let mut queue = VecDeque::from([zero]);
    while let Some(v) = queue.pop_front() {
        for r in rows {
            let next: Vec<i64> = v.iter().zip(r).map(|(x, y)| (x + y).rem_euclid(n)).collect();
            if sub.insert(encode(&next)) {
                queue.push_back(next);
            }
        }
    }
    let order = size / sub.len() as u64;
    let divisors: Vec<i64> = (1..=n).filter(|k| n % k == 0).collect();
    let counts = divisors
        .into_iter()
        .map(|k| {
            let killed = (0..size)
                .filter(|&code| {
                    let v: Vec<i64> = decode(code).iter().map(|x| x * k).collect();
                    sub.contains(&encode(&v))
                })
                .count() as u64;
            (k, killed / sub.len() as u64)
        })
        .collect();
    (order, counts)
}

pub struct Shipped {
    pub name: &'static str,
    pub certificate: GtCertificate,
    pub metadata: Metadata,
}

pub fn shipped_certificates() -> Vec<Shipped> {
    vec![
        Shipped {
            name: "whitehead-5-1",
            certificate: whitehead_certificate(5, 1).unwrap(),
            metadata: Metadata::new("whitehead", Some(5), Some(1), None),
        },
        Shipped {
            name: "weeks",
            certificate: filled_quotient_certificate(5, 1, Slope::new(5, 2).unwrap()).unwrap(),
            metadata: Metadata::new("weeks", Some(5), Some(1), Some("5/2".into())),
        },
        Shipped {
            name: "pretzel-4",
            certificate: pretzel_certificate(4, DEFAULT_MAX_DEGREE).unwrap(),
            metadata: Metadata::new("pretzel", None, Some(4), None),
        },
    ]
}

pub fn shipped_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("certificates")
        .join(format!("{name}.json"))
}

pub fn document_text(s: &Shipped) -> String {
    CertificateDocument::from_certificate(&s.certificate, s.metadata.clone())
        .unwrap()
        .to_json()
}

pub struct Mutant {
    pub label: String,
    pub certificate: GtCertificate,
    /// The check that must be among the failures.
    pub expected: Check,
}

fn append(word: &Word, text: &str) -> Word {
    word * &w(text)
}

fn relabel(p: &Presentation, index: usize, relator: Word) -> Presentation {
    let mut relators = p.relators().to_vec();
    relators[index] = relator;
    Presentation::new(p.generators().to_vec(), relators).unwrap()
}

/// Single-field mutations of a certificate, each with the check expected to
/// catch it.
pub fn mutations(c: &GtCertificate) -> Vec<Mutant> {
    let mut out = Vec::new();
    let mut push = |label: String, certificate: GtCertificate, expected: Check| {
        out.push(Mutant {
            label,
            certificate,
            expected,
        })
    };

    for i in 0..c.conjugators.len() {
        let mut m = c.clone();
        m.conjugators[i] = append(&m.conjugators[i], "b");
        push(format!("conjugator {i} += b"), m, Check::StartAgreement);

        let mut m = c.clone();
        m.conjugators[i] = append(&m.conjugators[i], "B");
        push(format!("conjugator {i} += b̄"), m, Check::StartAgreement);

        let mut m = c.clone();
        m.conjugators.remove(i);
        push(format!("drop conjugator {i}"), m, Check::StartAgreement);
    }

    let mut m = c.clone();
    m.conjugators.push(Word::identity());
    push("extra conjugator".into(), m, Check::StartAgreement);

    let mut m = c.clone();
    m.conjugators.clear();
    push("no conjugators".into(), m, Check::NonEmptyProduct);

    let relator_count = c.presentation.relators().len();
    for j in 0..c.triviality.steps.len() {
        let mut m = c.clone();
        m.triviality.steps.remove(j);
        push(format!("drop step {j}"), m, Check::IdentityProof);

        if relator_count > 1 {
            let mut m = c.clone();
            let step = &mut m.triviality.steps[j];
            step.relator_index = (step.relator_index + 1) % relator_count;
            push(format!("step {j} next relator"), m, Check::IdentityProof);
        }

        let mut m = c.clone();
        m.triviality.steps[j].relator_index = relator_count;
        push(format!("step {j} relator out of range"), m, Check::IdentityProof);

        let mut m = c.clone();
        let step = &mut m.triviality.steps[j];
        step.sign = step.sign.flip();
        push(format!("step {j} sign flipped"), m, Check::IdentityProof);

        let mut m = c.clone();
        let step = &mut m.triviality.steps[j];
        step.conjugator = append(&step.conjugator, "b");
        push(format!("step {j} conjugator += b"), m, Check::IdentityProof);

        let mut m = c.clone();
        m.triviality.steps[j].position += 1;
        push(format!("step {j} position + 1"), m, Check::IdentityProof);
    }

    let mut m = c.clone();
    let last = m.triviality.steps.len() - 1;
    let dup = m.triviality.steps[last].clone();
    m.triviality.steps.push(dup);
    push("duplicate last step".into(), m, Check::IdentityProof);

    let mut m = c.clone();
    m.triviality.start = append(&m.triviality.start, "a");
    push("start += a".into(), m, Check::StartAgreement);

    let mut m = c.clone();
    m.element = append(&m.element, "b");
    push("element += b".into(), m, Check::StartAgreement);

    let mut m = c.clone();
    let r0 = m.presentation.relators()[0].clone();
    let shortened = Word::reduce(r0.letters()[..r0.len() - 1].iter().cloned());
    m.presentation = relabel(&m.presentation, 0, shortened);
    push("relator 0 truncated".into(), m, Check::IdentityProof);

    match &c.nontriviality {
        NontrivialityWitness::Abelian { image, group } => {
            for i in 0..image.torsion.len() {
                let mut m = c.clone();
                let mut image = image.clone();
                image.torsion[i] = (&image.torsion[i] + 1u32) % &group.torsion[i];
                m.nontriviality = NontrivialityWitness::Abelian {
                    image,
                    group: group.clone(),
                };
                push(format!("witness torsion coordinate {i} + 1"), m, Check::Witness);
            }
            for i in 0..image.free.len() {
                let mut m = c.clone();
                let mut image = image.clone();
                image.free[i] += 1u32;
                m.nontriviality = NontrivialityWitness::Abelian {
                    image,
                    group: group.clone(),
                };
                push(format!("witness free coordinate {i} + 1"), m, Check::Witness);
            }
            let mut m = c.clone();
            let mut bigger = group.clone();
            bigger.free_rank += 1;
            let mut padded = image.clone();
            padded.free.push(0.into());
            m.nontriviality = NontrivialityWitness::Abelian {
                image: padded,
                group: bigger,
            };
            push("witness group gains a Z".into(), m, Check::Witness);

            let mut m = c.clone();
            let mut zero = image.clone();
            zero.torsion.iter_mut().chain(zero.free.iter_mut()).for_each(|x| *x = 0.into());
            m.nontriviality = NontrivialityWitness::Abelian {
                image: zero,
                group: group.clone(),
            };
            push("witness image zeroed".into(), m, Check::Witness);
        }
        NontrivialityWitness::Quotient(q) => {
            for g in q.images.keys() {
                let mut m = c.clone();
                let mut q2 = q.clone();
                q2.images.insert(g.clone(), Permutation::identity(q.degree));
                m.nontriviality = NontrivialityWitness::Quotient(q2);
                push(format!("witness {g} -> identity"), m, Check::Witness);

                let mut m = c.clone();
                let mut q2 = q.clone();
                q2.images.remove(g);
                m.nontriviality = NontrivialityWitness::Quotient(q2);
                push(format!("witness drops {g}"), m, Check::Witness);
            }
            let names: Vec<Generator> = q.images.keys().cloned().collect();
            let mut m = c.clone();
            let mut q2 = q.clone();
            let first = q.images[&names[0]].clone();
            q2.images.insert(names[1].clone(), first);
            m.nontriviality = NontrivialityWitness::Quotient(q2);
            push("witness images equal".into(), m, Check::Witness);

            let mut m = c.clone();
            let mut q2 = q.clone();
            q2.degree += 1;
            m.nontriviality = NontrivialityWitness::Quotient(q2);
            push("witness degree + 1".into(), m, Check::Witness);

            let mut m = c.clone();
            let mut q2 = q.clone();
            for perm in q2.images.values_mut() {
                let mut images = perm.images().to_vec();
                images.push(images.len());
                *perm = Permutation::new(images).unwrap();
            }
            m.nontriviality = NontrivialityWitness::Quotient(q2);
            push("witness padded with a fixed point, degree unchanged".into(), m, Check::Witness);
        }
    }
    out
}

/// Sorted set of failing checks, for messages.
pub fn names(checks: &[Check]) -> BTreeSet<String> {
    checks.iter().map(|c| c.to_string()).collect()
}
