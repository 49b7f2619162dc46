// Writing a certificate to JSON, reading it back, and watching the
// verifier reject a tampered copy.

use gentorsion::certify::verify_certificate;
use gentorsion::derive::whitehead_certificate;
use gentorsion::document::{CertificateDocument, Metadata};

pub fn run_example() -> gentorsion::Result<()> {
    let c = whitehead_certificate(5, 2)?;
    let doc = CertificateDocument::from_certificate(&c, Metadata::new("whitehead", Some(5), Some(2), None))?;
    let text = doc.to_json();
    println!("{} bytes of JSON", text.len());

    let parsed = CertificateDocument::from_json(&text)?;
    assert_eq!(parsed.to_json(), text);
    let restored = parsed.to_certificate()?;
    assert_eq!(restored, c);

    let mut tampered = parsed.clone();
    tampered.proof.steps.pop();
    let report = verify_certificate(&tampered.to_certificate()?);
    println!("{report}");
    println!("failing: {:?}", report.failing_checks());
    assert!(!report.is_valid());
    Ok(())
}

fn main() -> gentorsion::Result<()> {
    run_example()
}
