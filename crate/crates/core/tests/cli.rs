mod common;

use std::process::{Command, Output};

use common::{document_text, shipped_certificates, shipped_path};
use gentorsion::document::CertificateDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gentorsion"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn derive_reproduces_shipped_files_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &[&str]); 3] = [
        ("whitehead-5-1", &["derive", "whitehead", "--m", "5", "--n", "1"]),
        ("weeks", &["derive", "weeks"]),
        ("pretzel-4", &["derive", "pretzel", "--n", "4"]),
    ];
    for (name, args) in cases {
        let out = dir.path().join(format!("{name}.json"));
        let mut args = args.to_vec();
        args.extend(["--out", out.to_str().unwrap()]);
        assert!(run(&args).status.success());
        assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(shipped_path(name)).unwrap(), "{name}");
    }
}

#[test]
fn serialization_is_byte_stable() {
    for s in shipped_certificates() {
        let text = document_text(&s);
        let reparsed = CertificateDocument::from_json(&text).unwrap();
        let again = CertificateDocument::from_certificate(&reparsed.to_certificate().unwrap(), reparsed.metadata.clone())
            .unwrap()
            .to_json();
        assert_eq!(again, text, "{}", s.name);
    }
}

#[test]
fn verify_accepts_shipped_files() {
    for s in shipped_certificates() {
        let o = run(&["verify", shipped_path(s.name).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", s.name);
        assert!(stdout(&o).trim_end().ends_with("VALID"));
    }
}

#[test]
fn verify_rejects_a_mutated_file() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = CertificateDocument::from_json(&std::fs::read_to_string(shipped_path("weeks")).unwrap()).unwrap();
    doc.conjugators[0].push(2);
    let path = dir.path().join("mutated.json");
    std::fs::write(&path, doc.to_json()).unwrap();
    let o = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("start-agreement"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("start-agreement"));
}

#[test]
fn verify_rejects_unreadable_input_as_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let body = std::fs::read_to_string(shipped_path("pretzel-4")).unwrap();
    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, &body[..body.len() / 2]).unwrap();
    assert_eq!(run(&["verify", truncated.to_str().unwrap()]).status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["verify", missing.to_str().unwrap()]).status.code(), Some(2));

    let renamed = dir.path().join("renamed.json");
    std::fs::write(&renamed, body.replace("\"conjugators\"", "\"conjugates\"")).unwrap();
    assert_eq!(run(&["verify", renamed.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn search_failures_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.json");
    let o = run(&["derive", "pretzel", "--n", "3", "--max-degree", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!out.exists());
    let o = run(&["search-quotient", "pretzel", "--n", "3", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn homology_and_decompose_print_results() {
    assert_eq!(stdout(&run(&["homology", "whitehead", "--m", "7", "--n", "2"])).trim(), "Z + Z/7");
    assert_eq!(stdout(&run(&["homology", "pretzel", "--n", "4"])).trim(), "Z + Z");
    let o = run(&["decompose", "bAbbbAb"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("product of 5 conjugate(s)"));
    assert_eq!(run(&["decompose", "ab"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["derive", "whitehead", "--m", "5"]).status.code(), Some(2));
    assert_eq!(run(&["derive", "whitehead", "--m", "4", "--n", "2", "--out", "x.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
