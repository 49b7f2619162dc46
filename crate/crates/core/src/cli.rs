//! Command-line front end.
//!
//! Exit codes: 0 success, 1 certificate rejected, 2 usage, parse or
//! hypothesis error, 3 quotient search exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::abelian::homology;
use crate::certify::{verify_certificate, GtCertificate};
use crate::derive::{
    decompose_commutator, filled_quotient_certificate, pretzel_certificate, whitehead_certificate,
    DEFAULT_MAX_DEGREE,
};
use crate::document::{CertificateDocument, Metadata};
use crate::error::Error;
use crate::presentations::{double_filled, pretzel, whitehead_filled, Presentation, Slope};
use crate::quotients::find_quotient_witness;
use crate::words::{commutator, product, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SEARCH: i32 = 3;

/// Largest |n| accepted for the pretzel family.
pub const PRETZEL_CAP: i64 = 64;

#[derive(Parser, Debug)]
#[command(name = "gentorsion", version, about = "Generalized torsion certificates for 3-manifold groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a certificate and write it to --out.
    Derive {
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a certificate file.
    Verify { path: PathBuf },
    /// Print H₁ of a group in the family.
    Homology {
        family: Family,
        #[command(flatten)]
        params: Params,
    },
    /// Expand [a, w] into conjugates of [a, b] for a word w in ā and b.
    Decompose { word: String },
    /// Search for a permutation quotient in which an element survives.
    SearchQuotient {
        family: Family,
        #[command(flatten)]
        params: Params,
        /// Element in text syntax (uppercase = inverse); defaults to [a, b].
        #[arg(long, default_value = "ABab")]
        element: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// One filling W(m/n) of the Whitehead link exterior.
    Whitehead,
    /// Both cusps filled: W(m/n) then r (defaults give the Weeks manifold).
    Weeks,
    /// The pretzel link P(-2, 3, 2n).
    Pretzel,
}

#[derive(Args, Debug)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    /// Second filling slope as p/q.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
}

/// Resolved family parameters.
struct Resolved {
    family: Family,
    m: Option<i64>,
    n: Option<i64>,
    r: Option<Slope>,
}

impl Resolved {
    fn new(family: Family, params: &Params) -> Result<Self, Error> {
        let missing = |flag: &str| Error::Hypothesis(format!("--{flag} is required for this family"));
        match family {
            Family::Whitehead => Ok(Resolved {
                family,
                m: Some(params.m.ok_or_else(|| missing("m"))?),
                n: Some(params.n.unwrap_or(1)),
                r: None,
            }),
            Family::Weeks => Ok(Resolved {
                family,
                m: Some(params.m.unwrap_or(5)),
                n: Some(params.n.unwrap_or(1)),
                r: Some(Slope::parse(params.r.as_deref().unwrap_or("5/2"))?),
            }),
            Family::Pretzel => {
                let n = params.n.ok_or_else(|| missing("n"))?;
                if n.abs() > PRETZEL_CAP {
                    return Err(Error::Hypothesis(format!("requires |n| ≤ {PRETZEL_CAP} (got n = {n})")));
                }
                Ok(Resolved {
                    family,
                    m: None,
                    n: Some(n),
                    r: None,
                })
            }
        }
    }

    fn first_slope(&self) -> Result<Slope, Error> {
        Slope::new(self.m.unwrap_or_default(), self.n.unwrap_or_default())
    }

    fn presentation(&self) -> Result<Presentation, Error> {
        match self.family {
            Family::Whitehead => whitehead_filled(self.first_slope()?),
            Family::Weeks => double_filled(self.first_slope()?, self.r.expect("resolved")),
            Family::Pretzel => pretzel(self.n.expect("resolved")),
        }
    }

    fn label(&self) -> String {
        match self.family {
            Family::Whitehead => format!("W({}/{})", self.m.unwrap(), self.n.unwrap()),
            Family::Weeks => format!(
                "W({}/{})({})",
                self.m.unwrap(),
                self.n.unwrap(),
                self.r.unwrap()
            ),
            Family::Pretzel => format!("P(-2, 3, {})", 2 * self.n.unwrap()),
        }
    }

    fn metadata(&self) -> Metadata {
        let name = match self.family {
            Family::Whitehead => "whitehead",
            Family::Weeks => "weeks",
            Family::Pretzel => "pretzel",
        };
        Metadata::new(name, self.m, self.n, self.r.map(|r| r.to_string()))
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SearchExhausted { .. } => EXIT_SEARCH,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Derive {
            family,
            params,
            max_degree,
            out: path,
        } => cmd_derive(family, &params, max_degree, &path, out),
        Command::Verify { path } => return cmd_verify(&path, out, err),
        Command::Homology { family, params } => cmd_homology(family, &params, out),
        Command::Decompose { word } => cmd_decompose(&word, out),
        Command::SearchQuotient {
            family,
            params,
            element,
            max_degree,
        } => cmd_search_quotient(family, &params, &element, max_degree, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn io_error(e: std::io::Error) -> Error {
    Error::Document(e.to_string())
}

fn write_summary(out: &mut dyn Write, label: &str, c: &GtCertificate) -> std::io::Result<()> {
    writeln!(out, "group:      {label} = {}", c.presentation)?;
    writeln!(out, "element:    {}", c.element)?;
    writeln!(out, "conjugates: k = {}", c.conjugators.len())?;
    writeln!(out, "proof:      {} insertion(s)", c.triviality.steps.len())?;
    let witness = match &c.nontriviality {
        crate::certify::NontrivialityWitness::Abelian { group, .. } => format!("abelian (H₁ = {group})"),
        crate::certify::NontrivialityWitness::Quotient(q) => format!("quotient (degree {})", q.degree),
    };
    writeln!(out, "witness:    {witness}")
}

fn cmd_derive(
    family: Family,
    params: &Params,
    max_degree: usize,
    path: &PathBuf,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    let resolved = Resolved::new(family, params)?;
    let certificate = match family {
        Family::Whitehead => whitehead_certificate(resolved.m.unwrap(), resolved.n.unwrap())?,
        Family::Weeks => filled_quotient_certificate(
            resolved.m.unwrap(),
            resolved.n.unwrap(),
            resolved.r.unwrap(),
        )?,
        Family::Pretzel => pretzel_certificate(resolved.n.unwrap(), max_degree)?,
    };
    let report = verify_certificate(&certificate);
    let document = CertificateDocument::from_certificate(&certificate, resolved.metadata())?;
    std::fs::write(path, document.to_json()).map_err(io_error)?;
    write_summary(out, &resolved.label(), &certificate).map_err(io_error)?;
    writeln!(out, "self-check: {}", if report.is_valid() { "VALID" } else { "INVALID" }).map_err(io_error)?;
    writeln!(out, "wrote {}", path.display()).map_err(io_error)?;
    Ok(if report.is_valid() { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_verify(path: &PathBuf, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed = std::fs::read_to_string(path)
        .map_err(io_error)
        .and_then(|text| CertificateDocument::from_json(&text))
        .and_then(|doc| doc.to_certificate());
    let certificate = match parsed {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let report = verify_certificate(&certificate);
    let _ = writeln!(out, "{}", path.display());
    let _ = writeln!(out, "{report}");
    if report.is_valid() {
        EXIT_OK
    } else {
        let failing: Vec<String> = report.failing_checks().iter().map(|c| c.to_string()).collect();
        let _ = writeln!(err, "rejected: {}", failing.join(", "));
        EXIT_INVALID
    }
}

fn cmd_homology(family: Family, params: &Params, out: &mut dyn Write) -> Result<i32, Error> {
    let resolved = Resolved::new(family, params)?;
    let group = homology(&resolved.presentation()?);
    writeln!(out, "{group}").map_err(io_error)?;
    Ok(EXIT_OK)
}

fn cmd_decompose(text: &str, out: &mut dyn Write) -> Result<i32, Error> {
    let w = Word::parse(text)?;
    let conjugators = decompose_commutator(&w)?;
    let (a, b) = (Word::parse("a")?, Word::parse("b")?);
    let base = commutator(&a, &b);
    let factors: Vec<Word> = conjugators.iter().map(|c| base.conjugate(c)).collect();
    let lhs = commutator(&a, &w);
    let rhs = product(&factors);
    let write = |out: &mut dyn Write| -> std::io::Result<()> {
        writeln!(out, "w = {w}")?;
        writeln!(out, "[a, w] = product of {} conjugate(s) of [a, b]:", conjugators.len())?;
        for c in &conjugators {
            writeln!(out, "  [a, b]^({c})")?;
        }
        writeln!(
            out,
            "free reduction: [a, w] = {} {} product",
            lhs,
            if lhs == rhs { "==" } else { "!=" }
        )
    };
    write(out).map_err(io_error)?;
    Ok(if lhs == rhs { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_search_quotient(
    family: Family,
    params: &Params,
    element: &str,
    max_degree: usize,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    if max_degree < 2 {
        return Err(Error::Hypothesis("requires --max-degree ≥ 2".into()));
    }
    let resolved = Resolved::new(family, params)?;
    let p = resolved.presentation()?;
    let element = Word::parse(element)?;
    let witness = find_quotient_witness(&p, &element, max_degree)?
        .ok_or(Error::SearchExhausted { max_degree })?;
    writeln!(out, "degree {}", witness.degree).map_err(io_error)?;
    for (g, perm) in &witness.images {
        writeln!(out, "  {g} -> {:?}", perm.to_one_based()).map_err(io_error)?;
    }
    Ok(EXIT_OK)
}
