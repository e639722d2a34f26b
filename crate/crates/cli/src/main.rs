//! `linkbound`: signatures, Alexander polynomials and 4-genus bounds from
//! braid words or Seifert matrices.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use linkbound::bounds::{assemble_report, infection_transfer, BandCertificate, BoundReport, InfectionDecl};
use linkbound::catalog::{invariants, verify, Catalog};
use linkbound::factor::DEFAULT_DEGREE_CAP;
use linkbound::input::parse_input;
use linkbound::oracle::float_oracle;
use linkbound::seifert::SeifertData;
use linkbound::signature::signature_function;
use linkbound::Error;
use serde::Serialize;

const EXIT_PARSE: u8 = 2;
const EXIT_INVARIANT: u8 = 3;
const EXIT_INCONSISTENT: u8 = 4;
const EXIT_VERIFY: u8 = 5;

#[derive(Parser)]
#[command(
    name = "linkbound",
    version,
    about = "Levine-Tristram signatures and 4-genus bounds for knots and links"
)]
struct Cli {
    /// Spaces per indentation level in JSON output; 0 prints compact JSON.
    #[arg(long, global = true, default_value_t = 2)]
    json_indent: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// JSON input file (`-` reads stdin).
    #[arg(long, short)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, nullity, genus and the full signature function.
    Invariants(InputArg),
    /// Lower and upper bounds on the 4-genus.
    Bound {
        #[command(flatten)]
        input: InputArg,
        /// Band-move certificate `b,u`: b bands give a u-component unlink.
        #[arg(long = "band-cert", value_name = "B,U", value_parser = parse_band_cert)]
        band_certs: Vec<BandCertificate>,
        /// Largest degree the Fox-Milnor factorization will attempt.
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
    /// Carry a bound report across an infection by a string link.
    Infect {
        /// Bound report produced by `bound`.
        #[arg(long)]
        base: PathBuf,
        /// Infection declaration.
        #[arg(long)]
        decl: PathBuf,
    },
    /// Signature function as CSV rows for plotting.
    SignatureCsv {
        #[command(flatten)]
        input: InputArg,
        /// Also emit this many float-oracle sample rows.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Regression-check the catalog and the standard examples.
    Verify {
        /// Catalog file; the built-in catalog is used when absent.
        #[arg(long, env = "LINKBOUND_CATALOG")]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
}

fn parse_band_cert(s: &str) -> Result<BandCertificate, String> {
    let (b, u) = s.split_once(',').ok_or_else(|| format!("expected `b,u`, got {s:?}"))?;
    let bands = b
        .trim()
        .parse()
        .map_err(|_| format!("band count {b:?} is not a nonnegative integer"))?;
    let resulting_unlink_components = u
        .trim()
        .parse()
        .map_err(|_| format!("component count {u:?} is not a nonnegative integer"))?;
    Ok(BandCertificate {
        bands,
        resulting_unlink_components,
    })
}

enum Failure {
    Io(PathBuf, io::Error),
    Core(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(..) => EXIT_PARSE,
            Failure::Verify => EXIT_VERIFY,
            Failure::Core(e) => match e {
                Error::Parse(_)
                | Error::Json { .. }
                | Error::BraidIndex { .. }
                | Error::TorusParameters(..)
                | Error::NoStrands => EXIT_PARSE,
                Error::InconsistentBounds { .. } => EXIT_INCONSISTENT,
                _ => EXIT_INVARIANT,
            },
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(path.into(), e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(path.into(), e))
}

fn load_input(path: &Path) -> Result<SeifertData, Failure> {
    Ok(parse_input(&read_text(path)?)?.seifert_data()?)
}

/// Serialize with sorted keys: `serde_json::Value` keeps objects in a BTreeMap.
fn to_json<T: Serialize>(value: &T, indent: usize) -> String {
    let value = serde_json::to_value(value).expect("report types serialize");
    if indent == 0 {
        return value.to_string();
    }
    let pad = vec![b' '; indent];
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, serde_json::ser::PrettyFormatter::with_indent(&pad));
    value.serialize(&mut ser).expect("writing to a Vec cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        x.to_string()
    }
}

fn signature_csv(s: &SeifertData, samples: usize) -> Result<String, Failure> {
    let f = signature_function(s)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut rows = vec![["x_lo", "x_hi", "sigma", "nullity", "source"].map(String::from)];
    for (lo, hi, sigma, nullity) in f.csv_rows() {
        rows.push([
            fmt_num(lo),
            fmt_num(hi),
            fmt_num(sigma),
            nullity.to_string(),
            "exact".into(),
        ]);
    }
    for k in 0..samples {
        let x = -2.0 + 4.0 * (k as f64 + 0.5) / samples as f64;
        let (sigma, nullity) = float_oracle(s.matrix(), (x / 2.0).acos());
        rows.push([
            fmt_num(x),
            fmt_num(x),
            sigma.to_string(),
            nullity.to_string(),
            "oracle".into(),
        ]);
    }
    for r in &rows {
        w.write_record(r).expect("writing to a Vec cannot fail");
    }
    let bytes = w.into_inner().expect("flushing to a Vec cannot fail");
    Ok(String::from_utf8(bytes).expect("CSV of ASCII fields"))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let indent = cli.json_indent;
    match cli.command {
        Command::Invariants(input) => {
            let s = load_input(&input.input)?;
            Ok(to_json(&invariants(&s)?, indent))
        }
        Command::Bound {
            input,
            band_certs,
            degree_cap,
        } => {
            let s = load_input(&input.input)?;
            Ok(to_json(&assemble_report(&s, &band_certs, degree_cap)?, indent))
        }
        Command::Infect { base, decl } => {
            let base: BoundReport = serde_json::from_str(&read_text(&base)?).map_err(Error::from)?;
            let decl: InfectionDecl = serde_json::from_str(&read_text(&decl)?).map_err(Error::from)?;
            Ok(to_json(&infection_transfer(&base, &decl)?, indent))
        }
        Command::SignatureCsv { input, samples } => signature_csv(&load_input(&input.input)?, samples),
        Command::Verify { catalog, degree_cap } => {
            let catalog = match catalog {
                Some(path) => Catalog::parse(&read_text(&path)?)?,
                None => Catalog::builtin(),
            };
            let report = verify(&catalog, degree_cap);
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            println!("{report}");
            if report.passed() {
                Ok(String::new())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if !out.is_empty() {
                let _ = stdout.write_all(out.as_bytes());
                if !out.ends_with('\n') {
                    let _ = stdout.write_all(b"\n");
                }
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Io(path, e) => eprintln!("error: cannot read {}: {e}", path.display()),
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Verify => eprintln!("error: verification failed"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
