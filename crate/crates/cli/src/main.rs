use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use upsilon_core::knots::builtin;
use upsilon_core::validate::HomologyReport;
use upsilon_core::{
    certify_right_veering, classify_tightness, dual, obstruct_concordance, ribbon_minimality_report, tau, tensor,
    validate, verify_homology, BifilteredComplex, Error, KnotRecord, PLFunction, Rational, Tightness, ValidationReport,
};

/// Exact Upsilon invariants and certificates for knot Floer complexes.
///
/// Inputs are builtin names (unknot, trefoil, trefoil-left, figure8,
/// torus:p,q, staircase:a,b,..., chen-cable:n) or JSON files. `-` reads stdin.
#[derive(Parser, Debug)]
#[command(name = "upsilon", version)]
struct Cli {
    /// Treat every input as a file path, even if it names a builtin.
    #[arg(long, global = true)]
    file: bool,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check gradings, d² = 0 and the ambient homology rank.
    Validate { input: String },
    /// Emit the complex of a builtin, or its Upsilon function if it has no complex.
    Build { name: String },
    /// Compute Upsilon as an exact PL function.
    Upsilon {
        input: String,
        /// Emit sampled CSV instead of JSON, e.g. `--csv step=1/10`.
        #[arg(long, value_name = "step=p/q")]
        csv: Option<String>,
    },
    /// Compute tau from the vertical complex.
    Tau { input: String },
    /// Tensor product (connected sum) of two complexes.
    Tensor { left: String, right: String },
    /// Dual complex (mirror knot).
    Dual { input: String },
    /// Try to certify right-veering monodromy from the slope of Upsilon.
    CertifyRv {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        genus: Option<i64>,
    },
    /// Classify the contact structure of a fibered knot as tight or overtwisted.
    ClassifyTight {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        genus: Option<i64>,
    },
    /// Look for a concordance obstruction between two knots.
    Obstruct { left: String, right: String },
    /// Ribbon-minimality report for a fibered knot.
    RibbonReport { input: String },
    /// Sample Upsilon on a grid (JSON pairs, or CSV with `--csv`).
    Sample {
        input: String,
        #[arg(long, default_value = "1/10", value_name = "p/q")]
        step: String,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Domain(Error),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownGenerator(_) => CliError::Input(e.to_string()),
            other => CliError::Domain(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

enum Input {
    Complex(BifilteredComplex),
    Function(PLFunction),
    Record(KnotRecord),
}

fn read_source(source: &str) -> CliResult<String> {
    let mut text = String::new();
    if source == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(source).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
    }
    Ok(text)
}

fn load(source: &str, force_file: bool) -> CliResult<Input> {
    if !force_file && source != "-" {
        if let Some(record) = builtin(source) {
            return Ok(Input::Record(record?));
        }
    }
    let text = read_source(source)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(Error::from)?;
    let has = |key: &str| value.get(key).is_some();
    let input = if has("generators") {
        Input::Complex(serde_json::from_value(value).map_err(Error::from)?)
    } else if has("breakpoints") {
        Input::Function(serde_json::from_value(value).map_err(Error::from)?)
    } else if has("name") {
        let record: KnotRecord = serde_json::from_value(value).map_err(Error::from)?;
        record.check()?;
        Input::Record(record)
    } else {
        return Err(CliError::Input(format!("{source}: not a complex, PL function or knot record")));
    };
    Ok(input)
}

impl Input {
    fn into_record(self, source: &str) -> KnotRecord {
        match self {
            Input::Record(r) => r,
            Input::Complex(c) => {
                let name = c.label().unwrap_or(source).to_string();
                KnotRecord::from_complex(name, c)
            }
            Input::Function(f) => KnotRecord::from_upsilon(source, f),
        }
    }

    fn into_complex(self, source: &str) -> CliResult<BifilteredComplex> {
        match self {
            Input::Complex(c) => Ok(c),
            Input::Record(KnotRecord { complex: Some(c), .. }) => Ok(c),
            _ => Err(Error::MissingData(format!("`{source}` does not provide a complex")).into()),
        }
    }

    fn into_upsilon(self, source: &str) -> CliResult<PLFunction> {
        match self {
            Input::Function(f) => Ok(f),
            other => Ok(other.into_record(source).upsilon()?),
        }
    }
}

fn parse_rational(text: &str) -> CliResult<Rational> {
    text.parse().map_err(|e: Error| CliError::Input(e.to_string()))
}

fn genus_or_record(genus: Option<i64>, record: &KnotRecord) -> CliResult<i64> {
    genus
        .or_else(|| upsilon_core::certificates::record_genus(record))
        .ok_or_else(|| Error::MissingData(format!("no genus for `{}`; pass --genus", record.name)).into())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization is infallible")
}

#[derive(Serialize)]
struct ValidateOutput {
    validation: ValidationReport,
    homology: Option<HomologyReport>,
}

#[derive(Serialize)]
struct TauOutput {
    tau: i64,
}

#[derive(Serialize)]
struct TightnessOutput {
    tau: i64,
    genus: i64,
    classification: Tightness,
}

/// Returns the text to emit and whether the command found the input admissible.
fn run(cli: &Cli) -> CliResult<(String, bool)> {
    let load = |s: &str| load(s, cli.file);
    let out = match &cli.command {
        Command::Validate { input } => {
            let c = load(input)?.into_complex(input)?;
            let report = validate(&c);
            let homology = report.pass.then(|| verify_homology(&c));
            let ok = homology.as_ref().is_some_and(|h| h.admissible);
            return Ok((json(&ValidateOutput { validation: report, homology }), ok));
        }
        Command::Build { name } => {
            let record = builtin(name).ok_or_else(|| CliError::Input(format!("`{name}` is not a builtin name")))??;
            match &record.complex {
                Some(c) => c.to_json(),
                None => record.upsilon()?.to_json(),
            }
        }
        Command::Upsilon { input, csv } => {
            let f = load(input)?.into_upsilon(input)?;
            match csv {
                Some(opt) => {
                    let step = opt
                        .strip_prefix("step=")
                        .ok_or_else(|| CliError::Input(format!("expected --csv step=p/q, got `{opt}`")))?;
                    return Ok((f.to_csv(parse_rational(step)?)?, true));
                }
                None => f.to_json(),
            }
        }
        Command::Tau { input } => json(&TauOutput { tau: tau(&load(input)?.into_complex(input)?)? }),
        Command::Tensor { left, right } => {
            let a = load(left)?.into_complex(left)?;
            let b = load(right)?.into_complex(right)?;
            tensor(&a, &b)?.to_json()
        }
        Command::Dual { input } => dual(&load(input)?.into_complex(input)?)?.to_json(),
        Command::CertifyRv { input, genus } => {
            let record = load(input)?.into_record(input);
            let g = genus_or_record(*genus, &record)?;
            json(&certify_right_veering(&record.upsilon()?, g)?)
        }
        Command::ClassifyTight { input, genus } => {
            let record = load(input)?.into_record(input);
            let g = genus_or_record(*genus, &record)?;
            let t = match &record.complex {
                Some(c) => tau(c)?,
                None => -record.upsilon()?.initial_slope(),
            };
            json(&TightnessOutput { tau: t, genus: g, classification: classify_tightness(t, g) })
        }
        Command::Obstruct { left, right } => {
            let a = load(left)?.into_record(left);
            let b = load(right)?.into_record(right);
            json(&obstruct_concordance(&a, &b)?)
        }
        Command::RibbonReport { input } => json(&ribbon_minimality_report(&load(input)?.into_record(input))?),
        Command::Sample { input, step, csv } => {
            let f = load(input)?.into_upsilon(input)?;
            let step = parse_rational(step)?;
            if *csv {
                return Ok((f.to_csv(step)?, true));
            }
            json(&f.sample(step)?)
        }
    };
    Ok((out, true))
}

fn emit(text: &str, out: Option<&PathBuf>) -> io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            if let Err(e) = emit(&text, cli.out.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: non-admissible complex");
                ExitCode::from(1)
            }
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
