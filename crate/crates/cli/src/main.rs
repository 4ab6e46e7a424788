use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use whitney::analysis::conjecture_sweep;
use whitney::closed::{ap_table, crown_table, fence_table, FormulaVariant};
use whitney::polynomial::fap_rank_polynomial;
use whitney::poset::{whitney_oracle, OracleLimits, PosetDescription, ORACLE_MAX_SUPPORTED};
use whitney::{FamilySpec, Poset, RankPolynomial, WhitneyTable};

mod check;
mod dot;

#[derive(Parser)]
#[command(
    name = "whitney",
    version,
    about = "Exact Whitney numbers of order-ideal lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Whitney numbers of a family instance.
    Table {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Count order ideals directly instead of using a formula.
        #[arg(long)]
        force_oracle: bool,
    },
    /// Rank polynomial coefficients of a family instance.
    Poly {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        #[arg(long)]
        force_oracle: bool,
    },
    /// Cross-validate oracle, recurrences and closed forms.
    Check {
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Log-concavity sweep over fences and crowns.
    Conjecture {
        #[arg(long, default_value_t = 90)]
        max_card: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Hasse diagram in DOT format.
    ExportDot {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "family")]
        poset: Option<PathBuf>,
    },
    /// Brute-force Whitney numbers of a family instance or a poset file.
    Oracle {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, conflicts_with = "family")]
        poset: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Fence,
    Crown,
    Ap,
    Fap,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    mu: Option<u64>,
    #[arg(long)]
    nu: Option<u64>,
    #[arg(long)]
    w: Option<u64>,
    #[arg(long)]
    x: Option<u64>,
    #[arg(long)]
    y: Option<u64>,
    #[arg(long)]
    z: Option<u64>,
}

/// Failure modes and their exit codes.
#[derive(Debug)]
enum Failure {
    /// Normative validation failed (exit 1). The report still goes to stdout.
    Validation { output: String, reason: String },
    /// Bad invocation or parameters (exit 2).
    Usage(String),
}

impl From<whitney::Error> for Failure {
    fn from(e: whitney::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn required(value: Option<u64>, flag: &str, family: &str) -> Result<u64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{family} requires --{flag}")))
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        let family = self
            .family
            .ok_or_else(|| Failure::Usage("missing family (fence, crown, ap or fap)".into()))?;
        let spec = match family {
            Family::Fence => FamilySpec::Fence {
                n: required(self.n, "n", "fence")?,
            },
            Family::Crown => FamilySpec::Crown {
                n: required(self.n, "n", "crown")?,
            },
            Family::Ap => FamilySpec::Ap {
                mu: required(self.mu, "mu", "ap")?,
                nu: required(self.nu, "nu", "ap")?,
            },
            Family::Fap => FamilySpec::Fap {
                w: required(self.w, "w", "fap")?,
                x: required(self.x, "x", "fap")?,
                y: required(self.y, "y", "fap")?,
                z: required(self.z, "z", "fap")?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Path {
    ClosedForm,
    Composition,
    Oracle,
}

impl Path {
    fn as_str(self) -> &'static str {
        match self {
            Path::ClosedForm => "closed_form",
            Path::Composition => "composition",
            Path::Oracle => "oracle",
        }
    }
}

#[derive(Serialize)]
struct TableOutput<'a> {
    #[serde(flatten)]
    family: &'a FamilySpec,
    #[serde(flatten)]
    table: &'a WhitneyTable,
    path: Path,
}

#[derive(Serialize)]
struct PolyOutput<'a> {
    #[serde(flatten)]
    family: &'a FamilySpec,
    #[serde(flatten)]
    poly: &'a RankPolynomial,
    path: Path,
}

#[derive(Serialize)]
struct PosetTableOutput<'a> {
    elements: usize,
    #[serde(flatten)]
    table: &'a WhitneyTable,
    path: Path,
}

/// Oracle limits for a named family. The element bound is lifted when the
/// formula total says the lattice fits the ideal budget, so FAP(7,10,6,7)
/// still runs while fence(80) is refused up front.
fn family_limits(spec: &FamilySpec) -> Result<OracleLimits, Failure> {
    let limits = OracleLimits::default();
    let card = spec.cardinality() as usize;
    if card <= limits.max_elements || card > ORACLE_MAX_SUPPORTED {
        return Ok(limits);
    }
    let (table, _) = formula_table(spec)?;
    Ok(if table.total() <= BigUint::from(limits.max_ideals) {
        limits.with_max_elements(card)
    } else {
        limits
    })
}

/// Fastest valid path for each family.
fn compute_table(spec: &FamilySpec, force_oracle: bool) -> Result<(WhitneyTable, Path), Failure> {
    if force_oracle {
        let table = whitney_oracle(&spec.poset()?, &family_limits(spec)?)?;
        return Ok((table, Path::Oracle));
    }
    formula_table(spec)
}

fn formula_table(spec: &FamilySpec) -> Result<(WhitneyTable, Path), Failure> {
    Ok(match *spec {
        FamilySpec::Fence { n } => (
            fence_table(n, FormulaVariant::Hypergeometric),
            Path::ClosedForm,
        ),
        FamilySpec::Crown { n } => (crown_table(n)?, Path::ClosedForm),
        FamilySpec::Ap { mu, nu } => (ap_table(mu, nu)?, Path::ClosedForm),
        FamilySpec::Fap { w, x, y, z } => (
            fap_rank_polynomial(w, x, y, z)?.to_table(),
            Path::Composition,
        ),
    })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("serializable output");
    out.push('\n');
    out
}

fn csv(values: &[BigUint], header: &str) -> String {
    let mut out = format!("k,{header}\n");
    for (k, v) in values.iter().enumerate() {
        let _ = writeln!(out, "{k},{v}");
    }
    out
}

fn plain_counts(values: &[BigUint]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_table(args: &FamilyArgs, format: Format, force_oracle: bool) -> CmdResult {
    let spec = args.spec()?;
    let (table, path) = compute_table(&spec, force_oracle)?;
    Ok(match format {
        Format::Json => json(&TableOutput {
            family: &spec,
            table: &table,
            path,
        }),
        Format::Csv => csv(table.as_slice(), "count"),
        Format::Plain => format!(
            "{spec} [{}]: {}\n",
            path.as_str(),
            plain_counts(table.as_slice())
        ),
    })
}

fn cmd_poly(args: &FamilyArgs, format: Format, force_oracle: bool) -> CmdResult {
    let spec = args.spec()?;
    let (table, path) = compute_table(&spec, force_oracle)?;
    let poly = RankPolynomial::from_table(&table);
    Ok(match format {
        Format::Json => json(&PolyOutput {
            family: &spec,
            poly: &poly,
            path,
        }),
        Format::Csv => csv(poly.coeffs(), "coeff"),
        Format::Plain => format!("{poly}\n"),
    })
}

fn load_poset(file: &PathBuf) -> Result<Poset, Failure> {
    let text = fs::read_to_string(file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let desc: PosetDescription = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("cannot parse {}: {e}", file.display())))?;
    Ok(Poset::from_description(&desc)?)
}

fn cmd_oracle(args: &FamilyArgs, file: Option<&PathBuf>, format: Format) -> CmdResult {
    let Some(file) = file else {
        return cmd_table(args, format, true);
    };
    let poset = load_poset(file)?;
    let table = whitney_oracle(&poset, &OracleLimits::default())?;
    Ok(match format {
        Format::Json => json(&PosetTableOutput {
            elements: poset.len(),
            table: &table,
            path: Path::Oracle,
        }),
        Format::Csv => csv(table.as_slice(), "count"),
        Format::Plain => format!(
            "{} ({} elements) [oracle]: {}\n",
            file.display(),
            poset.len(),
            plain_counts(table.as_slice())
        ),
    })
}

fn cmd_export_dot(args: &FamilyArgs, file: Option<&PathBuf>) -> CmdResult {
    match file {
        Some(file) => {
            let poset = load_poset(file)?;
            let name = file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "poset".into());
            Ok(dot::hasse_diagram(&poset, &name))
        }
        None => {
            let spec = args.spec()?;
            Ok(dot::hasse_diagram(&spec.poset()?, &spec.to_string()))
        }
    }
}

#[derive(Serialize)]
struct Summary {
    summary: String,
    all_pass: bool,
}

fn cmd_conjecture(max_card: u64, format: Format) -> CmdResult {
    let sweep = conjecture_sweep(max_card);
    let mut out = String::new();
    for report in &sweep.reports {
        match format {
            Format::Json => out.push_str(&json(report)),
            Format::Csv | Format::Plain => {
                let status = match report.claim_holds {
                    Some(true) => "pass",
                    Some(false) => "FAIL",
                    None => "info",
                };
                let _ = writeln!(
                    out,
                    "{}{sep}{status}{sep}unimodal={}{sep}log_concave={}{sep}strictly_log_concave={}",
                    report.instance,
                    report.unimodal,
                    report.log_concave,
                    report.strictly_log_concave,
                    sep = if format == Format::Csv { "," } else { " " },
                );
            }
        }
    }

    let all_pass = sweep.all_claims_hold();
    let mut summary = if all_pass {
        "all pass".to_string()
    } else {
        let failed: Vec<String> = sweep
            .claim_failures()
            .map(|r| r.instance.to_string())
            .collect();
        format!("FAIL: {}", failed.join(", "))
    };
    let mut facts = Vec::new();
    for report in sweep.known_exceptions() {
        match report.instance {
            FamilySpec::Fence { n } if !report.log_concave => {
                let _ = write!(summary, "; known exception fence n={n}");
            }
            _ => {}
        }
        if !report.unimodal {
            facts.push(format!("fact: {} is not unimodal", report.instance));
        }
    }

    match format {
        Format::Json => {
            for fact in &facts {
                out.push_str(&json(&serde_json::json!({ "fact": fact })));
            }
            out.push_str(&json(&Summary { summary, all_pass }));
        }
        Format::Csv | Format::Plain => {
            for fact in &facts {
                let _ = writeln!(out, "{fact}");
            }
            let _ = writeln!(out, "summary: {summary}");
        }
    }
    if all_pass {
        Ok(out)
    } else {
        Err(Failure::Validation {
            output: out,
            reason: "conjecture sweep found a claim failure".into(),
        })
    }
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Table {
            family,
            format,
            force_oracle,
        } => cmd_table(family, *format, *force_oracle),
        Command::Poly {
            family,
            format,
            force_oracle,
        } => cmd_poly(family, *format, *force_oracle),
        Command::Check { max_n, format } => check::run(*max_n, *format == Format::Json),
        Command::Conjecture { max_card, format } => cmd_conjecture(*max_card, *format),
        Command::ExportDot { family, poset } => cmd_export_dot(family, poset.as_ref()),
        Command::Oracle {
            family,
            poset,
            format,
        } => cmd_oracle(family, poset.as_ref(), *format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Validation { output, reason }) => {
            print!("{output}");
            eprintln!("validation failed: {reason}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
