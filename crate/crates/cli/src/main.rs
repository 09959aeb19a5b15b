use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use biprod_core::biproduct::{build_biproduct, check_quasitriangular};
use biprod_core::catalog::{self, Payload};
use biprod_core::io::{Document, StructureFile};
use biprod_core::tangle::{self, TangleEnv, TangleEquation};
use biprod_core::ydcat::BraidedHopfData;
use biprod_core::{CheckReport, Error, FieldSpec, LinMap};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "biprod",
    version,
    about = "Exact checks for Hopf algebras, Yetter–Drinfeld data and biproducts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check the file's sections allow.
    Check {
        path: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build B⋆H from a file with B, H, action and coaction.
    Biproduct {
        path: PathBuf,
        #[command(flatten)]
        build: BuildFlags,
    },
    /// Derive the coaction from an R-matrix, then build B⋆H.
    Bosonize {
        path: PathBuf,
        /// Also write B, H, action and the derived coaction to this file.
        #[arg(long, value_name = "PATH")]
        emit_coaction: Option<PathBuf>,
        #[command(flatten)]
        build: BuildFlags,
    },
    /// Evaluate and compare string diagrams.
    Tangle {
        #[command(subcommand)]
        command: TangleCommand,
    },
    /// Write a catalog entry as a structure file.
    Export {
        /// Catalog entry name; `--list` shows them all.
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Show the first differing entry of each failed check.
    #[arg(long)]
    witness: bool,
    /// Field for files that do not declare one: `Q` or a prime `p`.
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldSpec>,
}

#[derive(Args)]
struct BuildFlags {
    #[command(flatten)]
    common: Common,
    /// Output structure file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Re-check the constructed bialgebra and antipode.
    #[arg(long)]
    verify: bool,
    /// Build even when hypotheses fail.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct EnvFlags {
    /// Structure file with B, H, action and coaction.
    #[arg(long, conflicts_with = "catalog")]
    env: Option<PathBuf>,
    /// Catalog entry to use as environment (default: superline).
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldSpec>,
}

#[derive(Subcommand)]
enum TangleCommand {
    /// Print the matrix of a diagram.
    Eval {
        /// Diagram text; read from `--file` when absent.
        expr: Option<String>,
        #[arg(short, long, conflicts_with = "expr")]
        file: Option<PathBuf>,
        #[command(flatten)]
        env: EnvFlags,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Decide whether two diagrams are equal.
    Eq {
        lhs: String,
        rhs: String,
        #[arg(long, default_value = "eq")]
        label: String,
        #[command(flatten)]
        env: EnvFlags,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        #[arg(long)]
        witness: bool,
    },
    /// Check a corpus of equations (default: the shipped one).
    Corpus {
        /// Corpus file: a JSON array of {label, lhs, rhs}.
        #[arg(short, long)]
        file: Option<PathBuf>,
        /// Print the shipped corpus file instead of checking.
        #[arg(long)]
        dump: bool,
        #[command(flatten)]
        env: EnvFlags,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    match s {
        "Q" | "q" => Ok(FieldSpec::Rationals),
        _ => {
            let p: u64 = s
                .trim_start_matches("F_")
                .parse()
                .map_err(|_| format!("expected Q or a prime, got {s:?}"))?;
            FieldSpec::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path, field: Option<FieldSpec>) -> anyhow::Result<Document> {
    let file =
        StructureFile::parse(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    file.load(field)
        .with_context(|| format!("in {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn render(report: &CheckReport, format: ReportFormat, witness: bool) -> String {
    match format {
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Text => report.render_text(witness),
    }
}

/// Reports go to stdout unless stdout carries a structure file.
fn emit_report(report: &CheckReport, common: &Common, to_stderr: bool) {
    let text = render(report, common.report, common.witness);
    if to_stderr {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
}

/// `Ok(true)` for success, `Ok(false)` for a failed check; errors are input
/// problems.
fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Check { path, common } => {
            let report = load(&path, common.field)?.check()?;
            emit_report(&report, &common, false);
            Ok(report.ok)
        }
        Command::Biproduct { path, build } => {
            let d = load(&path, build.common.field)?.braided()?;
            finish_build(&d, &build)
        }
        Command::Bosonize {
            path,
            emit_coaction,
            build,
        } => {
            let doc = load(&path, build.common.field)?;
            let m = doc.module_bialgebra()?;
            let r = doc.rmatrix()?;
            let qt = check_quasitriangular(&r)?;
            if !qt.ok && !build.force {
                emit_report(&qt, &build.common, build.output.is_none());
                return Ok(false);
            }
            let d = match m.with_rmatrix(&r, build.force) {
                Err(Error::HypothesisFailure(report)) => {
                    emit_report(&report, &build.common, build.output.is_none());
                    return Ok(false);
                }
                other => other?,
            };
            if let Some(p) = &emit_coaction {
                write_out(Some(p), &StructureFile::from_braided(&d)?.to_json())?;
            }
            finish_build(&d, &build)
        }
        Command::Tangle { command } => run_tangle(command),
        Command::Export { name, list, output } => {
            if list {
                for e in catalog::entries()?
                    .into_iter()
                    .chain(catalog::counterexamples()?)
                {
                    println!("{:<20} {}", e.name, e.description);
                }
                return Ok(true);
            }
            let Some(name) = name else {
                bail!("give a catalog entry name or --list")
            };
            let Some(entry) = catalog::lookup(&name)? else {
                bail!("no catalog entry named {name:?}; try `biprod export --list`")
            };
            write_out(
                output.as_deref(),
                &StructureFile::from_catalog(&entry)?.to_json(),
            )?;
            Ok(true)
        }
    }
}

fn finish_build(d: &BraidedHopfData, build: &BuildFlags) -> anyhow::Result<bool> {
    let to_stderr = build.output.is_none();
    let bp = match build_biproduct(d, build.force) {
        Err(Error::HypothesisFailure(report)) => {
            emit_report(&report, &build.common, to_stderr);
            return Ok(false);
        }
        Err(e @ Error::StructuralInconsistency(_)) => {
            eprintln!("error: {e}");
            return Ok(false);
        }
        other => other?,
    };
    write_out(
        build.output.as_deref(),
        &StructureFile::from_biproduct(&bp)?.to_json(),
    )?;
    if build.verify {
        let report = bp.check()?;
        emit_report(&report, &build.common, to_stderr);
        return Ok(report.ok);
    }
    Ok(true)
}

fn tangle_env(flags: &EnvFlags) -> anyhow::Result<TangleEnv> {
    let d = match (&flags.env, &flags.catalog) {
        (Some(path), _) => load(path, flags.field)?.braided()?,
        (None, name) => {
            let name = name.as_deref().unwrap_or("superline");
            let entry = catalog::lookup(name)?
                .with_context(|| format!("no catalog entry named {name:?}"))?;
            match entry.payload {
                Payload::Braided(d) => d,
                Payload::Bosonization(m, r) => m.with_rmatrix(&r, true)?,
                _ => bail!("catalog entry {name:?} has no B, H, action and coaction"),
            }
        }
    };
    Ok(TangleEnv::standard(&d)?)
}

fn matrix_json(m: &LinMap) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    let value = serde_json::json!({
        "dom": m.dom().to_string(),
        "cod": m.cod().to_string(),
        "field": m.field().to_string(),
        "rows": rows,
    });
    serde_json::to_string_pretty(&value).expect("matrix serializes") + "\n"
}

fn run_tangle(command: TangleCommand) -> anyhow::Result<bool> {
    match command {
        TangleCommand::Eval {
            expr,
            file,
            env,
            report,
        } => {
            let text = match (expr, file) {
                (Some(t), _) => t,
                (None, Some(p)) => read(&p)?,
                (None, None) => bail!("give a diagram or --file"),
            };
            let e = tangle::parse(&text)?;
            let m = tangle::eval(&e, &tangle_env(&env)?)?;
            match report {
                ReportFormat::Text => print!("{m}"),
                ReportFormat::Json => print!("{}", matrix_json(&m)),
            }
            Ok(true)
        }
        TangleCommand::Eq {
            lhs,
            rhs,
            label,
            env,
            report,
            witness,
        } => {
            let eq = TangleEquation::new(&label, tangle::parse(&lhs)?, tangle::parse(&rhs)?);
            let result = tangle::check_equation(&eq, &tangle_env(&env)?)?;
            print!("{}", render(&result, report, witness));
            Ok(result.ok)
        }
        TangleCommand::Corpus {
            file,
            dump,
            env,
            report,
            witness,
        } => {
            if dump {
                println!("{}", tangle::corpus_to_json(&tangle::figure_corpus()));
                return Ok(true);
            }
            let corpus = match file {
                Some(p) => tangle::corpus_from_json(&read(&p)?)?,
                None => tangle::figure_corpus(),
            };
            let result = tangle::check_all(&corpus, &tangle_env(&env)?)?;
            print!("{}", render(&result, report, witness));
            Ok(result.ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
