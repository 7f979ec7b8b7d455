//! Command-line front end: build algebras, run verification suites, compute
//! closure, and export structure constants.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
//! error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use paraverify_core::parastat::{FamilyId, ParaSystem};
use paraverify_core::{
    AlgebraError, GlScheme, GradingVector, OspAlgebra, StructureConstantsExport,
    VerificationReport,
};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

const EXIT_VERIFICATION_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "paraverify",
    version,
    about = "Build, verify and export Z2xZ2-graded Lie superalgebras and their parastatistics relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct OspParams {
    /// Number of parafermion sites of the plain sort.
    #[arg(long, default_value_t = 0)]
    m1: usize,
    /// Number of parafermion sites of the tilde sort.
    #[arg(long, default_value_t = 0)]
    m2: usize,
    /// Number of paraboson sites.
    #[arg(long, default_value_t = 0)]
    n: usize,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write output to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an algebra and print a summary.
    Build {
        #[command(subcommand)]
        which: BuildTarget,
    },
    /// Run verification suites against osp(2*m1+1, 2*m2 | 2*n, 0).
    Verify {
        #[command(flatten)]
        params: OspParams,
        /// Comma-separated suite names, or "all".
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suites: Vec<String>,
        /// Maximum counterexample witnesses retained per suite.
        #[arg(long, default_value_t = paraverify_core::DEFAULT_WITNESS_LIMIT)]
        witness_limit: usize,
        /// Seed for randomized sweeps; fixed default for reproducibility.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Negative control: flip one sign in the embedding formula.
        #[arg(long, hide = true)]
        mutate_embedding_sign: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Generation check: close the short root vectors under the bracket and
    /// compare against the rank-oracle dimension.
    Closure {
        #[command(flatten)]
        params: OspParams,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Export the structure-constants table as JSON.
    Export {
        #[command(subcommand)]
        which: ExportTarget,
    },
}

#[derive(Subcommand)]
enum BuildTarget {
    /// gl(m1, m2 | n1, n2).
    Gl {
        /// Dimensions as m1,m2,n1,n2.
        #[arg(long, value_name = "m1,m2,n1,n2")]
        dims: String,
    },
    /// osp(2*m1+1, 2*m2 | 2*n, 0).
    Osp {
        #[command(flatten)]
        params: OspParams,
    },
}

#[derive(Subcommand)]
enum ExportTarget {
    Gl {
        #[arg(long, value_name = "m1,m2,n1,n2")]
        dims: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    Osp {
        #[command(flatten)]
        params: OspParams,
        #[command(flatten)]
        output: OutputOpts,
    },
}

enum CliError {
    Usage(String),
    VerificationFailed,
    Internal(String),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::EmptyAlgebra | AlgebraError::PreconditionUnmet { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("i/o error: {e}"))
    }
}

fn parse_dims(dims: &str) -> Result<(usize, usize, usize, usize), CliError> {
    let parts: Vec<usize> = dims
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("invalid --dims {dims:?}: {e}")))?;
    match parts.as_slice() {
        [m1, m2, n1, n2] => Ok((*m1, *m2, *n1, *n2)),
        _ => Err(CliError::Usage(format!(
            "--dims needs exactly four values, got {dims:?}"
        ))),
    }
}

/// Suites addressable from the command line: the relation families plus the
/// two matrix-level sweeps.
#[derive(Clone, Copy, PartialEq, Eq)]
enum SuiteId {
    OspClosedForm,
    EmbeddingIdentities,
    Family(FamilyId),
}

impl SuiteId {
    const EXTRA: [SuiteId; 2] = [SuiteId::OspClosedForm, SuiteId::EmbeddingIdentities];

    fn parse(name: &str) -> Result<SuiteId, CliError> {
        match name {
            "osp-closed-form" => Ok(SuiteId::OspClosedForm),
            "embedding-identities" => Ok(SuiteId::EmbeddingIdentities),
            other => FamilyId::from_str(other)
                .map(SuiteId::Family)
                .map_err(CliError::Usage),
        }
    }

    fn run(
        self,
        alg: &OspAlgebra,
        witness_limit: usize,
    ) -> Result<VerificationReport, AlgebraError> {
        match self {
            SuiteId::OspClosedForm => Ok(alg.check_closed_form(witness_limit)),
            SuiteId::EmbeddingIdentities => Ok(alg.check_embedding_identities(witness_limit)),
            SuiteId::Family(f) => ParaSystem::new(alg).verify_family(f, witness_limit),
        }
    }
}

#[derive(Serialize)]
struct VerifyOutput {
    params: paraverify_core::AlgebraParams,
    seed: u64,
    witness_limit: usize,
    suites: Vec<VerificationReport>,
    all_passed: bool,
}

#[derive(Serialize)]
struct ClosureOutput {
    params: paraverify_core::AlgebraParams,
    dimension: usize,
    closure_rank: usize,
    growth_rounds: usize,
    generates: bool,
}

fn write_output(output: &OutputOpts, text: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn grading_census_lines(counts: &[(GradingVector, usize)]) -> String {
    counts
        .iter()
        .map(|(g, c)| format!("  component {g}: {c}\n"))
        .collect()
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build { which } => match which {
            BuildTarget::Gl { dims } => {
                let (m1, m2, n1, n2) = parse_dims(&dims)?;
                let gl = GlScheme::build(m1, m2, n1, n2)?;
                let basis = gl.basis();
                let mut census: Vec<(GradingVector, usize)> = GradingVector::all()
                    .into_iter()
                    .map(|g| (g, 0usize))
                    .collect();
                for b in &basis {
                    census.iter_mut().find(|(g, _)| *g == b.degree).unwrap().1 += 1;
                }
                print!(
                    "{params}\n  matrix size {size}\n  basis elements {count}\n{census}",
                    params = gl.params(),
                    size = gl.total_dim(),
                    count = basis.len(),
                    census = grading_census_lines(&census),
                );
                Ok(())
            }
            BuildTarget::Osp { params } => {
                let alg = OspAlgebra::build(params.m1, params.m2, params.n)?;
                let basis = alg.canonical_basis();
                let mut census: Vec<(GradingVector, usize)> = GradingVector::all()
                    .into_iter()
                    .map(|g| (g, 0usize))
                    .collect();
                for &(i, j) in &basis.pairs {
                    let d = alg.x_degree(i, j);
                    census.iter_mut().find(|(g, _)| *g == d).unwrap().1 += 1;
                }
                print!(
                    "{params}\n  matrix size {size}\n  dimension {dim}\n{census}",
                    params = alg.params(),
                    size = alg.scheme.matrix_dim(),
                    dim = basis.len(),
                    census = grading_census_lines(&census),
                );
                Ok(())
            }
        },
        Command::Verify {
            params,
            suites,
            witness_limit,
            seed,
            mutate_embedding_sign,
            output,
        } => {
            let alg = if mutate_embedding_sign {
                OspAlgebra::build_mutated(params.m1, params.m2, params.n)?
            } else {
                OspAlgebra::build(params.m1, params.m2, params.n)?
            };
            let explicit = !(suites.len() == 1 && suites[0] == "all");
            let selected: Vec<SuiteId> = if explicit {
                suites
                    .iter()
                    .map(|s| SuiteId::parse(s))
                    .collect::<Result<_, _>>()?
            } else {
                SuiteId::EXTRA
                    .into_iter()
                    .chain(FamilyId::ALL.into_iter().map(SuiteId::Family))
                    .collect()
            };
            if selected.is_empty() {
                return Err(CliError::Usage("no suites selected".into()));
            }
            let mut reports = Vec::new();
            for suite in selected {
                match suite.run(&alg, witness_limit) {
                    Ok(report) => reports.push(report),
                    // Under "all", a suite whose parameter preconditions are
                    // unmet is skipped; when asked for by name it is an error.
                    Err(AlgebraError::PreconditionUnmet { .. }) if !explicit => {}
                    Err(e) => return Err(e.into()),
                }
            }
            let all_passed = reports.iter().all(|r| r.passed());
            let result = VerifyOutput {
                params: alg.params(),
                seed,
                witness_limit,
                suites: reports,
                all_passed,
            };
            let text = match output.format {
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&result)
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                    s.push('\n');
                    s
                }
                OutputFormat::Text => {
                    let mut s = String::new();
                    for r in &result.suites {
                        s.push_str(&r.summary_line());
                        s.push('\n');
                        for w in &r.witnesses {
                            s.push_str(&format!(
                                "    witness {}: lhs = {}, rhs = {}\n",
                                w.case, w.lhs, w.rhs
                            ));
                        }
                    }
                    s.push_str(if all_passed { "ALL PASSED\n" } else { "FAILURES\n" });
                    s
                }
            };
            write_output(&output, text)?;
            if all_passed {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Closure { params, output } => {
            let alg = OspAlgebra::build(params.m1, params.m2, params.n)?;
            let dimension = alg.dimension();
            let closure = ParaSystem::new(&alg).closure_dimension();
            let result = ClosureOutput {
                params: alg.params(),
                dimension,
                closure_rank: closure.rank,
                growth_rounds: closure.growth_rounds,
                generates: closure.rank == dimension,
            };
            let text = match output.format {
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&result)
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                    s.push('\n');
                    s
                }
                OutputFormat::Text => format!(
                    "{}\n  dimension {}\n  closure rank {} after {} growth rounds\n  generates: {}\n",
                    result.params,
                    result.dimension,
                    result.closure_rank,
                    result.growth_rounds,
                    result.generates,
                ),
            };
            write_output(&output, text)?;
            if result.generates {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Export { which } => {
            let (export, output) = match which {
                ExportTarget::Gl { dims, output } => {
                    let (m1, m2, n1, n2) = parse_dims(&dims)?;
                    let gl = GlScheme::build(m1, m2, n1, n2)?;
                    (StructureConstantsExport::for_gl(&gl), output)
                }
                ExportTarget::Osp { params, output } => {
                    let alg = OspAlgebra::build(params.m1, params.m2, params.n)?;
                    (StructureConstantsExport::for_osp(&alg)?, output)
                }
            };
            write_output(&output, export.to_json())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(EXIT_VERIFICATION_FAILURE),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
