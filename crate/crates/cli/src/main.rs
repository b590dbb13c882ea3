use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use artinian::constructions::{
    matrix_algebra, polynomial_quotient, random_radical_graded, skew_group_algebra, triangular, two_armed_example,
    GradedProfile,
};
use artinian::io::{parse_algebra, write_algebra, GroupActionJson, PathAlgebraJson};
use artinian::verify::{run, Suite, VerifyOptions};
use artinian::{analyze, associated_graded, Algebra, AnalysisOptions, Field, Quiver, WedderburnOptions};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "artinian", version, about = "Quivers, covers and basic algebras of finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Seed for every randomized search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Radical, blocks and both quivers of an algebra, as JSON.
    Analyze {
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Export the natural or ordinary quiver.
    Quiver {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Natural)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run invariant suites; exit 1 if any check fails.
    Verify {
        input: PathBuf,
        #[arg(long, default_value = "all")]
        /// prop12 (alias bounds), graded, gabriel, basics or all.
        suite: String,
        /// Tensor truncation for the cover (default: Loewy length).
        #[arg(long)]
        truncate: Option<usize>,
        /// Largest dimension given to brute-force oracles.
        #[arg(long, default_value_t = 24)]
        oracle_limit: usize,
        /// Largest free tensor algebra built by the basics suite.
        #[arg(long, default_value_t = 400)]
        free_limit: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Write an algebra file.
    Construct {
        #[command(subcommand)]
        what: Construct,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Natural,
    Ordinary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Args, Clone, Copy)]
struct FieldArgs {
    /// Prime characteristic.
    #[arg(long = "char", conflicts_with = "rationals")]
    characteristic: Option<u64>,
    #[arg(long)]
    rationals: bool,
}

impl FieldArgs {
    fn field(&self) -> anyhow::Result<Field> {
        match (self.characteristic, self.rationals) {
            (_, true) => Ok(Field::Rationals),
            (Some(p), false) => Ok(Field::prime(p)?),
            (None, false) => Err(anyhow!("give --char p or --rationals")),
        }
    }
}

#[derive(Subcommand)]
enum Construct {
    /// The skew group algebra of the five-vertex two-armed quiver.
    #[command(name = "paper-example")]
    TwoArmedExample {
        #[arg(long = "char")]
        characteristic: u64,
    },
    /// Path algebra from a quiver-with-relations file.
    PathAlgebra {
        spec: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Skew group algebra of an algebra file under a group action file.
    SkewGroup { algebra: PathBuf, action: PathBuf },
    /// Full matrix algebra M_n(k).
    Matrix {
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Upper triangular n x n matrices.
    Triangular {
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// k[x]/(x^n).
    Polynomial {
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Random radical-graded algebra from a profile file; writes degrees.
    RandomGraded {
        profile: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Associated graded algebra of an algebra file; writes degrees.
    AssociatedGraded { input: PathBuf },
}

#[derive(Serialize)]
struct BlockReport {
    n: usize,
    dim: usize,
}

#[derive(Serialize)]
struct AnalysisReport {
    dim: usize,
    radical_dims: Vec<usize>,
    loewy_length: usize,
    blocks: Vec<BlockReport>,
    natural_quiver: Value,
    ordinary_quiver: Value,
    dense_subquiver: bool,
    basic: bool,
}

/// Input problems exit with 2, failed suites with 1.
enum Failure {
    Input(anyhow::Error),
    Suite(String),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

fn read_algebra(path: &Path) -> anyhow::Result<(Algebra, Option<Vec<usize>>)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_algebra(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

fn options(common: Common) -> AnalysisOptions {
    AnalysisOptions { wedderburn: WedderburnOptions { seed: common.seed, ..Default::default() } }
}

fn quivers(a: &Algebra, common: Common) -> anyhow::Result<(artinian::Analysis, Quiver, Quiver)> {
    let an = analyze(a, &options(common))?;
    let delta = an.natural_quiver()?;
    let gamma = an.ordinary_quiver()?;
    Ok((an, delta, gamma))
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { input, common } => {
            let (a, _) = read_algebra(&input)?;
            let (an, delta, gamma) = quivers(&a, common)?;
            let report = AnalysisReport {
                dim: a.dim(),
                radical_dims: an.chain.dims(),
                loewy_length: an.loewy_length(),
                blocks: an.wedderburn.blocks.iter().map(|b| BlockReport { n: b.n, dim: b.dim() }).collect(),
                dense_subquiver: delta.is_dense_subquiver_of(&gamma),
                natural_quiver: delta.to_json(),
                ordinary_quiver: gamma.to_json(),
                basic: an.is_basic(),
            };
            emit(None, &pretty(&report))?;
        }
        Command::Quiver { input, kind, format, output, common } => {
            let (a, _) = read_algebra(&input)?;
            let (_, delta, gamma) = quivers(&a, common)?;
            let q = match kind {
                Kind::Natural => delta,
                Kind::Ordinary => gamma,
            };
            let text = match format {
                Format::Dot => q.to_dot(),
                Format::Json => pretty(&q.to_json()),
            };
            emit(output.as_deref(), &text)?;
        }
        Command::Verify { input, suite, truncate, oracle_limit, free_limit, common } => {
            let suite = Suite::parse(&suite)?;
            let (a, degrees) = read_algebra(&input)?;
            let opts = VerifyOptions { seed: common.seed, oracle_limit, truncate, free_limit };
            let summary = run(&a, degrees.as_deref(), suite, &opts)?;
            emit(None, &pretty(&summary))?;
            if !summary.pass {
                let first = summary.first_counterexample.map(|c| c.name).unwrap_or_default();
                return Err(Failure::Suite(first));
            }
        }
        Command::Construct { what, output } => {
            let text = construct(what)?;
            emit(output.as_deref(), &text)?;
        }
    }
    Ok(())
}

fn construct(what: Construct) -> anyhow::Result<String> {
    Ok(match what {
        Construct::TwoArmedExample { characteristic } => {
            write_algebra(&two_armed_example(Field::prime(characteristic)?)?.skew, None)
        }
        Construct::PathAlgebra { spec, max_len } => {
            let j: PathAlgebraJson = read_json(&spec)?;
            let pa = j.build(max_len)?;
            write_algebra(&pa.algebra, Some(&pa.basis_lengths()))
        }
        Construct::SkewGroup { algebra, action } => {
            let (lambda, _) = read_algebra(&algebra)?;
            let report = lambda.validate();
            if !report.is_valid() {
                return Err(anyhow!("{} is not an associative unital algebra", algebra.display()));
            }
            let j: GroupActionJson = read_json(&action)?;
            write_algebra(&skew_group_algebra(&lambda, &j.to_action(&lambda)?)?, None)
        }
        Construct::Matrix { n, field } => write_algebra(&matrix_algebra(positive(n)?, field.field()?), None),
        Construct::Triangular { n, field } => write_algebra(&triangular(positive(n)?, field.field()?), None),
        Construct::Polynomial { n, field } => {
            let n = positive(n)?;
            let degrees: Vec<usize> = (0..n).collect();
            write_algebra(&polynomial_quotient(field.field()?, n), Some(&degrees))
        }
        Construct::RandomGraded { profile, field, seed } => {
            let p: GradedProfile = read_json(&profile)?;
            let r = random_radical_graded(seed, field.field()?, &p)?;
            write_algebra(&r.graded.algebra, Some(&r.graded.degrees))
        }
        Construct::AssociatedGraded { input } => {
            let (a, _) = read_algebra(&input)?;
            let gr = associated_graded(&a)?;
            write_algebra(&gr.graded.algebra, Some(&gr.graded.degrees))
        }
    })
}

fn positive(n: usize) -> anyhow::Result<usize> {
    if n == 0 {
        Err(anyhow!("size must be at least 1"))
    } else {
        Ok(n)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Suite(first)) => {
            eprintln!("verification failed: {first}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
