use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qmzv::document::{variant_name, RelationDoc, SeriesDoc};
use qmzv::suites::{self, Suite};
use qmzv::{driver, CliError, RunConfig};
use qmzv_core::{CircledastVariant, RelationVariant, WordSum, ZetaContext, DEFAULT_PRECISION};

/// Exact and q-adic computations with q-analogues of multiple zeta values.
#[derive(Parser)]
#[command(name = "qmzv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ζ_q(w) (or ζ★_q(w)) modulo q^P. Words are written [k1,k2,...].
    Zeta {
        word: String,
        #[arg(long)]
        star: bool,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Run a verification suite; exits with status 1 if any case fails.
    Verify {
        /// One of: duality, products, star, sa-product, interpolation, newton,
        /// psi, hbar-degeneration, relations, series.
        suite: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Emit every relation within the bounds, in canonical order.
    Relations {
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = CircVariant::PlusHbar0)]
    circledast_variant: CircVariant,
    #[arg(long, value_enum, default_value_t = RelVariant::Modified)]
    variant: RelVariant,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CircVariant {
    #[value(name = "plus-hbar0")]
    PlusHbar0,
    Bar,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelVariant {
    Modified,
    QDeformed,
}

impl Opts {
    fn config(&self) -> RunConfig {
        RunConfig {
            precision: self.precision,
            max_weight: self.max_weight,
            max_n: self.max_n,
            seed: self.seed,
            circledast_variant: match self.circledast_variant {
                CircVariant::PlusHbar0 => CircledastVariant::PlusHbarZero,
                CircVariant::Bar => CircledastVariant::Bar,
            },
            variant: match self.variant {
                RelVariant::Modified => RelationVariant::Modified,
                RelVariant::QDeformed => RelationVariant::QDeformed,
            },
            workers: self.workers,
        }
    }
}

fn json_line<T: serde::Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn zeta(word: &str, star: bool, precision: usize, output: Output) -> Result<bool, CliError> {
    if precision < 1 {
        return Err(CliError::Usage("precision must be positive".into()));
    }
    let w: WordSum = word.parse()?;
    let mut ctx = ZetaContext::new(precision);
    let value = if star { ctx.zeta_star(&w)? } else { ctx.zeta(&w)? };
    let mut out = io::stdout().lock();
    match output {
        Output::Text => writeln!(out, "{value}"),
        Output::Json => json_line(&mut out, &SeriesDoc::new(&w, star, &value)),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(true)
}

fn verify(name: &str, opts: &Opts) -> Result<bool, CliError> {
    let suite = Suite::from_name(name).ok_or_else(|| {
        let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        CliError::Usage(format!("unknown suite '{name}'; valid suites: {}", known.join(", ")))
    })?;
    let cases = suites::run(suite, &opts.config())?;
    let failed = cases.iter().filter(|c| !c.passed).count();
    let mut out = io::stdout().lock();
    let written: io::Result<()> = (|| {
        for c in &cases {
            match opts.output {
                Output::Json => json_line(&mut out, c)?,
                Output::Text => {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    match &c.detail {
                        Some(d) => writeln!(out, "{status} {} {}: {d}", c.suite, c.case)?,
                        None => writeln!(out, "{status} {} {}", c.suite, c.case)?,
                    }
                }
            }
        }
        if opts.output == Output::Text {
            writeln!(out, "{}: {} of {} cases passed", suite.name(), cases.len() - failed, cases.len())?;
        }
        Ok(())
    })();
    written.map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(failed == 0)
}

fn relations(opts: &Opts) -> Result<bool, CliError> {
    let reports = driver::relation_reports(&opts.config())?;
    let mut out = io::stdout().lock();
    let written: io::Result<()> = (|| {
        for r in &reports {
            match opts.output {
                Output::Json => json_line(&mut out, &RelationDoc::from(r))?,
                Output::Text => {
                    let rel = &r.relation;
                    let status = if r.holds() { "PASS" } else { "FAIL" };
                    let residual = match &r.outcome {
                        Ok(v) => format!("residual valuation {v}"),
                        Err(e) => e.to_string(),
                    };
                    writeln!(
                        out,
                        "{status} {} {} {} n={}: linear {}; {} quadratic terms; {residual}",
                        variant_name(rel.variant),
                        rel.w1,
                        rel.w2,
                        rel.n,
                        rel.linear_arg,
                        rel.quadratic_terms.len(),
                    )?;
                }
            }
        }
        Ok(())
    })();
    written.map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(reports.iter().all(|r| r.holds()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Zeta { word, star, precision, output } => zeta(word, *star, *precision, *output),
        Command::Verify { suite, opts } => verify(suite, opts),
        Command::Relations { opts } => relations(opts),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
