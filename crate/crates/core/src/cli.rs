//! Command-line front end. `main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 when everything passes, 1 when a verification fails or a
//! table is inconsistent, 2 on usage, parse or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::betti::{self, BettiTable, Convention};
use crate::bits;
use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::gen;
use crate::io;
use crate::linalg::Prime;
use crate::matroid::{self, Matroid, Validation};
use crate::transfer::{self, SkeletonComparison, TransferInput};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "skelbetti", version, about = "Betti numbers of Stanley-Reisner rings, skeletons and matroid truncations")]
pub struct Cli {
    /// Log progress to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, f-vector and purity of a complex, or rank data of a matroid.
    Info(InfoArgs),
    /// Betti table of a complex (or of a matroid's independence complex).
    Betti(BettiArgs),
    /// Betti tables of skeletons computed from a Betti table alone.
    Transfer(TransferArgs),
    /// Matroid operations.
    #[command(subcommand)]
    Matroid(MatroidCommand),
    /// Runs the verification suite on a complex or on random complexes.
    Check(CheckArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Ring,
    Ideal,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Ring => Convention::Ring,
            ConventionArg::Ideal => Convention::Ideal,
        }
    }
}

#[derive(Args, Debug)]
pub struct TableOutput {
    /// Prime characteristic of the coefficient field.
    #[arg(short = 'p', long = "field", default_value_t = 2)]
    pub field: u64,
    #[arg(long, value_enum, default_value_t = ConventionArg::Ring)]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct InfoArgs {
    pub file: PathBuf,
    /// Read the file as matroid bases (implied by a `.bases` extension).
    #[arg(long)]
    pub matroid: bool,
    /// Exhaustive matroid validation regardless of size.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub matroid: bool,
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub output: TableOutput,
}

#[derive(Args, Debug)]
pub struct TransferArgs {
    /// Ring- or ideal-convention table in JSON.
    #[arg(long, conflicts_with = "complex", required_unless_present = "complex")]
    pub table: Option<PathBuf>,
    /// Facet file; its table is computed first.
    #[arg(long)]
    pub complex: Option<PathBuf>,
    /// Dimension of the complex behind `--table`; inferred when omitted.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
    /// Also compute the skeleton tables directly and compare (needs `--complex`).
    #[arg(long, requires = "complex")]
    pub verify: bool,
    #[command(flatten)]
    pub output: TableOutput,
}

#[derive(Subcommand, Debug)]
pub enum MatroidCommand {
    /// Bases of the i-th truncation.
    Truncate {
        #[arg(short = 'i', long, default_value_t = 1)]
        index: usize,
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Bases of the elongation to rank r(M) + i.
    Elongate {
        #[arg(short = 'i', long, default_value_t = 1)]
        index: usize,
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Bases of the dual matroid.
    Dual {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Betti table of the independence complex.
    Betti {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        output: TableOutput,
    },
    /// Support shift between consecutive elongations.
    ShiftCheck {
        file: PathBuf,
        /// Only check this elongation index; all valid indices by default.
        #[arg(short = 'l', long)]
        level: Option<usize>,
        #[arg(long)]
        strict: bool,
    },
    /// Tables of the built-in pair M, N and of their elongations.
    Counterexample,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Facet file; omit together with `--random`.
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    pub file: Option<PathBuf>,
    #[arg(short = 'p', long = "field", default_value_t = 2)]
    pub field: u64,
    /// Number of random complexes to check.
    #[arg(long)]
    pub random: Option<usize>,
    /// Largest ground set for random complexes.
    #[arg(long = "n", default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

enum Failure {
    Engine(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let level = if cli.verbose { "info" } else { "warn" };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).try_init();
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(Failure::Engine(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InconsistentTable { .. }
                | Error::TransferStep { .. }
                | Error::FieldDependenceBug(..) => EXIT_FAIL,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Info(a) => cmd_info(a, out),
        Command::Betti(a) => cmd_betti(a, out),
        Command::Transfer(a) => cmd_transfer(a, out),
        Command::Matroid(m) => cmd_matroid(m, out),
        Command::Check(a) => cmd_check(a, out),
    }
}

fn validation(strict: bool) -> Validation {
    if strict {
        Validation::Strict
    } else {
        Validation::Auto
    }
}

fn is_bases_file(path: &Path, flag: bool) -> bool {
    flag || path.extension().is_some_and(|e| e == "bases")
}

fn write_table(out: &mut dyn Write, table: &BettiTable, format: Format) -> std::io::Result<()> {
    match format {
        Format::Table => write!(out, "{}", table.render_text()),
        Format::Csv => write!(out, "{}", table.to_csv()),
        Format::Json => writeln!(out, "{}", table.to_json()),
    }
}

fn cmd_info(args: &InfoArgs, out: &mut dyn Write) -> Outcome {
    if is_bases_file(&args.file, args.matroid) {
        let m = io::read_matroid(&args.file, validation(args.strict))?;
        writeln!(
            out,
            "n={} r={} bases={} circuits={}",
            m.n(),
            m.rank(),
            m.bases().len(),
            m.circuits().len()
        )?;
    } else {
        let c = io::read_complex(&args.file)?;
        writeln!(
            out,
            "n={} d={} f={} {}",
            c.n(),
            c.dimension(),
            c.f_vector(),
            if c.is_pure() { "pure" } else { "not pure" }
        )?;
    }
    Ok(EXIT_PASS)
}

fn cmd_betti(args: &BettiArgs, out: &mut dyn Write) -> Outcome {
    let p = Prime::new(args.output.field)?;
    let table = if is_bases_file(&args.file, args.matroid) {
        let m = io::read_matroid(&args.file, validation(args.strict))?;
        matroid::matroid_betti(&m, p)?
    } else {
        betti::betti_numbers(&io::read_complex(&args.file)?, p, Convention::Ring)?
    };
    write_table(out, &table.to_convention(args.output.convention.into()), args.output.format)?;
    Ok(EXIT_PASS)
}

fn cmd_transfer(args: &TransferArgs, out: &mut dyn Write) -> Outcome {
    let convention: Convention = args.output.convention.into();
    let (input, complex) = match (&args.table, &args.complex) {
        (Some(path), None) => {
            let table = BettiTable::from_json(&io::read_to_string(path)?)?;
            let input = match args.dim {
                Some(d) => TransferInput::new(table, d)?,
                None => TransferInput::with_inferred_dimension(table)?,
            };
            (input, None)
        }
        (None, Some(path)) => {
            let complex = io::read_complex(path)?;
            let p = Prime::new(args.output.field)?;
            let table = betti::betti_numbers(&complex, p, Convention::Ring)?;
            let dim = complex.dimension();
            if args.dim.is_some_and(|d| d as isize != dim) {
                return Err(Failure::Usage(format!("--dim disagrees with the complex dimension {dim}")));
            }
            if dim < 1 {
                return Err(Failure::Usage(format!("complex of dimension {dim} has no lower skeleton")));
            }
            (TransferInput::new(table, dim as usize)?, Some(complex))
        }
        _ => return Err(Failure::Usage("give exactly one of --table and --complex".into())),
    };
    log::info!("transferring from dimension {} over GF({})", input.dim(), input.table().field());
    let chain = transfer::transfer_chain(&input, args.steps)?;
    let mut code = EXIT_PASS;
    for (k, table) in chain.iter().enumerate() {
        if args.steps > 0 && args.output.format == Format::Table {
            writeln!(out, "# skeleton of dimension {}", input.dim() - k - 1)?;
        }
        write_table(out, &table.to_convention(convention), args.output.format)?;
        if let (true, Some(c)) = (args.verify, &complex) {
            let dim = input.dim() as isize - k as isize - if args.steps > 0 { 1 } else { 0 };
            let direct = betti::betti_numbers(&c.skeleton(dim)?, table.field(), Convention::Ring)?;
            if &direct == table {
                writeln!(out, "MATCH")?;
            } else {
                writeln!(out, "MISMATCH (direct computation follows)")?;
                write!(out, "{}", direct.render_text())?;
                code = EXIT_FAIL;
            }
        }
    }
    Ok(code)
}

fn write_bases(out: &mut dyn Write, m: &Matroid) -> std::io::Result<()> {
    write!(out, "{}", io::format_set_family(m.n(), m.bases().iter().map(|b| bits::labels(*b))))
}

fn cmd_matroid(command: &MatroidCommand, out: &mut dyn Write) -> Outcome {
    match command {
        MatroidCommand::Truncate { index, file, strict } => {
            let m = io::read_matroid(file, validation(*strict))?;
            write_bases(out, &m.truncation(*index)?)?;
            Ok(EXIT_PASS)
        }
        MatroidCommand::Elongate { index, file, strict } => {
            let m = io::read_matroid(file, validation(*strict))?;
            write_bases(out, &m.elongation(*index)?)?;
            Ok(EXIT_PASS)
        }
        MatroidCommand::Dual { file, strict } => {
            let m = io::read_matroid(file, validation(*strict))?;
            write_bases(out, &m.dual())?;
            Ok(EXIT_PASS)
        }
        MatroidCommand::Betti { file, strict, output } => {
            let m = io::read_matroid(file, validation(*strict))?;
            let table = matroid::matroid_betti(&m, Prime::new(output.field)?)?;
            write_table(out, &table.to_convention(output.convention.into()), output.format)?;
            Ok(EXIT_PASS)
        }
        MatroidCommand::ShiftCheck { file, level, strict } => {
            let m = io::read_matroid(file, validation(*strict))?;
            let levels: Vec<usize> = match level {
                Some(l) => vec![*l],
                None => (0..m.n() - m.rank()).collect(),
            };
            if levels.is_empty() {
                writeln!(out, "free matroid: no elongation levels to compare")?;
            }
            let mut all = true;
            for l in levels {
                let ok = matroid::elongation_shift_check(&m, l)?;
                all &= ok;
                writeln!(out, "l={l}: {ok}")?;
            }
            Ok(if all { EXIT_PASS } else { EXIT_FAIL })
        }
        MatroidCommand::Counterexample => {
            let report = matroid::counterexample_report()?;
            write!(out, "{}", report.render())?;
            Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

/// One line of the verification suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: Option<bool>,
    pub detail: String,
}

impl CheckLine {
    fn verdict(&self) -> &'static str {
        match self.passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "SKIP",
        }
    }
}

/// Runs every check on one complex over GF(p).
pub fn verify_complex(complex: &SimplicialComplex, p: Prime) -> crate::error::Result<Vec<CheckLine>> {
    let table = betti::betti_numbers(complex, p, Convention::Ring)?;
    let dim = complex.dimension();
    let mut lines = Vec::new();

    let hilbert = betti::hilbert_identity(complex, &table);
    lines.push(CheckLine {
        name: "hilbert-identity",
        passed: Some(hilbert.holds()),
        detail: if hilbert.holds() {
            String::new()
        } else {
            format!("faces: {} / betti: {}", hilbert.from_faces, hilbert.from_betti)
        },
    });

    let vanishing = betti::vanishing_check(&table, dim);
    lines.push(CheckLine {
        name: "vanishing j>=d+i+2",
        passed: Some(vanishing.holds()),
        detail: vanishing
            .violations
            .iter()
            .map(|(i, j, b)| format!("β_{{{i},{j}}}={b}"))
            .collect::<Vec<_>>()
            .join(" "),
    });

    if dim < 1 {
        for name in ["pd-bound", "cm-inheritance", "transfer-vs-direct"] {
            lines.push(CheckLine { name, passed: None, detail: format!("dimension {dim}") });
        }
        return Ok(lines);
    }

    let comparison = SkeletonComparison::compute(complex, p)?;
    lines.push(CheckLine {
        name: "pd-bound",
        passed: Some(comparison.pd_bound_holds()),
        detail: format!(
            "pd={} pd(skel)={}",
            comparison.complex.projective_dimension, comparison.skeleton.projective_dimension
        ),
    });
    lines.push(CheckLine {
        name: "cm-inheritance",
        passed: Some(comparison.cm_inherited()),
        detail: format!("cm={} cm(skel)={}", comparison.complex.cohen_macaulay, comparison.skeleton.cohen_macaulay),
    });

    let input = TransferInput::new(table, dim as usize)?;
    let transferred = transfer::transfer(&input)?;
    let direct = betti::betti_numbers(&complex.skeleton(dim - 1)?, p, Convention::Ring)?;
    lines.push(CheckLine {
        name: "transfer-vs-direct",
        passed: Some(transferred == direct),
        detail: String::new(),
    });
    Ok(lines)
}

fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Outcome {
    let p = Prime::new(args.field)?;
    if let Some(path) = &args.file {
        let complex = io::read_complex(path)?;
        let lines = verify_complex(&complex, p)?;
        let mut ok = true;
        for line in &lines {
            ok &= line.passed != Some(false);
            if line.detail.is_empty() {
                writeln!(out, "[{}] {}", line.verdict(), line.name)?;
            } else {
                writeln!(out, "[{}] {} ({})", line.verdict(), line.name, line.detail)?;
            }
        }
        return Ok(if ok { EXIT_PASS } else { EXIT_FAIL });
    }

    let count = args.random.unwrap_or(0);
    if args.max_n < 3 || args.max_n > betti::HOCHSTER_CAP {
        return Err(Failure::Usage(format!("--n must lie in 3..={}", betti::HOCHSTER_CAP)));
    }
    let corpus = gen::complex_corpus(args.seed, count, args.max_n);
    let mut failures = 0;
    for (k, complex) in corpus.iter().enumerate() {
        let lines = verify_complex(complex, p)?;
        for line in lines.iter().filter(|l| l.passed == Some(false)) {
            failures += 1;
            writeln!(out, "[FAIL] #{k} {}: {} {}", complex, line.name, line.detail)?;
        }
    }
    writeln!(
        out,
        "{} complexes over GF({p}), seed {}: {}",
        corpus.len(),
        args.seed,
        if failures == 0 { "all checks pass".to_string() } else { format!("{failures} failures") }
    )?;
    Ok(if failures == 0 { EXIT_PASS } else { EXIT_FAIL })
}
