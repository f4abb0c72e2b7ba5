//! Command-line front end: `gen`, `verify`, `search`, `graph` and `test`.
//!
//! Exit codes: 0 success or pass, 1 verification or test failure, 2 usage,
//! parse or I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, ParseError, Result};
use crate::func::{self, Limits, VectorOfImages};
use crate::generator::{Generator, GeneratorConfig};
use crate::graph;
use crate::sources::{parse_seed, Scripted, Source, XorShift64};
use crate::stats::{self, BatteryConfig, ExportFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default PRNG2 seed (PRNG1 defaults to the reference xorshift seed).
pub const DEFAULT_PRNG2_SEED: u64 = 0x2545_F491_4F6C_DD1D;

#[derive(Debug, Parser)]
#[command(
    name = "ciprng",
    version,
    about = "Chaotic-iteration PRNG toolkit: generate streams, verify and search iteration functions, export iteration graphs, run a statistical battery"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub porcelain: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the generator and write its output stream.
    Gen(GenArgs),
    /// Check balance (row-permutation oracle and paired-mutation rule) and chaos (strong connectivity) of a function file.
    Verify(VerifyArgs),
    /// Enumerate balanced (and by default chaotic) functions reachable from the negation by paired mutations.
    Search(SearchArgs),
    /// Write the iteration graph of a function in DOT format.
    Graph(GraphArgs),
    /// Run the statistical battery over a stream file.
    Test(TestArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Iteration function file (first line N, second line the 2^N images).
    #[arg(long, short = 'f', conflicts_with = "n_bits")]
    pub function: Option<PathBuf>,

    /// State width N; the iteration function is then the negation.
    #[arg(long, short = 'n')]
    pub n_bits: Option<u32>,

    /// Round-length constant k (rounds apply PRNG1() + k updates). Strict mode requires k > 3N and defaults to 3N + 1.
    #[arg(short = 'k', long = "k")]
    pub k: Option<u32>,

    /// Compatibility mode: accept any k >= 1 (e.g. k = N = 4).
    #[arg(long)]
    pub compat: bool,

    /// Initial state x^0 (decimal, 0x.. or 0b..).
    #[arg(long, default_value = "0")]
    pub seed_state: String,

    /// PRNG1 xorshift seed, decimal or 0x-hex [default: 88172645463325252].
    #[arg(long, conflicts_with = "prng1_script")]
    pub prng1_seed: Option<String>,

    /// PRNG1 replay script: comma-separated bits, or @FILE.
    #[arg(long)]
    pub prng1_script: Option<String>,

    /// PRNG2 xorshift seed, decimal or 0x-hex [default: 0x2545F4914F6CDD1D].
    #[arg(long, conflicts_with = "prng2_script")]
    pub prng2_seed: Option<String>,

    /// PRNG2 replay script: comma-separated coordinates in 1..=N, or @FILE.
    #[arg(long)]
    pub prng2_script: Option<String>,

    /// Restart scripts from the beginning instead of failing when exhausted.
    #[arg(long)]
    pub script_cycle: bool,

    /// Number of rounds to emit.
    #[arg(long, conflicts_with = "bytes", required_unless_present = "bytes")]
    pub rounds: Option<usize>,

    /// Number of bytes to emit (ceil(8 * bytes / N) rounds).
    #[arg(long)]
    pub bytes: Option<usize>,

    /// Output encoding.
    #[arg(long, value_enum, default_value_t = GenFormat::Ascii)]
    pub format: GenFormat,

    /// Prepend the initial state to the bit stream (rounds only).
    #[arg(long, conflicts_with = "bytes")]
    pub include_seed: bool,

    /// Write to FILE instead of standard output.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFormat {
    /// '0'/'1' characters followed by a newline (accepted by the NIST STS tool).
    Ascii,
    /// Bytes packed MSB-first.
    Raw,
    /// One decimal round output per line.
    States,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Function file.
    pub function: PathBuf,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, short = 'n')]
    pub n_bits: u32,

    /// Maximum number of paired mutations applied to the negation.
    #[arg(long, short = 'm')]
    pub max_mutations: usize,

    /// Keep balanced functions whose iteration graph is not strongly connected.
    #[arg(long)]
    pub no_chaos: bool,

    /// Abort when more candidates than this are visited.
    #[arg(long, default_value_t = Limits::default().max_candidates)]
    pub max_candidates: usize,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Function file.
    #[arg(required_unless_present = "negation", conflicts_with = "negation")]
    pub function: Option<PathBuf>,

    /// Use the N-bit negation instead of a file.
    #[arg(long, value_name = "N")]
    pub negation: Option<u32>,

    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TestArgs {
    /// Stream file.
    pub input: PathBuf,

    /// Stream encoding.
    #[arg(long, value_enum, default_value_t = StreamFormat::Ascii)]
    pub format: StreamFormat,

    /// Significance level.
    #[arg(long, default_value_t = 0.01)]
    pub alpha: f64,

    /// Block length of the block-frequency test.
    #[arg(long, default_value_t = 128)]
    pub block_len: usize,

    /// Pattern length of the serial test.
    #[arg(long, default_value_t = 10)]
    pub serial_m: u32,

    /// Block length of the approximate-entropy test.
    #[arg(long, default_value_t = 10)]
    pub apen_m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StreamFormat {
    Ascii,
    Raw,
}

impl From<StreamFormat> for ExportFormat {
    fn from(f: StreamFormat) -> Self {
        match f {
            StreamFormat::Ascii => ExportFormat::Ascii01,
            StreamFormat::Raw => ExportFormat::RawBytes,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(args, out),
        Command::Verify(args) => cmd_verify(&args.function, cli.porcelain, out),
        Command::Search(args) => cmd_search(args, cli.porcelain, out),
        Command::Graph(args) => cmd_graph(args, out),
        Command::Test(args) => cmd_test(args, cli.porcelain, out),
    }
}

fn read_function(path: &Path) -> Result<VectorOfImages> {
    let text = fs::read_to_string(path)?;
    VectorOfImages::parse(&text).map_err(|e| match e {
        Error::Parse(source) => Error::ParseFile {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

fn parse_state(text: &str) -> Result<u32> {
    let t = text.trim();
    let parsed = if let Some(b) = t.strip_prefix("0b") {
        u32::from_str_radix(b, 2)
    } else if let Some(h) = t.strip_prefix("0x") {
        u32::from_str_radix(h, 16)
    } else {
        t.parse()
    };
    parsed.map_err(|_| ParseError::new(1, 1, format!("invalid state {t:?}")).into())
}

fn script_values(arg: &str) -> Result<Vec<u64>> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)?,
        None => arg.to_string(),
    };
    Ok(Scripted::parse_list(text.trim())?)
}

fn make_source(seed: Option<&str>, script: Option<&str>, default_seed: u64, cycle: bool) -> Result<Source> {
    if let Some(arg) = script {
        let values = script_values(arg)?;
        return Ok(Source::Scripted(if cycle {
            Scripted::cycling(values)
        } else {
            Scripted::new(values)
        }));
    }
    let seed = match seed {
        Some(s) => parse_seed(s)?,
        None => default_seed,
    };
    Ok(Source::XorShift(XorShift64::new(seed)?))
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let f = match (&args.function, args.n_bits) {
        (Some(path), _) => read_function(path)?,
        (None, Some(n)) => VectorOfImages::negation(n)?,
        (None, None) => return Err(Error::Config("either --function or --n-bits is required".into())),
    };
    let n = f.n_bits();
    let k = args.k.unwrap_or_else(|| GeneratorConfig::strict_k(n));
    let mut config = GeneratorConfig::new(f, k, parse_state(&args.seed_state)?);
    if args.compat {
        config = config.compat();
    }
    let prng1 = make_source(
        args.prng1_seed.as_deref(),
        args.prng1_script.as_deref(),
        XorShift64::REFERENCE_SEED,
        args.script_cycle,
    )?;
    let prng2 = make_source(
        args.prng2_seed.as_deref(),
        args.prng2_script.as_deref(),
        DEFAULT_PRNG2_SEED,
        args.script_cycle,
    )?;
    let mut generator = Generator::new(config, prng1, prng2)?;

    let payload: Vec<u8> = match (args.format, args.rounds, args.bytes) {
        (GenFormat::States, Some(rounds), _) => {
            let mut text = String::new();
            if args.include_seed {
                text.push_str(&format!("{}\n", generator.state()));
            }
            for s in generator.states(rounds)? {
                text.push_str(&format!("{s}\n"));
            }
            text.into_bytes()
        }
        (GenFormat::States, None, _) => {
            return Err(Error::Config("--format states needs --rounds".into()))
        }
        (format, Some(rounds), _) => {
            let bits = generator.bit_stream(rounds, args.include_seed)?;
            let export = if format == GenFormat::Raw {
                ExportFormat::RawBytes
            } else {
                ExportFormat::Ascii01
            };
            stats::encode_stream(&bits, export)?
        }
        (format, None, Some(bytes)) => {
            let packed = generator.byte_stream(bytes)?;
            if format == GenFormat::Raw {
                packed
            } else {
                stats::encode_stream(&crate::bits::unpack_msb_first(&packed), ExportFormat::Ascii01)?
            }
        }
        (_, None, None) => return Err(Error::Config("either --rounds or --bytes is required".into())),
    };

    match &args.output {
        Some(path) => fs::write(path, payload)?,
        None => out.write_all(&payload)?,
    }
    Ok(EXIT_OK)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_verify(path: &Path, porcelain: bool, out: &mut dyn Write) -> Result<i32> {
    let f = read_function(path)?;
    let oracle = func::is_balanced(&f);
    let rule = func::balance_rule_check(&f);
    let chaos = graph::chaos_verdict(&f)?;
    let ok = oracle.balanced && chaos.strongly_connected;

    if porcelain {
        writeln!(out, "balanced\t{}", yes_no(oracle.balanced))?;
        writeln!(out, "balance-rule\t{}", if rule.balanced { "accept" } else { "reject" })?;
        writeln!(out, "chaotic\t{}", yes_no(chaos.strongly_connected))?;
        writeln!(out, "scc-count\t{}", chaos.scc_count)?;
    } else {
        writeln!(out, "function: {} (N = {})", path.display(), f.n_bits())?;
        write!(out, "row-permutation balance: {}", yes_no(oracle.balanced))?;
        match oracle.first_violation {
            Some(v) => writeln!(out, " ({v:?})")?,
            None => writeln!(out)?,
        }
        write!(out, "paired-mutation rule: {}", if rule.balanced { "accept" } else { "reject" })?;
        match rule.first_violation {
            Some(v) => writeln!(out, " ({v:?})")?,
            None => writeln!(out)?,
        }
        write!(
            out,
            "strongly connected: {} ({} component{})",
            yes_no(chaos.strongly_connected),
            chaos.scc_count,
            if chaos.scc_count == 1 { "" } else { "s" }
        )?;
        match chaos.witness {
            Some((from, to)) => writeln!(out, ", no path from {from} to {to}")?,
            None => writeln!(out)?,
        }
        writeln!(
            out,
            "balanced: {}, chaotic: {}",
            yes_no(oracle.balanced),
            yes_no(chaos.strongly_connected)
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

pub fn cmd_search(args: &SearchArgs, porcelain: bool, out: &mut dyn Write) -> Result<i32> {
    let limits = Limits {
        max_candidates: args.max_candidates,
        ..Limits::default()
    };
    let found =
        func::search_functions_with_limits(args.n_bits, args.max_mutations, !args.no_chaos, &limits)?;
    for f in &found {
        let images: Vec<String> = f.images().iter().map(u32::to_string).collect();
        writeln!(out, "{}", images.join(" "))?;
    }
    if !porcelain {
        writeln!(
            out,
            "# {} function(s), N = {}, up to {} paired mutation(s){}",
            found.len(),
            args.n_bits,
            args.max_mutations,
            if args.no_chaos { "" } else { ", chaotic only" }
        )?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_graph(args: &GraphArgs, out: &mut dyn Write) -> Result<i32> {
    let f = match (&args.function, args.negation) {
        (Some(path), _) => read_function(path)?,
        (None, Some(n)) => VectorOfImages::negation(n)?,
        (None, None) => return Err(Error::Config("a function file or --negation is required".into())),
    };
    let dot = graph::export_dot(&graph::build_graph(&f)?);
    match &args.output {
        Some(path) => fs::write(path, dot)?,
        None => out.write_all(dot.as_bytes())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_test(args: &TestArgs, porcelain: bool, out: &mut dyn Write) -> Result<i32> {
    let data = fs::read(&args.input)?;
    let bits = stats::import_stream(&data, args.format.into())?;
    let config = BatteryConfig {
        alpha: args.alpha,
        block_frequency_len: args.block_len,
        serial_m: args.serial_m,
        approximate_entropy_m: args.apen_m,
        ..BatteryConfig::default()
    };
    let report = stats::run_battery(&bits, &config)?;
    if porcelain {
        out.write_all(report.to_porcelain().as_bytes())?;
    } else {
        out.write_all(report.to_text().as_bytes())?;
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_parsing() {
        assert_eq!(parse_state("0b0100").unwrap(), 4);
        assert_eq!(parse_state("0x0f").unwrap(), 15);
        assert_eq!(parse_state("7").unwrap(), 7);
        assert!(parse_state("seven").is_err());
    }

    #[test]
    fn conflicting_flags_rejected_before_work() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            ["ciprng", "gen", "-n", "4", "--rounds", "3", "--bytes", "2"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        let code = run(
            ["ciprng", "gen", "-n", "4", "--rounds", "3", "--prng1-seed", "1", "--prng1-script", "0"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn help_is_not_an_error() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["ciprng", "gen", "--help"], &mut out, &mut err), EXIT_OK);
        let help = String::from_utf8(out).unwrap();
        assert!(help.contains("k > 3N"), "{help}");
        assert!(help.contains("--compat"));
    }
}
