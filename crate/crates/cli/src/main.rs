use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use cadence_core::alphabet::{parse_symbols, Symbol};
use cadence_core::cadence::{detect_3cadence_with, detect_3subcadence, Mode};
use cadence_core::gadgets::{gadget_cadence_char1, gadget_cadence_ternary3, gadget_lr3, GadgetError};
use cadence_core::lr::{detect_lr, DetectError};
use cadence_core::oracle::{enum_cadences, enum_lr, enum_subcadences, OracleError, OracleReport};
use cadence_core::slp::{Slp, SlpError};
use cadence_core::view::{Interval, StringView};
use cadence_core::witness::{Witness, WitnessKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod bench;

const DEFAULT_MAX_LEN: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "cadence", version, about = "Find 3-cadences in plain and grammar-compressed strings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Search one input for a witness and print a JSON result.
    Detect {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, value_enum, default_value = "3cadence")]
        task: Task,
        /// Start interval for `lr3`, written `lo..hi` (1-based, inclusive).
        #[arg(long = "L", value_parser = parse_interval)]
        l: Option<Interval>,
        /// End interval for `lr3`, written `lo..hi` (1-based, inclusive).
        #[arg(long = "R", value_parser = parse_interval)]
        r: Option<Interval>,
        /// Use exhaustive search on the decompressed text instead.
        #[arg(long)]
        oracle: bool,
        /// Largest expansion the oracle may decompress.
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: u64,
    },
    /// Build a reduction instance from two patterns.
    Gadget {
        #[arg(long, value_enum)]
        kind: GadgetArg,
        #[arg(long, default_value_t = 3)]
        k: u64,
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        pprime: PathBuf,
        /// Output prefix; writes `OUT.slp` and `OUT.json`.
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Compare the detector with exhaustive search.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: u64,
    },
    /// Print the expansion of an input.
    Decompress {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        max_len: u64,
    },
    /// Print CSV work counters for a family of generated inputs.
    Bench {
        #[arg(long, value_enum)]
        family: bench::Family,
        /// Comma-separated sizes with optional k/M/G suffixes; `A..B` means
        /// A, 2A, 4A, ... up to B.
        #[arg(long, value_parser = bench::parse_sizes)]
        sizes: bench::Sizes,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Plain,
    Slp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Task {
    #[value(name = "3cadence")]
    Cadence3,
    #[value(name = "lr3")]
    Lr3,
    #[value(name = "3subcadence")]
    SubCadence3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GadgetArg {
    Char1,
    Ternary3,
    Lr3,
}

/// Failure mapped to the process exit status.
#[derive(Debug)]
enum Failure {
    /// Bad flags or unreadable input (exit 2).
    Usage(String),
    /// Input outside what the requested computation supports (exit 3).
    Capability(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Capability(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Capability(m) => m,
        }
    }
}

impl From<DetectError> for Failure {
    fn from(e: DetectError) -> Self {
        match e {
            DetectError::AlphabetMismatch(_) => Failure::Capability(e.to_string()),
            DetectError::Internal(_) => Failure::Capability(format!("internal error: {e}")),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Capability(e.to_string())
    }
}

fn slp_failure(e: SlpError) -> Failure {
    match e {
        SlpError::TooLong { .. } => Failure::Capability(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn parse_interval(s: &str) -> Result<Interval, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo == 0 || lo > hi {
        return Err(format!("interval {s:?} needs 1 <= lo <= hi"));
    }
    Ok(Interval::new(lo, hi))
}

/// A loaded input: the grammar for SLP files, the symbols for plain text.
struct Input {
    format: Format,
    plain: Option<Vec<Symbol>>,
    slp: Option<Slp>,
}

impl Input {
    fn len(&self) -> u64 {
        match (&self.plain, &self.slp) {
            (Some(s), _) => s.len() as u64,
            (_, Some(g)) => g.len(),
            _ => 0,
        }
    }

    fn view(&self) -> StringView {
        match (&self.plain, &self.slp) {
            (Some(s), _) => StringView::plain(s.clone()),
            (_, Some(g)) => StringView::slp(g.clone()),
            _ => StringView::plain(Vec::new()),
        }
    }

    fn symbols(&self, max_len: u64) -> Result<Vec<Symbol>, Failure> {
        match (&self.plain, &self.slp) {
            (Some(s), _) if s.len() as u64 <= max_len => Ok(s.clone()),
            (Some(s), _) => Err(Failure::Capability(format!(
                "input has {} characters, more than the limit of {max_len}",
                s.len()
            ))),
            (_, Some(g)) => g.expand_symbols(max_len).map_err(slp_failure),
            _ => Ok(Vec::new()),
        }
    }

    fn rules(&self) -> Option<usize> {
        self.slp.as_ref().map(Slp::rule_count)
    }

    fn into_slp(self) -> Result<Slp, Failure> {
        match (self.plain, self.slp) {
            (_, Some(g)) => Ok(g),
            (Some(s), _) => Slp::from_symbols(&s).map_err(slp_failure),
            _ => Err(Failure::Usage("empty input".into())),
        }
    }
}

fn parse_plain(text: &str) -> Result<Vec<Symbol>, Failure> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    parse_symbols(body).map_err(|c| Failure::Usage(format!("invalid character {c:?} in plain input")))
}

fn load(path: &Path, format: Option<Format>) -> Result<Input, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let format = format.unwrap_or_else(|| {
        if text == "SLPv1" || text.starts_with("SLPv1\n") {
            Format::Slp
        } else {
            Format::Plain
        }
    });
    Ok(match format {
        Format::Plain => Input {
            format,
            plain: Some(parse_plain(&text)?),
            slp: None,
        },
        Format::Slp => Input {
            format,
            plain: None,
            slp: Some(Slp::parse_slpv1(&text).map_err(slp_failure)?),
        },
    })
}

#[derive(Serialize)]
struct WitnessOut {
    i: u64,
    d: u64,
    k: u64,
    char: String,
    kind: &'static str,
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        WitnessOut {
            i: w.i,
            d: w.d,
            k: w.k,
            char: w.symbol.as_char().to_string(),
            kind: match w.kind {
                WitnessKind::SubCadence => "SubCadence",
                WitnessKind::Cadence => "Cadence",
                WitnessKind::LrCadence { .. } => "LRCadence",
            },
        }
    }
}

#[derive(Serialize)]
struct StatsOut {
    char_accesses: u64,
    step_iterations: u64,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct InputOut {
    format: Format,
    n: u64,
    rules: Option<usize>,
}

#[derive(Serialize)]
struct DetectionResult {
    found: bool,
    witness: Option<WitnessOut>,
    stats: StatsOut,
    input: InputOut,
}

struct Outcome {
    witness: Option<Witness>,
    char_accesses: u64,
    steps: u64,
}

fn first(rep: OracleReport) -> Option<Witness> {
    rep.witnesses.into_iter().next()
}

fn lr_intervals(l: Option<Interval>, r: Option<Interval>) -> Result<(Interval, Interval), Failure> {
    match (l, r) {
        (Some(l), Some(r)) => Ok((l, r)),
        _ => Err(Failure::Usage("--task lr3 needs both --L and --R".into())),
    }
}

fn run_detector(input: &Input, task: Task, l: Option<Interval>, r: Option<Interval>) -> Result<Outcome, Failure> {
    let v = input.view();
    v.reset_stats();
    let (witness, steps) = match task {
        Task::Cadence3 => {
            let (w, rep) = detect_3cadence_with(&v, Mode::for_view(&v))?;
            (w, rep.total_steps())
        }
        Task::Lr3 => {
            let (l, r) = lr_intervals(l, r)?;
            (detect_lr(&v, l, r)?, 0)
        }
        Task::SubCadence3 => {
            if v.alphabet_size() > 2 {
                return Err(Failure::Capability(
                    "3subcadence without --oracle supports binary input only".into(),
                ));
            }
            (detect_3subcadence(&v), 0)
        }
    };
    if let Some(w) = &witness {
        if !w.verify(&v) {
            return Err(Failure::Capability(format!("internal error: uncertified witness {w:?}")));
        }
    }
    Ok(Outcome {
        witness,
        char_accesses: v.stats().char_accesses,
        steps,
    })
}

fn run_oracle(
    input: &Input,
    task: Task,
    l: Option<Interval>,
    r: Option<Interval>,
    max_len: u64,
) -> Result<Outcome, Failure> {
    let s = input.symbols(max_len)?;
    let rep = match task {
        Task::Cadence3 => enum_cadences(&s, 3, None)?,
        Task::SubCadence3 => enum_subcadences(&s, 3, None)?,
        Task::Lr3 => {
            let (l, r) = lr_intervals(l, r)?;
            let n = s.len() as u64;
            if l.hi > n || r.hi > n {
                return Err(Failure::Usage(format!("L = {l} or R = {r} exceeds n = {n}")));
            }
            enum_lr(&s, l, r, 3, None)?
        }
    };
    Ok(Outcome {
        witness: first(rep),
        char_accesses: s.len() as u64,
        steps: 0,
    })
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn found_code(found: bool) -> u8 {
    if found {
        0
    } else {
        1
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_detect(
    input: &Path,
    format: Option<Format>,
    task: Task,
    l: Option<Interval>,
    r: Option<Interval>,
    oracle: bool,
    max_len: u64,
) -> Result<u8, Failure> {
    let input = load(input, format)?;
    let start = Instant::now();
    let out = if oracle {
        run_oracle(&input, task, l, r, max_len)?
    } else {
        run_detector(&input, task, l, r)?
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let found = out.witness.is_some();
    print_json(&DetectionResult {
        found,
        witness: out.witness.as_ref().map(WitnessOut::from),
        stats: StatsOut {
            char_accesses: out.char_accesses,
            step_iterations: out.steps,
            elapsed_ms,
        },
        input: InputOut {
            format: input.format,
            n: input.len(),
            rules: input.rules(),
        },
    });
    Ok(found_code(found))
}

fn gadget_failure(e: GadgetError) -> Failure {
    Failure::Usage(e.to_string())
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn cmd_gadget(kind: GadgetArg, k: u64, p: &Path, pp: &Path, out: &Path) -> Result<u8, Failure> {
    let p = load(p, None)?.into_slp()?;
    let pp = load(pp, None)?.into_slp()?;
    let g = match kind {
        GadgetArg::Char1 => gadget_cadence_char1(&p, &pp, k),
        GadgetArg::Ternary3 => gadget_cadence_ternary3(&p, &pp),
        GadgetArg::Lr3 => gadget_lr3(&p, &pp),
    }
    .map_err(gadget_failure)?;
    let write = |path: PathBuf, body: String| {
        fs::write(&path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    };
    write(with_extension(out, "slp"), g.slp.to_slpv1())?;
    let sidecar = serde_json::to_string_pretty(&g.sidecar()).expect("serializable");
    write(with_extension(out, "json"), sidecar + "\n")?;
    Ok(0)
}

#[derive(Serialize)]
struct VerifyReport {
    agree: bool,
    detector: bool,
    oracle: bool,
    witness: Option<WitnessOut>,
    n: u64,
}

fn cmd_verify(input: &Path, format: Option<Format>, max_len: u64) -> Result<u8, Failure> {
    let input = load(input, format)?;
    let oracle = run_oracle(&input, Task::Cadence3, None, None, max_len)?;
    let det = run_detector(&input, Task::Cadence3, None, None)?;
    let agree = oracle.witness.is_some() == det.witness.is_some();
    print_json(&VerifyReport {
        agree,
        detector: det.witness.is_some(),
        oracle: oracle.witness.is_some(),
        witness: det.witness.as_ref().map(WitnessOut::from),
        n: input.len(),
    });
    Ok(found_code(agree))
}

fn cmd_decompress(input: &Path, format: Option<Format>, max_len: u64) -> Result<u8, Failure> {
    let input = load(input, format)?;
    let s = input.symbols(max_len)?;
    println!("{}", cadence_core::alphabet::symbols_to_string(&s));
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.cmd {
        Cmd::Detect {
            input,
            format,
            task,
            l,
            r,
            oracle,
            max_len,
        } => cmd_detect(&input, format, task, l, r, oracle, max_len),
        Cmd::Gadget {
            kind,
            k,
            p,
            pprime,
            out,
        } => cmd_gadget(kind, k, &p, &pprime, &out),
        Cmd::Verify {
            input,
            format,
            max_len,
        } => cmd_verify(&input, format, max_len),
        Cmd::Decompress {
            input,
            format,
            max_len,
        } => cmd_decompress(&input, format, max_len),
        Cmd::Bench { family, sizes, seed } => bench::run(family, &sizes, seed).map_err(Failure::Capability),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
