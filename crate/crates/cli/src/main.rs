//! Command-line front-end: build arrays, verify against the oracles,
//! generate inputs, benchmark, and compare suffixes.

// arrays are 1-based over framed positions; indexed loops read better here
#![allow(clippy::needless_range_loop)]

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lyndon_arrays::bench::{
    self, format_paired_table, format_records, linearity_check, Algorithm, BenchInput, ReportFormat,
};
use lyndon_arrays::checks;
use lyndon_arrays::gen::{generate, Family, FamilySpec, Fraction};
use lyndon_arrays::suffix_rules::{JointBuild, SuffixOrdering};
use lyndon_arrays::text::{AlphabetOrder, FramedText, SentinelMode};
use lyndon_arrays::{build_inverse, build_standard, Error, Result};

/// Directory prepended to relative `--out` paths when set.
const OUT_DIR_ENV: &str = "LYNDON_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "lyndon",
    about = "Lyndon and inverse Lyndon arrays in linear time",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the nearest-suffix arrays for one word
    Build(BuildArgs),
    /// Cross-check the builders against the brute-force oracles
    Verify(VerifyArgs),
    /// Generate a deterministic input file plus a sidecar descriptor
    Gen(GenArgs),
    /// Time both builders and report counters and ratios
    Bench(BenchArgs),
    /// Order suffix pairs with the constant-time rules
    Compare(CompareArgs),
}

#[derive(Args)]
struct InputSource {
    /// Interior word given inline (bytes, natural byte order)
    #[arg(long, conflicts_with = "input")]
    inline: Option<String>,
    /// Read the interior word from a raw byte file
    #[arg(long)]
    input: Option<PathBuf>,
}

impl InputSource {
    fn load(&self) -> Result<Vec<u8>> {
        match (&self.inline, &self.input) {
            (Some(s), None) => Ok(s.as_bytes().to_vec()),
            (None, Some(p)) => Ok(std::fs::read(p)?),
            _ => Err(Error::InvalidInput(
                "exactly one of --inline or --input is required".into(),
            )),
        }
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    source: InputSource,
    /// Treat the input file as little-endian u32 records under natural
    /// integer order
    #[arg(long, requires = "input")]
    u32le: bool,
    /// Which arrays to build: standard, inverse, or both
    #[arg(long, default_value = "standard")]
    mode: String,
    /// Output format: csv, table, or json-lines
    #[arg(long, default_value = "table")]
    format: String,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: InputSource,
    /// Sweep every word over the first SIGMA letters up to length MAXLEN
    #[arg(long, num_args = 2, value_names = ["SIGMA", "MAXLEN"], conflicts_with_all = ["inline", "input"])]
    exhaustive: Option<Vec<usize>>,
    /// Longest single word the verifier accepts
    #[arg(long, default_value_t = 4096)]
    threshold: usize,
}

#[derive(Args)]
struct GenArgs {
    /// random, fibonacci, thue-morse, run-rich, or border-heavy
    #[arg(long)]
    family: String,
    /// Interior length
    #[arg(long)]
    n: usize,
    /// Alphabet size (random and border-heavy families)
    #[arg(long, default_value_t = 2)]
    sigma: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Border fraction such as 1/4 or 0.25 (border-heavy family)
    #[arg(long)]
    beta: Option<String>,
    /// Output file; the descriptor goes to the same path with `.meta`
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Input suite: random, structured, or border
    #[arg(long)]
    suite: Option<String>,
    /// Benchmark these raw byte files instead of a generated suite
    #[arg(long, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Comma-separated interior lengths; scientific notation and decade
    /// ranges (1e3..1e6) accepted
    #[arg(long, default_value = "1e3,1e4,1e5")]
    sizes: String,
    /// Comma-separated alphabet sizes for the random suite
    #[arg(long, default_value = "2,4,26")]
    sigmas: String,
    /// Timed repetitions per input after one discarded warm-up
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output format: csv, table, or json-lines
    #[arg(long, default_value = "table")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    source: InputSource,
    /// Framed position pairs, e.g. 4:6,6:8 (position 1 is the sentinel)
    #[arg(long)]
    pairs: String,
    #[arg(long, default_value = "table")]
    format: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Compare(args) => cmd_compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Verification(_) | Error::LinearityViolation { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn resolve_out(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(OUT_DIR_ENV) {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            let path = resolve_out(path);
            std::fs::write(&path, content)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

// ---------------------------------------------------------------- build

enum Word {
    Bytes(Vec<u8>),
    Ints(Vec<u32>),
}

impl Word {
    fn frame(&self, mode: SentinelMode) -> Result<FramedText> {
        match self {
            Word::Bytes(b) => FramedText::from_bytes(b.clone(), mode),
            Word::Ints(v) => {
                let order = AlphabetOrder::natural(v.iter().copied());
                FramedText::with_order(v, &order, mode)
            }
        }
    }

    fn symbol_display(&self, framed_i: usize, framed_len: usize) -> String {
        if framed_i == 1 {
            return "#".into();
        }
        if framed_i == framed_len {
            return "$".into();
        }
        match self {
            Word::Bytes(b) => {
                let byte = b[framed_i - 2];
                if byte.is_ascii_graphic() {
                    (byte as char).to_string()
                } else {
                    format!("\\x{:02x}", byte)
                }
            }
            Word::Ints(v) => v[framed_i - 2].to_string(),
        }
    }
}

fn parse_u32le(bytes: &[u8]) -> Result<Vec<u32>> {
    if !bytes.len().is_multiple_of(4) {
        return Err(Error::InvalidInput(format!(
            "u32le input length {} is not a multiple of 4",
            bytes.len()
        )));
    }
    Ok(bytes
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
        .collect())
}

/// Serializes one build as rows over framed positions. The leading
/// `framed_i` column names the indexing convention: 1-based positions with
/// the sentinels at 1 and framed_len. The symbol column is display-only.
fn render_arrays(
    word: &Word,
    t: &FramedText,
    labels: [&str; 5],
    cols: [&[usize]; 5],
    format: ReportFormat,
) -> String {
    let n = t.framed_len();
    let mut out = String::new();
    match format {
        ReportFormat::Csv => {
            out.push_str(&format!(
                "framed_i,symbol,{},{},{},{},{}\n",
                labels[0], labels[1], labels[2], labels[3], labels[4]
            ));
            for i in 1..=n {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    i,
                    word.symbol_display(i, n),
                    cols[0][i],
                    cols[1][i],
                    cols[2][i],
                    cols[3][i],
                    cols[4][i]
                ));
            }
        }
        ReportFormat::Table => {
            out.push_str(&format!(
                "{:>8} {:>6} {:>9} {:>9} {:>9} {:>9} {:>10}\n",
                "framed_i", "symbol", labels[0], labels[1], labels[2], labels[3], labels[4]
            ));
            for i in 1..=n {
                out.push_str(&format!(
                    "{:>8} {:>6} {:>9} {:>9} {:>9} {:>9} {:>10}\n",
                    i,
                    word.symbol_display(i, n),
                    cols[0][i],
                    cols[1][i],
                    cols[2][i],
                    cols[3][i],
                    cols[4][i]
                ));
            }
        }
        ReportFormat::JsonLines => {
            for i in 1..=n {
                out.push_str(&format!(
                    "{{\"framed_i\":{},\"symbol\":\"{}\",\"{}\":{},\"{}\":{},\"{}\":{},\"{}\":{},\"{}\":{}}}\n",
                    i,
                    word.symbol_display(i, n).replace('\\', "\\\\").replace('"', "\\\""),
                    labels[0], cols[0][i],
                    labels[1], cols[1][i],
                    labels[2], cols[2][i],
                    labels[3], cols[3][i],
                    labels[4], cols[4][i]
                ));
            }
        }
    }
    out
}

fn cmd_build(args: BuildArgs) -> Result<()> {
    let format = ReportFormat::parse(&args.format)?;
    let bytes = args.source.load()?;
    let word = if args.u32le {
        Word::Ints(parse_u32le(&bytes)?)
    } else {
        Word::Bytes(bytes)
    };

    let mut out = String::new();
    let (standard, inverse) = match args.mode.as_str() {
        "standard" => (true, false),
        "inverse" => (false, true),
        "both" => (true, true),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown mode {:?}; expected standard, inverse, or both",
                other
            )))
        }
    };
    if standard {
        let t = word.frame(SentinelMode::Standard)?;
        let r = build_standard(&t)?;
        out.push_str(&render_arrays(
            &word,
            &t,
            ["next", "prev", "nlce", "plce", "lambda"],
            [&r.next, &r.prev, &r.nlce, &r.plce, &r.lambda],
            format,
        ));
    }
    if inverse {
        if standard {
            out.push('\n');
        }
        let t = word.frame(SentinelMode::Inverse)?;
        let r = build_inverse(&t)?;
        out.push_str(&render_arrays(
            &word,
            &t,
            ["next_inv", "prev_inv", "nlce", "plce", "lambda_inv"],
            [&r.next_inv, &r.prev_inv, &r.nlce, &r.plce, &r.lambda_inv],
            format,
        ));
    }
    write_or_print(&args.out, &out)
}

// ---------------------------------------------------------------- verify

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    if let Some(ex) = &args.exhaustive {
        let (sigma, max_len) = (ex[0], ex[1]);
        if !(1..=4).contains(&sigma) {
            return Err(Error::InvalidInput(
                "exhaustive sweeps support alphabet sizes 1..=4".into(),
            ));
        }
        let mut total: u64 = 0;
        let mut budget: u64 = 0;
        for len in 1..=max_len as u32 {
            budget = budget.saturating_add((sigma as u64).saturating_pow(len));
        }
        if budget > 2_000_000 {
            return Err(Error::InvalidInput(format!(
                "{} words exceed the exhaustive budget of 2,000,000; lower MAXLEN",
                budget
            )));
        }
        for len in 1..=max_len {
            checks::for_each_word(sigma as u8, len, &mut |w| {
                total += 1;
                checks::verify_word(w).map_err(|e| {
                    Error::Verification(format!(
                        "counterexample {:?}: {}",
                        String::from_utf8_lossy(w),
                        e
                    ))
                })
            })?;
            println!("length {:>2}: all {} words ok", len, sigma.pow(len as u32));
        }
        println!("verified {} words exhaustively", total);
        return Ok(());
    }

    let word = args.source.load()?;
    if word.len() > args.threshold {
        return Err(Error::InvalidInput(format!(
            "word of length {} exceeds the verification threshold {}; \
             raise --threshold for a longer (and much slower) run",
            word.len(),
            args.threshold
        )));
    }
    checks::verify_word(&word)?;
    println!("identities and oracle cross-checks ok (n = {})", word.len());

    if word.len() <= 1000 {
        let witnesses = checks::inverse_compatibility_witnesses(&word)?;
        if witnesses.is_empty() {
            println!("no inverse-factor order inversions in this word");
        } else {
            println!(
                "{} position pair(s) where inverse factors order Less but suffixes order Greater:",
                witnesses.len()
            );
            for &(i, j) in witnesses.iter().take(10) {
                println!("  positions {} and {} (interior, 1-based)", i, j);
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- gen

fn cmd_gen(args: GenArgs) -> Result<()> {
    let family = Family::parse(&args.family)?;
    let beta = match &args.beta {
        Some(s) => Some(Fraction::parse(s)?),
        None => None,
    };
    let spec = FamilySpec {
        family,
        n: args.n,
        sigma: args.sigma,
        seed: args.seed,
        border_fraction: beta,
    };
    let bytes = generate(&spec)?;
    let out = resolve_out(&args.out);
    std::fs::write(&out, &bytes)?;
    let meta = out.with_extension(match out.extension() {
        Some(ext) => format!("{}.meta", ext.to_string_lossy()),
        None => "meta".to_string(),
    });
    std::fs::write(&meta, spec.descriptor())?;
    eprintln!(
        "wrote {} ({} bytes) and {}",
        out.display(),
        bytes.len(),
        meta.display()
    );
    Ok(())
}

// ---------------------------------------------------------------- bench

fn parse_size(token: &str) -> Result<usize> {
    let v: f64 = token
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad size {:?}", token)))?;
    if !(v.is_finite() && v >= 1.0) {
        return Err(Error::InvalidInput(format!("bad size {:?}", token)));
    }
    Ok(v as usize)
}

/// Comma-separated lengths; `A..B` expands to decade steps from A up to B.
fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        if let Some((a, b)) = token.split_once("..") {
            let (lo, hi) = (parse_size(a)?, parse_size(b)?);
            if lo > hi {
                return Err(Error::InvalidInput(format!("empty size range {:?}", token)));
            }
            let mut n = lo;
            while n <= hi {
                out.push(n);
                match n.checked_mul(10) {
                    Some(next) => n = next,
                    None => break,
                }
            }
        } else {
            out.push(parse_size(token)?);
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidInput("no sizes given".into()));
    }
    Ok(out)
}

fn parse_sigmas(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad alphabet size {:?}", t)))
        })
        .collect()
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let format = ReportFormat::parse(&args.format)?;
    let sizes = parse_sizes(&args.sizes)?;

    let mut inputs: Vec<BenchInput> = Vec::new();
    let mut border_suite = false;
    if !args.input.is_empty() {
        inputs.extend(args.input.iter().cloned().map(BenchInput::File));
    }
    match args.suite.as_deref() {
        None if !inputs.is_empty() => {}
        Some("random") => {
            for &n in &sizes {
                for &sigma in &parse_sigmas(&args.sigmas)? {
                    inputs.push(BenchInput::Family(FamilySpec::random(n, sigma, args.seed)));
                }
            }
        }
        Some("structured") => {
            for &n in &sizes {
                for family in [Family::Fibonacci, Family::ThueMorse, Family::RunRich] {
                    inputs.push(BenchInput::Family(FamilySpec::structured(family, n)));
                }
            }
        }
        Some("border") => {
            border_suite = true;
            for beta in [Fraction::new(1, 4).unwrap(), Fraction::new(2, 5).unwrap()] {
                for &n in &sizes {
                    for offset in 0..3 {
                        inputs.push(BenchInput::Family(FamilySpec::border_heavy(
                            n,
                            2,
                            args.seed + offset,
                            beta,
                        )));
                    }
                }
            }
        }
        Some(other) => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {:?}; expected random, structured, or border",
                other
            )))
        }
        None => {
            return Err(Error::InvalidInput(
                "either --suite or --input is required".into(),
            ))
        }
    }

    let report = bench::run_suite(&inputs, args.reps)?;
    let mut out = match format {
        ReportFormat::Table => format_paired_table(&report),
        other => format_records(&report.records, other),
    };

    // with exactly two sizes, summarize counter growth per family and
    // builder, averaging the three seeded instances per size point
    if border_suite && sizes.len() == 2 && format == ReportFormat::Table {
        let (small_n, large_n) = (sizes[0].min(sizes[1]), sizes[0].max(sizes[1]));
        for beta in ["1of4", "2of5"] {
            for algorithm in [Algorithm::Nss, Algorithm::Ngs] {
                let mean_at = |n: usize| -> Option<bench::BenchRecord> {
                    let group: Vec<&bench::BenchRecord> = report
                        .records
                        .iter()
                        .filter(|r| {
                            r.algorithm == algorithm
                                && r.n == n
                                && r.input_id.starts_with(&format!("border{}", beta))
                        })
                        .collect();
                    if group.is_empty() {
                        return None;
                    }
                    let mut rec = group[0].clone();
                    rec.counters =
                        bench::mean_counters(&group.iter().map(|r| r.counters).collect::<Vec<_>>());
                    Some(rec)
                };
                if let (Some(small), Some(large)) = (mean_at(small_n), mean_at(large_n)) {
                    let rep = linearity_check(&small, &large)?;
                    out.push_str(&format!(
                        "# border {} {}: comparisons x{:.2}, extensions x{:.2} over n x{:.0}\n",
                        beta,
                        algorithm.name(),
                        rep.comparison_factor,
                        rep.extension_factor,
                        rep.n_ratio
                    ));
                }
            }
        }
    }
    write_or_print(&args.out, &out)
}

// ---------------------------------------------------------------- compare

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(|t| {
            let bad = || Error::InvalidInput(format!("bad pair {:?}; expected i:j", t));
            let (a, b) = t.trim().split_once(':').ok_or_else(bad)?;
            Ok((
                a.parse::<usize>().map_err(|_| bad())?,
                b.parse::<usize>().map_err(|_| bad())?,
            ))
        })
        .collect()
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    let format = ReportFormat::parse(&args.format)?;
    let word = args.source.load()?;
    let joint = JointBuild::new(&word)?;
    let pairs = parse_pairs(&args.pairs)?;

    let mut out = String::new();
    if format == ReportFormat::Csv {
        out.push_str("i,j,outcome,rule\n");
    } else if format == ReportFormat::Table {
        out.push_str(&format!(
            "{:>6} {:>6} {:>9} {:>5}\n",
            "i", "j", "outcome", "rule"
        ));
    }
    for (i, j) in pairs {
        let v = joint.compare(i, j)?;
        let outcome = match v.outcome {
            SuffixOrdering::Less => "Less",
            SuffixOrdering::Greater => "Greater",
            SuffixOrdering::Unknown => "Unknown",
        };
        let rule = v.rule.map(|r| r.to_string()).unwrap_or_default();
        match format {
            ReportFormat::Csv => out.push_str(&format!("{},{},{},{}\n", i, j, outcome, rule)),
            ReportFormat::Table => {
                out.push_str(&format!("{:>6} {:>6} {:>9} {:>5}\n", i, j, outcome, rule))
            }
            ReportFormat::JsonLines => out.push_str(&format!(
                "{{\"i\":{},\"j\":{},\"outcome\":\"{}\",\"rule\":{}}}\n",
                i,
                j,
                outcome,
                v.rule
                    .map(|r| r.to_string())
                    .unwrap_or_else(|| "null".into())
            )),
        }
    }
    print!("{}", out);
    Ok(())
}
