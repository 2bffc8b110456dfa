//! Benchmark harness: wall-clock construction times for both builders with
//! the recovery pass timed separately, profiling counters, and ratio
//! statistics.
//!
//! Timing policy: monotonic clock, one warm-up run discarded, median over
//! the requested repetitions. Counters are independent of timing noise, so
//! they are bit-identical across repetitions and across machines.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use crate::chain::{build_chain, Seek};
use crate::error::{Error, Result};
use crate::gen::{generate, FamilySpec};
use crate::lce::LceCounters;
use crate::ngs::recover_lambda_inv;
use crate::text::{FramedText, SentinelMode};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algorithm {
    Nss,
    Ngs,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Nss => "NSS",
            Algorithm::Ngs => "NGS",
        }
    }
}

/// One benchmark subject: a raw byte file or a generated family instance.
#[derive(Clone, Debug)]
pub enum BenchInput {
    File(PathBuf),
    Family(FamilySpec),
}

impl BenchInput {
    fn id(&self) -> String {
        match self {
            BenchInput::File(p) => p
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.to_string_lossy().into_owned()),
            BenchInput::Family(spec) => spec.id(),
        }
    }

    fn load(&self) -> Result<Vec<u8>> {
        match self {
            BenchInput::File(p) => Ok(std::fs::read(p)?),
            BenchInput::Family(spec) => generate(spec),
        }
    }
}

/// One benchmark row.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub input_id: String,
    pub algorithm: Algorithm,
    /// Interior length.
    pub n: usize,
    /// Median core construction time (edge pass).
    pub elapsed_core: Duration,
    /// Median recovery-pass time (array from edges).
    pub elapsed_recovery: Duration,
    pub counters: LceCounters,
    pub repetitions: usize,
}

/// Statistics of the per-input NGS/NSS core-time ratios.
#[derive(Clone, Copy, Debug)]
pub struct RatioSummary {
    pub mean: f64,
    pub median: f64,
    pub min: f64,
    pub max: f64,
}

impl RatioSummary {
    fn from_ratios(mut ratios: Vec<f64>) -> Self {
        assert!(!ratios.is_empty());
        ratios.sort_by(|a, b| a.partial_cmp(b).expect("finite ratios"));
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        RatioSummary {
            mean,
            median: ratios[ratios.len() / 2],
            min: ratios[0],
            max: *ratios.last().unwrap(),
        }
    }
}

#[derive(Debug)]
pub struct SuiteReport {
    pub records: Vec<BenchRecord>,
    pub ratios: RatioSummary,
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

fn bench_algorithm(
    t: &FramedText,
    algorithm: Algorithm,
    input_id: &str,
    reps: usize,
) -> Result<BenchRecord> {
    let seek = match algorithm {
        Algorithm::Nss => Seek::Smaller,
        Algorithm::Ngs => Seek::Greater,
    };
    let warm = build_chain(t, seek)?;
    let counters = warm.counters;

    let mut core_times = Vec::with_capacity(reps);
    let mut built = warm;
    for _ in 0..reps {
        let start = Instant::now();
        built = build_chain(t, seek)?;
        core_times.push(start.elapsed());
        debug_assert_eq!(built.counters, counters, "counters must be deterministic");
    }

    let n = t.framed_len();
    let mut recovery_times = Vec::with_capacity(reps);
    let mut lambda = Vec::new();
    for _ in 0..reps {
        let start = Instant::now();
        lambda = match algorithm {
            Algorithm::Nss => {
                let mut v = vec![0usize; n + 1];
                for i in 1..=n {
                    v[i] = built.next[i] - i;
                }
                v
            }
            Algorithm::Ngs => recover_lambda_inv(&built.next, &built.nlce)?,
        };
        recovery_times.push(start.elapsed());
    }

    // correctness spot-check before the timing is reported
    for i in 1..=n {
        let expect = match algorithm {
            Algorithm::Nss => built.next[i] - i,
            Algorithm::Ngs => built.next[i] - i + built.nlce[i],
        };
        if lambda[i] != expect {
            return Err(Error::Verification(format!(
                "{} recovery identity failed at position {} of {}",
                algorithm.name(),
                i,
                input_id
            )));
        }
    }
    if built.next[1] != n + 1 || built.prev[1] != 0 || built.prev[n] != 1 {
        return Err(Error::Verification(format!(
            "{} boundary conventions failed on {}",
            algorithm.name(),
            input_id
        )));
    }

    Ok(BenchRecord {
        input_id: input_id.to_string(),
        algorithm,
        n: t.interior_len(),
        elapsed_core: median(core_times),
        elapsed_recovery: median(recovery_times),
        counters,
        repetitions: reps,
    })
}

/// Runs both builders on every input, `reps` timed repetitions each after
/// one discarded warm-up, and summarizes the per-input NGS/NSS core-time
/// ratios.
pub fn run_suite(inputs: &[BenchInput], reps: usize) -> Result<SuiteReport> {
    if reps == 0 {
        return Err(Error::InvalidInput("repetitions must be >= 1".into()));
    }
    if inputs.is_empty() {
        return Err(Error::InvalidInput("no benchmark inputs".into()));
    }
    let mut records = Vec::with_capacity(inputs.len() * 2);
    let mut ratios = Vec::with_capacity(inputs.len());
    for input in inputs {
        let id = input.id();
        let bytes = input.load()?;
        let ts = FramedText::from_bytes(bytes.clone(), SentinelMode::Standard)?;
        let ti = FramedText::from_bytes(bytes, SentinelMode::Inverse)?;
        let nss = bench_algorithm(&ts, Algorithm::Nss, &id, reps)?;
        let ngs = bench_algorithm(&ti, Algorithm::Ngs, &id, reps)?;
        // floor at 1ns so degenerate sub-resolution timings stay finite
        let denom = nss.elapsed_core.max(Duration::from_nanos(1)).as_secs_f64();
        let numer = ngs.elapsed_core.max(Duration::from_nanos(1)).as_secs_f64();
        ratios.push(numer / denom);
        records.push(nss);
        records.push(ngs);
    }
    Ok(SuiteReport {
        records,
        ratios: RatioSummary::from_ratios(ratios),
    })
}

/// Arithmetic mean of counter sets, for reporting a family by several
/// seeded instances rather than one.
pub fn mean_counters(sets: &[LceCounters]) -> LceCounters {
    assert!(!sets.is_empty());
    let n = sets.len() as u64;
    LceCounters {
        explicit_comparisons: sets.iter().map(|c| c.explicit_comparisons).sum::<u64>() / n,
        reuse_hits: sets.iter().map(|c| c.reuse_hits).sum::<u64>() / n,
        extension_calls: sets.iter().map(|c| c.extension_calls).sum::<u64>() / n,
    }
}

/// Counter growth between two records of the same algorithm at sizes
/// `small.n < large.n`.
#[derive(Clone, Copy, Debug)]
pub struct LinearityReport {
    pub n_ratio: f64,
    pub comparison_factor: f64,
    pub extension_factor: f64,
}

/// Checks that `explicit_comparisons` and `extension_calls` grew by a
/// factor within `[0.8, 1.2]` of the size ratio. The two records must use
/// the same algorithm and the same family policy, and the size ratio must
/// be at least 5.
pub fn linearity_check(small: &BenchRecord, large: &BenchRecord) -> Result<LinearityReport> {
    if small.algorithm != large.algorithm {
        return Err(Error::InvalidInput(
            "linearity check needs records of one algorithm".into(),
        ));
    }
    if small.n == 0 || large.n < 5 * small.n {
        return Err(Error::InvalidInput(format!(
            "size ratio {} / {} below 5",
            large.n, small.n
        )));
    }
    let n_ratio = large.n as f64 / small.n as f64;
    let (lo, hi) = (0.8 * n_ratio, 1.2 * n_ratio);
    let factor_of = |counter: &'static str, a: u64, b: u64| -> Result<f64> {
        let f = b as f64 / a.max(1) as f64;
        if f < lo || f > hi {
            return Err(Error::LinearityViolation {
                counter,
                factor: f,
                lo,
                hi,
            });
        }
        Ok(f)
    };
    let comparison_factor = factor_of(
        "explicit_comparisons",
        small.counters.explicit_comparisons,
        large.counters.explicit_comparisons,
    )?;
    let extension_factor = factor_of(
        "extension_calls",
        small.counters.extension_calls,
        large.counters.extension_calls,
    )?;
    Ok(LinearityReport {
        n_ratio,
        comparison_factor,
        extension_factor,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Csv,
    Table,
    JsonLines,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            "json-lines" | "jsonl" => Ok(ReportFormat::JsonLines),
            other => Err(Error::InvalidInput(format!("unknown format {:?}", other))),
        }
    }
}

fn micros(d: Duration) -> f64 {
    d.as_secs_f64() * 1e6
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

pub const CSV_HEADER: &str =
    "input_id,algorithm,n,reps,core_us,recovery_us,explicit_comparisons,reuse_hits,extension_calls";

/// Renders one record per row.
pub fn format_records(records: &[BenchRecord], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&format!(
                    "{},{},{},{},{:.3},{:.3},{},{},{}\n",
                    r.input_id,
                    r.algorithm.name(),
                    r.n,
                    r.repetitions,
                    micros(r.elapsed_core),
                    micros(r.elapsed_recovery),
                    r.counters.explicit_comparisons,
                    r.counters.reuse_hits,
                    r.counters.extension_calls,
                ));
            }
            out
        }
        ReportFormat::JsonLines => {
            let mut out = String::new();
            for r in records {
                out.push_str(&format!(
                    "{{\"input_id\":\"{}\",\"algorithm\":\"{}\",\"n\":{},\"reps\":{},\"core_us\":{:.3},\"recovery_us\":{:.3},\"explicit_comparisons\":{},\"reuse_hits\":{},\"extension_calls\":{}}}\n",
                    json_escape(&r.input_id),
                    r.algorithm.name(),
                    r.n,
                    r.repetitions,
                    micros(r.elapsed_core),
                    micros(r.elapsed_recovery),
                    r.counters.explicit_comparisons,
                    r.counters.reuse_hits,
                    r.counters.extension_calls,
                ));
            }
            out
        }
        ReportFormat::Table => {
            let mut out = String::from(
                "# timing: monotonic clock, one warm-up discarded, median over reps\n",
            );
            out.push_str(&format!(
                "{:<32} {:>4} {:>10} {:>6} {:>12} {:>12} {:>12} {:>10} {:>12}\n",
                "input",
                "alg",
                "n",
                "reps",
                "core_us",
                "recovery_us",
                "comparisons",
                "reuse",
                "extensions"
            ));
            for r in records {
                out.push_str(&format!(
                    "{:<32} {:>4} {:>10} {:>6} {:>12.1} {:>12.1} {:>12} {:>10} {:>12}\n",
                    r.input_id,
                    r.algorithm.name(),
                    r.n,
                    r.repetitions,
                    micros(r.elapsed_core),
                    micros(r.elapsed_recovery),
                    r.counters.explicit_comparisons,
                    r.counters.reuse_hits,
                    r.counters.extension_calls,
                ));
            }
            out
        }
    }
}

/// Renders the suite as one row per input with both core times side by
/// side and their ratio.
pub fn format_paired_table(report: &SuiteReport) -> String {
    let mut out =
        String::from("# timing: monotonic clock, one warm-up discarded, median over reps\n");
    out.push_str(&format!(
        "{:<32} {:>10} {:>12} {:>12} {:>8}\n",
        "input", "n", "NSS_us", "NGS_us", "ratio"
    ));
    let mut i = 0;
    while i + 1 < report.records.len() {
        let (a, b) = (&report.records[i], &report.records[i + 1]);
        debug_assert_eq!(a.algorithm, Algorithm::Nss);
        debug_assert_eq!(b.algorithm, Algorithm::Ngs);
        let ratio = micros(b.elapsed_core).max(1e-3) / micros(a.elapsed_core).max(1e-3);
        out.push_str(&format!(
            "{:<32} {:>10} {:>12.1} {:>12.1} {:>8.4}\n",
            a.input_id,
            a.n,
            micros(a.elapsed_core),
            micros(b.elapsed_core),
            ratio
        ));
        i += 2;
    }
    let s = report.ratios;
    out.push_str(&format!(
        "# ratio NGS/NSS: mean {:.4}, median {:.4}, range [{:.4}, {:.4}]\n",
        s.mean, s.median, s.min, s.max
    ));
    out
}
