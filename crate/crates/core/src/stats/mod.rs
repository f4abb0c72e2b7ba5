//! Statistical battery over bit streams, plus export for external suites.

mod chi_square;
mod export;
pub mod nist;

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use chi_square::chi_square_symbols;
pub use export::{encode_stream, export_stream, import_stream, ExportFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TestKind {
    Monobit,
    BlockFrequency,
    Runs,
    LongestRun,
    CumulativeSums,
    Serial,
    ApproximateEntropy,
}

impl TestKind {
    pub const ALL: [TestKind; 7] = [
        TestKind::Monobit,
        TestKind::BlockFrequency,
        TestKind::CumulativeSums,
        TestKind::Runs,
        TestKind::LongestRun,
        TestKind::Serial,
        TestKind::ApproximateEntropy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TestKind::Monobit => "monobit",
            TestKind::BlockFrequency => "block-frequency",
            TestKind::Runs => "runs",
            TestKind::LongestRun => "longest-run",
            TestKind::CumulativeSums => "cumulative-sums",
            TestKind::Serial => "serial",
            TestKind::ApproximateEntropy => "approximate-entropy",
        }
    }
}

/// Parameters of the battery. Defaults follow the usual settings for
/// 10^6-bit streams, with the serial test at `m = 10`.
#[derive(Clone, Debug, PartialEq)]
pub struct BatteryConfig {
    pub alpha: f64,
    pub block_frequency_len: usize,
    pub serial_m: u32,
    pub approximate_entropy_m: u32,
    pub tests: Vec<TestKind>,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig {
            alpha: 0.01,
            block_frequency_len: 128,
            serial_m: 10,
            approximate_entropy_m: 10,
            tests: TestKind::ALL.to_vec(),
        }
    }
}

impl BatteryConfig {
    fn minimum_len(&self, kind: TestKind) -> usize {
        match kind {
            TestKind::Monobit => nist::MONOBIT_MIN,
            TestKind::BlockFrequency => nist::block_frequency_min(self.block_frequency_len),
            TestKind::Runs => nist::RUNS_MIN,
            TestKind::LongestRun => nist::LONGEST_RUN_MIN,
            TestKind::CumulativeSums => nist::CUSUM_MIN,
            TestKind::Serial => nist::serial_min(self.serial_m),
            TestKind::ApproximateEntropy => nist::approximate_entropy_min(self.approximate_entropy_m),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TestResult {
    pub kind: TestKind,
    /// `kind` name, with a `/sub-test` suffix or ` (mean)` for aggregates.
    pub name: String,
    pub p_value: f64,
    pub pass: bool,
    /// Arithmetic mean over the sub-tests of `kind`; informational only.
    pub aggregate: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TestReport {
    pub stream_length: usize,
    pub significance: f64,
    pub results: Vec<TestResult>,
}

impl TestReport {
    /// Whether every non-aggregate entry of `kind` passed; `None` if the test
    /// was not run.
    pub fn test_passed(&self, kind: TestKind) -> Option<bool> {
        let mut entries = self
            .results
            .iter()
            .filter(|r| r.kind == kind && !r.aggregate)
            .peekable();
        entries.peek()?;
        Some(entries.all(|r| r.pass))
    }

    pub fn all_passed(&self) -> bool {
        self.results.iter().filter(|r| !r.aggregate).all(|r| r.pass)
    }

    pub fn p_value(&self, name: &str) -> Option<f64> {
        self.results.iter().find(|r| r.name == name).map(|r| r.p_value)
    }

    /// Aligned table for humans.
    pub fn to_text(&self) -> String {
        let width = self
            .results
            .iter()
            .map(|r| r.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "stream length: {} bits, alpha = {}",
            self.stream_length, self.significance
        );
        let _ = writeln!(out, "{:<width$}  {:>8}  result", "test", "p-value");
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<width$}  {:>8.6}  {}",
                r.name,
                r.p_value,
                verdict(r.pass)
            );
        }
        out
    }

    /// `name<TAB>p-value<TAB>PASS|FAIL` per entry.
    pub fn to_porcelain(&self) -> String {
        self.results
            .iter()
            .map(|r| format!("{}\t{}\t{}\n", r.name, r.p_value, verdict(r.pass)))
            .collect()
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Runs every configured test over `bits`. Length requirements of all tests
/// are checked before any test runs.
pub fn run_battery(bits: &[u8], config: &BatteryConfig) -> Result<TestReport> {
    if !(0.0..1.0).contains(&config.alpha) {
        return Err(Error::Config(format!(
            "significance {} outside [0, 1)",
            config.alpha
        )));
    }
    let mut tests = config.tests.clone();
    tests.dedup();
    for &kind in &tests {
        nist::require(kind.name(), config.minimum_len(kind), bits)?;
    }

    let per_test: Vec<Vec<(String, f64, bool)>> = tests
        .par_iter()
        .map(|&kind| run_one(bits, kind, config))
        .collect::<Result<_>>()?;

    let results = tests
        .iter()
        .zip(per_test)
        .flat_map(|(&kind, entries)| {
            entries.into_iter().map(move |(name, p_value, aggregate)| TestResult {
                kind,
                name,
                p_value,
                pass: p_value >= config.alpha,
                aggregate,
            })
        })
        .collect();

    Ok(TestReport {
        stream_length: bits.len(),
        significance: config.alpha,
        results,
    })
}

fn run_one(bits: &[u8], kind: TestKind, config: &BatteryConfig) -> Result<Vec<(String, f64, bool)>> {
    let name = kind.name();
    let single = |p: f64| vec![(name.to_string(), p, false)];
    let with_mean = |subs: [(&str, f64); 2]| {
        let mean = (subs[0].1 + subs[1].1) / 2.0;
        let mut v: Vec<_> = subs
            .iter()
            .map(|(sub, p)| (format!("{name}/{sub}"), *p, false))
            .collect();
        v.push((format!("{name} (mean)"), mean, true));
        v
    };
    Ok(match kind {
        TestKind::Monobit => single(nist::monobit(bits)?),
        TestKind::BlockFrequency => single(nist::block_frequency(bits, config.block_frequency_len)?),
        TestKind::Runs => single(nist::runs(bits)?),
        TestKind::LongestRun => single(nist::longest_run(bits)?),
        TestKind::CumulativeSums => with_mean([
            ("forward", nist::cumulative_sums(bits, false)?),
            ("reverse", nist::cumulative_sums(bits, true)?),
        ]),
        TestKind::Serial => {
            let (p1, p2) = nist::serial(bits, config.serial_m)?;
            with_mean([("p1", p1), ("p2", p2)])
        }
        TestKind::ApproximateEntropy => {
            single(nist::approximate_entropy(bits, config.approximate_entropy_m)?)
        }
    })
}
