use std::hint::black_box;
use std::io::Write;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{measure_counts, Algorithm, OpCount, DEFAULT_SEED};
use crate::dft::naive_dft;
use crate::error::{Error, Result};
use crate::fft::{fft_iterative, fft_recursive, FftPlan};
use crate::numeric::Signal;

pub const CSV_HEADER: &str = "algorithm,N,repeats,median_seconds,mults,adds";

/// Median per-transform wall time for one (algorithm, N) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub algorithm: Algorithm,
    pub repeats: usize,
    /// Seconds per transform, median over `repeats` timed batches.
    pub wall_time: f64,
    pub counts: OpCount,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub repeats: usize,
    /// Untimed batches run before measuring.
    pub warmup: usize,
    /// Each timed batch repeats the transform until it lasts at least this long.
    pub min_batch: Duration,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            repeats: 5,
            warmup: 1,
            min_batch: Duration::from_millis(5),
            seed: DEFAULT_SEED,
        }
    }
}

pub fn run_benchmark(
    sizes: &[usize],
    algorithms: &[Algorithm],
    repeats: usize,
) -> Result<Vec<BenchRecord>> {
    let config = BenchConfig {
        repeats,
        ..BenchConfig::default()
    };
    run_benchmark_with(sizes, algorithms, &config)
}

/// Times every supported (algorithm, size) pair, one transform at a time.
///
/// Pairs the algorithm cannot handle (non-power-of-two sizes for the FFTs)
/// are skipped with a warning.
pub fn run_benchmark_with(
    sizes: &[usize],
    algorithms: &[Algorithm],
    config: &BenchConfig,
) -> Result<Vec<BenchRecord>> {
    if config.repeats < 5 {
        return Err(Error::InvalidBenchmark(format!(
            "repeats must be at least 5, got {}",
            config.repeats
        )));
    }
    if config.warmup == 0 {
        return Err(Error::InvalidBenchmark("at least one warm-up run is required".into()));
    }
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidBenchmark("sizes must be nonempty and positive".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidBenchmark("sizes must be strictly ascending".into()));
    }

    let mut cases = Vec::new();
    for &algorithm in algorithms {
        for &n in sizes {
            if !algorithm.supports(n) {
                log::warn!("skipping {algorithm} at N = {n}: not a power of two");
                continue;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ n as u64);
            let x = Signal::random(n, &mut rng)?;
            let run: Box<dyn FnMut()> = match algorithm {
                Algorithm::Naive => Box::new(move || {
                    black_box(naive_dft(black_box(&x), None));
                }),
                Algorithm::FftRecursive => Box::new(move || {
                    black_box(fft_recursive(black_box(&x), None).ok());
                }),
                Algorithm::FftIterative => {
                    let plan = FftPlan::new(n)?;
                    Box::new(move || {
                        black_box(fft_iterative(black_box(&x), &plan, None).ok());
                    })
                }
            };
            cases.push(Case::new(algorithm, n, run, config));
        }
    }

    // Timed batches rotate over all cases so that a transient slowdown of the
    // machine is spread across sizes instead of landing on one of them.
    for _ in 0..config.repeats {
        for case in &mut cases {
            let t = case.batch();
            case.samples.push(t);
        }
    }

    cases
        .into_iter()
        .map(|case| {
            Ok(BenchRecord {
                n: case.n,
                algorithm: case.algorithm,
                repeats: config.repeats,
                wall_time: median(case.samples),
                counts: measure_counts(case.algorithm, case.n)?,
            })
        })
        .collect()
}

struct Case {
    algorithm: Algorithm,
    n: usize,
    run: Box<dyn FnMut()>,
    iters: u32,
    samples: Vec<f64>,
}

impl Case {
    /// Warms up and sizes the batch so one batch lasts at least `min_batch`.
    fn new(algorithm: Algorithm, n: usize, mut run: Box<dyn FnMut()>, config: &BenchConfig) -> Self {
        let start = Instant::now();
        run();
        let single = start.elapsed().max(Duration::from_nanos(1));
        let iters = (config.min_batch.as_nanos() / single.as_nanos()).max(1) as u32;
        let mut case = Self {
            algorithm,
            n,
            run,
            iters,
            samples: Vec::with_capacity(config.repeats),
        };
        for _ in 1..config.warmup {
            case.batch();
        }
        case
    }

    /// Seconds per transform over one batch.
    fn batch(&mut self) -> f64 {
        let start = Instant::now();
        for _ in 0..self.iters {
            (self.run)();
        }
        start.elapsed().as_secs_f64() / self.iters as f64
    }
}

fn median(mut samples: Vec<f64>) -> f64 {
    samples.sort_by(f64::total_cmp);
    let mid = samples.len() / 2;
    let m = if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        0.5 * (samples[mid - 1] + samples[mid])
    };
    m.max(f64::MIN_POSITIVE)
}

#[derive(Serialize)]
struct CsvRow {
    algorithm: Algorithm,
    #[serde(rename = "N")]
    n: usize,
    repeats: usize,
    median_seconds: f64,
    mults: u64,
    adds: u64,
}

/// Writes `algorithm,N,repeats,median_seconds,mults,adds` rows.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if records.is_empty() {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        writer.serialize(CsvRow {
            algorithm: r.algorithm,
            n: r.n,
            repeats: r.repeats,
            median_seconds: r.wall_time,
            mults: r.counts.mults,
            adds: r.counts.adds,
        })?;
    }
    writer.flush()
}
