//! Arithmetic accounting, the divide-and-conquer count recurrence, and
//! wall-clock scaling benchmarks.

mod bench;
mod counts;
mod fit;
mod recurrence;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dft::naive_dft;
use crate::error::{Error, Result};
use crate::fft::{fft_iterative, fft_recursive, FftPlan};
use crate::numeric::Signal;

pub use bench::{run_benchmark, run_benchmark_with, write_csv, BenchConfig, BenchRecord, CSV_HEADER};
pub(crate) use counts::with_sink;
pub use counts::{NoCount, OpCount, OpSink};
pub use fit::{fit_cost_model, loglog_slope, CostModelFit};
pub use recurrence::{
    verify_recurrence, verify_recurrence_with, HalvingCheck, LevelReport, RecurrenceCheck,
    RecurrenceReport,
};

/// Seed used for generated inputs when none is supplied.
pub const DEFAULT_SEED: u64 = 0x00C1_2C1E;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Naive,
    FftRecursive,
    FftIterative,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [
        Algorithm::Naive,
        Algorithm::FftRecursive,
        Algorithm::FftIterative,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::FftRecursive => "fft_recursive",
            Algorithm::FftIterative => "fft_iterative",
        }
    }

    pub fn is_fft(self) -> bool {
        !matches!(self, Algorithm::Naive)
    }

    pub fn supports(self, n: usize) -> bool {
        n >= 1 && (!self.is_fft() || n.is_power_of_two())
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| {
                format!("unknown algorithm '{s}' (expected naive, fft_recursive or fft_iterative)")
            })
    }
}

/// Closed-form counts under the counting convention of the transforms:
/// `(N², N(N-1))` for the direct sum, `((N/2)·log2 N, N·log2 N)` for either FFT.
pub fn expected_counts(algorithm: Algorithm, n: usize) -> Result<OpCount> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let big_n = n as u64;
    match algorithm {
        Algorithm::Naive => Ok(OpCount::new(big_n * big_n, big_n * (big_n - 1))),
        _ if !n.is_power_of_two() => Err(Error::UnsupportedSize(n)),
        _ => {
            let levels = n.trailing_zeros() as u64;
            Ok(OpCount::new(big_n / 2 * levels, big_n * levels))
        }
    }
}

/// Runs one instrumented transform of a random size-`n` signal and returns
/// what it actually did.
pub fn measure_counts(algorithm: Algorithm, n: usize) -> Result<OpCount> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ n as u64);
    let x = Signal::random(n, &mut rng)?;
    let mut count = OpCount::default();
    match algorithm {
        Algorithm::Naive => {
            naive_dft(&x, Some(&mut count));
        }
        Algorithm::FftRecursive => {
            fft_recursive(&x, Some(&mut count))?;
        }
        Algorithm::FftIterative => {
            fft_iterative(&x, &FftPlan::new(n)?, Some(&mut count))?;
        }
    }
    Ok(count)
}
