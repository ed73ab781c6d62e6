use std::collections::HashMap;
use std::fmt;

use super::{expected_counts, measure_counts, Algorithm, OpCount};
use crate::error::{Error, Result};

/// One FFT variant at one level: does `measured(N)` equal
/// `2·measured(N/2) + (N/2, N)`?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub measured: OpCount,
    pub half: OpCount,
    pub predicted: OpCount,
    pub closed_form: OpCount,
}

impl RecurrenceCheck {
    pub fn holds(&self) -> bool {
        self.measured == self.predicted && self.measured == self.closed_form
    }
}

/// Direct sum at one level: two half-size direct sums cost half as many
/// multiplications as one full-size sum, i.e. `2·M(N/2) = M(N)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalvingCheck {
    pub measured_mults: u64,
    pub half_mults: u64,
}

impl HalvingCheck {
    pub fn holds(&self) -> bool {
        // 4·M(N/2) == M(N) is the same identity without the division.
        4 * self.half_mults == self.measured_mults
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    pub n: usize,
    pub recursive: RecurrenceCheck,
    pub iterative: RecurrenceCheck,
    pub naive: HalvingCheck,
}

impl LevelReport {
    pub fn holds(&self) -> bool {
        self.recursive.holds() && self.iterative.holds() && self.naive.holds()
    }
}

/// Per-level outcome for `N = 2, 4, ..., max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub max_n: usize,
    pub levels: Vec<LevelReport>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(LevelReport::holds)
    }

    /// Smallest N whose level fails.
    pub fn first_failure(&self) -> Option<usize> {
        self.levels.iter().find(|l| !l.holds()).map(|l| l.n)
    }
}

impl fmt::Display for RecurrenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>8} {:>12} {:>12} {:>12} {:>12} {:>14} {:>14} {:>12} {:>6}",
            "N",
            "M(N)",
            "2M(N/2)+N/2",
            "A(N)",
            "2A(N/2)+N",
            "naive M(N)",
            "4*naive(N/2)",
            "touch cost",
            "ok"
        )?;
        for level in &self.levels {
            let it = &level.iterative;
            writeln!(
                f,
                "{:>8} {:>12} {:>12} {:>12} {:>12} {:>14} {:>14} {:>12} {:>6}",
                level.n,
                it.measured.mults,
                it.predicted.mults,
                it.measured.adds,
                it.predicted.adds,
                level.naive.measured_mults,
                4 * level.naive.half_mults,
                it.measured.with_element_touches(level.n),
                if level.holds() { "pass" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Checks the count recurrences at every power of two from 2 to `max_n`
/// using instrumented transform runs.
pub fn verify_recurrence(max_n: usize) -> Result<RecurrenceReport> {
    verify_recurrence_with(max_n, measure_counts)
}

/// As [`verify_recurrence`], with the measurement supplied by the caller.
pub fn verify_recurrence_with<F>(max_n: usize, mut measure: F) -> Result<RecurrenceReport>
where
    F: FnMut(Algorithm, usize) -> Result<OpCount>,
{
    if max_n < 2 || !max_n.is_power_of_two() {
        return Err(Error::UnsupportedSize(max_n));
    }
    let mut cache: HashMap<(Algorithm, usize), OpCount> = HashMap::new();
    let mut get = |alg: Algorithm, n: usize| -> Result<OpCount> {
        if let Some(&c) = cache.get(&(alg, n)) {
            return Ok(c);
        }
        let c = measure(alg, n)?;
        cache.insert((alg, n), c);
        Ok(c)
    };

    let mut levels = Vec::new();
    let mut n = 2;
    while n <= max_n {
        let mut check = |alg: Algorithm| -> Result<RecurrenceCheck> {
            let measured = get(alg, n)?;
            let half = get(alg, n / 2)?;
            let combine = OpCount::new(n as u64 / 2, n as u64);
            Ok(RecurrenceCheck {
                measured,
                half,
                predicted: half + half + combine,
                closed_form: expected_counts(alg, n)?,
            })
        };
        let recursive = check(Algorithm::FftRecursive)?;
        let iterative = check(Algorithm::FftIterative)?;
        let naive = HalvingCheck {
            measured_mults: get(Algorithm::Naive, n)?.mults,
            half_mults: get(Algorithm::Naive, n / 2)?.mults,
        };
        let level = LevelReport {
            n,
            recursive,
            iterative,
            naive,
        };
        if !level.holds() {
            log::warn!("count recurrence fails at N = {n}");
        }
        levels.push(level);
        n *= 2;
    }
    Ok(RecurrenceReport { max_n, levels })
}
