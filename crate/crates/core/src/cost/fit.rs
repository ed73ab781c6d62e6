use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Algorithm, BenchRecord};
use crate::error::{Error, Result};

/// Least-squares constants for `t = c1·N²` (direct sum) and
/// `t = c2·N·log2 N` (FFT), with the coefficient of determination of each.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostModelFit {
    pub c1: f64,
    pub c2: f64,
    pub r2_quadratic: f64,
    pub r2_nlogn: f64,
}

const MIN_SIZES: usize = 4;

/// Fits both models in linear space.
///
/// The FFT model uses `fft_iterative` records when present, otherwise
/// `fft_recursive`. Each model needs at least four distinct sizes.
pub fn fit_cost_model(records: &[BenchRecord]) -> Result<CostModelFit> {
    let naive = points(records, Algorithm::Naive, |n| n * n)?;
    let fft_alg = if records.iter().any(|r| r.algorithm == Algorithm::FftIterative) {
        Algorithm::FftIterative
    } else {
        Algorithm::FftRecursive
    };
    let fft = points(records, fft_alg, |n| n * n.log2())?;
    let (c1, r2_quadratic) = fit_through_origin(&naive);
    let (c2, r2_nlogn) = fit_through_origin(&fft);
    Ok(CostModelFit {
        c1,
        c2,
        r2_quadratic,
        r2_nlogn,
    })
}

fn points(
    records: &[BenchRecord],
    algorithm: Algorithm,
    basis: impl Fn(f64) -> f64,
) -> Result<Vec<(f64, f64)>> {
    let selected: Vec<_> = records.iter().filter(|r| r.algorithm == algorithm).collect();
    let sizes: BTreeSet<usize> = selected.iter().map(|r| r.n).collect();
    if sizes.len() < MIN_SIZES {
        return Err(Error::InsufficientData(format!(
            "{algorithm} has {} distinct sizes, need at least {MIN_SIZES}",
            sizes.len()
        )));
    }
    Ok(selected
        .into_iter()
        .map(|r| (basis(r.n as f64), r.wall_time))
        .collect())
}

/// `t = c·b` by least squares; returns `(c, R²)` with R² clamped to [0, 1].
fn fit_through_origin(points: &[(f64, f64)]) -> (f64, f64) {
    let sbb: f64 = points.iter().map(|(b, _)| b * b).sum();
    let sbt: f64 = points.iter().map(|(b, t)| b * t).sum();
    let c = sbt / sbb;
    let mean = points.iter().map(|(_, t)| t).sum::<f64>() / points.len() as f64;
    let ss_res: f64 = points.iter().map(|(b, t)| (t - c * b).powi(2)).sum();
    let ss_tot: f64 = points.iter().map(|(_, t)| (t - mean).powi(2)).sum();
    let r2 = if ss_tot > 0.0 {
        1.0 - ss_res / ss_tot
    } else if ss_res == 0.0 {
        1.0
    } else {
        0.0
    };
    (c, r2.clamp(0.0, 1.0))
}

/// Slope of `ln t` against `ln N` for one algorithm; about 2 for the direct
/// sum and a little over 1 for the FFTs. `None` with fewer than two sizes.
pub fn loglog_slope(records: &[BenchRecord], algorithm: Algorithm) -> Option<f64> {
    let pts: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.algorithm == algorithm)
        .map(|r| ((r.n as f64).ln(), r.wall_time.ln()))
        .collect();
    let distinct: BTreeSet<u64> = pts.iter().map(|p| p.0.to_bits()).collect();
    if distinct.len() < 2 {
        return None;
    }
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    Some(sxy / sxx)
}
