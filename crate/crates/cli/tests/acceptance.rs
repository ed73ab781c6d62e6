//! End-to-end acceptance checks. Each check prints one PASS/FAIL line to
//! stderr; the test fails if any check fails.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use circlefft::cost::{fit_cost_model, run_benchmark_with, BenchConfig, BenchRecord, DEFAULT_SEED};
use circlefft::geometry::CombineSign;
use circlefft::{
    expected_counts, fft_iterative, fft_recursive, ifft, layout_decomposition, make_plan,
    max_abs_diff, measure_counts, naive_dft, twiddle_table, Algorithm, ComplexValue, Signal,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn seed() -> u64 {
    std::env::var("CIRCLEFFT_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    rng.set_stream(stream);
    rng
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn powers_of_two(max: usize) -> impl Iterator<Item = usize> {
    (0..).map(|b| 1usize << b).take_while(move |&n| n <= max)
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(1);
    let (mut worst_oracle, mut worst_variant) = (0.0f64, 0.0f64);
    for n in powers_of_two(4096) {
        let plan = make_plan(n).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let x = Signal::random(n, &mut rng).unwrap();
            let oracle = naive_dft(&x, None);
            let it = fft_iterative(&x, &plan, None).unwrap();
            let rec = fft_recursive(&x, None).unwrap();
            let d_oracle = max_abs_diff(it.as_slice(), oracle.as_slice());
            let d_variant = max_abs_diff(rec.as_slice(), it.as_slice());
            ensure(d_oracle <= 1e-9, || format!("N = {n}: |fft - dft| = {d_oracle:e}"))?;
            ensure(d_variant <= 1e-12, || format!("N = {n}: |rec - iter| = {d_variant:e}"))?;
            worst_oracle = worst_oracle.max(d_oracle);
            worst_variant = worst_variant.max(d_variant);
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:.1?}"))?;
    Ok(format!(
        "max |fft - dft| = {worst_oracle:.2e}, max |rec - iter| = {worst_variant:.2e}, {elapsed:.1?}"
    ))
}

fn four_point_fixture() -> Outcome {
    let x = Signal::from_parts(&[(1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (4.0, 0.0)]).unwrap();
    let expected = [
        ComplexValue::new(10.0, 0.0),
        ComplexValue::new(-2.0, 2.0),
        ComplexValue::new(-2.0, 0.0),
        ComplexValue::new(-2.0, -2.0),
    ];
    let plan = make_plan(4).unwrap();
    let results = [
        ("naive", naive_dft(&x, None)),
        ("recursive", fft_recursive(&x, None).unwrap()),
        ("iterative", fft_iterative(&x, &plan, None).unwrap()),
    ];
    for (name, spectrum) in &results {
        let d = max_abs_diff(spectrum.as_slice(), &expected);
        ensure(d <= 1e-12, || format!("{name} off by {d:e}"))?;
    }
    Ok("all three implementations match [10, -2+2i, -2, -2-2i]".into())
}

fn operation_counts() -> Outcome {
    for n in powers_of_two(4096).skip(1) {
        let log2 = n.trailing_zeros() as u64;
        let n64 = n as u64;
        for alg in Algorithm::ALL {
            let measured = measure_counts(alg, n).map_err(|e| e.to_string())?;
            let (mults, adds) = match alg {
                Algorithm::Naive => (n64 * n64, n64 * (n64 - 1)),
                _ => (n64 / 2 * log2, n64 * log2),
            };
            ensure(measured.mults == mults && measured.adds == adds, || {
                format!("{alg} at N = {n}: measured {measured}, expected {mults} mults, {adds} adds")
            })?;
            ensure(expected_counts(alg, n).unwrap() == measured, || {
                format!("{alg} at N = {n}: closed form disagrees")
            })?;
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_circlefft"))
        .args(["verify", "--max-n", "4096"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("verify exited with {:?}", out.status.code())
    })?;
    let rows = String::from_utf8_lossy(&out.stdout).lines().count() - 1;
    ensure(rows == 12, || format!("verify printed {rows} levels"))?;
    Ok("exact counts for N = 2..4096; verify --max-n 4096 exits 0".into())
}

fn doubling_ratios(records: &[BenchRecord], alg: Algorithm) -> Vec<f64> {
    let times: Vec<f64> = records
        .iter()
        .filter(|r| r.algorithm == alg)
        .map(|r| r.wall_time)
        .collect();
    times.windows(2).map(|w| w[1] / w[0]).collect()
}

fn empirical_scaling() -> Outcome {
    let start = Instant::now();
    let sizes: Vec<usize> = (8..=13).map(|b| 1 << b).collect();
    let config = BenchConfig {
        repeats: 11,
        min_batch: Duration::from_millis(20),
        seed: seed(),
        ..BenchConfig::default()
    };
    let records = run_benchmark_with(&sizes, &[Algorithm::Naive, Algorithm::FftIterative], &config)
        .map_err(|e| e.to_string())?;
    let naive = doubling_ratios(&records, Algorithm::Naive);
    let fft = doubling_ratios(&records, Algorithm::FftIterative);
    let fit = fit_cost_model(&records).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let summary = format!(
        "naive ratios {naive:.2?}, fft ratios {fft:.2?}, R² quadratic {:.4}, R² n log n {:.4}, {elapsed:.1?}",
        fit.r2_quadratic, fit.r2_nlogn
    );
    ensure(naive.len() == 5 && fft.len() == 5, || format!("missing records: {summary}"))?;
    ensure(naive.iter().all(|r| (3.2..=5.0).contains(r)), || summary.clone())?;
    ensure(fft.iter().all(|&r| r <= 2.6), || summary.clone())?;
    ensure(fit.r2_quadratic >= 0.95 && fit.r2_nlogn >= 0.90, || summary.clone())?;
    ensure(elapsed < Duration::from_secs(300), || summary.clone())?;
    Ok(summary)
}

fn transform_properties() -> Outcome {
    let n = 1024;
    let plan = make_plan(n).unwrap();
    let mut rng = rng(5);
    let (mut round, mut parseval, mut shift) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100 {
        let x = Signal::random(n, &mut rng).unwrap();
        let spectrum = fft_iterative(&x, &plan, None).unwrap();

        let back = ifft(&spectrum, &plan).unwrap();
        round = round.max(max_abs_diff(back.as_slice(), x.as_slice()));

        let time_energy = x.energy();
        let freq_energy = spectrum.energy() / n as f64;
        parseval = parseval.max((time_energy - freq_energy).abs() / time_energy);

        let m = rng.random_range(0..n);
        let shifted: Vec<_> = (0..n).map(|j| x[(j + n - m) % n]).collect();
        let shifted = fft_iterative(&Signal::new(shifted).unwrap(), &plan, None).unwrap();
        let table = twiddle_table(n).unwrap();
        let rotated: Vec<_> = (0..n)
            .map(|k| spectrum[k] * table.get((k * m) % n))
            .collect();
        shift = shift.max(max_abs_diff(shifted.as_slice(), &rotated));
    }
    let summary =
        format!("round trip {round:.2e}, Parseval rel {parseval:.2e}, shift {shift:.2e}");
    ensure(round <= 1e-9 && parseval <= 1e-10 && shift <= 1e-10, || summary.clone())?;
    Ok(summary)
}

fn decomposition_identity() -> Outcome {
    let n = 8;
    let table = twiddle_table(n).unwrap();
    let mut rng = rng(6);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let x = Signal::random(n, &mut rng).unwrap();
        let spectrum = naive_dft(&x, None);
        for k in 0..n {
            let fig = layout_decomposition(n, k).map_err(|e| e.to_string())?;
            let expected_sign = if k < n / 2 { CombineSign::Plus } else { CombineSign::Minus };
            ensure(fig.combine_sign == expected_sign, || format!("k = {k}: wrong sign"))?;
            ensure(fig.twiddle_index == k % (n / 2), || format!("k = {k}: wrong twiddle"))?;
            let lhs = fig.lhs_sum(x.as_slice());
            let rhs = fig.recombine(x.as_slice(), &table);
            let d = (lhs - spectrum[k]).norm().max((rhs - lhs).norm());
            ensure(d <= 1e-10, || format!("k = {k}: off by {d:e}"))?;
            worst = worst.max(d);
        }
    }
    Ok(format!("all k in 0..8, 20 signals, max error {worst:.2e}"))
}

fn diagram(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_circlefft"))
        .arg("diagram")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("diagram {args:?} failed: {}", String::from_utf8_lossy(&out.stderr))
    })?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn rendered_diagram() -> Outcome {
    let svg = diagram(&["--n", "8", "--k", "1"])?;
    ensure(svg == diagram(&["--n", "8", "--k", "1"])?, || "output differs between runs".into())?;
    let doc = roxmltree::Document::parse(&svg).map_err(|e| format!("not well-formed: {e}"))?;
    let attr = |node: roxmltree::Node, name: &str| -> f64 {
        node.attribute(name).unwrap().parse().unwrap()
    };
    let outline = doc
        .descendants()
        .find(|n| n.attribute("class") == Some("outline") && n.attribute("data-panel") == Some("full"))
        .ok_or("no full-panel outline")?;
    let (cx, cy) = (attr(outline, "cx"), attr(outline, "cy"));
    let mut angles: Vec<f64> = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("dot") && n.attribute("data-panel") == Some("full"))
        .map(|d| {
            let deg = (-(attr(d, "cy") - cy)).atan2(attr(d, "cx") - cx).to_degrees();
            deg.rem_euclid(360.0)
        })
        .collect();
    ensure(angles.len() == 8, || format!("{} dots in the full panel", angles.len()))?;
    angles.sort_by(f64::total_cmp);
    for i in 0..8 {
        let next = if i == 7 { angles[0] + 360.0 } else { angles[i + 1] };
        let gap = next - angles[i];
        ensure((gap - 45.0).abs() <= 1e-6, || format!("spacing {gap} degrees"))?;
    }

    let split = diagram(&["--n", "8", "--k", "5", "--decompose"])?;
    roxmltree::Document::parse(&split).map_err(|e| format!("decomposition not well-formed: {e}"))?;
    ensure(split.contains(">\u{2212}</text>"), || "no minus connector".into())?;
    ensure(split.contains(r#"class="twiddle""#) && split.contains("e^{iθ}"), || {
        "no twiddle label".into()
    })?;
    Ok("8 dots 45° apart, byte-identical reruns, k = 5 split shows − and the twiddle".into())
}

#[test]
fn acceptance() {
    let checks: [Check; 7] = [
        ("oracle equivalence", oracle_equivalence),
        ("four-point fixture", four_point_fixture),
        ("operation counts", operation_counts),
        ("empirical scaling", empirical_scaling),
        ("transform properties", transform_properties),
        ("decomposition identity", decomposition_identity),
        ("rendered diagram", rendered_diagram),
    ];
    let mut stderr = std::io::stderr();
    let mut failed = Vec::new();
    for (i, (name, check)) in checks.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed.push(*name);
                format!("FAIL {} {name}: {detail}", i + 1)
            }
        };
        // Written directly so the summary shows up without --nocapture.
        writeln!(stderr, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed checks: {failed:?}");
}
