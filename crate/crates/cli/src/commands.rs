use std::fs;
use std::io::{self, Write};
use std::path::Path;

use circlefft::cost::{
    fit_cost_model, loglog_slope, run_benchmark_with, verify_recurrence_with, write_csv,
    BenchConfig, DEFAULT_SEED,
};
use circlefft::{
    fft_iterative, ifft, layout_decomposition, layout_terms, make_plan, measure_counts,
    naive_dft, naive_idft, render_circle, render_decomposition, Algorithm, OpCount,
    RenderStyle, Signal, Spectrum,
};

use crate::signal_io;
use crate::{BenchArgs, CliError, DiagramArgs, TransformArgs, VerifyArgs, SEED_ENV};

type Result<T> = std::result::Result<T, CliError>;

fn read_input(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, content: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(content)
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

/// Seed from `CIRCLEFFT_SEED`, or the library default.
pub fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV} must be an unsigned integer, got '{s}'"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

pub fn transform(args: &TransformArgs) -> Result<()> {
    let text = read_input(&args.input)?;
    let values = signal_io::parse(&text, args.format)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))?;
    let n = values.len();
    let fast = !args.naive && n.is_power_of_two();
    if !args.naive && !fast {
        log::warn!("length {n} is not a power of two; using the direct O(N²) transform");
    }

    let result = if args.inverse {
        let spectrum = Spectrum::new(values)?;
        if fast {
            ifft(&spectrum, &make_plan(n)?)?.into_vec()
        } else {
            naive_idft(&spectrum).into_vec()
        }
    } else {
        let signal = Signal::new(values)?;
        if fast {
            fft_iterative(&signal, &make_plan(n)?, None)?.into_vec()
        } else {
            naive_dft(&signal, None).into_vec()
        }
    };
    write_output(args.output.as_deref(), signal_io::format(&result, args.format).as_bytes())
}

pub fn bench(args: &BenchArgs) -> Result<()> {
    if args.algorithms.is_empty() {
        return Err(CliError::Usage("no algorithms given".into()));
    }
    let config = BenchConfig {
        repeats: args.repeats,
        seed: seed_from_env()?,
        ..BenchConfig::default()
    };
    let records = run_benchmark_with(&args.sizes, &args.algorithms, &config)?;

    let mut csv = Vec::new();
    write_csv(&records, &mut csv).map_err(|e| CliError::Io(e.to_string()))?;
    write_output(args.csv.as_deref(), &csv)?;

    for alg in Algorithm::ALL {
        if let Some(slope) = loglog_slope(&records, alg) {
            eprintln!("log-log slope {alg}: {slope:.3}");
        }
    }
    match fit_cost_model(&records) {
        Ok(fit) => {
            eprintln!(
                "fit: c1 = {:.4e} s/N², R² = {:.4}; c2 = {:.4e} s/(N log2 N), R² = {:.4}",
                fit.c1, fit.r2_quadratic, fit.c2, fit.r2_nlogn
            );
            if let Some(path) = &args.fit_json {
                let mut json = serde_json::to_string_pretty(&fit)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                json.push('\n');
                write_output(Some(path), json.as_bytes())?;
            }
            Ok(())
        }
        Err(e) if args.fit_json.is_some() => Err(e.into()),
        Err(e) => {
            log::info!("no cost model fit: {e}");
            Ok(())
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Result<()> {
    verify_with(args, measure_counts)
}

/// `verify` with the count measurement supplied by the caller.
pub fn verify_with<F>(args: &VerifyArgs, measure: F) -> Result<()>
where
    F: FnMut(Algorithm, usize) -> circlefft::Result<OpCount>,
{
    if args.max_n < 2 || !args.max_n.is_power_of_two() {
        return Err(CliError::Usage(format!(
            "--max-n must be a power of two >= 2, got {}",
            args.max_n
        )));
    }
    let report = verify_recurrence_with(args.max_n, measure)?;
    print!("{report}");
    match report.first_failure() {
        None => Ok(()),
        Some(level) => Err(CliError::Verification(format!(
            "operation counts violate the recurrence at N = {level}"
        ))),
    }
}

pub fn diagram(args: &DiagramArgs) -> Result<()> {
    let DiagramArgs { n, k, .. } = *args;
    if n == 0 || k >= n {
        return Err(CliError::Usage(format!("need 0 <= k < n, got n = {n}, k = {k}")));
    }
    if args.decompose && (n < 2 || !n.is_power_of_two()) {
        return Err(CliError::Usage(format!(
            "--decompose needs n to be a power of two >= 2, got {n}"
        )));
    }
    if let Some(labels) = &args.labels {
        if labels.len() != n {
            return Err(CliError::Usage(format!(
                "--labels needs {n} entries, got {}",
                labels.len()
            )));
        }
    }
    let style = RenderStyle {
        circle_radius: args.radius,
        panel_gap: args.gap,
        font_size: args.font_size,
        dot_radius: args.dot_radius,
    };
    style
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let svg = if args.decompose {
        let mut fig = layout_decomposition(n, k)?;
        if let Some(labels) = &args.labels {
            fig.relabel(labels)?;
        }
        render_decomposition(&fig, &style)?
    } else {
        let mut terms = layout_terms(n, k)?;
        if let Some(labels) = &args.labels {
            circlefft::geometry::apply_labels(&mut terms, labels)?;
        }
        render_circle(&terms, &style)?
    };
    write_output(args.output.as_deref(), svg.as_bytes())
}
