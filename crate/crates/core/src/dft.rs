//! Direct quadratic evaluation of the DFT.
//!
//! This is the reference the fast paths are checked against and the
//! quadratic baseline for cost measurements, so it takes no shortcuts: every
//! product, including those by `factors[0] = 1`, is computed and counted.

use crate::cost::{with_sink, OpCount, OpSink};
use crate::numeric::{ComplexValue, Signal, Spectrum, TwiddleTable};

/// `A_k = sum_n a_n e^{-2πi nk/N}`.
///
/// When counted, records exactly `N²` multiplications and `N(N-1)` additions.
pub fn naive_dft(x: &Signal, counter: Option<&mut OpCount>) -> Spectrum {
    let table = TwiddleTable::new(x.len()).expect("signal is nonempty");
    let bins = with_sink!(counter, |sink| direct_sum(x.as_slice(), &table, false, sink));
    Spectrum::from_vec_unchecked(bins)
}

/// `a_n = (1/N) sum_k A_k conj(e^{-2πi nk/N})`.
pub fn naive_idft(spectrum: &Spectrum) -> Signal {
    let n = spectrum.len();
    let table = TwiddleTable::new(n).expect("spectrum is nonempty");
    let scale = 1.0 / n as f64;
    let samples = direct_sum(spectrum.as_slice(), &table, true, &mut crate::cost::NoCount)
        .into_iter()
        .map(|v| v * scale)
        .collect();
    Signal::from_vec_unchecked(samples)
}

fn direct_sum<S: OpSink>(
    input: &[ComplexValue],
    table: &TwiddleTable,
    conjugate: bool,
    sink: &mut S,
) -> Vec<ComplexValue> {
    let n = input.len();
    let factors = table.factors();
    let twiddle = |j: usize| {
        if conjugate {
            factors[j].conj()
        } else {
            factors[j]
        }
    };
    (0..n)
        .map(|k| {
            // (n·k) mod N tracked incrementally in exact integer arithmetic.
            let mut acc = input[0] * twiddle(0);
            sink.mults(1);
            let mut idx = k;
            for &sample in &input[1..] {
                acc += sample * twiddle(idx);
                sink.mults(1);
                sink.adds(1);
                idx += k;
                if idx >= n {
                    idx -= n;
                }
            }
            acc
        })
        .collect()
}
