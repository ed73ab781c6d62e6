//! Radix-2 decimation-in-time FFT.
//!
//! Each bin pair `(k, k + N/2)` comes out of one butterfly: the half-size
//! transforms `E` (even samples) and `O` (odd samples) are combined as
//! `E[k] + w·O[k]` and reused with the opposite sign for `E[k] - w·O[k]`,
//! where `w = e^{-2πik/N}`. That reuse is what removes the quadratic cost.
//!
//! Every butterfly costs one complex multiplication and two complex
//! additions, including the ones with `w = 1`, so a size-N transform performs
//! exactly `(N/2)·log2 N` multiplications and `N·log2 N` additions.

use crate::cost::{with_sink, OpCount, OpSink};
use crate::error::{Error, Result};
use crate::numeric::{ComplexValue, Signal, Spectrum, TwiddleTable};

/// Precomputed twiddles and bit-reversal permutation for one power-of-two size.
///
/// Immutable once built; share freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct FftPlan {
    twiddles: TwiddleTable,
    bit_reversal: Vec<usize>,
    /// Twiddles of every pass laid out contiguously: the pass combining
    /// halves of length `h` reads `factors[k·N/(2h)]` for `k < h` from
    /// `pass_twiddles[h-1 .. 2h-1]`.
    pass_twiddles: Vec<ComplexValue>,
}

impl FftPlan {
    pub fn new(n: usize) -> Result<Self> {
        let bits = log2_exact(n)?;
        let twiddles = TwiddleTable::new(n)?;
        let bit_reversal = (0..n).map(|j| reverse_bits(j, bits)).collect();
        let mut pass_twiddles = Vec::with_capacity(n.saturating_sub(1));
        let mut half = 1;
        while half < n {
            let stride = n / (2 * half);
            pass_twiddles.extend((0..half).map(|k| twiddles.factors()[k * stride]));
            half *= 2;
        }
        Ok(Self {
            twiddles,
            bit_reversal,
            pass_twiddles,
        })
    }

    pub fn len(&self) -> usize {
        self.bit_reversal.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn twiddles(&self) -> &TwiddleTable {
        &self.twiddles
    }

    pub fn bit_reversal(&self) -> &[usize] {
        &self.bit_reversal
    }

    /// Forward transform of `buf` in place. `buf.len()` must equal the plan size.
    pub fn process(&self, buf: &mut [ComplexValue]) -> Result<()> {
        self.process_counted(buf, None)
    }

    pub fn process_counted(
        &self,
        buf: &mut [ComplexValue],
        counter: Option<&mut OpCount>,
    ) -> Result<()> {
        self.check_len(buf.len())?;
        self.permute(buf);
        with_sink!(counter, |sink| self.butterfly_passes(buf, sink));
        Ok(())
    }

    fn check_len(&self, actual: usize) -> Result<()> {
        if actual != self.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                actual,
            });
        }
        Ok(())
    }

    fn permute(&self, buf: &mut [ComplexValue]) {
        for (i, &j) in self.bit_reversal.iter().enumerate() {
            if i < j {
                buf.swap(i, j);
            }
        }
    }

    fn butterfly_passes<S: OpSink>(&self, buf: &mut [ComplexValue], sink: &mut S) {
        let n = buf.len();
        let mut half = 1;
        while half < n {
            let span = half * 2;
            let factors = &self.pass_twiddles[half - 1..span - 1];
            for block in buf.chunks_exact_mut(span) {
                let (evens, odds) = block.split_at_mut(half);
                // Deliberately broken build for exercising `verify`:
                // drops the first butterfly of the last pass.
                #[cfg(feature = "fault-skip-butterfly")]
                let mut skip = span == n && n >= 4;
                for ((e, o), &w) in evens.iter_mut().zip(odds.iter_mut()).zip(factors) {
                    #[cfg(feature = "fault-skip-butterfly")]
                    if std::mem::take(&mut skip) {
                        continue;
                    }
                    let t = w * *o;
                    *o = *e - t;
                    *e += t;
                    sink.mults(1);
                    sink.adds(2);
                }
            }
            half = span;
        }
    }
}

pub fn make_plan(n: usize) -> Result<FftPlan> {
    FftPlan::new(n)
}

fn log2_exact(n: usize) -> Result<u32> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::UnsupportedSize(n));
    }
    Ok(n.trailing_zeros())
}

fn reverse_bits(j: usize, bits: u32) -> usize {
    if bits == 0 {
        0
    } else {
        j.reverse_bits() >> (usize::BITS - bits)
    }
}

/// Recursive even/odd split, allocating scratch at every level.
pub fn fft_recursive(x: &Signal, counter: Option<&mut OpCount>) -> Result<Spectrum> {
    let n = x.len();
    log2_exact(n)?;
    let table = TwiddleTable::new(n)?;
    let bins = with_sink!(counter, |sink| split_and_combine(x.as_slice(), &table, 1, sink));
    Ok(Spectrum::from_vec_unchecked(bins))
}

/// `input` holds every `stride`-th sample of the top-level signal, so its
/// twiddle `e^{-2πik/len}` lives at `k·stride` in the top-level table.
fn split_and_combine<S: OpSink>(
    input: &[ComplexValue],
    table: &TwiddleTable,
    stride: usize,
    sink: &mut S,
) -> Vec<ComplexValue> {
    let n = input.len();
    if n == 1 {
        return input.to_vec();
    }
    let evens: Vec<_> = input.iter().step_by(2).copied().collect();
    let odds: Vec<_> = input.iter().skip(1).step_by(2).copied().collect();
    let e = split_and_combine(&evens, table, stride * 2, sink);
    let o = split_and_combine(&odds, table, stride * 2, sink);

    let half = n / 2;
    let factors = table.factors();
    let mut out = vec![ComplexValue::new(0.0, 0.0); n];
    for k in 0..half {
        let t = factors[k * stride] * o[k];
        out[k] = e[k] + t;
        out[k + half] = e[k] - t;
        sink.mults(1);
        sink.adds(2);
    }
    out
}

/// In-place iterative transform: one bit-reversed copy of `x`, then
/// `log2 N` butterfly passes over that single buffer.
pub fn fft_iterative(
    x: &Signal,
    plan: &FftPlan,
    counter: Option<&mut OpCount>,
) -> Result<Spectrum> {
    plan.check_len(x.len())?;
    let mut buf = x.as_slice().to_vec();
    plan.process_counted(&mut buf, counter)?;
    Ok(Spectrum::from_vec_unchecked(buf))
}

/// Inverse via conjugation: `(1/N)·conj(fft(conj(X)))`.
pub fn ifft(spectrum: &Spectrum, plan: &FftPlan) -> Result<Signal> {
    plan.check_len(spectrum.len())?;
    let mut buf: Vec<_> = spectrum.iter().map(|v| v.conj()).collect();
    plan.process(&mut buf)?;
    let scale = 1.0 / buf.len() as f64;
    for v in &mut buf {
        *v = v.conj() * scale;
    }
    Ok(Signal::from_vec_unchecked(buf))
}
