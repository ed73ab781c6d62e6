//! Radix-2 Cooley-Tukey FFT with a direct-sum oracle, exact arithmetic
//! counting, and the unit-circle picture of the even/odd split.
//!
//! ```
//! use circlefft::{fft_iterative, make_plan, naive_dft, Signal};
//!
//! let x = Signal::from_parts(&[(1.0, 0.0), (2.0, 0.0), (3.0, 0.0), (4.0, 0.0)]).unwrap();
//! let plan = make_plan(4).unwrap();
//! let fast = fft_iterative(&x, &plan, None).unwrap();
//! let slow = naive_dft(&x, None);
//! assert!(circlefft::max_abs_diff(fast.as_slice(), slow.as_slice()) < 1e-12);
//! ```

pub mod cost;
pub mod dft;
mod error;
pub mod fft;
pub mod geometry;
pub mod numeric;
pub mod svg;

pub use cost::{expected_counts, measure_counts, Algorithm, OpCount};
pub use dft::{naive_dft, naive_idft};
pub use error::{Error, Result};
pub use fft::{fft_iterative, fft_recursive, ifft, make_plan, FftPlan};
pub use geometry::{layout_decomposition, layout_terms, CirclePlacement, DecompositionFigure};
pub use numeric::{
    complex_add, complex_mul, max_abs_diff, twiddle_table, ComplexValue, Signal, Spectrum,
    TwiddleTable,
};
pub use svg::{render_circle, render_decomposition, RenderStyle};
