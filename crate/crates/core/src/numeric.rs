//! Complex scalars, signal/spectrum containers and roots of unity.

use std::f64::consts::PI;
use std::ops::Index;

use rand::Rng;

use crate::error::{Error, Result};

/// Double-precision complex scalar.
pub type ComplexValue = num_complex::Complex64;

#[inline]
pub fn complex_add(a: ComplexValue, b: ComplexValue) -> ComplexValue {
    let sum = ComplexValue::new(a.re + b.re, a.im + b.im);
    debug_assert!(sum.is_finite());
    sum
}

#[inline]
pub fn complex_mul(a: ComplexValue, b: ComplexValue) -> ComplexValue {
    let product = ComplexValue::new(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    debug_assert!(product.is_finite());
    product
}

fn validate(values: &[ComplexValue]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Empty);
    }
    match values.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

macro_rules! sequence_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name(Vec<ComplexValue>);

        impl $name {
            /// Rejects empty input and non-finite values.
            pub fn new(values: Vec<ComplexValue>) -> Result<Self> {
                validate(&values)?;
                Ok(Self(values))
            }

            pub fn from_parts(parts: &[(f64, f64)]) -> Result<Self> {
                Self::new(parts.iter().map(|&(re, im)| ComplexValue::new(re, im)).collect())
            }

            pub(crate) fn from_vec_unchecked(values: Vec<ComplexValue>) -> Self {
                debug_assert!(!values.is_empty());
                Self(values)
            }

            #[allow(clippy::len_without_is_empty)]
            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn as_slice(&self) -> &[ComplexValue] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<ComplexValue> {
                self.0
            }

            pub fn iter(&self) -> std::slice::Iter<'_, ComplexValue> {
                self.0.iter()
            }

            /// Sum of squared magnitudes.
            pub fn energy(&self) -> f64 {
                self.0.iter().map(|v| v.norm_sqr()).sum()
            }
        }

        impl Index<usize> for $name {
            type Output = ComplexValue;

            fn index(&self, i: usize) -> &ComplexValue {
                &self.0[i]
            }
        }

        impl AsRef<[ComplexValue]> for $name {
            fn as_ref(&self) -> &[ComplexValue] {
                &self.0
            }
        }
    };
}

sequence_type!(
    /// Time-domain samples `a_0 .. a_{N-1}`. Never empty, always finite.
    Signal
);

sequence_type!(
    /// Frequency bins `A_0 .. A_{N-1}`. Never empty, always finite.
    Spectrum
);

impl Signal {
    /// Uniform random samples with real and imaginary parts in `[-1/sqrt(2), 1/sqrt(2))`,
    /// so every sample has magnitude at most 1.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        let bound = std::f64::consts::FRAC_1_SQRT_2;
        Self::new(
            (0..n)
                .map(|_| {
                    ComplexValue::new(rng.random_range(-bound..bound), rng.random_range(-bound..bound))
                })
                .collect(),
        )
    }
}

/// Largest componentwise magnitude of `a - b`. Panics if lengths differ.
pub fn max_abs_diff(a: &[ComplexValue], b: &[ComplexValue]) -> f64 {
    assert_eq!(a.len(), b.len(), "length mismatch");
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// All N powers of the principal root `e^{-2πi/N}`.
///
/// Each factor is computed directly from its angle rather than by repeated
/// multiplication, and the quarter-turn points are snapped to exact values so
/// that `factors[0] == 1` and the half-turn sign flip holds tightly.
#[derive(Debug, Clone, PartialEq)]
pub struct TwiddleTable {
    factors: Vec<ComplexValue>,
}

impl TwiddleTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let factors = (0..n).map(|j| root_of_unity(j, n)).collect();
        Ok(Self { factors })
    }

    pub fn order(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[ComplexValue] {
        &self.factors
    }

    /// `e^{-2πi j/N}` for any integer `j`, reduced mod N.
    #[inline]
    pub fn get(&self, j: usize) -> ComplexValue {
        self.factors[j % self.factors.len()]
    }
}

pub fn twiddle_table(n: usize) -> Result<TwiddleTable> {
    TwiddleTable::new(n)
}

fn root_of_unity(j: usize, n: usize) -> ComplexValue {
    // Exact values on the axes; 4j ≡ 0 (mod n) means j/n is a multiple of 1/4.
    if (4 * j).is_multiple_of(n) {
        return match 4 * j / n {
            0 => ComplexValue::new(1.0, 0.0),
            1 => ComplexValue::new(0.0, -1.0),
            2 => ComplexValue::new(-1.0, 0.0),
            _ => ComplexValue::new(0.0, 1.0),
        };
    }
    let angle = -2.0 * PI * j as f64 / n as f64;
    ComplexValue::new(angle.cos(), angle.sin())
}
