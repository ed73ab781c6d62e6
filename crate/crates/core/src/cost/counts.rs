use std::fmt;
use std::ops::{Add, AddAssign};

use serde::Serialize;

/// Complex multiplications and additions performed by one transform run.
///
/// A subtraction counts as an addition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct OpCount {
    pub mults: u64,
    pub adds: u64,
}

impl OpCount {
    pub const ZERO: OpCount = OpCount { mults: 0, adds: 0 };

    pub const fn new(mults: u64, adds: u64) -> Self {
        Self { mults, adds }
    }

    /// Arithmetic plus one touch per element for the N 1-point transforms at
    /// the bottom of the recursion.
    pub fn with_element_touches(self, n: usize) -> u64 {
        n as u64 + self.mults + self.adds
    }
}

impl Add for OpCount {
    type Output = OpCount;

    fn add(self, rhs: OpCount) -> OpCount {
        OpCount::new(self.mults + rhs.mults, self.adds + rhs.adds)
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, rhs: OpCount) {
        *self = *self + rhs;
    }
}

impl fmt::Display for OpCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mults, {} adds", self.mults, self.adds)
    }
}

/// Receives arithmetic events from an instrumented transform.
///
/// The transforms are generic over the sink so the uncounted path compiles
/// down to nothing.
pub trait OpSink {
    fn mults(&mut self, n: u64);
    fn adds(&mut self, n: u64);
}

impl OpSink for OpCount {
    #[inline]
    fn mults(&mut self, n: u64) {
        self.mults += n;
    }

    #[inline]
    fn adds(&mut self, n: u64) {
        self.adds += n;
    }
}

/// Sink that discards everything.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoCount;

impl OpSink for NoCount {
    #[inline(always)]
    fn mults(&mut self, _: u64) {}

    #[inline(always)]
    fn adds(&mut self, _: u64) {}
}

/// Dispatches an optional caller-owned counter to a generic body.
macro_rules! with_sink {
    ($counter:expr, |$sink:ident| $body:expr) => {
        match $counter {
            Some($sink) => $body,
            None => {
                let $sink = &mut $crate::cost::NoCount;
                $body
            }
        }
    };
}
pub(crate) use with_sink;
