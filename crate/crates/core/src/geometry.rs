//! Unit-circle placements for the terms of a DFT sum.
//!
//! Term `a_n e^{-2πi nk/N}` is drawn as the value `a_n` sitting at angle
//! `k·θ_n` on the unit circle, with `θ_n = -2πn/N` so that the geometric
//! picture and the transform use the same sign. Angles are stored reduced to
//! `(-2π, 0]`; renderers negate them for display.
//!
//! A decomposition splits the N terms into the even-index terms on an
//! `N/2`-point circle and the odd-index terms after one twiddle has been
//! factored out. The odd panel then has exactly the even panel's positions,
//! and the two half sums recombine as `E + w·O` for `k < N/2` and `E - w·O`
//! for `k >= N/2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::{ComplexValue, TwiddleTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Panel {
    Full,
    Even,
    Odd,
}

impl Panel {
    pub fn as_str(self) -> &'static str {
        match self {
            Panel::Full => "full",
            Panel::Even => "even",
            Panel::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CirclePlacement {
    pub label: String,
    /// Sample index `n` of the term.
    pub index: usize,
    /// Radians, in `(-2π, 0]`.
    pub angle: f64,
    pub radius: f64,
    pub panel: Panel,
}

impl CirclePlacement {
    /// The unit-circle factor `e^{i·angle}` this placement stands for.
    pub fn phasor(&self) -> ComplexValue {
        ComplexValue::from_polar(self.radius, self.angle)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineSign {
    Plus,
    Minus,
}

impl CombineSign {
    pub fn factor(self) -> f64 {
        match self {
            CombineSign::Plus => 1.0,
            CombineSign::Minus => -1.0,
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            CombineSign::Plus => "+",
            CombineSign::Minus => "\u{2212}",
        }
    }
}

pub const DEFAULT_FACTOR_LABEL: &str = "e^{iθ}";

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionFigure {
    pub n: usize,
    pub k: usize,
    pub lhs: Vec<CirclePlacement>,
    pub even_panel: Vec<CirclePlacement>,
    pub odd_panel: Vec<CirclePlacement>,
    pub odd_factor_label: String,
    /// Index into the size-N twiddle table of the factor pulled out of the
    /// odd panel, `k mod N/2`.
    pub twiddle_index: usize,
    pub combine_sign: CombineSign,
}

impl DecompositionFigure {
    /// `x[n]·e^{i·angle}` summed over the full panel; equals bin `k` of the DFT.
    pub fn lhs_sum(&self, x: &[ComplexValue]) -> ComplexValue {
        placement_sum(&self.lhs, x)
    }

    /// `E ± w·O` from the two half panels.
    pub fn recombine(&self, x: &[ComplexValue], table: &TwiddleTable) -> ComplexValue {
        let even = placement_sum(&self.even_panel, x);
        let odd = placement_sum(&self.odd_panel, x);
        even + table.get(self.twiddle_index) * odd * self.combine_sign.factor()
    }

    /// Replaces every label by `labels[index]`.
    pub fn relabel(&mut self, labels: &[String]) -> Result<()> {
        for panel in [&mut self.lhs, &mut self.even_panel, &mut self.odd_panel] {
            apply_labels(panel, labels)?;
        }
        Ok(())
    }
}

/// Placement for `a_index` at `angle = -2π·(step mod period)/period`.
fn place(index: usize, step: usize, period: usize, panel: Panel) -> CirclePlacement {
    let reduced = step % period;
    let angle = if reduced == 0 {
        0.0
    } else {
        -2.0 * PI * reduced as f64 / period as f64
    };
    CirclePlacement {
        label: format!("a_{index}"),
        index,
        angle,
        radius: 1.0,
        panel,
    }
}

/// The N terms of bin `k` on one circle.
pub fn layout_terms(n: usize, k: usize) -> Result<Vec<CirclePlacement>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    Ok((0..n).map(|j| place(j, j * k, n, Panel::Full)).collect())
}

pub fn layout_decomposition(n: usize, k: usize) -> Result<DecompositionFigure> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    let lhs = layout_terms(n, k)?;
    let half = n / 2;
    let even_panel = (0..half).map(|m| place(2 * m, m * k, half, Panel::Even)).collect();
    let odd_panel = (0..half)
        .map(|m| place(2 * m + 1, m * k, half, Panel::Odd))
        .collect();
    Ok(DecompositionFigure {
        n,
        k,
        lhs,
        even_panel,
        odd_panel,
        odd_factor_label: DEFAULT_FACTOR_LABEL.to_string(),
        twiddle_index: k % half,
        combine_sign: if k < half {
            CombineSign::Plus
        } else {
            CombineSign::Minus
        },
    })
}

/// `sum x[p.index]·e^{i·p.angle}` over the placements.
pub fn placement_sum(placements: &[CirclePlacement], x: &[ComplexValue]) -> ComplexValue {
    placements.iter().map(|p| x[p.index] * p.phasor()).sum()
}

/// Sets each placement's label to `labels[placement.index]`. `labels` must
/// cover every index of the layout.
pub fn apply_labels(placements: &mut [CirclePlacement], labels: &[String]) -> Result<()> {
    let needed = placements.iter().map(|p| p.index + 1).max().unwrap_or(0);
    if labels.len() < needed {
        return Err(Error::LabelCount {
            expected: needed,
            actual: labels.len(),
        });
    }
    for p in placements {
        p.label = labels[p.index].clone();
    }
    Ok(())
}
