//! Standalone SVG rendering of circle layouts and decomposition rows.
//!
//! Placement angles are negated for display so labels run counterclockwise
//! with increasing index. A point at display angle `d` on a panel centred at
//! `(cx, cy)` is drawn at `(cx + r·cos d, cy - r·sin d)`. Placements that land
//! on the same spot share one dot and a stacked label.
//!
//! Output is a pure function of the input: the same placements and style
//! always produce the same bytes.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::{CirclePlacement, DecompositionFigure, Panel};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    pub circle_radius: f64,
    pub panel_gap: f64,
    pub font_size: f64,
    pub dot_radius: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self {
            circle_radius: 100.0,
            panel_gap: 80.0,
            font_size: 16.0,
            dot_radius: 3.0,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            (self.circle_radius, "circle_radius must be positive"),
            (self.panel_gap, "panel_gap must be positive"),
            (self.font_size, "font_size must be positive"),
            (self.dot_radius, "dot_radius must be positive"),
        ];
        for (value, msg) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidStyle(msg));
            }
        }
        Ok(())
    }

    /// Centre of the `slot`-th panel from the left.
    pub fn panel_center(&self, slot: usize) -> (f64, f64) {
        let r = self.circle_radius;
        let g = self.panel_gap;
        (g + r + slot as f64 * (2.0 * r + g), g + r)
    }

    fn canvas(&self, slots: usize) -> (f64, f64) {
        let r = self.circle_radius;
        let g = self.panel_gap;
        (g + slots as f64 * (2.0 * r + g), 2.0 * (r + g))
    }
}

/// Fixed six-decimal rendering with trailing zeros trimmed and no `-0`.
pub fn format_coord(v: f64) -> String {
    let mut s = format!("{:.6}", v);
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

struct Doc {
    body: String,
    style: RenderStyle,
}

impl Doc {
    fn new(style: RenderStyle, slots: usize, title: &str) -> Self {
        let (w, h) = style.canvas(slots);
        let (w, h) = (format_coord(w), format_coord(h));
        let mut body = String::new();
        let _ = writeln!(body, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        );
        let _ = writeln!(body, "  <title>{}</title>", escape(title));
        let _ = writeln!(body, r#"  <rect width="100%" height="100%" fill="white"/>"#);
        Self { body, style }
    }

    fn text(&mut self, class: &str, x: f64, y: f64, size: f64, content: &str) {
        let _ = writeln!(
            self.body,
            r#"  <text class="{class}" x="{}" y="{}" font-family="serif" font-size="{}" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            format_coord(x),
            format_coord(y),
            format_coord(size),
            escape(content)
        );
    }

    /// Outline plus dots and labels for one panel.
    fn panel(&mut self, slot: usize, panel: Panel, placements: &[&CirclePlacement]) {
        let (cx, cy) = self.style.panel_center(slot);
        let r = self.style.circle_radius;
        let _ = writeln!(
            self.body,
            r#"  <circle class="outline" data-panel="{}" cx="{}" cy="{}" r="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            panel.as_str(),
            format_coord(cx),
            format_coord(cy),
            format_coord(r)
        );

        // Group coincident points by their rendered coordinates, keeping
        // first-appearance order.
        let mut spots: Vec<(String, String, f64, Vec<&CirclePlacement>)> = Vec::new();
        for &p in placements {
            let display = -p.angle;
            let scale = r * p.radius;
            let (x, y) = (cx + scale * display.cos(), cy - scale * display.sin());
            let (sx, sy) = (format_coord(x), format_coord(y));
            match spots.iter_mut().find(|s| s.0 == sx && s.1 == sy) {
                Some(spot) => spot.3.push(p),
                None => spots.push((sx, sy, display, vec![p])),
            }
        }

        let font = self.style.font_size;
        let offset = self.style.dot_radius + 0.9 * font;
        for (sx, sy, display, group) in spots {
            let indices: Vec<String> = group.iter().map(|p| p.index.to_string()).collect();
            let _ = writeln!(
                self.body,
                r#"  <circle class="dot" data-panel="{}" data-indices="{}" cx="{sx}" cy="{sy}" r="{}" fill="black"/>"#,
                panel.as_str(),
                indices.join(" "),
                format_coord(self.style.dot_radius)
            );
            let lr = r * group[0].radius + offset;
            let lx = cx + lr * display.cos();
            let ly = cy - lr * display.sin();
            let _ = write!(
                self.body,
                r#"  <text class="label" data-panel="{}" x="{}" y="{}" font-family="serif" font-size="{}" text-anchor="middle" dominant-baseline="middle">"#,
                panel.as_str(),
                format_coord(lx),
                format_coord(ly),
                format_coord(font)
            );
            for (i, p) in group.iter().enumerate() {
                if i > 0 {
                    self.body.push(' ');
                }
                let _ = write!(
                    self.body,
                    r#"<tspan data-index="{}">{}</tspan>"#,
                    p.index,
                    escape(&p.label)
                );
            }
            self.body.push_str("</text>\n");
        }
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

/// One circle per panel present in `placements`, ordered full, even, odd.
pub fn render_circle(placements: &[CirclePlacement], style: &RenderStyle) -> Result<String> {
    style.validate()?;
    if placements.is_empty() {
        return Err(Error::Empty);
    }
    let mut panels: Vec<Panel> = placements.iter().map(|p| p.panel).collect();
    panels.sort();
    panels.dedup();

    let mut doc = Doc::new(*style, panels.len(), "unit-circle terms");
    for (slot, &panel) in panels.iter().enumerate() {
        let members: Vec<&CirclePlacement> =
            placements.iter().filter(|p| p.panel == panel).collect();
        doc.panel(slot, panel, &members);
    }
    Ok(doc.finish())
}

/// `A_k` circle, `=`, even half, `±` and the twiddle label, odd half.
pub fn render_decomposition(fig: &DecompositionFigure, style: &RenderStyle) -> Result<String> {
    style.validate()?;
    if fig.lhs.is_empty() {
        return Err(Error::Empty);
    }
    let title = format!("A_{} decomposition, N = {}", fig.k, fig.n);
    let mut doc = Doc::new(*style, 3, &title);

    let r = style.circle_radius;
    let font = style.font_size;
    let (c0, cy) = style.panel_center(0);
    let (c1, _) = style.panel_center(1);
    let (c2, _) = style.panel_center(2);

    doc.text("caption", c0, 0.4 * style.panel_gap, font, &format!("A_{}", fig.k));
    let full: Vec<_> = fig.lhs.iter().collect();
    doc.panel(0, Panel::Full, &full);

    doc.text("connector", 0.5 * (c0 + c1), cy, 1.5 * font, "=");
    let even: Vec<_> = fig.even_panel.iter().collect();
    doc.panel(1, Panel::Even, &even);

    // Sign and factor share the gap between the half panels.
    let gap_left = c1 + r;
    let gap = c2 - r - gap_left;
    doc.text(
        "connector",
        gap_left + 0.25 * gap,
        cy,
        1.5 * font,
        fig.combine_sign.glyph(),
    );
    doc.text("twiddle", gap_left + 0.65 * gap, cy, 1.2 * font, &fig.odd_factor_label);
    let odd: Vec<_> = fig.odd_panel.iter().collect();
    doc.panel(2, Panel::Odd, &odd);

    Ok(doc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{layout_decomposition, layout_terms};

    fn style() -> RenderStyle {
        RenderStyle {
            circle_radius: 100.0,
            panel_gap: 50.0,
            font_size: 12.0,
            dot_radius: 2.0,
        }
    }

    /// (cx, cy, data-panel) of every dot, read back from the XML.
    fn dots(svg: &str) -> Vec<(f64, f64, String)> {
        let doc = roxmltree::Document::parse(svg).expect("well-formed");
        doc.descendants()
            .filter(|n| n.has_tag_name("circle") && n.attribute("class") == Some("dot"))
            .map(|n| {
                (
                    n.attribute("cx").unwrap().parse().unwrap(),
                    n.attribute("cy").unwrap().parse().unwrap(),
                    n.attribute("data-panel").unwrap().to_string(),
                )
            })
            .collect()
    }

    #[test]
    fn coordinate_transform() {
        let p = CirclePlacement {
            label: "a_0".into(),
            index: 0,
            angle: 0.0,
            radius: 1.0,
            panel: Panel::Full,
        };
        let svg = render_circle(&[p], &style()).unwrap();
        assert_eq!(dots(&svg), vec![(250.0, 150.0, "full".to_string())]);
        assert!(svg.contains(r#"cx="250" cy="150""#));
    }

    #[test]
    fn eight_dots_at_45_degree_spacing() {
        let svg = render_circle(&layout_terms(8, 1).unwrap(), &style()).unwrap();
        let found = dots(&svg);
        assert_eq!(found.len(), 8);
        let (cx, cy) = style().panel_center(0);
        let angles: Vec<f64> = found
            .iter()
            .map(|(x, y, _)| (cy - y).atan2(x - cx).rem_euclid(std::f64::consts::TAU))
            .collect();
        for (i, pair) in angles.windows(2).enumerate() {
            let step = pair[1] - pair[0];
            assert!((step.to_degrees() - 45.0).abs() < 1e-6, "step {i}: {step}");
        }
    }

    #[test]
    fn angles_round_trip_through_svg() {
        for (n, k) in [(8, 1), (8, 3), (16, 5), (5, 2)] {
            let terms = layout_terms(n, k).unwrap();
            let svg = render_circle(&terms, &style()).unwrap();
            let doc = roxmltree::Document::parse(&svg).unwrap();
            let (cx, cy) = style().panel_center(0);
            for dot in doc.descendants().filter(|d| d.attribute("class") == Some("dot")) {
                let x: f64 = dot.attribute("cx").unwrap().parse().unwrap();
                let y: f64 = dot.attribute("cy").unwrap().parse().unwrap();
                let recovered = -(cy - y).atan2(x - cx);
                for idx in dot.attribute("data-indices").unwrap().split(' ') {
                    let p = &terms[idx.parse::<usize>().unwrap()];
                    let diff = (recovered - p.angle).rem_euclid(std::f64::consts::TAU);
                    let diff = diff.min(std::f64::consts::TAU - diff);
                    assert!(diff < 1e-6, "n={n} k={k} idx={idx}");
                }
            }
        }
    }

    #[test]
    fn coincident_points_stack() {
        let svg = render_circle(&layout_terms(4, 0).unwrap(), &style()).unwrap();
        assert_eq!(dots(&svg).len(), 1);
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let tspans: Vec<_> = doc
            .descendants()
            .filter(|n| n.has_tag_name("tspan"))
            .map(|n| n.text().unwrap().to_string())
            .collect();
        assert_eq!(tspans, ["a_0", "a_1", "a_2", "a_3"]);
    }

    #[test]
    fn decomposition_connectors() {
        let plus = render_decomposition(&layout_decomposition(8, 1).unwrap(), &style()).unwrap();
        let doc = roxmltree::Document::parse(&plus).unwrap();
        let connectors: Vec<_> = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("connector"))
            .map(|n| n.text().unwrap())
            .collect();
        assert_eq!(connectors, ["=", "+"]);
        assert!(plus.contains("e^{iθ}"));
        assert_eq!(
            doc.descendants().filter(|n| n.attribute("class") == Some("outline")).count(),
            3
        );

        let minus = render_decomposition(&layout_decomposition(8, 5).unwrap(), &style()).unwrap();
        assert!(minus.contains(">\u{2212}</text>"));
        assert!(!minus.contains(">+</text>"));
    }

    #[test]
    fn smallest_decomposition() {
        let svg = render_decomposition(&layout_decomposition(2, 0).unwrap(), &style()).unwrap();
        let found = dots(&svg);
        let count = |panel: &str| found.iter().filter(|d| d.2 == panel).count();
        // k = 0 stacks both full-panel terms on one dot.
        assert_eq!((count("full"), count("even"), count("odd")), (1, 1, 1));
    }

    #[test]
    fn deterministic_and_escaped() {
        let mut terms = layout_terms(3, 1).unwrap();
        terms[1].label = "<x & y>".into();
        let a = render_circle(&terms, &style()).unwrap();
        let b = render_circle(&terms, &style()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("&lt;x &amp; y&gt;"));
        roxmltree::Document::parse(&a).unwrap();
        assert!(!a.contains("href"));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(render_circle(&[], &style()), Err(Error::Empty));
        let bad = RenderStyle {
            dot_radius: 0.0,
            ..style()
        };
        assert!(matches!(
            render_circle(&layout_terms(2, 1).unwrap(), &bad),
            Err(Error::InvalidStyle(_))
        ));
    }

    #[test]
    fn coord_formatting() {
        assert_eq!(format_coord(250.0), "250");
        assert_eq!(format_coord(-1e-9), "0");
        assert_eq!(format_coord(1.25), "1.25");
        assert_eq!(format_coord(0.1234567), "0.123457");
    }
}
