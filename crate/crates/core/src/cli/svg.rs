//! Deterministic SVG rendering of sampled interference curves.
//!
//! Every coordinate is formatted with a fixed number of decimals from
//! deterministic f64 inputs, so rendering the same reconstruction twice
//! yields the same bytes. Curves are polylines over the grid, prime powers
//! get labeled vertical gridlines, and supplied peaks are marked with
//! circles colored by component.

use std::fmt::Write;

use crate::analysis::{Component, Peak, prime_powers_in};
use crate::reconstruction::{Grid, GridSpacing, Reconstruction};

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 540.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 48.0;
const MARGIN_BOTTOM: f64 = 44.0;

pub(super) const S_COLOR: &str = "#1f77b4";
pub(super) const T_COLOR: &str = "#d62728";
pub(super) const OVERLAY_COLOR: &str = "#8c8c8c";

/// Presentation options for `emit_svg`.
#[derive(Clone, Debug)]
pub struct SvgStyle {
    pub title: String,
    pub show_t: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { title: String::new(), show_t: true }
    }
}

/// One named polyline.
pub(super) struct CurveSpec<'a> {
    pub label: String,
    pub color: &'static str,
    pub values: &'a [f64],
}

/// Renders a reconstruction as a standalone SVG document: the S curve,
/// the T curve when requested, prime-power gridlines, and markers for the
/// supplied peaks (none when the list is empty).
pub fn emit_svg(r: &Reconstruction, peaks: &[Peak], style: &SvgStyle) -> String {
    let mut curves = vec![CurveSpec { label: "S".to_string(), color: S_COLOR, values: r.s_values() }];
    if style.show_t {
        curves.push(CurveSpec { label: "T".to_string(), color: T_COLOR, values: r.t_values() });
    }
    render(r.grid(), &curves, peaks, &style.title)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub(super) fn render(grid: &Grid, curves: &[CurveSpec<'_>], peaks: &[Peak], title: &str) -> String {
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;

    let (lo, hi) = match grid.spacing() {
        GridSpacing::LogUniform => (grid.x_min().ln(), grid.x_max().ln()),
        GridSpacing::Linear => (grid.x_min(), grid.x_max()),
    };
    let to_px = |x: f64| {
        let u = match grid.spacing() {
            GridSpacing::LogUniform => (x.ln() - lo) / (hi - lo),
            GridSpacing::Linear => (x - lo) / (hi - lo),
        };
        MARGIN_LEFT + u * plot_w
    };

    let mut amp = 0.0f64;
    for c in curves {
        for &v in c.values {
            amp = amp.max(v.abs());
        }
    }
    let scale = if amp > 0.0 { 1.05 * amp } else { 1.0 };
    let to_py = |v: f64| MARGIN_TOP + (1.0 - (v + scale) / (2.0 * scale)) * plot_h;

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH:.0}\" height=\"{HEIGHT:.0}\" \
         viewBox=\"0 0 {WIDTH:.0} {HEIGHT:.0}\" font-family=\"sans-serif\">\n"
    );
    let _ = write!(svg, "<rect width=\"{WIDTH:.0}\" height=\"{HEIGHT:.0}\" fill=\"#ffffff\"/>\n");
    if !title.is_empty() {
        let _ = write!(
            svg,
            "<text x=\"{:.1}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" fill=\"#222222\">{}</text>\n",
            WIDTH / 2.0,
            escape(title)
        );
    }

    // Prime power gridlines with labels.
    for pp in prime_powers_in(grid.x_min(), grid.x_max()) {
        let px = to_px(pp as f64);
        let _ = write!(
            svg,
            "<line x1=\"{px:.2}\" y1=\"{MARGIN_TOP:.1}\" x2=\"{px:.2}\" y2=\"{:.1}\" \
             stroke=\"#d8d8d8\" stroke-dasharray=\"3,4\"/>\n",
            MARGIN_TOP + plot_h
        );
        let _ = write!(
            svg,
            "<text x=\"{px:.2}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"9\" \
             fill=\"#888888\">{pp}</text>\n",
            MARGIN_TOP - 4.0
        );
    }

    // Zero line and frame.
    let _ = write!(
        svg,
        "<line x1=\"{MARGIN_LEFT:.1}\" y1=\"{0:.2}\" x2=\"{1:.1}\" y2=\"{0:.2}\" stroke=\"#999999\"/>\n",
        to_py(0.0),
        MARGIN_LEFT + plot_w
    );
    let _ = write!(
        svg,
        "<rect x=\"{MARGIN_LEFT:.1}\" y=\"{MARGIN_TOP:.1}\" width=\"{plot_w:.1}\" height=\"{plot_h:.1}\" \
         fill=\"none\" stroke=\"#bbbbbb\"/>\n"
    );

    // Axis labels: y extremes and x endpoints.
    for (v, anchor_y) in [(scale, MARGIN_TOP + 4.0), (0.0, to_py(0.0)), (-scale, MARGIN_TOP + plot_h)]
    {
        let _ = write!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.2}\" text-anchor=\"end\" font-size=\"10\" \
             fill=\"#555555\">{v:.2}</text>\n",
            MARGIN_LEFT - 6.0,
            anchor_y + 3.0
        );
    }
    for x in [grid.x_min(), grid.x_max()] {
        let _ = write!(
            svg,
            "<text x=\"{:.2}\" y=\"{:.1}\" text-anchor=\"middle\" font-size=\"10\" \
             fill=\"#555555\">{x}</text>\n",
            to_px(x),
            MARGIN_TOP + plot_h + 14.0
        );
    }

    // Curves.
    for c in curves {
        let mut points = String::new();
        for (i, &v) in c.values.iter().enumerate() {
            if i > 0 {
                points.push(' ');
            }
            let _ = write!(points, "{:.2},{:.2}", to_px(grid.points()[i]), to_py(v));
        }
        let _ = write!(
            svg,
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\" points=\"{points}\"/>\n",
            c.color
        );
    }

    // Legend, top-left inside the frame.
    for (i, c) in curves.iter().enumerate() {
        let y = MARGIN_TOP + 16.0 + 14.0 * i as f64;
        let _ = write!(
            svg,
            "<line x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            MARGIN_LEFT + 8.0,
            MARGIN_LEFT + 28.0,
            c.color
        );
        let _ = write!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" fill=\"#333333\">{}</text>\n",
            MARGIN_LEFT + 34.0,
            y + 4.0,
            escape(&c.label)
        );
    }

    // Peak markers, colored by component.
    for p in peaks {
        let color = match p.component {
            Component::S => S_COLOR,
            Component::T => T_COLOR,
        };
        let _ = write!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"none\" stroke=\"{color}\" \
             stroke-width=\"1.5\"/>\n",
            to_px(p.x),
            to_py(p.amplitude)
        );
    }

    svg.push_str("</svg>\n");
    svg
}
