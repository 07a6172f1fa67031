//! Minimal hand-rolled SVG charts for the report files. No styling
//! knobs: fixed canvas, fixed palette, deterministic output.

use std::fmt::Write as _;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 70.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 70.0;

const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// One named line on a chart.
#[derive(Debug, Clone)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

struct Scale {
    min: f64,
    max: f64,
    pixel_min: f64,
    pixel_max: f64,
}

impl Scale {
    fn new(min: f64, max: f64, pixel_min: f64, pixel_max: f64) -> Self {
        let (min, max) = if (max - min).abs() < 1e-12 {
            (min - 0.5, max + 0.5)
        } else {
            (min, max)
        };
        Scale {
            min,
            max,
            pixel_min,
            pixel_max,
        }
    }

    fn at(&self, value: f64) -> f64 {
        let t = (value - self.min) / (self.max - self.min);
        self.pixel_min + t * (self.pixel_max - self.pixel_min)
    }

    fn ticks(&self) -> Vec<f64> {
        (0..=4)
            .map(|i| self.min + i as f64 * (self.max - self.min) / 4.0)
            .collect()
    }
}

fn open_svg(out: &mut String, title: &str) {
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = write!(
        out,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/><text x="{:.1}" y="26" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
}

fn axes(out: &mut String, x: &Scale, y: &Scale, x_label: &str, y_label: &str) {
    let plot_bottom = HEIGHT - MARGIN_BOTTOM;
    let plot_right = WIDTH - MARGIN_RIGHT;
    let _ = write!(
        out,
        r#"<line x1="{MARGIN_LEFT}" y1="{plot_bottom}" x2="{plot_right}" y2="{plot_bottom}" stroke="black"/><line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{plot_bottom}" stroke="black"/>"#
    );
    for tick in x.ticks() {
        let px = x.at(tick);
        let _ = write!(
            out,
            r#"<line x1="{px:.1}" y1="{plot_bottom}" x2="{px:.1}" y2="{:.1}" stroke="black"/><text x="{px:.1}" y="{:.1}" font-family="sans-serif" font-size="11" text-anchor="middle">{tick:.2}</text>"#,
            plot_bottom + 5.0,
            plot_bottom + 20.0
        );
    }
    for tick in y.ticks() {
        let py = y.at(tick);
        let _ = write!(
            out,
            r#"<line x1="{:.1}" y1="{py:.1}" x2="{MARGIN_LEFT}" y2="{py:.1}" stroke="black"/><text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11" text-anchor="end">{tick:.2}</text>"#,
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT - 8.0,
            py + 4.0
        );
        let _ = write!(
            out,
            r##"<line x1="{MARGIN_LEFT}" y1="{py:.1}" x2="{plot_right}" y2="{py:.1}" stroke="#dddddd"/>"##
        );
    }
    let _ = write!(
        out,
        r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="13" text-anchor="middle">{}</text>"#,
        (MARGIN_LEFT + plot_right) / 2.0,
        HEIGHT - 18.0,
        escape(x_label)
    );
    let _ = write!(
        out,
        r#"<text x="18" y="{:.1}" font-family="sans-serif" font-size="13" text-anchor="middle" transform="rotate(-90 18 {:.1})">{}</text>"#,
        (MARGIN_TOP + plot_bottom) / 2.0,
        (MARGIN_TOP + plot_bottom) / 2.0,
        escape(y_label)
    );
}

fn legend(out: &mut String, entries: &[(&str, &str)]) {
    let mut ly = MARGIN_TOP + 8.0;
    let lx = WIDTH - MARGIN_RIGHT - 170.0;
    for (name, color) in entries {
        let _ = write!(
            out,
            r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"/><text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12">{}</text>"#,
            lx + 24.0,
            lx + 30.0,
            ly + 4.0,
            escape(name)
        );
        ly += 18.0;
    }
}

/// Multi-series line chart over a shared numeric x-axis.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let mut out = String::new();
    open_svg(&mut out, title);

    let points: Vec<(f64, f64)> = series
        .iter()
        .flat_map(|s| s.points.iter().copied())
        .collect();
    let x_min = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let x_max = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let y_max = points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let y_min = points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let (x_min, x_max) = if points.is_empty() {
        (0.0, 1.0)
    } else {
        (x_min, x_max)
    };
    let (y_min, y_max) = if points.is_empty() {
        (0.0, 1.0)
    } else {
        (y_min.min(0.0), y_max)
    };

    let x = Scale::new(x_min, x_max, MARGIN_LEFT, WIDTH - MARGIN_RIGHT);
    let y = Scale::new(y_min, y_max, HEIGHT - MARGIN_BOTTOM, MARGIN_TOP);
    axes(&mut out, &x, &y, x_label, y_label);

    let mut legend_entries = Vec::new();
    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        legend_entries.push((s.name.as_str(), color));
        if s.points.is_empty() {
            continue;
        }
        let path: Vec<String> = s
            .points
            .iter()
            .map(|&(px, py)| format!("{:.1},{:.1}", x.at(px), y.at(py)))
            .collect();
        let _ = write!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            path.join(" ")
        );
        for &(px, py) in &s.points {
            let _ = write!(
                out,
                r#"<circle cx="{:.1}" cy="{:.1}" r="3" fill="{color}"/>"#,
                x.at(px),
                y.at(py)
            );
        }
    }
    legend(&mut out, &legend_entries);
    out.push_str("</svg>");
    out
}

/// Bars on the left axis with an overlaid line on the right axis, one
/// category per x position. Used for per-query improvement against ρ.
pub fn bar_line_chart(
    title: &str,
    categories: &[String],
    bars: &[f64],
    bars_label: &str,
    line: &[f64],
    line_label: &str,
) -> String {
    let mut out = String::new();
    open_svg(&mut out, title);

    let plot_bottom = HEIGHT - MARGIN_BOTTOM;
    let plot_right = WIDTH - MARGIN_RIGHT;

    let bar_min = bars.iter().copied().fold(0.0, f64::min);
    let bar_max = bars.iter().copied().fold(0.0, f64::max);
    let y_bars = Scale::new(bar_min, bar_max, plot_bottom, MARGIN_TOP);
    let line_max = line.iter().copied().fold(0.0, f64::max).max(1e-9);
    let y_line = Scale::new(0.0, line_max, plot_bottom, MARGIN_TOP);

    // left axis for the bars
    for tick in y_bars.ticks() {
        let py = y_bars.at(tick);
        let _ = write!(
            out,
            r##"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11" text-anchor="end">{tick:.3}</text><line x1="{MARGIN_LEFT}" y1="{py:.1}" x2="{plot_right}" y2="{py:.1}" stroke="#dddddd"/>"##,
            MARGIN_LEFT - 8.0,
            py + 4.0
        );
    }
    // right axis for the line
    for tick in y_line.ticks() {
        let py = y_line.at(tick);
        let _ = write!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11" text-anchor="start">{tick:.2}</text>"#,
            plot_right + 8.0,
            py + 4.0
        );
    }
    let _ = write!(
        out,
        r#"<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{plot_bottom}" stroke="black"/><line x1="{plot_right}" y1="{MARGIN_TOP}" x2="{plot_right}" y2="{plot_bottom}" stroke="black"/>"#
    );

    let n = categories.len().max(1);
    let slot = (plot_right - MARGIN_LEFT) / n as f64;
    let bar_width = (slot * 0.6).max(1.0);
    let zero_y = y_bars.at(0.0);
    let _ = write!(
        out,
        r#"<line x1="{MARGIN_LEFT}" y1="{zero_y:.1}" x2="{plot_right}" y2="{zero_y:.1}" stroke="black"/>"#
    );

    for (i, (&value, name)) in bars.iter().zip(categories).enumerate() {
        let center = MARGIN_LEFT + slot * (i as f64 + 0.5);
        let top = y_bars.at(value.max(0.0));
        let bottom = y_bars.at(value.min(0.0));
        let _ = write!(
            out,
            r#"<rect x="{:.1}" y="{top:.1}" width="{bar_width:.1}" height="{:.1}" fill="{}"/>"#,
            center - bar_width / 2.0,
            (bottom - top).abs().max(0.5),
            PALETTE[0]
        );
        let _ = write!(
            out,
            r#"<text x="{center:.1}" y="{:.1}" font-family="sans-serif" font-size="10" text-anchor="end" transform="rotate(-45 {center:.1} {:.1})">{}</text>"#,
            plot_bottom + 14.0,
            plot_bottom + 14.0,
            escape(name)
        );
    }

    if !line.is_empty() {
        let path: Vec<String> = line
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                format!(
                    "{:.1},{:.1}",
                    MARGIN_LEFT + slot * (i as f64 + 0.5),
                    y_line.at(v)
                )
            })
            .collect();
        let _ = write!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            path.join(" "),
            PALETTE[1]
        );
    }

    legend(
        &mut out,
        &[(bars_label, PALETTE[0]), (line_label, PALETTE[1])],
    );
    out.push_str("</svg>");
    out
}
