//! Chart output: ASCII grid, TSV, SVG.

use std::fmt::Write;
use std::str::FromStr;

use super::ExtChart;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartFormat {
    Ascii,
    Tsv,
    Svg,
}

impl FromStr for ChartFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(ChartFormat::Ascii),
            "tsv" => Ok(ChartFormat::Tsv),
            "svg" => Ok(ChartFormat::Svg),
            other => Err(format!("unknown chart format '{other}' (expected ascii, tsv or svg)")),
        }
    }
}

pub fn render_chart(chart: &ExtChart, format: ChartFormat) -> String {
    match format {
        ChartFormat::Ascii => ascii(chart),
        ChartFormat::Tsv => tsv(chart),
        ChartFormat::Svg => svg(chart),
    }
}

/// Range of `t - s` over the nonzero entries.
fn stems(chart: &ExtChart) -> Option<(i32, i32)> {
    let ns = chart.dims.keys().map(|(s, t)| t - *s as i32);
    let lo = ns.clone().min()?;
    Some((lo, ns.max()?))
}

/// Rows are `s` (top row highest), columns `t - s`; a cell holds one `o` per
/// basis element and `.` when empty.
fn ascii(chart: &ExtChart) -> String {
    let width = chart.dims.values().copied().max().unwrap_or(1).max(3);
    let mut out = String::new();
    let Some((lo, hi)) = stems(chart) else {
        out.push_str("s\\t-s\n");
        return out;
    };
    let width = width.max(lo.to_string().len()).max(hi.to_string().len());
    let _ = write!(out, "{:>5}", "s\\t-s");
    for n in lo..=hi {
        let _ = write!(out, " {n:>width$}");
    }
    out.push('\n');
    for s in (0..=chart.s_max).rev() {
        let _ = write!(out, "{s:>5}");
        for n in lo..=hi {
            let d = chart.dim(s, n + s as i32);
            let cell = if d == 0 { ".".to_string() } else { "o".repeat(d) };
            let _ = write!(out, " {cell:>width$}");
        }
        out.push('\n');
    }
    out
}

/// Header `s\tt\tdim`, then one line per nonzero entry, sorted by `(s, t)`.
fn tsv(chart: &ExtChart) -> String {
    let mut out = String::from("s\tt\tdim\n");
    for ((s, t), d) in &chart.dims {
        let _ = writeln!(out, "{s}\t{t}\t{d}");
    }
    out
}

fn svg(chart: &ExtChart) -> String {
    const CELL: i32 = 24;
    const MARGIN: i32 = 36;
    let (lo, hi) = stems(chart).unwrap_or((0, 0));
    let cols = hi - lo + 1;
    let rows = chart.s_max as i32 + 1;
    let w = cols * CELL + 2 * MARGIN;
    let h = rows * CELL + 2 * MARGIN;
    let x = |n: i32| MARGIN + (n - lo) * CELL + CELL / 2;
    let y = |s: i32| h - MARGIN - s * CELL - CELL / 2;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    for n in lo..=hi {
        let _ = writeln!(
            out,
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#ddd\"/>",
            x(n),
            MARGIN,
            h - MARGIN
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\">{n}</text>",
            x(n),
            h - MARGIN / 3
        );
    }
    for s in 0..rows {
        let _ = writeln!(
            out,
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#ddd\"/>",
            MARGIN,
            y(s),
            w - MARGIN
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{s}</text>",
            MARGIN - 6,
            y(s) + 3
        );
    }
    for ((s, t), d) in &chart.dims {
        let n = t - *s as i32;
        for k in 0..*d as i32 {
            let dx = (k * 2 - (*d as i32 - 1)) * 4;
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"black\"/>",
                x(n) + dx,
                y(*s as i32)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
