//! CSV and SVG rendering. Output is byte-identical for identical input.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{BenchRecord, FitResult};
use crate::error::{Error, Result};

pub const RECORD_COLUMNS: &str = "algorithm,input_size,probability,seed,graph_hash,wall_seconds";

pub fn emit_records_csv(records: &[BenchRecord]) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Empty("benchmark records"));
    }
    let mut out = format!("{RECORD_COLUMNS}\n");
    for r in records {
        let p = r.probability.map(|p| p.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.algorithm, r.input_size, p, r.seed, r.graph_hash, r.wall_seconds
        );
    }
    Ok(out)
}

/// Reads back the output of [`emit_records_csv`]. Metadata columns that the
/// CSV does not carry come back as zero.
pub fn parse_records_csv(text: &str) -> Result<Vec<BenchRecord>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, header)) if header.trim() == RECORD_COLUMNS => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected header `{RECORD_COLUMNS}`"),
            })
        }
    }
    let mut out = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let err = |m: &str| Error::Parse {
            line: line_no,
            message: m.to_string(),
        };
        let f: Vec<&str> = line.trim().split(',').collect();
        if f.len() != 6 {
            return Err(err("expected 6 columns"));
        }
        out.push(BenchRecord {
            algorithm: f[0].to_string(),
            input_size: f[1].parse().map_err(|_| err("invalid input_size"))?,
            probability: if f[2].is_empty() {
                None
            } else {
                Some(f[2].parse().map_err(|_| err("invalid probability"))?)
            },
            seed: f[3].parse().map_err(|_| err("invalid seed"))?,
            graph_hash: f[4].to_string(),
            wall_seconds: f[5].parse().map_err(|_| err("invalid wall_seconds"))?,
            edge_count: 0,
            max_degree: 0,
        });
    }
    Ok(out)
}

/// Mean wall time per algorithm over seeds, as plot series keyed by the
/// sweep variable.
pub fn mean_series(records: &[BenchRecord]) -> Vec<Series> {
    let mut order: Vec<&str> = Vec::new();
    let mut acc: BTreeMap<&str, BTreeMap<u64, (f64, usize)>> = BTreeMap::new();
    for r in records {
        if !order.contains(&r.algorithm.as_str()) {
            order.push(&r.algorithm);
        }
        let x = r.probability.unwrap_or(r.input_size as f64);
        let cell = acc
            .entry(&r.algorithm)
            .or_default()
            .entry(x.to_bits())
            .or_insert((0.0, 0));
        cell.0 += r.wall_seconds;
        cell.1 += 1;
    }
    order
        .into_iter()
        .map(|name| {
            let mut points: Vec<(f64, f64)> = acc[name]
                .iter()
                .map(|(&x, &(sum, n))| (f64::from_bits(x), sum / n as f64))
                .collect();
            points.sort_by(|a, b| a.0.total_cmp(&b.0));
            Series {
                name: name.to_string(),
                points,
            }
        })
        .collect()
}

/// Wide layout: one row per input size (or probability), one column per
/// algorithm holding the mean wall time over seeds. Algorithm columns keep
/// first-seen order.
pub fn emit_table_csv(records: &[BenchRecord]) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Empty("benchmark records"));
    }
    let by_probability = records.iter().all(|r| r.probability.is_some());
    let mut algorithms: Vec<&str> = Vec::new();
    // Keys are the sweep variable as bits so rows stay in numeric order.
    let mut cells: BTreeMap<u64, BTreeMap<&str, (f64, usize)>> = BTreeMap::new();
    for r in records {
        if !algorithms.contains(&r.algorithm.as_str()) {
            algorithms.push(&r.algorithm);
        }
        let key = if by_probability {
            r.probability.expect("checked").to_bits()
        } else {
            (r.input_size as f64).to_bits()
        };
        let cell = cells
            .entry(key)
            .or_default()
            .entry(&r.algorithm)
            .or_insert((0.0, 0));
        cell.0 += r.wall_seconds;
        cell.1 += 1;
    }
    let mut out = String::from(if by_probability {
        "probability"
    } else {
        "input_size"
    });
    for a in &algorithms {
        out.push(',');
        out.push_str(a);
    }
    out.push('\n');
    for (key, row) in &cells {
        let _ = write!(out, "{}", f64::from_bits(*key));
        for a in &algorithms {
            match row.get(a) {
                Some(&(sum, count)) => {
                    let _ = write!(out, ",{}", sum / count as f64);
                }
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn emit_fits_csv(fits: &[FitResult]) -> Result<String> {
    if fits.is_empty() {
        return Err(Error::Empty("fit results"));
    }
    let mut out = String::from("model,a,b,sse\n");
    for f in fits {
        let _ = writeln!(out, "{},{},{},{}", f.model, f.a, f.b, f.sse);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 160.0;
const MARGIN_Y: f64 = 50.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Line chart with one polyline per series, linear axes and a legend.
pub fn emit_svg(series: &[Series], title: &str, x_label: &str, y_label: &str) -> Result<String> {
    let all: Vec<(f64, f64)> = series
        .iter()
        .flat_map(|s| s.points.iter().copied())
        .collect();
    if all.is_empty() {
        return Err(Error::Empty("plot series"));
    }
    let (mut x0, mut x1, mut y0, mut y1) = all.iter().fold(
        (
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
        ),
        |(a, b, c, d), &(x, y)| (a.min(x), b.max(x), c.min(y), d.max(y)),
    );
    if x1 == x0 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if y1 == y0 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - 2.0 * MARGIN_Y;
    let px = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w;
    let py = |y: f64| HEIGHT - MARGIN_Y - (y - y0) / (y1 - y0) * plot_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="16">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        escape(title)
    );
    // Axes.
    let _ = writeln!(
        out,
        r#"<line x1="{l:.2}" y1="{b:.2}" x2="{r:.2}" y2="{b:.2}" stroke="black"/>"#,
        l = MARGIN_LEFT,
        r = MARGIN_LEFT + plot_w,
        b = HEIGHT - MARGIN_Y
    );
    let _ = writeln!(
        out,
        r#"<line x1="{l:.2}" y1="{t:.2}" x2="{l:.2}" y2="{b:.2}" stroke="black"/>"#,
        l = MARGIN_LEFT,
        t = MARGIN_Y,
        b = HEIGHT - MARGIN_Y
    );
    for k in 0..=4 {
        let f = k as f64 / 4.0;
        let xv = x0 + f * (x1 - x0);
        let yv = y0 + f * (y1 - y0);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="11">{}</text>"#,
            px(xv),
            HEIGHT - MARGIN_Y + 16.0,
            tick(xv)
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end" font-size="11">{}</text>"#,
            MARGIN_LEFT - 6.0,
            py(yv) + 4.0,
            tick(yv)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="13">{}</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    );
    let _ = writeln!(
        out,
        r#"<text x="18" y="{:.2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 {:.2})">{}</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0,
        escape(y_label)
    );

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#,
            pts.join(" ")
        );
        let ly = MARGIN_Y + 18.0 * i as f64;
        let lx = WIDTH - MARGIN_RIGHT + 16.0;
        let _ = writeln!(
            out,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
            lx + 20.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="12">{}</text>"#,
            lx + 26.0,
            ly + 4.0,
            escape(&s.name)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn tick(v: f64) -> String {
    if v != 0.0 && (v.abs() < 1e-2 || v.abs() >= 1e5) {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}
