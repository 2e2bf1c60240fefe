//! Number and matrix rendering.

use dnum_core::Matrix;

/// Ten significant digits with trailing zeros dropped: `0.894427191`, `1.0`.
pub fn significant(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.truncate(s.trim_end_matches('0').len());
        if s.ends_with('.') {
            s.push('0');
        }
    } else {
        s.push_str(".0");
    }
    s
}

/// Shortest decimal that parses back to the same `f64`.
pub fn shortest(x: f64) -> String {
    x.to_string()
}

/// Braced subset label, `{1,2}`.
pub fn braced(inner: &str) -> String {
    format!("{{{inner}}}")
}

/// Right-aligned table with a header row and a label column.
pub fn matrix_table(labels: &[String], m: &Matrix) -> String {
    let cells: Vec<Vec<String>> = m
        .rows()
        .map(|row| row.iter().map(|&x| significant(x)).collect())
        .collect();
    let label_width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let width = cells
        .iter()
        .flatten()
        .chain(labels)
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = format!("{:label_width$}", "");
    for l in labels {
        out.push_str(&format!("  {l:>width$}"));
    }
    out.push('\n');
    for (label, row) in labels.iter().zip(&cells) {
        out.push_str(&format!("{label:<label_width$}"));
        for c in row {
            out.push_str(&format!("  {c:>width$}"));
        }
        out.push('\n');
    }
    out
}
