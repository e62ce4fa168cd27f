use std::fmt::Write as _;

use minortotals::Frequency;

/// Always `p/q`, including `0/1` and `1/1`.
pub fn exact(f: Frequency) -> String {
    format!("{}/{}", f.numer(), f.denom())
}

pub fn approx(f: Frequency) -> f64 {
    *f.numer() as f64 / *f.denom() as f64
}

pub fn decimal(x: f64) -> String {
    format!("{x:.6}")
}

pub fn brace_set(digits: &[u32]) -> String {
    let inner = digits
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{inner}}}")
}

/// Right-aligned ASCII table with a header row.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    left_last: bool,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            left_last: false,
        }
    }

    /// Left-aligns the final column, for free-form text such as digit sets.
    pub fn left_align_last(mut self) -> Self {
        self.left_last = true;
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    /// A full-width marker row such as `...`.
    pub fn ellipsis(&mut self) {
        self.rows.push(vec!["...".to_string(); self.header.len()]);
    }

    pub fn write_to(&self, out: &mut String) {
        let widths: Vec<usize> = (0..self.header.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.header[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let last = line.len() - 1;
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (cell, &w))| match (self.left_last, c == last) {
                    (true, true) => cell.clone(),
                    _ => format!("{cell:>w$}"),
                })
                .collect();
            writeln!(out, "{}", cells.join("  ")).unwrap();
        }
    }
}
