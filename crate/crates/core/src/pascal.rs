//! Pascal-triangle rows and the quadratic diagonal.
//!
//! Everything is built with the additive rule `C(n, r) = C(n-1, r-1) + C(n-1, r)`; no
//! factorials or divisions are involved.

use crate::numeric::Natural;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalRow {
    pub index: usize,
    /// `C(n, 0) ... C(n, n)`.
    pub coefficients: Vec<Natural>,
}

impl PascalRow {
    pub fn first() -> Self {
        PascalRow {
            index: 0,
            coefficients: vec![Natural::from(1)],
        }
    }

    pub fn next_row(&self) -> Self {
        PascalRow {
            index: self.index + 1,
            coefficients: next_coefficients(&self.coefficients, usize::MAX),
        }
    }

    pub fn get(&self, r: usize) -> Option<&Natural> {
        self.coefficients.get(r)
    }
}

/// Applies the additive rule to `prev`, keeping at most `width` leading columns.
fn next_coefficients(prev: &[Natural], width: usize) -> Vec<Natural> {
    let len = (prev.len() + 1).min(width);
    (0..len)
        .map(
            |r| match (r.checked_sub(1).and_then(|s| prev.get(s)), prev.get(r)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!("column {r} has no parent"),
            },
        )
        .collect()
}

pub fn pascal_row(n: usize) -> PascalRow {
    let mut row = PascalRow::first();
    for _ in 0..n {
        row = row.next_row();
    }
    row
}

/// `C(2,2), C(3,2), ..., C(count+1, 2)`.
///
/// Element `t` (1-based) is `C(t+1, 2)`, which equals the triangular number `S_t`. Only
/// the first three columns of each row are carried.
pub fn quadratic_diagonal(count: usize) -> Vec<Natural> {
    let mut columns = vec![Natural::from(1)];
    let mut out = Vec::with_capacity(count);
    let mut row = 0usize;
    while out.len() < count {
        columns = next_coefficients(&columns, 3);
        row += 1;
        if row >= 2 {
            out.push(columns[2].clone());
        }
    }
    out
}
