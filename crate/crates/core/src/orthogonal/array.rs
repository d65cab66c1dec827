use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};

/// Default upper limit on the number of rows of a constructed array.
pub const DEFAULT_MAX_ROWS: usize = 1_000_000;

/// Upper limit on `rows * factors`, guarding memory independently of the row cap.
const MAX_CELLS: usize = 1 << 28;

/// A strength-2 orthogonal array `L_M(Q^F)` with levels numbered `1..=Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalArray {
    levels: usize,
    factors: usize,
    exponent: u32,
    rows: usize,
    /// Row-major `rows x factors` level matrix.
    cells: Vec<u32>,
}

impl OrthogonalArray {
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// The exponent `J` with `rows = levels^J`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.cells[r * self.factors..(r + 1) * self.factors]
    }

    pub fn level(&self, row: usize, factor: usize) -> u32 {
        self.cells[row * self.factors + factor]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u32]> {
        self.cells.chunks(self.factors)
    }

    /// Checks both balance properties: each level appears `M/Q` times per
    /// column, and each ordered level pair `M/Q^2` times per column pair.
    pub fn is_strength_two(&self) -> bool {
        let q = self.levels;
        for c in 0..self.factors {
            let mut counts = vec![0usize; q];
            for row in self.iter_rows() {
                counts[row[c] as usize - 1] += 1;
            }
            if counts.iter().any(|&k| k * q != self.rows) {
                return false;
            }
        }
        for a in 0..self.factors {
            for b in a + 1..self.factors {
                let mut counts = vec![0usize; q * q];
                for row in self.iter_rows() {
                    counts[(row[a] as usize - 1) * q + row[b] as usize - 1] += 1;
                }
                if counts.iter().any(|&k| k * q * q != self.rows) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Builds `L_{Q^J}(Q^F)` for prime `Q`, with the default row cap.
pub fn construct_orthogonal_array(q: usize, f: usize) -> Result<OrthogonalArray> {
    construct_orthogonal_array_capped(q, f, DEFAULT_MAX_ROWS)
}

/// Builds the array by the classic basic/non-basic column construction over
/// `GF(Q)`: choose the smallest `J` with `(Q^J - 1)/(Q - 1) >= F`, fill the `J`
/// basic columns with the base-`Q` digits of the row index, derive every other
/// column as `(a_s * t + a_j) mod Q`, shift to 1-based levels and keep the
/// first `F` columns.
pub fn construct_orthogonal_array_capped(
    q: usize,
    f: usize,
    max_rows: usize,
) -> Result<OrthogonalArray> {
    if !is_prime(q) {
        return Err(usage(format!(
            "orthogonal array levels must be prime, got {q}"
        )));
    }
    if f == 0 {
        return Err(usage("orthogonal array needs at least one factor"));
    }

    let mut j: u32 = 1;
    let mut rows = q;
    let mut columns = 1usize;
    while columns < f {
        rows = rows
            .checked_mul(q)
            .filter(|&r| r <= max_rows)
            .ok_or_else(|| capacity(q, f, max_rows))?;
        columns = columns * q + 1;
        j += 1;
    }
    if rows > max_rows {
        return Err(capacity(q, f, max_rows));
    }
    let full_columns = columns;
    if rows.saturating_mul(full_columns) > MAX_CELLS {
        return Err(capacity(q, f, max_rows));
    }

    // Column-major scratch with 0-based levels.
    let mut a = vec![vec![0u32; rows]; full_columns];

    let mut block = 1usize; // Q^(k-1)
    for _ in 1..=j {
        let col = (block - 1) / (q - 1);
        let divisor = rows / (block * q); // Q^(J-k)
        for (i, cell) in a[col].iter_mut().enumerate() {
            *cell = ((i / divisor) % q) as u32;
        }
        block *= q;
    }

    let mut block = q; // Q^(k-1), starting at k = 2
    for _ in 2..=j {
        let col = (block - 1) / (q - 1);
        for s in 0..col {
            for t in 1..q {
                let target = col + s * (q - 1) + t;
                let (head, tail) = a.split_at_mut(target);
                let dst = &mut tail[0];
                for i in 0..rows {
                    dst[i] = ((head[s][i] as usize * t + head[col][i] as usize) % q) as u32;
                }
            }
        }
        block *= q;
    }

    let mut cells = Vec::with_capacity(rows * f);
    for i in 0..rows {
        cells.extend(a.iter().take(f).map(|column| column[i] + 1));
    }
    Ok(OrthogonalArray {
        levels: q,
        factors: f,
        exponent: j,
        rows,
        cells,
    })
}

fn capacity(q: usize, f: usize, max_rows: usize) -> Error {
    Error::Capacity(format!(
        "L(Q={q}, F={f}) needs more than the {max_rows}-row budget"
    ))
}
