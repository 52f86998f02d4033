//! Dense integer matrices with the small-window helpers the construction
//! and the verifier share.

use std::ops::{Index, IndexMut};

/// A dense row-major matrix of `i64` entries.
///
/// Indexing is 0-based internally; the block and window helpers that mirror
/// the 1-based conventions of the construction live on the callers' side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Option<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return None; // ragged
        }
        let data = rows.into_iter().flatten().collect();
        Some(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_array<const R: usize, const C: usize>(a: [[i64; C]; R]) -> Self {
        Matrix {
            rows: R,
            cols: C,
            data: a.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_sum(&self, r: usize) -> i64 {
        self.row(r).iter().sum()
    }

    pub fn col_sum(&self, c: usize) -> i64 {
        (0..self.rows).map(|r| self[(r, c)]).sum()
    }

    /// Sum over cells (i, i); requires a square matrix.
    pub fn main_diagonal_sum(&self) -> i64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Sum over cells (i, n-1-i); requires a square matrix.
    pub fn back_diagonal_sum(&self) -> i64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, self.cols - 1 - i)]).sum()
    }

    pub fn transposed(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn negated(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Copy of the sub-window at 0-based `(row, col)` of size `rows x cols`.
    pub fn window(&self, row: usize, col: usize, rows: usize, cols: usize) -> Matrix {
        debug_assert!(row + rows <= self.rows && col + cols <= self.cols);
        let mut out = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out[(r, c)] = self[(row + r, col + c)];
            }
        }
        out
    }

    /// Write `block` with its top-left corner at 0-based `(row, col)`.
    pub fn paste(&mut self, row: usize, col: usize, block: &Matrix) {
        debug_assert!(row + block.rows <= self.rows && col + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(row + r, col + c)] = block[(r, c)];
            }
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = i64;

    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(vec![vec![1, 2], vec![3]]).is_none());
    }

    #[test]
    fn window_and_paste_round_trip() {
        let mut m = Matrix::zeros(4, 4);
        let b = Matrix::from_array([[1, 2], [3, 4]]);
        m.paste(1, 2, &b);
        assert_eq!(m.window(1, 2, 2, 2), b);
        assert_eq!(m[(1, 2)], 1);
        assert_eq!(m[(2, 3)], 4);
    }

    #[test]
    fn sums() {
        let m = Matrix::from_array([[1, 2], [3, 4]]);
        assert_eq!(m.row_sum(0), 3);
        assert_eq!(m.col_sum(1), 6);
        assert_eq!(m.main_diagonal_sum(), 5);
        assert_eq!(m.back_diagonal_sum(), 5);
        assert_eq!(m.transposed()[(0, 1)], 3);
    }
}
