//! Column-major sparse matrices.

use super::field::{FieldSpec, Scalar};
use super::vector::{Accumulator, SparseVec};
use crate::error::{Error, Result};

/// A sparse matrix stored as one [`SparseVec`] per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    /// Builds a matrix from its columns, checking that row indices are in bounds.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        for col in &columns {
            if let Some(m) = col.max_index() {
                if m >= rows {
                    return Err(Error::Dimension(format!("row index {m} out of bounds for {rows} rows")));
                }
            }
        }
        Ok(SparseMatrix { rows, cols: columns.len(), columns })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![SparseVec::zero(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|i| SparseVec::unit(i, 1)).collect() }
    }

    /// Builds a matrix from dense rows (convenient in tests and small examples).
    pub fn from_dense_rows(field: &FieldSpec, rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let columns = (0..ncols)
            .map(|j| SparseVec::from_pairs(field, (0..nrows).map(|i| (i, field.from_i64(rows[i][j])))))
            .collect();
        SparseMatrix { rows: nrows, cols: ncols, columns }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::len).sum()
    }

    /// `M * v`.
    pub fn apply(&self, field: &FieldSpec, v: &SparseVec) -> Result<SparseVec> {
        if let Some(m) = v.max_index() {
            if m >= self.cols {
                return Err(Error::Dimension(format!("vector index {m} exceeds {} columns", self.cols)));
            }
        }
        let mut acc = Accumulator::new(*field);
        for (j, c) in v.iter() {
            acc.add_vec(&self.columns[j], c);
        }
        Ok(acc.finish())
    }

    /// The rows of the matrix as sparse vectors over the column index space.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.iter() {
                rows[i].push((j, c));
            }
        }
        rows.into_iter().map(SparseVec::from_sorted_unchecked).collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix { rows: self.cols, cols: self.rows, columns: self.row_vectors() }
    }

    /// `(row, col, value)` triples in column-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, Scalar)> + '_ {
        self.columns.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |(i, c)| (i, j, c)))
    }
}
