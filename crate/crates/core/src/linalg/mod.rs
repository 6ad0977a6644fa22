//! Exact linear algebra over prime fields: rank, kernels, solving and
//! quotient-space coordinates.
//!
//! Everything funnels through the reduced row echelon form of a row space.
//! Below [`DENSE_CUTOFF`] columns a dense elimination is used; above it a
//! sparse incremental elimination that inserts the sparsest rows first.
//! Both produce the unique RREF, so results never depend on the path.

mod echelon;
mod field;
mod matrix;
mod quotient;
mod vector;

pub use echelon::{dense_rref, Echelon, Reduction};
pub use field::{FieldSpec, Scalar};
pub use matrix::SparseMatrix;
pub use quotient::QuotientSpace;
pub use vector::{Accumulator, SparseVec};

use crate::error::{Error, Result};

/// Matrices with fewer columns than this are eliminated densely.
pub const DENSE_CUTOFF: usize = 512;

/// Reduced row echelon form of the span of `rows` inside `F_p^cols`.
pub fn rref_rows(field: &FieldSpec, rows: &[SparseVec], cols: usize) -> Vec<SparseVec> {
    if cols < DENSE_CUTOFF {
        dense_rref(field, rows, cols)
    } else {
        sparse_rref_rows(field, rows, cols)
    }
}

/// The sparse elimination path, exposed so tests can compare both paths.
pub fn sparse_rref_rows(field: &FieldSpec, rows: &[SparseVec], cols: usize) -> Vec<SparseVec> {
    let mut ech = Echelon::new(*field, cols);
    ech.extend_sparsest_first(rows);
    ech.rref()
}

/// Rank of `m`.
pub fn rank(field: &FieldSpec, m: &SparseMatrix) -> usize {
    if m.cols() < DENSE_CUTOFF {
        dense_rref(field, &m.row_vectors(), m.cols()).len()
    } else {
        // The rank of the column space equals the rank of the row space;
        // eliminate whichever family lives in the smaller ambient space.
        let mut ech = Echelon::new(*field, m.rows());
        ech.extend_sparsest_first(m.columns());
        ech.rank()
    }
}

/// Kernel vectors read off a reduced row echelon form: one per free column,
/// with that free coordinate 1 and the other free coordinates 0.
pub fn kernel_from_rref(field: &FieldSpec, rref: &[SparseVec], cols: usize) -> Vec<SparseVec> {
    let mut is_pivot = vec![false; cols];
    let mut by_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
    for row in rref {
        let (lead, _) = row.leading().expect("rref rows are nonzero");
        is_pivot[lead] = true;
        for &(j, v) in &row.entries()[1..] {
            by_free[j].push((lead, field.neg(v)));
        }
    }
    (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut e = std::mem::take(&mut by_free[j]);
            e.push((j, 1 % field.p()));
            e.sort_unstable_by_key(|x| x.0);
            SparseVec::from_sorted_unchecked(e)
        })
        .collect()
}

/// A basis of `ker m` in reduced echelon form.
pub fn kernel_basis(field: &FieldSpec, m: &SparseMatrix) -> Vec<SparseVec> {
    let rref = rref_rows(field, &m.row_vectors(), m.cols());
    kernel_from_rref(field, &rref, m.cols())
}

/// Solves `m x = b`, setting free variables to zero. Returns `Ok(None)` when
/// the system is inconsistent.
pub fn solve(field: &FieldSpec, m: &SparseMatrix, b: &SparseVec) -> Result<Option<SparseVec>> {
    if let Some(i) = b.max_index() {
        if i >= m.rows() {
            return Err(Error::Dimension(format!("right-hand side index {i} exceeds {} rows", m.rows())));
        }
    }
    let n = m.cols();
    let mut rows = m.row_vectors();
    for (i, c) in b.iter() {
        let mut e = rows[i].entries().to_vec();
        e.push((n, c));
        rows[i] = SparseVec::from_sorted_unchecked(e);
    }
    let rref = rref_rows(field, &rows, n + 1);
    let mut x = Vec::new();
    for row in &rref {
        let (lead, _) = row.leading().unwrap();
        if lead == n {
            return Ok(None);
        }
        let v = row.get(n);
        if v != 0 {
            x.push((lead, v));
        }
    }
    x.sort_unstable_by_key(|e| e.0);
    Ok(Some(SparseVec::from_sorted_unchecked(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f2 = f(2);
        assert_eq!(rank(&f2, &SparseMatrix::zero(3, 4)), 0);
        assert_eq!(rank(&f2, &SparseMatrix::identity(5)), 5);
        assert_eq!(rank(&f2, &SparseMatrix::from_dense_rows(&f2, &[vec![1, 1], vec![1, 1]])), 1);
    }

    #[test]
    fn kernel_examples() {
        let f3 = f(3);
        assert!(kernel_basis(&f3, &SparseMatrix::identity(4)).is_empty());
        let k = kernel_basis(&f3, &SparseMatrix::zero(3, 3));
        assert_eq!(k, (0..3).map(|i| SparseVec::unit(i, 1)).collect::<Vec<_>>());
        let k = kernel_basis(&f3, &SparseMatrix::from_dense_rows(&f3, &[vec![1, 1]]));
        assert_eq!(k, vec![SparseVec::from_pairs(&f3, [(0, 2), (1, 1)])]);
    }

    #[test]
    fn solve_examples() {
        let f2 = f(2);
        let b = SparseVec::from_pairs(&f2, [(0, 1), (2, 1)]);
        assert_eq!(solve(&f2, &SparseMatrix::identity(3), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve(&f2, &SparseMatrix::zero(3, 3), &b).unwrap(), None);
        let m = SparseMatrix::from_dense_rows(&f2, &[vec![1, 1], vec![0, 1]]);
        let x = solve(&f2, &m, &SparseVec::unit(1, 1)).unwrap().unwrap();
        assert_eq!(x, SparseVec::from_pairs(&f2, [(0, 1), (1, 1)]));
        assert!(solve(&f2, &m, &SparseVec::unit(5, 1)).is_err());
    }

    #[test]
    fn dense_and_sparse_agree_on_wide_matrix() {
        let f5 = f(5);
        // 3 rows, 600 columns: forces the sparse path in rref_rows.
        let rows: Vec<SparseVec> = (0..3)
            .map(|r| SparseVec::from_pairs(&f5, (0..600).filter(|j| (j * (r + 2)) % 7 < 3).map(|j| (j, (j % 4 + 1) as u32))))
            .collect();
        assert_eq!(dense_rref(&f5, &rows, 600), sparse_rref_rows(&f5, &rows, 600));
    }
}
