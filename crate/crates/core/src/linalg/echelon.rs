//! Incremental row echelon forms.
//!
//! Rows are kept normalized (leading coefficient 1) and every stored row is
//! reduced against the pivots that existed when it was inserted. Because the
//! reduced row echelon form of a row space is unique, every basis read off
//! from [`Echelon::rref`] is independent of insertion order; insertion order
//! only affects fill-in, which is why callers feed the sparsest rows first.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::field::{FieldSpec, Scalar};
use super::vector::{Accumulator, SparseVec};

/// The result of reducing a vector: `v = remainder + Σ c · rows[r]`.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub remainder: SparseVec,
    pub combination: Vec<(usize, Scalar)>,
}

/// A row space in echelon form inside `F_p^dim`.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: FieldSpec,
    dim: usize,
    rows: Vec<SparseVec>,
    lead_of: FxHashMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        Echelon { field, dim, rows: Vec::new(), lead_of: FxHashMap::default() }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.leading().expect("stored rows are nonzero").0).collect()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.lead_of.contains_key(&col)
    }

    /// Fully reduces `v` against the stored pivots.
    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        let f = self.field;
        let mut acc: BTreeMap<usize, Scalar> = v.iter().collect();
        let mut remainder = Vec::new();
        let mut combination = Vec::new();
        while let Some((c, a)) = acc.pop_first() {
            match self.lead_of.get(&c) {
                Some(&r) => {
                    combination.push((r, a));
                    for &(j, val) in &self.rows[r].entries()[1..] {
                        let delta = f.neg(f.mul(a, val));
                        match acc.entry(j) {
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let nv = f.add(*e.get(), delta);
                                if nv == 0 {
                                    e.remove();
                                } else {
                                    *e.get_mut() = nv;
                                }
                            }
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(delta);
                            }
                        }
                    }
                }
                None => remainder.push((c, a)),
            }
        }
        Reduction { remainder: SparseVec::from_sorted_unchecked(remainder), combination }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).remainder.is_zero()
    }

    /// Inserts `v`; returns the new row index when `v` was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let red = self.reduce(v);
        self.insert_reduced(red.remainder)
    }

    /// Inserts an already reduced nonzero remainder.
    pub fn insert_reduced(&mut self, remainder: SparseVec) -> Option<usize> {
        let (lead, c) = remainder.leading()?;
        let row = remainder.scale(&self.field, self.field.inv(c));
        let idx = self.rows.len();
        self.rows.push(row);
        self.lead_of.insert(lead, idx);
        Some(idx)
    }

    /// Inserts a family of vectors, sparsest first (ties by position).
    pub fn extend_sparsest_first(&mut self, vectors: &[SparseVec]) {
        let mut order: Vec<usize> = (0..vectors.len()).collect();
        order.sort_by_key(|&i| (vectors[i].len(), i));
        for i in order {
            self.insert(&vectors[i]);
        }
    }

    /// The reduced row echelon form, rows sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let f = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].leading().unwrap().0));
        let mut reduced: FxHashMap<usize, SparseVec> = FxHashMap::default();
        for r in order {
            let row = &self.rows[r];
            let lead = row.leading().unwrap().0;
            let mut acc = Accumulator::new(f);
            acc.add_vec(row, 1);
            for &(j, val) in &row.entries()[1..] {
                if let Some(other) = reduced.get(&j) {
                    acc.add_vec(other, f.neg(val));
                }
            }
            reduced.insert(lead, acc.finish());
        }
        let mut out: Vec<(usize, SparseVec)> = reduced.into_iter().collect();
        out.sort_by_key(|e| e.0);
        out.into_iter().map(|e| e.1).collect()
    }
}

/// Reduced row echelon form of a dense row-major matrix, returned as sparse rows.
pub fn dense_rref(field: &FieldSpec, rows: &[SparseVec], cols: usize) -> Vec<SparseVec> {
    let f = *field;
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.to_dense(cols)).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = f.inv(m[rank][col]);
        for x in m[rank][col..].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let factor = row[col];
                for j in col..cols {
                    if pivot_row[j] != 0 {
                        row[j] = f.sub(row[j], f.mul(factor, pivot_row[j]));
                    }
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    m.iter().map(|r| SparseVec::from_dense(field, r)).collect()
}
