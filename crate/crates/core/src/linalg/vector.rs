//! Sparse vectors over a prime field.

use rustc_hash::FxHashMap;

use super::field::{FieldSpec, Scalar};

/// A sparse vector: strictly increasing indices paired with nonzero residues.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// The basis vector `c * e_i` (empty when `c` is zero).
    pub fn unit(i: usize, c: Scalar) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(field: &FieldSpec, pairs: I) -> Self {
        let mut acc = Accumulator::new(*field);
        for (i, c) in pairs {
            acc.add(i, c);
        }
        acc.finish()
    }

    /// Wraps entries that are already sorted, deduplicated and nonzero.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| e.1 != 0));
        SparseVec { entries }
    }

    pub fn from_dense(field: &FieldSpec, dense: &[Scalar]) -> Self {
        let entries = dense
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| {
                let c = c % field.p();
                (c != 0).then_some((i, c))
            })
            .collect();
        SparseVec { entries }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![0; dim];
        for &(i, c) in &self.entries {
            out[i] = c;
        }
        out
    }

    #[inline]
    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    #[inline]
    pub fn iter(&self) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        self.entries.iter().copied()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coefficient at index `i`.
    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(pos) => self.entries[pos].1,
            Err(_) => 0,
        }
    }

    /// All entries whose index lies in `lo..hi`.
    pub fn range(&self, lo: usize, hi: usize) -> &[(usize, Scalar)] {
        let a = self.entries.partition_point(|e| e.0 < lo);
        let b = self.entries.partition_point(|e| e.0 < hi);
        &self.entries[a..b]
    }

    pub fn leading(&self) -> Option<(usize, Scalar)> {
        self.entries.first().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, field: &FieldSpec, c: Scalar) -> Self {
        let c = c % field.p();
        if c == 0 {
            return Self::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|&(i, a)| (i, field.mul(a, c))).collect(),
        }
    }

    pub fn neg(&self, field: &FieldSpec) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|&(i, a)| (i, field.neg(a))).collect(),
        }
    }

    /// `self + c * other`, by a sorted merge.
    pub fn add_scaled(&self, field: &FieldSpec, other: &SparseVec, c: Scalar) -> Self {
        let c = c % field.p();
        if c == 0 {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, field.mul(b[j].1, c)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = field.add(a[i].1, field.mul(b[j].1, c));
                    if v != 0 {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(k, v)| (k, field.mul(v, c))));
        SparseVec { entries: out }
    }

    pub fn add(&self, field: &FieldSpec, other: &SparseVec) -> Self {
        self.add_scaled(field, other, 1)
    }

    pub fn sub(&self, field: &FieldSpec, other: &SparseVec) -> Self {
        self.add_scaled(field, other, field.neg(1 % field.p()))
    }

    /// Standard dot product.
    pub fn dot(&self, field: &FieldSpec, other: &SparseVec) -> Scalar {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = 0;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = field.add(acc, field.mul(a[i].1, b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Re-indexes every entry through `f`, summing collisions.
    pub fn map_indices<F: Fn(usize) -> usize>(&self, field: &FieldSpec, f: F) -> Self {
        SparseVec::from_pairs(field, self.entries.iter().map(|&(i, c)| (f(i), c)))
    }

    /// Keeps the entries whose index satisfies `keep`.
    pub fn filter<F: Fn(usize) -> bool>(&self, keep: F) -> Self {
        SparseVec {
            entries: self.entries.iter().copied().filter(|e| keep(e.0)).collect(),
        }
    }
}

/// A hash-map accumulator for building sparse vectors term by term.
#[derive(Debug, Clone)]
pub struct Accumulator {
    field: FieldSpec,
    map: FxHashMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new(field: FieldSpec) -> Self {
        Accumulator { field, map: FxHashMap::default() }
    }

    #[inline]
    pub fn add(&mut self, i: usize, c: Scalar) {
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        let f = self.field;
        let e = self.map.entry(i).or_insert(0);
        *e = f.add(*e, c);
    }

    pub fn add_vec(&mut self, v: &SparseVec, c: Scalar) {
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        for (i, a) in v.iter() {
            self.add(i, self.field.mul(a, c));
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut entries: Vec<(usize, Scalar)> = self.map.into_iter().filter(|e| e.1 != 0).collect();
        entries.sort_unstable_by_key(|e| e.0);
        SparseVec { entries }
    }
}
