//! Finite groups given by Cayley tables, with subgroups, conjugacy classes,
//! coset systems and double cosets.
//!
//! Element `0` is always the identity and every computation goes through the
//! multiplication table, so a product is a single lookup.

mod conjugacy;
mod presets;
mod subgroup;

pub use conjugacy::ConjugacyData;
pub use presets::{parse_cycles, preset_group, Preset};
pub use subgroup::{CosetSystem, DoubleCosetSystem, Subgroup};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the order of groups generated by permutations.
pub const DEFAULT_SIZE_CAP: usize = 512;

/// A finite group with elements `0..order`, identity `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// JSON exchange format: `{"order": n, "mult": [[...]], "labels": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Group {
    /// Validates a Cayley table. If the identity is not element `0`, the
    /// elements are relabelled by swapping the identity into position `0`.
    pub fn from_mult_table(table: &[Vec<usize>]) -> Result<Group> {
        Self::from_mult_table_labeled(table, None)
    }

    pub fn from_mult_table_labeled(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Group> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        for row in table {
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::EntryOutOfRange(bad));
            }
        }
        if let Some(l) = &labels {
            let mut sorted = l.clone();
            sorted.sort();
            sorted.dedup();
            if l.len() != n || sorted.len() != n {
                return Err(Error::DuplicateLabels);
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(Error::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        // Relabel so that the identity is 0 (swap e and 0).
        let relabel = |g: usize| -> usize {
            if g == e {
                0
            } else if g == 0 {
                e
            } else {
                g
            }
        };
        let mut mult = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| mult[a * n + b] == 0 && mult[b * n + a] == 0) {
                Some(b) => inv[a] = b,
                None => return Err(Error::MissingInverse(relabel(a))),
            }
        }
        let labels = labels.map(|l| (0..n).map(|g| l[relabel(g)].clone()).collect());
        Ok(Group { order: n, mult, inv, labels })
    }

    /// The closure of a set of permutations of `{0..d-1}`. Elements are the
    /// identity followed by the breadth-first discovery order, where each
    /// element is right-multiplied by every generator in turn. The product
    /// `g*h` is the composite "apply `h`, then `g`".
    pub fn from_permutations(generators: &[Vec<usize>], size_cap: usize) -> Result<Group> {
        let d = generators.first().map_or(0, |g| g.len());
        for g in generators {
            let mut seen = vec![false; d];
            if g.len() != d {
                return Err(Error::InvalidPermutation("generators act on different domains".into()));
            }
            for &x in g {
                if x >= d || seen[x] {
                    return Err(Error::InvalidPermutation(format!("{g:?} is not a bijection")));
                }
                seen[x] = true;
            }
        }
        let compose = |g: &[usize], h: &[usize]| -> Vec<usize> { h.iter().map(|&x| g[x]).collect() };
        let identity: Vec<usize> = (0..d).collect();
        let mut elements = vec![identity.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(identity, 0usize);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in generators {
                let next = compose(&current, g);
                if !index.contains_key(&next) {
                    if elements.len() >= size_cap {
                        return Err(Error::SizeCap(size_cap));
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Group::from_mult_table(&table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element (always `0`).
    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Product of a sequence, left to right (identity for the empty sequence).
    #[inline]
    pub fn product(&self, items: &[usize]) -> usize {
        items.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    /// Inverse of the product of a sequence.
    #[inline]
    pub fn product_inv(&self, items: &[usize]) -> usize {
        self.inv(self.product(items))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of the element `g`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element (its label, or `g<i>`).
    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None if g == 0 => "e".to_string(),
            None => format!("g{g}"),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if labels.len() != self.order || sorted.len() != self.order {
            return Err(Error::DuplicateLabels);
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn mult_table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { order: self.order, mult: self.mult_table(), labels: self.labels.clone() }
    }

    pub fn from_json(json: &GroupJson) -> Result<Group> {
        if json.mult.len() != json.order {
            return Err(Error::NotSquare);
        }
        Group::from_mult_table_labeled(&json.mult, json.labels.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_c2() {
        let g = Group::from_mult_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        let c2 = Group::from_mult_table(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.inv(1), 1);
    }

    #[test]
    fn identity_relocated() {
        // C2 with the identity stored as element 1.
        let g = Group::from_mult_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(Group::from_mult_table(&[vec![0, 1]]), Err(Error::NotSquare));
        assert_eq!(Group::from_mult_table(&[vec![0, 5], vec![1, 0]]), Err(Error::EntryOutOfRange(5)));
        assert_eq!(Group::from_mult_table(&[vec![1, 1], vec![1, 1]]), Err(Error::NoIdentity));
        // Identity 0, but 1*1 = 1 and 2*2 = 1: no inverse for 1? 1*x never 0.
        let no_inv = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 2]];
        assert!(matches!(Group::from_mult_table(&no_inv), Err(Error::MissingInverse(_)) | Err(Error::NotAssociative(..))));
    }

    #[test]
    fn non_associative_magma_detected() {
        // Identity 0; a Latin square of order 6 which is a loop but not a group.
        let mut t: Vec<Vec<usize>> = (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect();
        // swap two entries in rows 1,2 keeping the identity row/column intact
        t[1][2] = 4;
        t[1][3] = 3;
        t[2][2] = 3;
        t[2][3] = 4;
        t[3][2] = 5;
        t[3][3] = 0;
        assert!(matches!(Group::from_mult_table(&t), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn permutation_closure() {
        let s3 = Group::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let c2 = Group::from_permutations(&[vec![1, 0]], DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(c2.order(), 2);
        let c4 = Group::from_permutations(&[vec![1, 2, 3, 0]], DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        assert_eq!(
            Group::from_permutations(&[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 100),
            Err(Error::SizeCap(100))
        );
        assert!(Group::from_permutations(&[vec![0, 0]], 10).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let g = preset_group(Preset::Symmetric, 3).unwrap();
        let json = g.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let back: GroupJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Group::from_json(&back).unwrap(), g);
    }
}
