//! Quotients `ker / im` with coordinate extraction.

use super::echelon::Echelon;
use super::field::{FieldSpec, Scalar};
use super::vector::SparseVec;
use crate::error::{Error, Result};

/// The quotient of the span of a kernel basis by an image subspace.
///
/// Representatives are the kernel vectors (in the given order) that are
/// independent modulo the image and the previously chosen representatives.
/// Each echelon row carries a tag recording which combination of
/// representatives it is congruent to modulo the image; reducing a vector
/// therefore yields its coordinates directly.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    ambient_dim: usize,
    kernel_dim: usize,
    image_rank: usize,
    representatives: Vec<SparseVec>,
    echelon: Echelon,
    tags: Vec<Option<Vec<Scalar>>>,
}

impl QuotientSpace {
    /// Builds `span(kernel) / span(image)`; fails if the image is not inside
    /// the span of the kernel vectors.
    pub fn new(field: &FieldSpec, ambient_dim: usize, kernel: &[SparseVec], image: &[SparseVec]) -> Result<Self> {
        let mut kernel_span = Echelon::new(*field, ambient_dim);
        kernel_span.extend_sparsest_first(kernel);
        for v in image {
            if !kernel_span.contains(v) {
                return Err(Error::ImageNotInKernel);
            }
        }
        Self::build(field, ambient_dim, kernel, image, kernel_span.rank())
    }

    /// Like [`QuotientSpace::new`] but trusts that `image ⊆ span(kernel)`;
    /// used when the caller has established it (e.g. `d∘d = 0` was checked).
    pub fn new_trusted(field: &FieldSpec, ambient_dim: usize, kernel: &[SparseVec], image: &[SparseVec]) -> Result<Self> {
        Self::build(field, ambient_dim, kernel, image, kernel.len())
    }

    fn build(
        field: &FieldSpec,
        ambient_dim: usize,
        kernel: &[SparseVec],
        image: &[SparseVec],
        kernel_dim: usize,
    ) -> Result<Self> {
        let mut echelon = Echelon::new(*field, ambient_dim);
        echelon.extend_sparsest_first(image);
        let image_rank = echelon.rank();
        let mut tags: Vec<Option<Vec<Scalar>>> = vec![None; image_rank];
        let mut representatives = Vec::new();
        let mut rep_tags: Vec<Vec<Scalar>> = Vec::new();
        for k in kernel {
            let red = echelon.reduce(k);
            if red.remainder.is_zero() {
                continue;
            }
            let q = representatives.len();
            // remainder = k - Σ c_r row_r  ≡  e_q - Σ c_r tag_r
            let mut tag = combine_tags(field, &tags, &red.combination, q + 1);
            for t in tag.iter_mut() {
                *t = field.neg(*t);
            }
            tag[q] = field.add(tag[q], 1);
            let lead_c = red.remainder.leading().unwrap().1;
            let inv = field.inv(lead_c);
            for t in tag.iter_mut() {
                *t = field.mul(*t, inv);
            }
            echelon.insert_reduced(red.remainder);
            tags.push(Some(tag.clone()));
            rep_tags.push(tag);
            representatives.push(k.clone());
        }
        let dim = representatives.len();
        if image_rank + dim != kernel_dim {
            return Err(Error::ImageNotInKernel);
        }
        // Pad tags to the final dimension.
        for t in tags.iter_mut().flatten() {
            t.resize(dim, 0);
        }
        Ok(QuotientSpace { ambient_dim, kernel_dim, image_rank, representatives, echelon, tags })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel_dim
    }

    pub fn image_rank(&self) -> usize {
        self.image_rank
    }

    pub fn representatives(&self) -> &[SparseVec] {
        &self.representatives
    }

    /// Coordinates of `v` modulo the image; errors if `v` lies outside the
    /// span of the kernel.
    pub fn project(&self, v: &SparseVec) -> Result<Vec<Scalar>> {
        let field = self.echelon.field();
        let red = self.echelon.reduce(v);
        if !red.remainder.is_zero() {
            return Err(Error::NotACocycle);
        }
        Ok(combine_tags(field, &self.tags, &red.combination, self.dim()))
    }

    /// Whether `v` lies in the image subspace.
    pub fn is_boundary(&self, v: &SparseVec) -> Result<bool> {
        Ok(self.project(v)?.iter().all(|&c| c == 0))
    }

    /// `Σ c_i rep_i`.
    pub fn lift(&self, coords: &[Scalar]) -> SparseVec {
        let field = *self.echelon.field();
        let mut out = SparseVec::zero();
        for (rep, &c) in self.representatives.iter().zip(coords) {
            out = out.add_scaled(&field, rep, c);
        }
        out
    }
}

fn combine_tags(field: &FieldSpec, tags: &[Option<Vec<Scalar>>], combination: &[(usize, Scalar)], dim: usize) -> Vec<Scalar> {
    let mut out = vec![0; dim];
    for &(r, c) in combination {
        if let Some(Some(t)) = tags.get(r) {
            for (o, &tv) in out.iter_mut().zip(t.iter()) {
                *o = field.add(*o, field.mul(c, tv));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_examples() {
        let f2 = FieldSpec::new(2).unwrap();
        let e1 = SparseVec::unit(0, 1);
        let e2 = SparseVec::unit(1, 1);
        let q = QuotientSpace::new(&f2, 2, &[e1.clone(), e2.clone()], &[e1.clone(), e2.clone()]).unwrap();
        assert_eq!(q.dim(), 0);
        let q = QuotientSpace::new(&f2, 2, &[e1.clone(), e2.clone()], &[]).unwrap();
        assert_eq!(q.dim(), 2);
        let diag = e1.add(&f2, &e2);
        let q = QuotientSpace::new(&f2, 2, &[e1.clone(), e2.clone()], &[diag]).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.project(&e1).unwrap(), q.project(&e2).unwrap());
        assert_eq!(q.project(&e1).unwrap(), vec![1]);
        assert!(QuotientSpace::new(&f2, 3, &[e1.clone()], &[e2.clone()]).is_err());
        assert!(q.project(&SparseVec::unit(2, 1)).is_err());
    }

    #[test]
    fn lift_project_roundtrip() {
        let f5 = FieldSpec::new(5).unwrap();
        let kernel: Vec<SparseVec> = (0..4).map(|i| SparseVec::from_pairs(&f5, [(i, 1), (4, (i + 1) as u32)])).collect();
        let image = vec![SparseVec::from_pairs(&f5, [(0, 1), (1, 1), (4, 3)])];
        let q = QuotientSpace::new(&f5, 5, &kernel, &image).unwrap();
        assert_eq!(q.dim(), 3);
        for c in [[1, 0, 0], [0, 2, 0], [3, 4, 1]] {
            assert_eq!(q.project(&q.lift(&c)).unwrap(), c.to_vec());
        }
        assert!(q.is_boundary(&image[0].scale(&f5, 2)).unwrap());
    }
}
