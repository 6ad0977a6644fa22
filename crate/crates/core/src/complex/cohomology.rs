//! Cohomology spaces `ker ∂′_n / im ∂′_{n-1}` with coordinate extraction.

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, FieldSpec, QuotientSpace, Scalar, SparseMatrix, SparseVec};

/// Size limits (in basis elements per degree) for materializing differentials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostCaps {
    /// Limit for the complex `D*(kG,kG)` itself.
    pub direct: u128,
    /// Limit for the group complexes `Ĉ*(H,k)` used by the decomposition.
    pub decomposition: u128,
}

impl Default for CostCaps {
    fn default() -> Self {
        CostCaps { direct: 200_000, decomposition: 1_000_000 }
    }
}

impl CostCaps {
    pub fn check(estimate: u128, cap: u128) -> Result<()> {
        if estimate > cap {
            Err(Error::CostCap { estimate, cap })
        } else {
            Ok(())
        }
    }
}

/// A computed cohomology group in one degree.
#[derive(Debug, Clone)]
pub struct CohomologySpace {
    degree: i32,
    quotient: QuotientSpace,
}

impl CohomologySpace {
    /// Builds `ker(d_out) / im(d_in)` where `d_in : C^{n-1} → C^n` and
    /// `d_out : C^n → C^{n+1}`. Verifies `d_out ∘ d_in = 0` first.
    pub fn from_differentials(field: &FieldSpec, degree: i32, d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<Self> {
        if d_in.rows() != d_out.cols() {
            return Err(Error::Dimension(format!(
                "incoming differential lands in dimension {}, outgoing starts at {}",
                d_in.rows(),
                d_out.cols()
            )));
        }
        for col in d_in.columns() {
            if !d_out.apply(field, col)?.is_zero() {
                return Err(Error::ImageNotInKernel);
            }
        }
        let kernel = kernel_basis(field, d_out);
        let quotient = QuotientSpace::new_trusted(field, d_out.cols(), &kernel, d_in.columns())?;
        Ok(CohomologySpace { degree, quotient })
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Representative cocycles (reduced-echelon kernel vectors).
    pub fn representatives(&self) -> &[SparseVec] {
        self.quotient.representatives()
    }

    /// Coordinates of a cocycle; [`Error::NotACocycle`] otherwise.
    pub fn project(&self, v: &SparseVec) -> Result<Vec<Scalar>> {
        self.quotient.project(v)
    }

    pub fn lift(&self, coords: &[Scalar]) -> SparseVec {
        self.quotient.lift(coords)
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }
}
