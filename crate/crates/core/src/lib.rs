//! Exact computation of Tate–Hochschild cohomology `HH^*(kG,kG)` of finite
//! group algebras over prime fields, together with its cup product, the BV
//! operator `Δ`, the Gerstenhaber bracket, and the additive decomposition
//! into Tate cohomology of centralizers.

pub mod bv;
pub mod complex;
pub mod decomposition;
pub mod error;
pub mod group;
pub mod linalg;
pub mod mackey;
pub mod ring;

pub use error::{Error, Result};
pub use decomposition::{ClassDecomposition, ConjugationModel, DecomposedElement};
pub use complex::{CohomologySpace, CostCaps, GroupTate, GroupTateElement, Hochschild, TateElement, Window};
pub use group::{ConjugacyData, Group, Preset, Subgroup};
pub use mackey::{Mackey, SubgroupClass};
pub use ring::DecomposedRing;
pub use linalg::{FieldSpec, Scalar, SparseMatrix, SparseVec};
