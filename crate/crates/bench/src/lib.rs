//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use tatebv_core::group::{preset_group, Preset};
use tatebv_core::{ClassDecomposition, DecomposedRing, FieldSpec, Hochschild};

/// The groups the benchmarks run on, with the characteristic they are used in.
pub const FIXTURES: [(&str, Preset, usize, u32); 3] =
    [("S3/F3", Preset::Symmetric, 3, 3), ("D4/F2", Preset::Dihedral, 4, 2), ("Q8/F2", Preset::Quaternion8, 0, 2)];

pub fn hochschild(preset: Preset, param: usize, p: u32) -> Arc<Hochschild> {
    Arc::new(Hochschild::new(Arc::new(preset_group(preset, param).expect("preset")), FieldSpec::new(p).expect("prime")))
}

pub fn ring(hh: Arc<Hochschild>) -> DecomposedRing {
    DecomposedRing::new(Arc::new(ClassDecomposition::new(hh)))
}
