//! Connes' operator on group homology: the transported operator `B̃₁` of the
//! identity class sends cycles of `C_s(G,k)` to boundaries, so the induced map
//! `H_s(G,k) → H_{s+1}(G,k)` is zero.
//!
//! In Tate degrees `C_s` sits in degree `-s-1`. Its cycles are the kernel of
//! `∂′` for `s ≥ 1` and all of `C_0` for `s = 0` (the differential out of
//! degree `-1` is the norm map, which is not part of group homology). Each
//! image `B̃₁(z)` in degree `-s-2` must be closed and project to zero in
//! `Ĥ^{-s-2}(G,k) = H_{s+1}(G,k)`.

use std::sync::Arc;

use serde::Serialize;
use tatebv_core::linalg::kernel_basis;
use tatebv_core::{ClassDecomposition, GroupTate, Hochschild, Result, SparseVec, TateElement};

/// Result for one homological degree `s`.
#[derive(Debug, Clone, Serialize)]
pub struct ConnesDegree {
    pub s: usize,
    /// Dimension of the cycle space that was mapped.
    pub cycles: usize,
    /// Cycles with `B̃₁(z) = 0` at chain level.
    pub vanishing: usize,
    /// Cycles whose image is a nonzero boundary.
    pub boundaries: usize,
    /// Cycles whose image is not a boundary (must be 0).
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConnesReport {
    pub degrees: Vec<ConnesDegree>,
}

impl ConnesReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|d| d.failures == 0)
    }
}

/// What a chain of `Ĉ*(G,k)` is, as far as the check is concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    Zero,
    Boundary,
    /// Not closed, or closed with a nonzero cohomology class.
    NotBoundary,
}

pub fn classify(cx: &GroupTate, x: &TateElement) -> Result<ChainKind> {
    if x.is_zero() {
        return Ok(ChainKind::Zero);
    }
    if cx.differential(x).is_zero() && cx.project(x)?.iter().all(|&c| c == 0) {
        Ok(ChainKind::Boundary)
    } else {
        Ok(ChainKind::NotBoundary)
    }
}

/// Checks `s = 0..=max_s`.
pub fn verify(hh: Arc<Hochschild>, max_s: usize) -> Result<ConnesReport> {
    let dec = ClassDecomposition::new(hh);
    let cx = dec.class(0).complex();
    let f = *cx.field();
    let mut degrees = Vec::new();
    for s in 0..=max_s {
        let m = -(s as i32) - 1;
        let cycles: Vec<SparseVec> = if s == 0 {
            (0..cx.dim(m)).map(|i| SparseVec::unit(i, 1)).collect()
        } else {
            kernel_basis(&f, &cx.differential_matrix(m))
        };
        let mut out = ConnesDegree { s, cycles: cycles.len(), vanishing: 0, boundaries: 0, failures: 0 };
        for z in cycles {
            let image = dec.b_tilde(0, &TateElement::new(m, z))?;
            match classify(cx, &image)? {
                ChainKind::Zero => out.vanishing += 1,
                ChainKind::Boundary => out.boundaries += 1,
                ChainKind::NotBoundary => out.failures += 1,
            }
        }
        degrees.push(out);
    }
    Ok(ConnesReport { degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use tatebv_core::group::{preset_group, Preset};
    use tatebv_core::FieldSpec;

    fn hh(preset: Preset, n: usize, p: u32) -> Arc<Hochschild> {
        Arc::new(Hochschild::new(Arc::new(preset_group(preset, n).unwrap()), FieldSpec::new(p).unwrap()))
    }

    #[test]
    fn classify_separates_boundaries_from_homology() {
        let g = Arc::new(preset_group(Preset::Cyclic, 3).unwrap());
        let cx = GroupTate::new(g, FieldSpec::new(3).unwrap());
        let f = *cx.field();
        // Degree -2 is C_1; H_1(C3, F3) is one-dimensional.
        let cycles = kernel_basis(&f, &cx.differential_matrix(-2));
        let kinds: Vec<ChainKind> = cycles.iter().map(|z| classify(&cx, &TateElement::new(-2, z.clone())).unwrap()).collect();
        assert!(kinds.contains(&ChainKind::NotBoundary));
        // The boundary of any chain in C_2 is classified as a boundary.
        let mut found = false;
        for i in 0..cx.dim(-3) {
            let b = cx.differential(&TateElement::new(-3, SparseVec::unit(i, 1)));
            let kind = classify(&cx, &b).unwrap();
            assert_ne!(kind, ChainKind::NotBoundary);
            found |= kind == ChainKind::Boundary;
        }
        assert!(found);
        // A non-closed chain is rejected.
        let open = TateElement::new(-3, SparseVec::unit(1, 1));
        assert_ne!(cx.differential(&open), TateElement::zero(-4));
        assert_eq!(classify(&cx, &open).unwrap(), ChainKind::NotBoundary);
    }

    #[test]
    fn small_groups_pass() {
        for (preset, n, p) in [(Preset::Cyclic, 3, 3), (Preset::KleinFour, 0, 2)] {
            let report = verify(hh(preset, n, p), 2).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.degrees.len(), 3);
            assert!(report.degrees.iter().all(|d| d.cycles > 0));
        }
    }
}
