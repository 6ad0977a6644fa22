//! The additive decomposition `Ĥ*(kG,kG) ≅ ⊕ₓ Ĥ*(C_G(x),k)` at the level
//! of complexes.
//!
//! For every conjugacy class representative `x` (the minimal element of its
//! class) we fix the centralizer `C = C_G(x)`, right cosets
//! `G = ⊔ C·γ_i` with `γ_0 = e`, and the conjugates `x_i = γ_i⁻¹ x γ_i`.
//! Threading `γ_i·g = h·γ_s` drives every comparison map.
//!
//! * Cochains: [`ClassDecomposition::iota_cochain`] (the surjection onto
//!   centralizer cochains), [`ClassDecomposition::rho_cochain`] (the
//!   embedding) and [`ClassDecomposition::homotopy_cochain`].
//! * Chains: [`ClassDecomposition::iota_chain`] (the embedding),
//!   [`ClassDecomposition::rho_chain`] (the surjection) and
//!   [`ClassDecomposition::homotopy_chain`].
//! * The assembled retract of `D*(kG,kG)` onto `⊕ₓ Ĉ*(C_G(x),k)`:
//!   [`ClassDecomposition::iota_hat`], [`ClassDecomposition::rho_hat`],
//!   [`ClassDecomposition::s_hat`].
//!
//! All maps are computed input-driven: they walk the nonzero terms of their
//! argument rather than the full target basis.

mod assembled;
mod chain;
mod cochain;
mod global;
mod transfer;

use std::sync::Arc;

pub use assembled::DecomposedElement;
pub use global::ConjugationModel;

use crate::complex::{GroupTate, Hochschild, TateElement};
use crate::error::{Error, Result};
use crate::group::{CosetSystem, Group, Subgroup};

/// Per-class data: the representative, its centralizer, the coset system,
/// the conjugates `x_i`, the threading table and the centralizer's Tate
/// complex.
#[derive(Debug)]
pub struct ClassData {
    rep: usize,
    centralizer: Subgroup,
    cosets: CosetSystem,
    conjugates: Vec<usize>,
    /// `thread[i·|G| + g] = (h, s)` with `γ_i·g = h·γ_s` (`h` a parent index).
    thread: Vec<(usize, usize)>,
    /// `start[u]` is the coset of any `y` with `u = y⁻¹xy` (for `u` in the class).
    start: Vec<usize>,
    complex: GroupTate,
}

impl ClassData {
    fn new(hh: &Hochschild, k: usize) -> ClassData {
        let cd = hh.conjugacy();
        let g = &**hh.group();
        let rep = cd.rep(k);
        let centralizer = cd.centralizer(k).clone();
        let cosets = CosetSystem::new(&centralizer);
        let conjugates: Vec<usize> = cosets.gamma().iter().map(|&gi| g.conj(g.inv(gi), rep)).collect();
        let n = g.order();
        let thread = (0..cosets.len()).flat_map(|i| (0..n).map(move |e| (i, e))).map(|(i, e)| cosets.thread(i, e)).collect();
        let mut start = vec![usize::MAX; n];
        for (i, &xi) in conjugates.iter().enumerate() {
            start[xi] = i;
        }
        let complex = GroupTate::new(centralizer.local().clone(), *hh.field()).with_window(hh.window()).with_caps(hh.caps());
        ClassData { rep, centralizer, cosets, conjugates, thread, start, complex }
    }

    /// The representative `x`.
    pub fn rep(&self) -> usize {
        self.rep
    }

    pub fn centralizer(&self) -> &Subgroup {
        &self.centralizer
    }

    pub fn cosets(&self) -> &CosetSystem {
        &self.cosets
    }

    /// `x_i = γ_i⁻¹ x γ_i`; `x_0 = x`.
    pub fn conjugates(&self) -> &[usize] {
        &self.conjugates
    }

    /// `Ĉ*(C_G(x),k)` on the centralizer's local indexing.
    pub fn complex(&self) -> &GroupTate {
        &self.complex
    }

    /// The centralizer as a standalone group.
    pub fn local_group(&self) -> &Arc<Group> {
        self.centralizer.local()
    }

    /// `γ_i·g = h·γ_s`, returning `(h, s)` with `h` a parent index.
    #[inline]
    pub fn thread(&self, i: usize, g: usize) -> (usize, usize) {
        self.thread[i * self.centralizer.parent().order() + g]
    }
}

/// The decomposition of `D*(kG,kG)` along conjugacy classes.
#[derive(Debug)]
pub struct ClassDecomposition {
    hh: Arc<Hochschild>,
    classes: Vec<ClassData>,
}

impl ClassDecomposition {
    pub fn new(hh: Arc<Hochschild>) -> ClassDecomposition {
        let classes = (0..hh.conjugacy().len()).map(|k| ClassData::new(&hh, k)).collect();
        ClassDecomposition { hh, classes }
    }

    pub fn hochschild(&self) -> &Arc<Hochschild> {
        &self.hh
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, k: usize) -> &ClassData {
        &self.classes[k]
    }

    pub fn classes(&self) -> &[ClassData] {
        &self.classes
    }

    /// Splits `x` into its class components (one element per class).
    pub fn split(&self, x: &TateElement) -> Vec<TateElement> {
        let mut parts: Vec<Vec<(usize, u32)>> = vec![Vec::new(); self.classes.len()];
        for (i, c) in x.coeffs.iter() {
            parts[self.hh.class_of_index(x.degree, i)].push((i, c));
        }
        parts.into_iter().map(|e| TateElement::new(x.degree, crate::SparseVec::from_sorted_unchecked(e))).collect()
    }

    /// Fails unless every term of `x` lies in class `k`.
    fn check_class(&self, k: usize, x: &TateElement) -> Result<()> {
        if k >= self.classes.len() {
            return Err(Error::ClassMismatch(k));
        }
        if x.coeffs.iter().any(|(i, _)| self.hh.class_of_index(x.degree, i) != k) {
            return Err(Error::ClassMismatch(k));
        }
        Ok(())
    }

    /// Dimensions of `Ĥ^n(C_G(x),k)`, one per class.
    pub fn class_dims(&self, n: i32) -> Result<Vec<usize>> {
        self.classes.iter().map(|c| c.complex.cohomology(n).map(|h| h.dim())).collect()
    }

    /// `dim Ĥ^n(kG,kG)` computed along the decomposition.
    pub fn dim(&self, n: i32) -> Result<usize> {
        Ok(self.class_dims(n)?.iter().sum())
    }

    /// Estimated basis size of the largest centralizer complex in degree `m`.
    pub fn cost_estimate(&self, m: i32) -> u128 {
        self.classes.iter().map(|c| c.complex.dim_u128(m)).max().unwrap_or(0)
    }
}

/// Calls `f` on every sequence in `[0, r)^len`.
pub(crate) fn for_each_sequence<F: FnMut(&[usize])>(r: usize, len: usize, mut f: F) {
    let mut seq = vec![0usize; len];
    loop {
        f(&seq);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < r {
                break;
            }
            seq[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests;
