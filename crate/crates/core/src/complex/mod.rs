//! Chain complexes: the Tate–Hochschild complex `D*(kG,kG)` built from the
//! normalized Hochschild cochain and chain complexes, the Tate complexes
//! `Ĉ*(H,k)` of groups with trivial coefficients, and their cohomology.
//!
//! # Bases and degrees
//!
//! * Degree `m ≥ 0` of `D*` is `Map(Ḡ^m, kG)`; the basis element
//!   `((t_1..t_m), h)` sends exactly the tuple `t` to `h`. Its index is
//!   `code(t)·|G| + h`.
//! * Degree `m = -s-1 ≤ -1` of `D*` is `k[G × Ḡ^s]`; the basis chain
//!   `(g_0; g_1..g_s)` has index `code(g)·|G| + g_0`.
//! * Degree `n ≥ 0` of `Ĉ*(H,k)` has basis the tuples of `H̄^n`; degree
//!   `-s-1` has basis the tuples of `H̄^s`.
//!
//! The official differential is the sign-twisted `∂′`: the Hochschild
//! coboundary in degrees `≥ 0` and `(-1)^s ∂_s` on `C_s = D^{-s-1}`, which
//! is `τ` out of degree `-1` and `(-1)^{m+1} ∂` out of degree `m ≤ -2`.
//! With this twist the generalized cup product satisfies the Leibniz rule
//! and the pairing is compatible with `∂′`.

mod cohomology;
mod group_tate;
mod hochschild;
mod tuples;

pub use cohomology::{CohomologySpace, CostCaps};
pub use group_tate::{GroupTate, GroupTateElement};
pub use hochschild::{Hochschild, TateElement};
pub use tuples::TupleCodec;

/// Number of bar slots used by degree `m`: `m` for cochains, `-m-1` for chains.
#[inline]
pub fn arity(m: i32) -> usize {
    if m >= 0 {
        m as usize
    } else {
        (-m - 1) as usize
    }
}

/// A degree window `[lo, hi]`; cohomology is available on `[lo+1, hi-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: i32,
    pub hi: i32,
}

impl Window {
    pub const WIDE: Window = Window { lo: -64, hi: 64 };

    pub fn new(lo: i32, hi: i32) -> Self {
        Window { lo, hi }
    }

    /// Whether cohomology in degree `n` can be computed inside the window.
    pub fn supports_cohomology(&self, n: i32) -> bool {
        self.lo < n && n < self.hi
    }

    pub fn check_cohomology(&self, n: i32) -> crate::Result<()> {
        if self.supports_cohomology(n) {
            Ok(())
        } else {
            Err(crate::Error::Window { degree: n, lo: self.lo, hi: self.hi })
        }
    }
}
