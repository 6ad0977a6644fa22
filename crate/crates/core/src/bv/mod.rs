//! Chain-level algebraic structure on `D*(kG,kG)`: the symmetric pairing,
//! the generalized cup product, the ternary operation `m3` witnessing
//! homotopy associativity, and the BV operator `Δ̂` (`Δ` on cochains, Connes'
//! `B` on chains).
//!
//! All operations are implemented as methods on [`Hochschild`]. They act on
//! arbitrary (not necessarily closed) elements; on cocycles they induce the
//! corresponding operations on `ĤH*(kG,kG)`.

mod cup;
mod delta;
mod m3;
mod pairing;

use crate::complex::{Hochschild, TateElement};

impl Hochschild {
    /// Chain-level Gerstenhaber bracket determined by `∪` and `Δ̂`:
    /// `[a,b] = -(-1)^{(|a|-1)|b|} (Δ̂(a∪b) - Δ̂(a)∪b - (-1)^{|a|} a∪Δ̂(b))`.
    /// For cocycles `a, b` this is a cocycle representing their bracket.
    pub fn bracket(&self, a: &TateElement, b: &TateElement) -> TateElement {
        let f = self.field();
        let ab = self.cup(a, b);
        let first = self.delta_hat(&ab);
        let second = self.cup(&self.delta_hat(a), b);
        let third = self.cup(a, &self.delta_hat(b)).scale(f, f.sign(a.degree as i64));
        let inner = first.sub(f, &second).sub(f, &third);
        let sign = f.neg(f.sign(((a.degree as i64) - 1) * b.degree as i64));
        inner.scale(f, sign)
    }
}
