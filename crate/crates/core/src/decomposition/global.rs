//! The isomorphism of complexes `ρ : D*(kG,kG) → Ĉ*(G, ᶜkG)` onto the Tate
//! complex of `G` with coefficients in `kG` under conjugation.
//!
//! Elements of `Ĉ*(G, ᶜkG)` use the same bases and indices as `D*`:
//! `((g_1..g_m), v)` for cochains and `(v; g_1..g_s)` for chains.
//!
//! * Cochains: `(dψ)(g_1..g_{m+1}) = g_1·ψ(g_2..)·g_1⁻¹ + Σ_i (-1)^i ψ(.., g_i g_{i+1}, ..) + (-1)^{m+1} ψ(g_1..g_m)`.
//! * Chains carry the action on the last face:
//!   `∂(v; g_1..g_s) = (v; g_2..g_s) + Σ_i (-1)^i (v; .., g_i g_{i+1}, ..) + (-1)^s (g_s v g_s⁻¹; g_1..g_{s-1})`,
//!   twisted by `(-1)^s` exactly like `∂′`; the norm map `v ↦ Σ_g g v g⁻¹`
//!   joins degree `-1` to degree `0`.
//!
//! With this placement of the action the map
//! `ρ(g_0; g_1..g_s) = (g_0 g_1⋯g_s; g_1..g_s)` is a chain map.

use std::sync::Arc;

use crate::complex::{arity, Hochschild, TateElement};
use crate::linalg::Accumulator;

/// `Ĉ*(G, ᶜkG)` together with the isomorphism `ρ` from `D*(kG,kG)`.
#[derive(Debug, Clone)]
pub struct ConjugationModel {
    hh: Arc<Hochschild>,
}

impl ConjugationModel {
    pub fn new(hh: Arc<Hochschild>) -> Self {
        ConjugationModel { hh }
    }

    pub fn hochschild(&self) -> &Arc<Hochschild> {
        &self.hh
    }

    /// `ρ(φ)(g) = φ(g)·(g_1⋯g_m)⁻¹` on cochains, `(g_0; g) ↦ (g_0·g_1⋯g_s; g)` on chains.
    pub fn rho(&self, x: &TateElement) -> TateElement {
        self.twist(x, false)
    }

    /// `ρ⁻¹(ψ)(g) = ψ(g)·g_1⋯g_m` on cochains, `(v; g) ↦ (v·(g_1⋯g_s)⁻¹; g)` on chains.
    pub fn rho_inverse(&self, x: &TateElement) -> TateElement {
        self.twist(x, true)
    }

    fn twist(&self, x: &TateElement, inverse: bool) -> TateElement {
        let g = &**self.hh.group();
        let mut acc = Accumulator::new(*self.hh.field());
        for (t, v, c) in self.hh.terms(x) {
            let p = g.product(&t);
            let by = if (x.degree >= 0) == inverse { p } else { g.inv(p) };
            acc.add(self.hh.index(&t, g.mul(v, by)), c);
        }
        TateElement::new(x.degree, acc.finish())
    }

    /// The signed differential of `Ĉ*(G, ᶜkG)`.
    pub fn differential(&self, x: &TateElement) -> TateElement {
        let g = &**self.hh.group();
        let f = *self.hh.field();
        let n = g.order();
        let mut acc = Accumulator::new(f);
        let mut buf = Vec::new();
        match x.degree {
            m if m >= 0 => {
                let m = m as usize;
                for (t, v, c) in self.hh.terms(x) {
                    for g1 in 1..n {
                        buf.clear();
                        buf.push(g1);
                        buf.extend_from_slice(&t);
                        acc.add(self.hh.index(&buf, g.conj(g1, v)), c);
                    }
                    for i in 0..m {
                        let sc = f.mul(c, f.sign(i as i64 + 1));
                        for gi in 1..n {
                            if gi == t[i] {
                                continue;
                            }
                            buf.clear();
                            buf.extend_from_slice(&t[..i]);
                            buf.push(gi);
                            buf.push(g.mul(g.inv(gi), t[i]));
                            buf.extend_from_slice(&t[i + 1..]);
                            acc.add(self.hh.index(&buf, v), sc);
                        }
                    }
                    let sc = f.mul(c, f.sign(m as i64 + 1));
                    for gl in 1..n {
                        buf.clear();
                        buf.extend_from_slice(&t);
                        buf.push(gl);
                        acc.add(self.hh.index(&buf, v), sc);
                    }
                }
            }
            -1 => {
                for (v, c) in x.coeffs.iter() {
                    for y in g.elements() {
                        acc.add(g.conj(y, v), c);
                    }
                }
            }
            m => {
                let s = arity(m);
                for (t, v, c) in self.hh.terms(x) {
                    let c = f.mul(c, f.sign(s as i64));
                    acc.add(self.hh.index(&t[1..], v), c);
                    for i in 0..s - 1 {
                        let merged = g.mul(t[i], t[i + 1]);
                        if merged == 0 {
                            continue;
                        }
                        buf.clear();
                        buf.extend_from_slice(&t[..i]);
                        buf.push(merged);
                        buf.extend_from_slice(&t[i + 2..]);
                        acc.add(self.hh.index(&buf, v), f.mul(c, f.sign(i as i64 + 1)));
                    }
                    acc.add(self.hh.index(&t[..s - 1], g.conj(t[s - 1], v)), f.mul(c, f.sign(s as i64)));
                }
            }
        }
        TateElement::new(x.degree + 1, acc.finish())
    }
}
