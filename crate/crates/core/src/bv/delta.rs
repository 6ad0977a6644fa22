use crate::complex::{arity, Hochschild, TateElement};
use crate::linalg::Accumulator;

impl Hochschild {
    /// The BV operator `Δ̂ : D^n → D^{n-1}`: `Δ` for `n ≥ 1`, zero on `D^0`,
    /// and Connes' `B` twisted to `(-1)^n B` for `n ≤ -1`.
    ///
    /// The twist is the transport of `B` along the sign change that turns the
    /// unsigned boundary into `∂′ = (-1)^s ∂_s`. With it `Δ̂` anticommutes
    /// with `∂′` in every degree and the induced bracket obeys the Poisson
    /// rule; with the untwisted `B` both fail in degrees `≤ -2`.
    pub fn delta_hat(&self, x: &TateElement) -> TateElement {
        let f = self.field();
        match x.degree {
            0 => TateElement::zero(-1),
            d if d > 0 => self.delta_cochain(x),
            d => self.connes_b(x).scale(f, f.sign(d as i64)),
        }
    }

    /// `Δ(φ)(g_1..g_{n-1}) = Σ_{g} Σ_i (-1)^{i(n-1)} ⟨φ(g_i..g_{n-1}, g, g_1..g_{i-1}), 1⟩ g⁻¹`.
    pub fn delta_cochain(&self, x: &TateElement) -> TateElement {
        assert!(x.degree >= 1, "Δ is defined on positive degrees");
        let g = &**self.group();
        let f = *self.field();
        let n = x.degree as usize;
        let mut acc = Accumulator::new(f);
        let mut buf = Vec::with_capacity(n);
        for (t, h, c) in self.terms(x) {
            if h != 0 {
                continue;
            }
            for i in 1..=n {
                // t = (g_i..g_{n-1}, g_n, g_1..g_{i-1})
                buf.clear();
                buf.extend_from_slice(&t[n - i + 1..]);
                buf.extend_from_slice(&t[..n - i]);
                let sign = f.sign((i * (n - 1)) as i64);
                acc.add(self.index(&buf, g.inv(t[n - i])), f.mul(c, sign));
            }
        }
        TateElement::new(x.degree - 1, acc.finish())
    }

    /// `B(g_0; g_1..g_s) = Σ_{i=0}^{s} (-1)^{is} (e; g_i..g_s, g_0..g_{i-1})`.
    pub fn connes_b(&self, x: &TateElement) -> TateElement {
        assert!(x.degree <= -1, "B is defined on chains");
        let f = *self.field();
        let s = arity(x.degree);
        let mut acc = Accumulator::new(f);
        let mut full = Vec::with_capacity(s + 1);
        let mut buf = Vec::with_capacity(s + 1);
        for (t, g0, c) in self.terms(x) {
            if g0 == 0 {
                continue;
            }
            full.clear();
            full.push(g0);
            full.extend_from_slice(&t);
            for i in 0..=s {
                buf.clear();
                buf.extend_from_slice(&full[i..]);
                buf.extend_from_slice(&full[..i]);
                acc.add(self.index(&buf, 0), f.mul(c, f.sign((i * s) as i64)));
            }
        }
        TateElement::new(x.degree - 1, acc.finish())
    }
}
