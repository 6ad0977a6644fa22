use crate::complex::{arity, Hochschild, TateElement};
use crate::linalg::Accumulator;

impl Hochschild {
    /// The generalized cup product `D^n ⊗ D^m → D^{n+m}`.
    pub fn cup(&self, a: &TateElement, b: &TateElement) -> TateElement {
        let (n, m) = (a.degree, b.degree);
        let g = &**self.group();
        let f = *self.field();
        let mut acc = Accumulator::new(f);
        let mut buf: Vec<usize> = Vec::new();
        match (n >= 0, m >= 0) {
            (true, true) => {
                let right = self.terms(b);
                for (t1, h1, c1) in self.terms(a) {
                    for (t2, h2, c2) in &right {
                        buf.clear();
                        buf.extend_from_slice(&t1);
                        buf.extend_from_slice(t2);
                        acc.add(self.index(&buf, g.mul(h1, *h2)), f.mul(c1, *c2));
                    }
                }
            }
            (false, false) => {
                // (g_0; g) ∪ (h_0; h) = Σ_y (y h_0; h, y⁻¹g_0, g)
                let right = self.terms(b);
                for (gt, g0, c1) in self.terms(a) {
                    for (ht, h0, c2) in &right {
                        let c = f.mul(c1, *c2);
                        for y in g.elements() {
                            if y == g0 {
                                continue;
                            }
                            buf.clear();
                            buf.extend_from_slice(ht);
                            buf.push(g.mul(g.inv(y), g0));
                            buf.extend_from_slice(&gt);
                            acc.add(self.index(&buf, g.mul(y, *h0)), c);
                        }
                    }
                }
            }
            (true, false) if n + m <= -1 => {
                // φ ∪ (h_0; h) = (φ(h_{t-n+1..t}) h_0; h_{1..t-n})
                let t = arity(m);
                let split = t - n as usize;
                for (ht, h0, c2) in self.terms(b) {
                    for (v, c1) in self.eval(a, &ht[split..]) {
                        acc.add(self.index(&ht[..split], g.mul(v, h0)), f.mul(c1, c2));
                    }
                }
            }
            (true, false) => {
                // (φ ∪ (g_0; g))(h) = Σ_y φ(h, y⁻¹, g) g_0 y
                let t = arity(m);
                let k = n as usize - t - 1;
                for (tt, v, c1) in self.terms(a) {
                    let y = g.inv(tt[k]);
                    let Some(range) = self.prefix_range(m, &tt[k + 1..]) else { continue };
                    for &(j, c2) in b.coeffs.range(range.start, range.end) {
                        let g0 = j % g.order();
                        acc.add(self.index(&tt[..k], g.mul(g.mul(v, g0), y)), f.mul(c1, c2));
                    }
                }
            }
            (false, true) if n + m <= -1 => {
                // (g_0; g) ∪ ψ = (g_0 ψ(g_{1..m}); g_{m+1..s})
                let mu = m as usize;
                for (gt, g0, c1) in self.terms(a) {
                    for (v, c2) in self.eval(b, &gt[..mu]) {
                        acc.add(self.index(&gt[mu..], g.mul(g0, v)), f.mul(c1, c2));
                    }
                }
            }
            (false, true) => {
                // ((g_0; g) ∪ ψ)(h) = Σ_y y g_0 ψ(g, y⁻¹, h)
                let s = arity(n);
                for (tt, v, c2) in self.terms(b) {
                    let y = g.inv(tt[s]);
                    let Some(range) = self.prefix_range(n, &tt[..s]) else { continue };
                    for &(j, c1) in a.coeffs.range(range.start, range.end) {
                        let g0 = j % g.order();
                        acc.add(self.index(&tt[s + 1..], g.mul(g.mul(y, g0), v)), f.mul(c1, c2));
                    }
                }
            }
        }
        TateElement::new(n + m, acc.finish())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::SeedableRng;

    use crate::complex::{Hochschild, TateElement};
    use crate::group::{preset_group, Preset};
    use crate::linalg::FieldSpec;

    fn s3() -> Hochschild {
        Hochschild::new(Arc::new(preset_group(Preset::Symmetric, 3).unwrap()), FieldSpec::new(3).unwrap())
    }

    #[test]
    fn unit_acts_trivially() {
        let hc = s3();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for m in -4..=3 {
            let x = hc.random_element(m, 5, &mut rng);
            assert_eq!(hc.cup(&hc.unit(), &x), x, "left unit in degree {m}");
            assert_eq!(hc.cup(&x, &hc.unit()), x, "right unit in degree {m}");
        }
    }

    #[test]
    fn leibniz_rule() {
        let hc = s3();
        let f = *hc.field();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for n in -4..=3 {
            for m in -4..=3 {
                let a = hc.random_element(n, 3, &mut rng);
                let b = hc.random_element(m, 3, &mut rng);
                let lhs = hc.differential(&hc.cup(&a, &b));
                let rhs = hc
                    .cup(&hc.differential(&a), &b)
                    .add_scaled(&f, &hc.cup(&a, &hc.differential(&b)), f.sign(n as i64));
                assert_eq!(lhs, rhs, "Leibniz fails for degrees ({n}, {m})");
            }
        }
    }

    #[test]
    fn pairing_is_invariant() {
        let hc = s3();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (n, m) in [(1, -3), (2, -2), (-2, 1), (0, -1), (-1, 0), (2, -4), (-3, 1), (1, 1), (-2, -2)] {
            let k = -1 - n - m;
            for _ in 0..5 {
                let a = hc.random_element(n, 4, &mut rng);
                let b = hc.random_element(m, 4, &mut rng);
                let c = hc.random_element(k, 4, &mut rng);
                assert_eq!(
                    hc.pairing(&hc.cup(&a, &b), &c),
                    hc.pairing(&a, &hc.cup(&b, &c)),
                    "({n}, {m}, {k})"
                );
            }
        }
    }

    #[test]
    fn cap_product_example() {
        // φ = (a ↦ b) in degree 1 against the chain (e; b, a) in degree -3
        let hc = s3();
        let phi = hc.basis(1, &[1], 3);
        let chain = hc.basis(-3, &[3, 1], 0);
        assert_eq!(hc.cup(&phi, &chain), TateElement::new(-2, hc.basis(-2, &[3], 3).coeffs));
    }
}
