use crate::complex::{arity, Hochschild, TateElement};
use crate::linalg::Accumulator;

impl Hochschild {
    /// The ternary operation `m3` of the cyclic `A∞` structure on `D*`,
    /// a homotopy between the two bracketings of the cup product:
    ///
    /// `a(bc) - (ab)c = ∂′m3(a,b,c) + m3(∂′a,b,c) + (-1)^{|a|} m3(a,∂′b,c) + (-1)^{|a|+|b|} m3(a,b,∂′c)`.
    ///
    /// It is nonzero only on (cochain, chain, cochain) and
    /// (chain, cochain, chain) inputs.
    pub fn m3(&self, a: &TateElement, b: &TateElement, c: &TateElement) -> TateElement {
        let degree = a.degree + b.degree + c.degree - 1;
        match (a.degree >= 0, b.degree >= 0, c.degree >= 0) {
            (true, false, true) => self.m3_cochain_chain_cochain(a, b, c),
            (false, true, false) => self.m3_chain_cochain_chain(a, b, c),
            _ => TateElement::zero(degree),
        }
    }

    /// `m3(φ, (g_0; g_1..g_r), ψ)(h) =
    ///  Σ_y Σ_j (-1)^{m+r+j-1} φ(h_{1..m-r+j-2}, y, g_{j..r}) g_0 ψ(g_{1..j-1}, y⁻¹, h_{m-r+j-1..})`.
    fn m3_cochain_chain_cochain(&self, phi: &TateElement, alpha: &TateElement, psi: &TateElement) -> TateElement {
        let m = phi.degree as usize;
        let n = psi.degree as usize;
        let r = arity(alpha.degree);
        let degree = phi.degree + alpha.degree + psi.degree - 1;
        if r + 2 > m + n {
            return TateElement::zero(degree);
        }
        let g = &**self.group();
        let f = *self.field();
        let order = g.order();
        let mut acc = Accumulator::new(f);
        let phis = self.terms(phi);
        let mut prefix = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(m + n);
        let mut t2 = Vec::with_capacity(n);
        for (gt, g0, ca) in self.terms(alpha) {
            let j_lo = 1.max((r + 2).saturating_sub(m));
            let j_hi = n.min(r + 1);
            for j in j_lo..=j_hi {
                let split = m + j - r - 2; // 0-based slot of y in φ's argument
                let sign = f.sign((m + r + j - 1) as i64);
                for (t1, u, c1) in &phis {
                    if t1[split + 1..] != gt[j - 1..] {
                        continue;
                    }
                    let y = t1[split];
                    prefix.clear();
                    prefix.extend_from_slice(&gt[..j - 1]);
                    prefix.push(g.inv(y));
                    let Some(range) = self.prefix_range(psi.degree, &prefix) else { continue };
                    let left = g.mul(*u, g0);
                    let c = f.mul(sign, f.mul(ca, *c1));
                    for &(idx, c2) in psi.coeffs.range(range.start, range.end) {
                        self.codec().decode_into(idx / order, n, &mut t2);
                        out.clear();
                        out.extend_from_slice(&t1[..split]);
                        out.extend_from_slice(&t2[j..]);
                        acc.add(self.index(&out, g.mul(left, idx % order)), f.mul(c, c2));
                    }
                }
            }
        }
        TateElement::new(degree, acc.finish())
    }

    /// `m3((a_0; a_1..a_r), φ, (b_0; b_1..b_s)) =
    ///  Σ_j (-1)^{r+m+s+j+1} (a_0 φ(a_{1..m-s+j-2}, y, b_{j..s}) b_0; b_{1..j-1}, y⁻¹, a_{m-s+j-1..r})`.
    fn m3_chain_cochain_chain(&self, alpha: &TateElement, phi: &TateElement, beta: &TateElement) -> TateElement {
        let r = arity(alpha.degree);
        let m = phi.degree as usize;
        let s = arity(beta.degree);
        let degree = alpha.degree + phi.degree + beta.degree - 1;
        if m > r + s + 1 {
            return TateElement::zero(degree);
        }
        let big_n = r + s + 2 - m;
        let g = &**self.group();
        let f = *self.field();
        let mut acc = Accumulator::new(f);
        let alphas = self.terms(alpha);
        let betas = self.terms(beta);
        let mut out = Vec::with_capacity(big_n);
        for (t1, u, c1) in self.terms(phi) {
            let j_lo = 1.max((s + 2).saturating_sub(m));
            let j_hi = big_n.min(s + 1);
            for j in j_lo..=j_hi {
                let split = m + j - s - 2; // 0-based slot of y in φ's argument
                let y = t1[split];
                let sign = f.sign((r + m + s + j + 1) as i64);
                for (bt, b0, cb) in &betas {
                    if t1[split + 1..] != bt[j - 1..] {
                        continue;
                    }
                    for (at, a0, ca) in &alphas {
                        if t1[..split] != at[..split] {
                            continue;
                        }
                        out.clear();
                        out.extend_from_slice(&bt[..j - 1]);
                        out.push(g.inv(y));
                        out.extend_from_slice(&at[split..]);
                        let elem = g.mul(g.mul(*a0, u), *b0);
                        acc.add(self.index(&out, elem), f.mul(sign, f.mul(c1, f.mul(*ca, *cb))));
                    }
                }
            }
        }
        TateElement::new(degree, acc.finish())
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::SeedableRng;

    use crate::complex::{Hochschild, TateElement};
    use crate::group::{preset_group, Preset};
    use crate::linalg::FieldSpec;

    fn associator_defect(hc: &Hochschild, a: &TateElement, b: &TateElement, c: &TateElement) -> TateElement {
        let f = *hc.field();
        let d = |x: &TateElement| hc.differential(x);
        let lhs = hc.cup(a, &hc.cup(b, c)).sub(&f, &hc.cup(&hc.cup(a, b), c));
        let rhs = d(&hc.m3(a, b, c))
            .add(&f, &hc.m3(&d(a), b, c))
            .add_scaled(&f, &hc.m3(a, &d(b), c), f.sign(a.degree as i64))
            .add_scaled(&f, &hc.m3(a, b, &d(c)), f.sign((a.degree + b.degree) as i64));
        lhs.sub(&f, &rhs)
    }

    #[test]
    fn homotopy_associativity() {
        for (preset, n, p) in [(Preset::Symmetric, 3, 3), (Preset::Cyclic, 3, 3), (Preset::Cyclic, 2, 2)] {
            let hc = Hochschild::new(Arc::new(preset_group(preset, n).unwrap()), FieldSpec::new(p).unwrap());
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
            for da in -3..=2 {
                for db in -3..=2 {
                    for dc in -3..=2 {
                        for _ in 0..3 {
                            let a = hc.random_element(da, 2, &mut rng);
                            let b = hc.random_element(db, 2, &mut rng);
                            let c = hc.random_element(dc, 2, &mut rng);
                            let defect = associator_defect(&hc, &a, &b, &c);
                            assert!(defect.is_zero(), "{preset:?}{n}: degrees ({da}, {db}, {dc})");
                        }
                    }
                }
            }
        }
    }

    /// `⟨α₀, m3(α₁,α₂,α₃)⟩ = (-1)^{|α₀|(2-k)+k} ⟨m3(α₀,α₁,α₂), α₃⟩` with `k = 3`.
    #[test]
    fn cyclicity_of_m3() {
        let hc = Hochschild::new(Arc::new(preset_group(Preset::Symmetric, 3).unwrap()), FieldSpec::new(3).unwrap());
        let f = *hc.field();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let mut nonzero = 0;
        for d0 in -3..=2 {
            for d1 in -3..=2 {
                for d2 in -3..=2 {
                    let d3 = -d0 - d1 - d2;
                    if !(-3..=2).contains(&d3) {
                        continue;
                    }
                    for _ in 0..2 {
                        let a: Vec<TateElement> = [d0, d1, d2, d3].iter().map(|&d| hc.random_element(d, 3, &mut rng)).collect();
                        let lhs = hc.pairing(&a[0], &hc.m3(&a[1], &a[2], &a[3]));
                        let rhs = hc.pairing(&hc.m3(&a[0], &a[1], &a[2]), &a[3]);
                        let sign = f.sign((-d0 + 3) as i64);
                        assert_eq!(lhs, f.mul(sign, rhs), "degrees ({d0}, {d1}, {d2}, {d3})");
                        nonzero += usize::from(lhs != 0);
                    }
                }
            }
        }
        assert!(nonzero > 0);
    }
}
