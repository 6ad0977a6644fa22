//! The chain-side retract of the class-`x` Hochschild chains onto
//! `C_*(C_G(x),k)`.
//!
//! A class-`x` chain `(g_0; g_1..g_n)` has `u = g_1⋯g_n·g_0` conjugate to
//! `x`; writing `u = y⁻¹ x y` with `y = h·γ_i` fixes the start coset `i`
//! (independent of the choice of `y`).

use super::{ClassData, ClassDecomposition};
use crate::complex::{arity, GroupTateElement, TateElement};
use crate::error::{Error, Result};
use crate::linalg::Accumulator;

impl ClassDecomposition {
    /// `ι_x(h_1..h_n) = (h_n⁻¹⋯h_1⁻¹x; h_1..h_n)`.
    pub fn iota_chain(&self, k: usize, gamma: &GroupTateElement) -> Result<TateElement> {
        if gamma.degree >= 0 {
            return Err(Error::DegreeMismatch(format!("chain map needs degree <= -1, got {}", gamma.degree)));
        }
        let cls = self.classes.get(k).ok_or(Error::ClassMismatch(k))?;
        let g = &**self.hh.group();
        let n = arity(gamma.degree);
        let codec = cls.complex.codec();
        let mut acc = Accumulator::new(*self.hh.field());
        let mut h = Vec::with_capacity(n);
        for (code, c) in gamma.coeffs.iter() {
            codec.decode_into(code, n, &mut h);
            for e in h.iter_mut() {
                *e = cls.centralizer.parent_index(*e);
            }
            acc.add(self.hh.index(&h, g.mul(g.product_inv(&h), cls.rep)), c);
        }
        Ok(TateElement::new(gamma.degree, acc.finish()))
    }

    /// `ρ_x(g_0; g_1..g_n) = (h_{i_1}..h_{i_n})`, threading `g` from the
    /// start coset; terms with an identity entry vanish.
    pub fn rho_chain(&self, k: usize, alpha: &TateElement) -> Result<GroupTateElement> {
        if alpha.degree >= 0 {
            return Err(Error::DegreeMismatch(format!("chain map needs degree <= -1, got {}", alpha.degree)));
        }
        self.check_class(k, alpha)?;
        let cls = &self.classes[k];
        let codec = cls.complex.codec();
        let mut acc = Accumulator::new(*self.hh.field());
        let mut local = Vec::new();
        for (t, g0, c) in self.hh.terms(alpha) {
            let mut s = self.start_coset(cls, &t, g0);
            local.clear();
            for &gj in &t {
                let (h, next) = cls.thread(s, gj);
                if h == 0 {
                    break;
                }
                local.push(cls.centralizer.local_index(h));
                s = next;
            }
            if local.len() == t.len() {
                acc.add(codec.encode(&local), c);
            }
        }
        Ok(TateElement::new(alpha.degree, acc.finish()))
    }

    /// `s_x(g_0; g_1..g_n) = Σ_j (-1)^j ((γ_i g_1⋯g_n)⁻¹x; h_{i_1}..h_{i_j}, γ_{s^j}, g_{j+1}..g_n)`,
    /// with `s^0 = i`; terms with an identity entry vanish.
    pub fn homotopy_chain(&self, k: usize, alpha: &TateElement) -> Result<TateElement> {
        if alpha.degree >= 0 {
            return Err(Error::DegreeMismatch(format!("chain homotopy needs degree <= -1, got {}", alpha.degree)));
        }
        self.check_class(k, alpha)?;
        let cls = &self.classes[k];
        let g = &**self.hh.group();
        let f = *self.hh.field();
        let gamma = cls.cosets.gamma();
        let mut acc = Accumulator::new(f);
        let mut out = Vec::new();
        for (t, g0, c) in self.hh.terms(alpha) {
            let n = t.len();
            let i = self.start_coset(cls, &t, g0);
            let head = g.mul(g.inv(g.mul(gamma[i], g.product(&t))), cls.rep);
            let mut s = i;
            let mut hs: Vec<usize> = Vec::with_capacity(n);
            for j in 0..=n {
                if j > 0 {
                    let (h, next) = cls.thread(s, t[j - 1]);
                    if h == 0 {
                        break;
                    }
                    hs.push(h);
                    s = next;
                }
                if s == 0 {
                    continue;
                }
                out.clear();
                out.extend_from_slice(&hs);
                out.push(gamma[s]);
                out.extend_from_slice(&t[j..]);
                acc.add(self.hh.index(&out, head), f.mul(c, f.sign(j as i64)));
            }
        }
        Ok(TateElement::new(alpha.degree - 1, acc.finish()))
    }

    /// The coset `i` with `g_1⋯g_n·g_0 = x_i = γ_i⁻¹xγ_i`.
    fn start_coset(&self, cls: &ClassData, t: &[usize], g0: usize) -> usize {
        let g = &**self.hh.group();
        cls.start[g.mul(g.product(t), g0)]
    }
}
