//! The cochain-side retract of the class-`x` Hochschild cochains onto
//! `C*(C_G(x),k)`.

use super::{for_each_sequence, ClassDecomposition};
use crate::complex::{GroupTateElement, TateElement};
use crate::error::{Error, Result};
use crate::linalg::Accumulator;

impl ClassDecomposition {
    /// `ι^x(φ)(h_1..h_n)` is the coefficient of `x` in `φ(h_1..h_n)·(h_1⋯h_n)⁻¹`
    /// for tuples over the centralizer.
    pub fn iota_cochain(&self, k: usize, phi: &TateElement) -> Result<GroupTateElement> {
        if phi.degree < 0 {
            return Err(Error::DegreeMismatch(format!("cochain map needs degree >= 0, got {}", phi.degree)));
        }
        self.check_class(k, phi)?;
        let cls = &self.classes[k];
        let g = &**self.hh.group();
        let codec = cls.complex.codec();
        let c_sub = &cls.centralizer;
        let mut acc = Accumulator::new(*self.hh.field());
        let mut local = Vec::with_capacity(phi.degree as usize);
        for (t, v, c) in self.hh.terms(phi) {
            local.clear();
            let mut inside = true;
            for &e in &t {
                match c_sub.try_local_index(e) {
                    Some(l) => local.push(l),
                    None => {
                        inside = false;
                        break;
                    }
                }
            }
            if inside && v == g.mul(cls.rep, g.product(&t)) {
                acc.add(codec.encode(&local), c);
            }
        }
        Ok(TateElement::new(phi.degree, acc.finish()))
    }

    /// `ρ^x(ψ)(g_1..g_n) = Σ_i ψ(h_{i_1}..h_{i_n})·x_i·g_1⋯g_n`, where the `h`
    /// come from threading `g` through the cosets starting at `γ_i`.
    pub fn rho_cochain(&self, k: usize, psi: &GroupTateElement) -> Result<TateElement> {
        if psi.degree < 0 {
            return Err(Error::DegreeMismatch(format!("cochain map needs degree >= 0, got {}", psi.degree)));
        }
        let cls = self.classes.get(k).ok_or(Error::ClassMismatch(k))?;
        let g = &**self.hh.group();
        let n = psi.degree as usize;
        let gamma = cls.cosets.gamma();
        let r = gamma.len();
        let codec = cls.complex.codec();
        let mut acc = Accumulator::new(*self.hh.field());
        let mut h = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        for (code, c) in psi.coeffs.iter() {
            codec.decode_into(code, n, &mut h);
            for hj in h.iter_mut() {
                *hj = cls.centralizer.parent_index(*hj);
            }
            // Every pair (start coset, g) threads to a unique (h, cosets);
            // enumerate the coset sequences s_0..s_n instead.
            for_each_sequence(r, n + 1, |s| {
                out.clear();
                for j in 0..n {
                    let gj = g.mul(g.mul(g.inv(gamma[s[j]]), h[j]), gamma[s[j + 1]]);
                    if gj == 0 {
                        return;
                    }
                    out.push(gj);
                }
                let value = g.mul(cls.conjugates[s[0]], g.product(&out));
                acc.add(self.hh.index(&out, value), c);
            });
        }
        Ok(TateElement::new(psi.degree, acc.finish()))
    }

    /// The homotopy `s^x : C^n → C^{n-1}` on class-`x` cochains:
    /// `s^x(φ)(g_1..g_{n-1}) = Σ_{j,i} (-1)^j a_{i,j}·x_i·g_1⋯g_{n-1}`, where
    /// `a_{i,j}` is the coefficient of `x` in
    /// `φ(h_{i_1}..h_{i_j}, γ_{s^j}, g_{j+1}..g_{n-1})·(γ_i g_1⋯g_{n-1})⁻¹`.
    pub fn homotopy_cochain(&self, k: usize, phi: &TateElement) -> Result<TateElement> {
        if phi.degree < 1 {
            return Err(Error::DegreeMismatch(format!("cochain homotopy needs degree >= 1, got {}", phi.degree)));
        }
        self.check_class(k, phi)?;
        let cls = &self.classes[k];
        let g = &**self.hh.group();
        let f = *self.hh.field();
        let n = phi.degree as usize;
        let gamma = cls.cosets.gamma();
        let r = gamma.len();
        let mut acc = Accumulator::new(f);
        let mut out = Vec::with_capacity(n);
        for (u, v, c) in self.hh.terms(phi) {
            if v != g.mul(cls.rep, g.product(&u)) {
                continue;
            }
            for j in 0..n {
                // u = (h_1..h_j, γ_{s_j}, g_{j+1}..g_{n-1}) with γ_{s_j} ≠ e.
                if !u[..j].iter().all(|&e| cls.centralizer.contains(e)) {
                    break;
                }
                let sj = cls.cosets.coset_of(u[j]);
                if sj == 0 || gamma[sj] != u[j] {
                    continue;
                }
                let sign = f.mul(c, f.sign(j as i64));
                let emit = |i: usize, head: &[usize], acc: &mut Accumulator, out: &mut Vec<usize>| {
                    out.clear();
                    out.extend_from_slice(head);
                    out.extend_from_slice(&u[j + 1..]);
                    acc.add(self.hh.index(out, g.mul(g.inv(gamma[i]), v)), sign);
                };
                if j == 0 {
                    emit(sj, &[], &mut acc, &mut out);
                    continue;
                }
                // Start coset s_0 = i and intermediate cosets s_1..s_{j-1} are free.
                let mut head = Vec::with_capacity(j);
                for_each_sequence(r, j, |s| {
                    head.clear();
                    for t in 0..j {
                        let next = if t + 1 < j { gamma[s[t + 1]] } else { u[j] };
                        let gt = g.mul(g.mul(g.inv(gamma[s[t]]), u[t]), next);
                        if gt == 0 {
                            return;
                        }
                        head.push(gt);
                    }
                    emit(s[0], &head, &mut acc, &mut out);
                });
            }
        }
        Ok(TateElement::new(phi.degree - 1, acc.finish()))
    }
}
