//! The BV operator transported to the centralizer summands: `Δ̃ₓ` on
//! cochains and `B̃ₓ` on chains of `C_G(x)`.

use super::ClassDecomposition;
use crate::complex::{arity, GroupTateElement, TateElement};
use crate::error::{Error, Result};
use crate::linalg::Accumulator;

impl ClassDecomposition {
    /// `Δ̃ₓ(ψ)(h_1..h_{n-1}) = Σ_{i=1}^{n} (-1)^{i(n-1)} ψ(h_i..h_{n-1}, (h_1⋯h_{n-1})⁻¹x⁻¹, h_1..h_{i-1})`.
    pub fn delta_tilde(&self, k: usize, psi: &GroupTateElement) -> Result<GroupTateElement> {
        if psi.degree < 1 {
            return Err(Error::DegreeMismatch(format!("Δ̃ needs degree >= 1, got {}", psi.degree)));
        }
        let cls = self.classes.get(k).ok_or(Error::ClassMismatch(k))?;
        let h = &**cls.local_group();
        let f = *self.hh.field();
        let codec = cls.complex.codec();
        let x_inv = h.inv(cls.centralizer.local_index(cls.rep));
        let n = psi.degree as usize;
        let mut acc = Accumulator::new(f);
        let mut t = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        for (code, c) in psi.coeffs.iter() {
            codec.decode_into(code, n, &mut t);
            for i in 1..=n {
                // t = (h_i..h_{n-1}, middle, h_1..h_{i-1})
                out.clear();
                out.extend_from_slice(&t[n - i + 1..]);
                out.extend_from_slice(&t[..n - i]);
                if t[n - i] == h.mul(h.product_inv(&out), x_inv) {
                    acc.add(codec.encode(&out), f.mul(c, f.sign((i * (n - 1)) as i64)));
                }
            }
        }
        Ok(TateElement::new(psi.degree - 1, acc.finish()))
    }

    /// The operator induced by `Δ̂` on the class-`k` summand: `Δ̃ₓ` in
    /// degrees `≥ 1`, zero in degree `0` and `(-1)^m B̃ₓ` in degree `m ≤ -1`
    /// (matching the sign of `Δ̂` on `D^m`).
    pub fn delta_transported(&self, k: usize, c: &GroupTateElement) -> Result<GroupTateElement> {
        match c.degree {
            0 => Ok(TateElement::zero(-1)),
            n if n > 0 => self.delta_tilde(k, c),
            m => {
                let f = self.hh.field();
                Ok(self.b_tilde(k, c)?.scale(f, f.sign(m as i64)))
            }
        }
    }

    /// `B̃ₓ(h_1..h_s) = (P⁻¹x, h_1..h_s) + Σ_{i=1}^{s} (-1)^{is} (h_i..h_s, P⁻¹x, h_1..h_{i-1})`
    /// with `P = h_1⋯h_s`; terms whose inserted slot is the identity vanish.
    pub fn b_tilde(&self, k: usize, gamma: &GroupTateElement) -> Result<GroupTateElement> {
        if gamma.degree >= 0 {
            return Err(Error::DegreeMismatch(format!("B̃ needs degree <= -1, got {}", gamma.degree)));
        }
        let cls = self.classes.get(k).ok_or(Error::ClassMismatch(k))?;
        let h = &**cls.local_group();
        let f = *self.hh.field();
        let codec = cls.complex.codec();
        let x = cls.centralizer.local_index(cls.rep);
        let s = arity(gamma.degree);
        let mut acc = Accumulator::new(f);
        let mut t = Vec::with_capacity(s);
        let mut out = Vec::with_capacity(s + 1);
        for (code, c) in gamma.coeffs.iter() {
            codec.decode_into(code, s, &mut t);
            let inserted = h.mul(h.product_inv(&t), x);
            if inserted == 0 {
                continue;
            }
            out.clear();
            out.push(inserted);
            out.extend_from_slice(&t);
            acc.add(codec.encode(&out), c);
            for i in 1..=s {
                out.clear();
                out.extend_from_slice(&t[i - 1..]);
                out.push(inserted);
                out.extend_from_slice(&t[..i - 1]);
                acc.add(codec.encode(&out), f.mul(c, f.sign((i * s) as i64)));
            }
        }
        Ok(TateElement::new(gamma.degree - 1, acc.finish()))
    }
}
