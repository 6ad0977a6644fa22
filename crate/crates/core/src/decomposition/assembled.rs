//! The assembled retract `(ι̂, ρ̂, ŝ)` of `D*(kG,kG)` onto
//! `⊕ₓ Ĉ*(C_G(x),k)`.
//!
//! In degrees `m ≥ 0` the cochain maps are used (`ι̂ = ρ^x`, `ρ̂ = ι^x`,
//! `ŝ = s^x`, with `ŝ = 0` out of degree `0`); in degrees `-s-1` the chain
//! maps (`ι̂ = ι_x`, `ρ̂ = ρ_x`). The chain homotopy satisfies the retract
//! identity for the unsigned boundary, so against the signed differential
//! `∂′ = (-1)^s ∂_s` it is twisted to `ŝ = (-1)^{s+1} s_x` on `C_s`.
//! Degrees `0` and `-1` reproduce the gluing `x ↦ 1_x`, `Σ x_i ↤ 1_x`
//! (cochains) and `x_i ↦ 1_x`, `x ↤ 1_x` (chains).

use super::ClassDecomposition;
use crate::complex::{arity, TateElement};
use crate::error::{Error, Result};

/// A homogeneous element of `⊕ₓ Ĉ*(C_G(x),k)`: one component per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposedElement {
    pub degree: i32,
    pub parts: Vec<TateElement>,
}

impl DecomposedElement {
    pub fn zero(degree: i32, classes: usize) -> Self {
        DecomposedElement { degree, parts: vec![TateElement::zero(degree); classes] }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(TateElement::is_zero)
    }

    /// The element concentrated in class `k`.
    pub fn single(classes: usize, k: usize, part: TateElement) -> Self {
        let mut out = Self::zero(part.degree, classes);
        out.parts[k] = part;
        out
    }
}

impl ClassDecomposition {
    /// `ι̂ : ⊕ₓ Ĉ*(C_G(x),k) → D*(kG,kG)`.
    pub fn iota_hat(&self, x: &DecomposedElement) -> Result<TateElement> {
        self.check_parts(x)?;
        let f = self.hh.field();
        let mut out = TateElement::zero(x.degree);
        for (k, part) in x.parts.iter().enumerate() {
            let image = if x.degree >= 0 { self.rho_cochain(k, part)? } else { self.iota_chain(k, part)? };
            out = out.add(f, &image);
        }
        Ok(out)
    }

    /// `ρ̂ : D*(kG,kG) → ⊕ₓ Ĉ*(C_G(x),k)`.
    pub fn rho_hat(&self, x: &TateElement) -> Result<DecomposedElement> {
        let parts = self
            .split(x)
            .iter()
            .enumerate()
            .map(|(k, part)| if x.degree >= 0 { self.iota_cochain(k, part) } else { self.rho_chain(k, part) })
            .collect::<Result<Vec<_>>>()?;
        Ok(DecomposedElement { degree: x.degree, parts })
    }

    /// `ŝ : D^m → D^{m-1}`.
    pub fn s_hat(&self, x: &TateElement) -> Result<TateElement> {
        let f = self.hh.field();
        let mut out = TateElement::zero(x.degree - 1);
        if x.degree == 0 {
            return Ok(out);
        }
        for (k, part) in self.split(x).iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let image = if x.degree > 0 {
                self.homotopy_cochain(k, part)?
            } else {
                let s = arity(x.degree) as i64;
                self.homotopy_chain(k, part)?.scale(f, f.sign(s + 1))
            };
            out = out.add(f, &image);
        }
        Ok(out)
    }

    /// The differential of `⊕ₓ Ĉ*(C_G(x),k)`, componentwise.
    pub fn differential(&self, x: &DecomposedElement) -> Result<DecomposedElement> {
        self.check_parts(x)?;
        let parts = x.parts.iter().zip(&self.classes).map(|(p, c)| c.complex.differential(p)).collect();
        Ok(DecomposedElement { degree: x.degree + 1, parts })
    }

    /// A random element of `⊕ₓ Ĉ^m(C_G(x),k)` with up to `terms` terms per class.
    pub fn random_element<R: rand::Rng>(&self, m: i32, terms: usize, rng: &mut R) -> DecomposedElement {
        let parts = self.classes.iter().map(|c| c.complex.random_element(m, terms, rng)).collect();
        DecomposedElement { degree: m, parts }
    }

    fn check_parts(&self, x: &DecomposedElement) -> Result<()> {
        if x.parts.len() != self.classes.len() {
            return Err(Error::Dimension(format!("{} components for {} classes", x.parts.len(), self.classes.len())));
        }
        if let Some(p) = x.parts.iter().find(|p| p.degree != x.degree) {
            return Err(Error::DegreeMismatch(format!("component of degree {} in an element of degree {}", p.degree, x.degree)));
        }
        Ok(())
    }
}
