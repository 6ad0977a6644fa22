//! The BV algebra `ĤH*(kG,kG)` on the decomposed side.
//!
//! A class is stored as one cocycle of `Ĉ*(C_G(x),k)` per conjugacy class
//! (a [`DecomposedElement`] whose parts are closed). The operations are
//! computed without leaving the centralizer complexes:
//!
//! * the product by the double-coset formula ([`Mackey::double_coset_cup`]),
//! * `Δ` by the transported operators ([`ClassDecomposition::delta_transported`]),
//! * the bracket from `∪` and `Δ` by the BV identity.
//!
//! Classes are compared through *fingerprints*: the restriction of every
//! component to a Sylow `p`-subgroup of its centralizer, expressed in the
//! cohomology basis there. Restriction to a Sylow subgroup is injective on
//! Tate cohomology, so two classes are equal iff their fingerprints are,
//! and the fingerprint only needs the cohomology of small `p`-groups, which
//! keeps high degrees affordable.

use std::sync::Arc;

use crate::complex::TateElement;
use crate::decomposition::{ClassDecomposition, DecomposedElement};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{FieldSpec, Scalar};
use crate::mackey::{Mackey, SubgroupClass};

/// `ĤH*(kG,kG)` realized as `⊕ₓ Ĥ*(C_G(x),k)` with its BV structure.
#[derive(Debug)]
pub struct DecomposedRing {
    dec: Arc<ClassDecomposition>,
    mackey: Mackey,
    sylow: Vec<Subgroup>,
}

impl DecomposedRing {
    pub fn new(dec: Arc<ClassDecomposition>) -> Self {
        let hh = dec.hochschild();
        let p = hh.field().p() as usize;
        let mackey = Mackey::new(hh.group().clone(), *hh.field()).with_window(hh.window()).with_caps(hh.caps());
        let sylow = dec.classes().iter().map(|c| c.centralizer().sylow(p)).collect();
        DecomposedRing { dec, mackey, sylow }
    }

    pub fn decomposition(&self) -> &Arc<ClassDecomposition> {
        &self.dec
    }

    pub fn mackey(&self) -> &Mackey {
        &self.mackey
    }

    pub fn field(&self) -> &FieldSpec {
        self.mackey.field()
    }

    pub fn classes(&self) -> usize {
        self.dec.len()
    }

    /// The Sylow subgroup used to fingerprint class `k`.
    pub fn sylow(&self, k: usize) -> &Subgroup {
        &self.sylow[k]
    }

    /// `γ_k(c)`: a cocycle of `Ĉ*(C_G(x_k),k)` placed in summand `k`.
    pub fn embed(&self, k: usize, c: TateElement) -> DecomposedElement {
        DecomposedElement::single(self.dec.len(), k, c)
    }

    /// `E_k = γ_k(1)`; `E_0` is the unit of the ring.
    pub fn class_unit(&self, k: usize) -> DecomposedElement {
        self.embed(k, self.dec.class(k).complex().unit())
    }

    pub fn unit(&self) -> DecomposedElement {
        self.class_unit(0)
    }

    pub fn zero(&self, degree: i32) -> DecomposedElement {
        DecomposedElement::zero(degree, self.dec.len())
    }

    /// Representatives of a basis of `Ĥ^n(C_G(x_k),k)`, embedded by `γ_k`.
    pub fn class_basis(&self, k: usize, n: i32) -> Result<Vec<DecomposedElement>> {
        let cx = self.dec.class(k).complex();
        if cx.dim(n) == 0 {
            return Ok(Vec::new());
        }
        Ok(cx.cohomology(n)?.representatives().iter().map(|r| self.embed(k, TateElement::new(n, r.clone()))).collect())
    }

    /// A basis of `ĤH^n(kG,kG)`, class by class.
    pub fn basis(&self, n: i32) -> Result<Vec<(usize, DecomposedElement)>> {
        let mut out = Vec::new();
        for k in 0..self.dec.len() {
            out.extend(self.class_basis(k, n)?.into_iter().map(|e| (k, e)));
        }
        Ok(out)
    }

    pub fn add(&self, a: &DecomposedElement, b: &DecomposedElement) -> Result<DecomposedElement> {
        self.combine(a, b, 1)
    }

    pub fn sub(&self, a: &DecomposedElement, b: &DecomposedElement) -> Result<DecomposedElement> {
        let f = self.field();
        self.combine(a, b, f.neg(1))
    }

    pub fn scale(&self, a: &DecomposedElement, c: Scalar) -> DecomposedElement {
        let f = self.field();
        DecomposedElement { degree: a.degree, parts: a.parts.iter().map(|p| p.scale(f, c)).collect() }
    }

    fn combine(&self, a: &DecomposedElement, b: &DecomposedElement, c: Scalar) -> Result<DecomposedElement> {
        if a.degree != b.degree {
            return Err(Error::DegreeMismatch(format!("cannot add degrees {} and {}", a.degree, b.degree)));
        }
        let f = self.field();
        Ok(DecomposedElement { degree: a.degree, parts: a.parts.iter().zip(&b.parts).map(|(x, y)| x.add_scaled(f, y, c)).collect() })
    }

    fn component(&self, k: usize, part: &TateElement) -> SubgroupClass {
        SubgroupClass::new(self.dec.class(k).centralizer().clone(), part.clone())
    }

    /// The cup product, summed over the double-coset formula for every pair
    /// of nonzero components.
    pub fn cup(&self, a: &DecomposedElement, b: &DecomposedElement) -> Result<DecomposedElement> {
        let f = self.field();
        let mut out = self.zero(a.degree + b.degree);
        for (i, pa) in a.parts.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (j, pb) in b.parts.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
                let terms = self.mackey.double_coset_cup(&self.dec, i, j, &self.component(i, pa), &self.component(j, pb))?;
                for (k, c) in terms {
                    out.parts[k] = out.parts[k].add(f, &c.rep);
                }
            }
        }
        Ok(out)
    }

    /// The BV operator, componentwise.
    pub fn delta(&self, a: &DecomposedElement) -> Result<DecomposedElement> {
        let parts = a
            .parts
            .iter()
            .enumerate()
            .map(|(k, p)| if p.is_zero() { Ok(TateElement::zero(a.degree - 1)) } else { self.dec.delta_transported(k, p) })
            .collect::<Result<Vec<_>>>()?;
        Ok(DecomposedElement { degree: a.degree - 1, parts })
    }

    /// `[a,b] = -(-1)^{(|a|-1)|b|} (Δ(ab) - Δ(a)b - (-1)^{|a|} aΔ(b))`.
    pub fn bracket(&self, a: &DecomposedElement, b: &DecomposedElement) -> Result<DecomposedElement> {
        let f = self.field();
        let (da, db) = (a.degree as i64, b.degree as i64);
        let first = self.delta(&self.cup(a, b)?)?;
        let second = self.cup(&self.delta(a)?, b)?;
        let third = self.scale(&self.cup(a, &self.delta(b)?)?, f.sign(da));
        let inner = self.sub(&self.sub(&first, &second)?, &third)?;
        Ok(self.scale(&inner, f.neg(f.sign((da - 1) * db))))
    }

    /// Whether every component is a cocycle.
    pub fn is_closed(&self, a: &DecomposedElement) -> bool {
        a.parts.iter().enumerate().all(|(k, p)| self.dec.class(k).complex().differential(p).is_zero())
    }

    /// Sylow-restriction fingerprint: an injective linear coordinate map on
    /// `ĤH^n(kG,kG)`.
    pub fn fingerprint(&self, a: &DecomposedElement) -> Result<Vec<Scalar>> {
        if !self.is_closed(a) {
            return Err(Error::NotACocycle);
        }
        let mut out = Vec::new();
        for (k, part) in a.parts.iter().enumerate() {
            let p = &self.sylow[k];
            if p.order() == 1 {
                continue;
            }
            let restricted = self.mackey.restriction(self.dec.class(k).centralizer(), p, &self.component(k, part))?;
            out.extend(self.mackey.project(&restricted)?);
        }
        Ok(out)
    }

    pub fn is_zero_class(&self, a: &DecomposedElement) -> Result<bool> {
        Ok(self.fingerprint(a)?.iter().all(|&c| c == 0))
    }

    pub fn same_class(&self, a: &DecomposedElement, b: &DecomposedElement) -> Result<bool> {
        if a.degree != b.degree {
            return Ok(self.is_zero_class(a)? && self.is_zero_class(b)?);
        }
        self.is_zero_class(&self.sub(a, b)?)
    }

    /// Solves `a = λ·b` for a scalar `λ` (`None` if `a` is not a multiple of `b`;
    /// any `λ` works when both vanish, and `0` is returned).
    pub fn ratio(&self, a: &DecomposedElement, b: &DecomposedElement) -> Result<Option<Scalar>> {
        let f = self.field();
        let (fa, fb) = (self.fingerprint(a)?, self.fingerprint(b)?);
        if a.degree != b.degree {
            return Ok(if fa.iter().all(|&c| c == 0) { Some(0) } else { None });
        }
        let lambda = match fb.iter().position(|&c| c != 0) {
            Some(i) => f.mul(fa[i], f.inv(fb[i])),
            None => return Ok(if fa.iter().all(|&c| c == 0) { Some(0) } else { None }),
        };
        Ok(fa.iter().zip(&fb).all(|(&x, &y)| x == f.mul(lambda, y)).then_some(lambda))
    }

    /// Lifts a direct-path cocycle of `D*(kG,kG)` to the decomposed side.
    pub fn from_direct(&self, x: &TateElement) -> Result<DecomposedElement> {
        self.dec.rho_hat(x)
    }

    /// Pushes a decomposed class to a cocycle of `D*(kG,kG)`.
    pub fn to_direct(&self, a: &DecomposedElement) -> Result<TateElement> {
        self.dec.iota_hat(a)
    }

    /// Coordinates of a class in the basis returned by [`Self::basis`],
    /// computed in the full centralizer cohomology (exact, but costlier than
    /// the fingerprint in high degrees).
    pub fn coordinates(&self, a: &DecomposedElement) -> Result<Vec<Scalar>> {
        let mut out = Vec::new();
        for (k, part) in a.parts.iter().enumerate() {
            let cx = self.dec.class(k).complex();
            if cx.dim(a.degree) == 0 {
                continue;
            }
            out.extend(cx.cohomology(a.degree)?.project(&part.coeffs)?);
        }
        Ok(out)
    }

    /// The class with the given coordinates in the basis of [`Self::basis`].
    pub fn from_coordinates(&self, n: i32, coords: &[Scalar]) -> Result<DecomposedElement> {
        let mut out = self.zero(n);
        let mut at = 0;
        for k in 0..self.dec.len() {
            let cx = self.dec.class(k).complex();
            if cx.dim(n) == 0 {
                continue;
            }
            let space = cx.cohomology(n)?;
            let d = space.dim();
            let slice = coords.get(at..at + d).ok_or_else(|| Error::Dimension(format!("expected more than {} coordinates", coords.len())))?;
            out.parts[k] = TateElement::new(n, space.lift(slice));
            at += d;
        }
        if at != coords.len() {
            return Err(Error::Dimension(format!("{} coordinates for a space of dimension {at}", coords.len())));
        }
        Ok(out)
    }

    /// Dimension of `ĤH^n(kG,kG)` per class.
    pub fn class_dims(&self, n: i32) -> Result<Vec<usize>> {
        self.dec.class_dims(n)
    }
}
