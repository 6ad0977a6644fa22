//! The Tate–Hochschild complex `D*(kG,kG)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::Rng;

use super::cohomology::{CohomologySpace, CostCaps};
use super::tuples::TupleCodec;
use super::{arity, Window};
use crate::error::{Error, Result};
use crate::group::{ConjugacyData, Group};
use crate::linalg::{Accumulator, FieldSpec, Scalar, SparseMatrix, SparseVec};

/// A homogeneous element of `D^m(kG,kG)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TateElement {
    pub degree: i32,
    pub coeffs: SparseVec,
}

impl TateElement {
    pub fn zero(degree: i32) -> Self {
        TateElement { degree, coeffs: SparseVec::zero() }
    }

    pub fn new(degree: i32, coeffs: SparseVec) -> Self {
        TateElement { degree, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn same_degree(&self, other: &TateElement) {
        assert_eq!(self.degree, other.degree, "adding elements of different degrees");
    }

    pub fn add(&self, field: &FieldSpec, other: &TateElement) -> TateElement {
        self.same_degree(other);
        TateElement::new(self.degree, self.coeffs.add(field, &other.coeffs))
    }

    pub fn sub(&self, field: &FieldSpec, other: &TateElement) -> TateElement {
        self.same_degree(other);
        TateElement::new(self.degree, self.coeffs.sub(field, &other.coeffs))
    }

    pub fn add_scaled(&self, field: &FieldSpec, other: &TateElement, c: Scalar) -> TateElement {
        self.same_degree(other);
        TateElement::new(self.degree, self.coeffs.add_scaled(field, &other.coeffs, c))
    }

    pub fn scale(&self, field: &FieldSpec, c: Scalar) -> TateElement {
        TateElement::new(self.degree, self.coeffs.scale(field, c))
    }

    pub fn neg(&self, field: &FieldSpec) -> TateElement {
        TateElement::new(self.degree, self.coeffs.neg(field))
    }
}

/// The complex `D*(kG,kG)` over `F_p`, with its canonical bases and the
/// conjugacy data that grades it by classes.
#[derive(Debug)]
pub struct Hochschild {
    group: Arc<Group>,
    field: FieldSpec,
    codec: TupleCodec,
    conjugacy: Arc<ConjugacyData>,
    window: Window,
    caps: CostCaps,
    cache: Mutex<HashMap<i32, Arc<CohomologySpace>>>,
}

impl Hochschild {
    pub fn new(group: Arc<Group>, field: FieldSpec) -> Self {
        let conjugacy = Arc::new(ConjugacyData::new(group.clone()));
        Self::with_conjugacy(conjugacy, field)
    }

    pub fn with_conjugacy(conjugacy: Arc<ConjugacyData>, field: FieldSpec) -> Self {
        let group = conjugacy.group().clone();
        Hochschild {
            codec: TupleCodec::new(group.order()),
            group,
            field,
            conjugacy,
            window: Window::WIDE,
            caps: CostCaps::default(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_window(mut self, window: Window) -> Self {
        self.window = window;
        self
    }

    pub fn with_caps(mut self, caps: CostCaps) -> Self {
        self.caps = caps;
        self
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn codec(&self) -> TupleCodec {
        self.codec
    }

    pub fn conjugacy(&self) -> &Arc<ConjugacyData> {
        &self.conjugacy
    }

    pub fn caps(&self) -> CostCaps {
        self.caps
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// `|G|·(|G|-1)^m` for `m ≥ 0`, `|G|·(|G|-1)^s` for `m = -s-1`.
    pub fn dim(&self, m: i32) -> usize {
        self.group.order() * self.codec.count(arity(m))
    }

    pub fn dim_u128(&self, m: i32) -> u128 {
        self.group.order() as u128 * self.codec.count_u128(arity(m))
    }

    /// Index of the basis cochain `(tuple ↦ elem)` or basis chain `(elem; tuple)`.
    #[inline]
    pub fn index(&self, tuple: &[usize], elem: usize) -> usize {
        self.codec.encode(tuple) * self.group.order() + elem
    }

    /// Inverse of [`index`](Self::index) in degree `m`.
    #[inline]
    pub fn decode(&self, m: i32, idx: usize) -> (Vec<usize>, usize) {
        let n = self.group.order();
        (self.codec.decode(idx / n, arity(m)), idx % n)
    }

    pub fn basis(&self, m: i32, tuple: &[usize], elem: usize) -> TateElement {
        assert_eq!(tuple.len(), arity(m));
        TateElement::new(m, SparseVec::unit(self.index(tuple, elem), 1))
    }

    /// The unit `e ∈ D^0 = kG`.
    pub fn unit(&self) -> TateElement {
        TateElement::new(0, SparseVec::unit(0, 1))
    }

    /// A degree-0 or degree-(-1) element from a group-algebra element.
    pub fn from_group_algebra(&self, degree: i32, terms: &[(usize, Scalar)]) -> TateElement {
        assert!(degree == 0 || degree == -1);
        TateElement::new(degree, SparseVec::from_pairs(&self.field, terms.iter().copied()))
    }

    /// Index range of the basis elements of degree `m` whose tuple starts
    /// with `prefix` (`None` if the prefix contains the identity).
    pub fn prefix_range(&self, m: i32, prefix: &[usize]) -> Option<std::ops::Range<usize>> {
        let len = arity(m);
        debug_assert!(prefix.len() <= len);
        let code = self.codec.try_encode(prefix)?;
        let width = self.codec.count(len - prefix.len()) * self.group.order();
        Some(code * width..(code + 1) * width)
    }

    /// The terms of `x` as `(tuple, element, coefficient)`.
    pub fn terms(&self, x: &TateElement) -> Vec<(Vec<usize>, usize, Scalar)> {
        x.coeffs
            .iter()
            .map(|(i, c)| {
                let (t, e) = self.decode(x.degree, i);
                (t, e, c)
            })
            .collect()
    }

    /// The value `φ(tuple) ∈ kG` of a cochain, as `(element, coefficient)` pairs.
    pub fn eval(&self, x: &TateElement, tuple: &[usize]) -> Vec<(usize, Scalar)> {
        let n = self.group.order();
        match self.codec.try_encode(tuple) {
            Some(code) => x.coeffs.range(code * n, code * n + n).iter().map(|&(i, c)| (i % n, c)).collect(),
            None => Vec::new(),
        }
    }

    /// Hochschild coboundary `δ` out of degree `m ≥ 0`.
    pub fn coboundary(&self, x: &TateElement) -> Result<TateElement> {
        if x.degree < 0 {
            return Err(Error::DegreeMismatch(format!("coboundary needs degree >= 0, got {}", x.degree)));
        }
        let g = &*self.group;
        let f = &self.field;
        let n = g.order();
        let m = x.degree as usize;
        let mut acc = Accumulator::new(*f);
        let mut t = Vec::with_capacity(m);
        let mut buf = Vec::with_capacity(m + 1);
        for (idx, c) in x.coeffs.iter() {
            self.codec.decode_into(idx / n, m, &mut t);
            let h = idx % n;
            for g1 in 1..n {
                buf.clear();
                buf.push(g1);
                buf.extend_from_slice(&t);
                acc.add(self.index(&buf, g.mul(g1, h)), c);
            }
            for i in 0..m {
                let ti = t[i];
                let sc = f.mul(c, f.sign(i as i64 + 1));
                for gi in 1..n {
                    if gi == ti {
                        continue;
                    }
                    buf.clear();
                    buf.extend_from_slice(&t[..i]);
                    buf.push(gi);
                    buf.push(g.mul(g.inv(gi), ti));
                    buf.extend_from_slice(&t[i + 1..]);
                    acc.add(self.index(&buf, h), sc);
                }
            }
            let sc = f.mul(c, f.sign(m as i64 + 1));
            for gl in 1..n {
                buf.clear();
                buf.extend_from_slice(&t);
                buf.push(gl);
                acc.add(self.index(&buf, g.mul(h, gl)), sc);
            }
        }
        Ok(TateElement::new(x.degree + 1, acc.finish()))
    }

    /// Unsigned Hochschild boundary `∂_s` out of degree `-s-1 ≤ -2`.
    pub fn boundary(&self, x: &TateElement) -> Result<TateElement> {
        if x.degree > -2 {
            return Err(Error::DegreeMismatch(format!("boundary needs degree <= -2, got {}", x.degree)));
        }
        let g = &*self.group;
        let f = &self.field;
        let n = g.order();
        let s = arity(x.degree);
        let mut acc = Accumulator::new(*f);
        let mut t = Vec::with_capacity(s);
        let mut buf = Vec::with_capacity(s);
        for (idx, c) in x.coeffs.iter() {
            self.codec.decode_into(idx / n, s, &mut t);
            let g0 = idx % n;
            acc.add(self.index(&t[1..], g.mul(g0, t[0])), c);
            for i in 0..s - 1 {
                let merged = g.mul(t[i], t[i + 1]);
                if merged == 0 {
                    continue;
                }
                buf.clear();
                buf.extend_from_slice(&t[..i]);
                buf.push(merged);
                buf.extend_from_slice(&t[i + 2..]);
                acc.add(self.index(&buf, g0), f.mul(c, f.sign(i as i64 + 1)));
            }
            acc.add(self.index(&t[..s - 1], g.mul(t[s - 1], g0)), f.mul(c, f.sign(s as i64)));
        }
        Ok(TateElement::new(x.degree + 1, acc.finish()))
    }

    /// Trace map `τ(g_0) = Σ_g g g_0 g⁻¹` from degree `-1` to degree `0`.
    pub fn trace(&self, x: &TateElement) -> Result<TateElement> {
        if x.degree != -1 {
            return Err(Error::DegreeMismatch(format!("trace needs degree -1, got {}", x.degree)));
        }
        let g = &*self.group;
        let mut acc = Accumulator::new(self.field);
        for (g0, c) in x.coeffs.iter() {
            for y in g.elements() {
                acc.add(g.conj(y, g0), c);
            }
        }
        Ok(TateElement::new(0, acc.finish()))
    }

    /// The signed differential `∂′` of the complex: `δ` in degrees `≥ 0` and
    /// `(-1)^s ∂_s` on `C_s = D^{-s-1}`, so `τ` itself out of degree `-1`.
    /// This is the sign twist under which the generalized cup product obeys
    /// the Leibniz rule.
    pub fn differential(&self, x: &TateElement) -> TateElement {
        let f = &self.field;
        match x.degree {
            m if m >= 0 => self.coboundary(x).expect("degree checked"),
            -1 => self.trace(x).expect("degree checked"),
            m => self.boundary(x).expect("degree checked").scale(f, f.sign(m as i64 + 1)),
        }
    }

    /// Conjugacy class of a basis index in degree `m`: the class of
    /// `(t_1⋯t_m)⁻¹h` for cochains and of `g_1⋯g_s·g_0` for chains.
    pub fn class_of_index(&self, m: i32, idx: usize) -> usize {
        let g = &*self.group;
        let (t, e) = self.decode(m, idx);
        let u = if m >= 0 { g.mul(g.product_inv(&t), e) } else { g.mul(g.product(&t), e) };
        self.conjugacy.class_of(u)
    }

    /// The component of `x` in class `k`.
    pub fn class_component(&self, x: &TateElement, k: usize) -> TateElement {
        TateElement::new(x.degree, x.coeffs.filter(|i| self.class_of_index(x.degree, i) == k))
    }

    /// Matrix of `∂′ : D^m → D^{m+1}` in the canonical bases.
    pub fn differential_matrix(&self, m: i32) -> SparseMatrix {
        let cols = (0..self.dim(m))
            .map(|j| self.differential(&TateElement::new(m, SparseVec::unit(j, 1))).coeffs)
            .collect();
        SparseMatrix::from_columns(self.dim(m + 1), cols).expect("differential lands in D^{m+1}")
    }

    /// `Ĥ^n(kG,kG)` computed directly from `D*` (memoized).
    pub fn cohomology(&self, n: i32) -> Result<Arc<CohomologySpace>> {
        self.window.check_cohomology(n)?;
        if let Some(space) = self.cache.lock().unwrap().get(&n) {
            return Ok(space.clone());
        }
        for d in [n - 1, n, n + 1] {
            CostCaps::check(self.dim_u128(d), self.caps.direct)?;
        }
        let d_in = self.differential_matrix(n - 1);
        let d_out = self.differential_matrix(n);
        let space = Arc::new(CohomologySpace::from_differentials(&self.field, n, &d_in, &d_out)?);
        self.cache.lock().unwrap().entry(n).or_insert_with(|| space.clone());
        Ok(space)
    }

    /// A random element of degree `m` with up to `terms` nonzero terms.
    pub fn random_element<R: Rng>(&self, m: i32, terms: usize, rng: &mut R) -> TateElement {
        let dim = self.dim(m);
        let p = self.field.p();
        let pairs: Vec<(usize, Scalar)> = (0..terms).map(|_| (rng.gen_range(0..dim), rng.gen_range(1..p.max(2)) % p)).collect();
        TateElement::new(m, SparseVec::from_pairs(&self.field, pairs))
    }

    /// A random element supported on class `k`.
    pub fn random_class_element<R: Rng>(&self, m: i32, k: usize, terms: usize, rng: &mut R) -> TateElement {
        let x = self.random_element(m, terms * (self.conjugacy.len() + 1), rng);
        let comp = self.class_component(&x, k);
        if comp.coeffs.len() > terms {
            TateElement::new(m, SparseVec::from_sorted_unchecked(comp.coeffs.entries()[..terms].to_vec()))
        } else {
            comp
        }
    }
}
