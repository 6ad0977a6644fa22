//! The Tate complex `Ĉ*(H,k)` of a finite group with trivial coefficients.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::Rng;

use super::cohomology::{CohomologySpace, CostCaps};
use super::hochschild::TateElement;
use super::tuples::TupleCodec;
use super::{arity, Window};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::{Accumulator, FieldSpec, Scalar, SparseMatrix, SparseVec};

/// Elements of `Ĉ*(H,k)` share the representation of [`TateElement`]; the
/// coefficient vector is indexed by tuple codes alone.
pub type GroupTateElement = TateElement;

/// `Ĉ*(H,k)` for a group `H` (elements `0..|H|`, identity `0`).
#[derive(Debug)]
pub struct GroupTate {
    group: Arc<Group>,
    field: FieldSpec,
    codec: TupleCodec,
    window: Window,
    caps: CostCaps,
    cache: Mutex<HashMap<i32, Arc<CohomologySpace>>>,
}

impl GroupTate {
    pub fn new(group: Arc<Group>, field: FieldSpec) -> Self {
        GroupTate {
            codec: TupleCodec::new(group.order()),
            group,
            field,
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

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn dim(&self, m: i32) -> usize {
        self.codec.count(arity(m))
    }

    pub fn dim_u128(&self, m: i32) -> u128 {
        self.codec.count_u128(arity(m))
    }

    pub fn basis(&self, m: i32, tuple: &[usize]) -> GroupTateElement {
        assert_eq!(tuple.len(), arity(m));
        TateElement::new(m, SparseVec::unit(self.codec.encode(tuple), 1))
    }

    pub fn unit(&self) -> GroupTateElement {
        TateElement::new(0, SparseVec::unit(0, 1))
    }

    /// The signed differential of `Ĉ*(H,k)`, twisted exactly like
    /// [`Hochschild::differential`](super::Hochschild::differential): the
    /// norm `|H|` out of degree `-1` and `(-1)^s ∂_s` on `C_s(H,k)`.
    pub fn differential(&self, x: &GroupTateElement) -> GroupTateElement {
        let g = &*self.group;
        let f = &self.field;
        let n = g.order();
        let mut acc = Accumulator::new(*f);
        let mut buf = Vec::new();
        match x.degree {
            m if m >= 0 => {
                let m = m as usize;
                let mut t = Vec::with_capacity(m);
                for (code, c) in x.coeffs.iter() {
                    self.codec.decode_into(code, m, &mut t);
                    for g1 in 1..n {
                        buf.clear();
                        buf.push(g1);
                        buf.extend_from_slice(&t);
                        acc.add(self.codec.encode(&buf), c);
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
                            acc.add(self.codec.encode(&buf), sc);
                        }
                    }
                    let sc = f.mul(c, f.sign(m as i64 + 1));
                    for gl in 1..n {
                        buf.clear();
                        buf.extend_from_slice(&t);
                        buf.push(gl);
                        acc.add(self.codec.encode(&buf), sc);
                    }
                }
            }
            -1 => {
                let order = f.from_i64(n as i64);
                for (_, c) in x.coeffs.iter() {
                    acc.add(0, f.mul(c, order));
                }
            }
            m => {
                let s = arity(m);
                let outer = f.sign(s as i64);
                let mut t = Vec::with_capacity(s);
                for (code, c) in x.coeffs.iter() {
                    self.codec.decode_into(code, s, &mut t);
                    let c = f.mul(c, outer);
                    acc.add(self.codec.encode(&t[1..]), c);
                    for i in 0..s - 1 {
                        let merged = g.mul(t[i], t[i + 1]);
                        if merged == 0 {
                            continue;
                        }
                        buf.clear();
                        buf.extend_from_slice(&t[..i]);
                        buf.push(merged);
                        buf.extend_from_slice(&t[i + 2..]);
                        acc.add(self.codec.encode(&buf), f.mul(c, f.sign(i as i64 + 1)));
                    }
                    acc.add(self.codec.encode(&t[..s - 1]), f.mul(c, f.sign(s as i64)));
                }
            }
        }
        TateElement::new(x.degree + 1, acc.finish())
    }

    pub fn differential_matrix(&self, m: i32) -> SparseMatrix {
        let cols = (0..self.dim(m))
            .map(|j| self.differential(&TateElement::new(m, SparseVec::unit(j, 1))).coeffs)
            .collect();
        SparseMatrix::from_columns(self.dim(m + 1), cols).expect("differential lands in the next degree")
    }

    /// `Ĥ^n(H,k)` (memoized).
    pub fn cohomology(&self, n: i32) -> Result<Arc<CohomologySpace>> {
        self.window.check_cohomology(n)?;
        if let Some(space) = self.cache.lock().unwrap().get(&n) {
            return Ok(space.clone());
        }
        for d in [n - 1, n, n + 1] {
            CostCaps::check(self.dim_u128(d), self.caps.decomposition)?;
        }
        let d_in = self.differential_matrix(n - 1);
        let d_out = self.differential_matrix(n);
        let space = Arc::new(CohomologySpace::from_differentials(&self.field, n, &d_in, &d_out)?);
        self.cache.lock().unwrap().entry(n).or_insert_with(|| space.clone());
        Ok(space)
    }

    /// Coordinates of a cocycle in `Ĥ^n(H,k)`.
    pub fn project(&self, x: &GroupTateElement) -> Result<Vec<Scalar>> {
        if self.dim(x.degree) == 0 {
            return Err(Error::DegreeMismatch(format!("empty degree {}", x.degree)));
        }
        self.cohomology(x.degree)?.project(&x.coeffs)
    }

    pub fn random_element<R: Rng>(&self, m: i32, terms: usize, rng: &mut R) -> GroupTateElement {
        let dim = self.dim(m);
        let p = self.field.p();
        let pairs: Vec<(usize, Scalar)> = (0..terms).map(|_| (rng.gen_range(0..dim), rng.gen_range(1..p.max(2)) % p)).collect();
        TateElement::new(m, SparseVec::from_pairs(&self.field, pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{preset_group, Preset};
    use rand::SeedableRng;

    fn tate(preset: Preset, n: usize, p: u32) -> GroupTate {
        GroupTate::new(Arc::new(preset_group(preset, n).unwrap()), FieldSpec::new(p).unwrap())
    }

    #[test]
    fn d_squared_zero() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (preset, n, p) in [(Preset::Symmetric, 3, 3), (Preset::Cyclic, 4, 2), (Preset::Quaternion8, 0, 2)] {
            let c = tate(preset, n, p);
            for m in -5..=4 {
                for _ in 0..10 {
                    let x = c.random_element(m, 3, &mut rng);
                    assert!(c.differential(&c.differential(&x)).is_zero());
                }
            }
        }
    }

    #[test]
    fn cyclic_cohomology_is_one_dimensional_everywhere() {
        for (n, p) in [(2, 2), (3, 3), (4, 2), (5, 5)] {
            let c = tate(Preset::Cyclic, n, p);
            for d in -4..=4 {
                assert_eq!(c.cohomology(d).unwrap().dim(), 1, "C{n} over F{p} in degree {d}");
            }
        }
    }

    #[test]
    fn coprime_order_kills_cohomology() {
        let c = tate(Preset::Cyclic, 3, 2);
        for d in -3..=3 {
            assert_eq!(c.cohomology(d).unwrap().dim(), 0);
        }
    }

    #[test]
    fn window_edges_refused() {
        let c = tate(Preset::Cyclic, 2, 2).with_window(Window::new(-3, 3));
        assert!(c.cohomology(2).is_ok());
        assert!(matches!(c.cohomology(3), Err(Error::Window { .. })));
    }
}
