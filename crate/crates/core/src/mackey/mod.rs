//! Conjugation, restriction and corestriction on the Tate complexes of
//! subgroups, the cup product on `Ĥ*(H,k)` inside `D*(kH,kH)`, and the
//! double-coset formula for products in `ĤH*(kG,kG)`.
//!
//! All maps act on the standard (normalized bar) complexes `Ĉ*(H,k)`:
//!
//! * conjugation by `g` relabels every tuple entrywise, `h ↦ g h g⁻¹`;
//! * restriction to `H ≤ K` restricts cochains to tuples over `H` and, on
//!   chains, is the transfer `Σ_i (h_{i_1}..h_{i_s})` obtained by threading
//!   the tuple through the right cosets `K = ⊔ H·γ_i` from every start coset;
//! * corestriction from `H ≤ K` includes chains and, on cochains, is the
//!   dual transfer `(cor φ)(g) = Σ_i φ(h_{i_1}..h_{i_n})`.
//!
//! Each of these is a map of complexes across the whole Tate range
//! (including the norm square between degrees `-1` and `0`).

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::complex::{arity, CostCaps, GroupTate, GroupTateElement, Hochschild, TateElement, Window};
use crate::decomposition::{ClassDecomposition, DecomposedElement};
use crate::error::{Error, Result};
use crate::group::{CosetSystem, DoubleCosetSystem, Group, Subgroup};
use crate::linalg::{Accumulator, FieldSpec, Scalar};

/// A cocycle of `Ĉ*(H,k)` for a subgroup `H`, standing for its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    pub subgroup: Subgroup,
    pub rep: GroupTateElement,
}

impl SubgroupClass {
    pub fn new(subgroup: Subgroup, rep: GroupTateElement) -> Self {
        SubgroupClass { subgroup, rep }
    }

    pub fn degree(&self) -> i32 {
        self.rep.degree
    }
}

/// Shared context: the ambient group, the field and caches of the
/// auxiliary complexes attached to subgroups.
#[derive(Debug)]
pub struct Mackey {
    group: Arc<Group>,
    field: FieldSpec,
    window: Window,
    caps: CostCaps,
    complexes: Mutex<HashMap<Vec<usize>, Arc<GroupTate>>>,
    decompositions: Mutex<HashMap<Vec<usize>, Arc<ClassDecomposition>>>,
}

impl Mackey {
    pub fn new(group: Arc<Group>, field: FieldSpec) -> Self {
        Mackey {
            group,
            field,
            window: Window::WIDE,
            caps: CostCaps::default(),
            complexes: Mutex::new(HashMap::new()),
            decompositions: Mutex::new(HashMap::new()),
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

    /// `Ĉ*(H,k)` on `H`'s local indexing (cached).
    pub fn complex(&self, h: &Subgroup) -> Arc<GroupTate> {
        let mut cache = self.complexes.lock().unwrap();
        cache
            .entry(h.members().to_vec())
            .or_insert_with(|| Arc::new(GroupTate::new(h.local().clone(), self.field).with_window(self.window).with_caps(self.caps)))
            .clone()
    }

    /// The decomposition of `D*(kH,kH)` (cached); its identity class carries
    /// `Ĉ*(H,k)` as a subalgebra.
    pub fn decomposition(&self, h: &Subgroup) -> Arc<ClassDecomposition> {
        let mut cache = self.decompositions.lock().unwrap();
        cache
            .entry(h.members().to_vec())
            .or_insert_with(|| {
                let hh = Hochschild::new(h.local().clone(), self.field).with_window(self.window).with_caps(self.caps);
                Arc::new(ClassDecomposition::new(Arc::new(hh)))
            })
            .clone()
    }

    /// Coordinates of a class in the cohomology basis of its subgroup.
    pub fn project(&self, c: &SubgroupClass) -> Result<Vec<Scalar>> {
        let cx = self.complex(&c.subgroup);
        if cx.dim(c.degree()) == 0 {
            return Ok(Vec::new());
        }
        cx.cohomology(c.degree())?.project(&c.rep.coeffs)
    }

    /// Whether two classes over the same subgroup agree in cohomology.
    pub fn same_class(&self, a: &SubgroupClass, b: &SubgroupClass) -> Result<bool> {
        if a.subgroup != b.subgroup || a.degree() != b.degree() {
            return Ok(false);
        }
        let diff = SubgroupClass::new(a.subgroup.clone(), a.rep.sub(&self.field, &b.rep));
        Ok(self.project(&diff)?.iter().all(|&c| c == 0))
    }

    /// `g* : Ĉ*(H,k) → Ĉ*(ᵍH,k)`, relabelling every tuple by `h ↦ g h g⁻¹`.
    pub fn conjugation(&self, g: usize, c: &SubgroupClass) -> SubgroupClass {
        let grp = &*self.group;
        let h = &c.subgroup;
        let target = h.conjugate(g);
        let relabel: Vec<usize> = (0..h.order()).map(|l| target.local_index(grp.conj(g, h.parent_index(l)))).collect();
        let codec_in = self.complex(h).codec();
        let codec_out = self.complex(&target).codec();
        let n = arity(c.degree());
        let mut t = Vec::with_capacity(n);
        let mut acc = Accumulator::new(self.field);
        for (code, v) in c.rep.coeffs.iter() {
            codec_in.decode_into(code, n, &mut t);
            for e in t.iter_mut() {
                *e = relabel[*e];
            }
            acc.add(codec_out.encode(&t), v);
        }
        SubgroupClass::new(target, TateElement::new(c.degree(), acc.finish()))
    }

    /// `res^K_H` for `H ≤ K`.
    pub fn restriction(&self, k: &Subgroup, h: &Subgroup, c: &SubgroupClass) -> Result<SubgroupClass> {
        self.check_pair(k, h, c, k)?;
        let codec_k = self.complex(k).codec();
        let codec_h = self.complex(h).codec();
        let n = arity(c.degree());
        let mut t = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        let mut acc = Accumulator::new(self.field);
        if c.degree() >= 0 {
            for (code, v) in c.rep.coeffs.iter() {
                codec_k.decode_into(code, n, &mut t);
                out.clear();
                for &e in &t {
                    match h.try_local_index(k.parent_index(e)) {
                        Some(l) => out.push(l),
                        None => break,
                    }
                }
                if out.len() == n {
                    acc.add(codec_h.encode(&out), v);
                }
            }
        } else {
            let cosets = CosetSystem::within(h, k)?;
            for (code, v) in c.rep.coeffs.iter() {
                codec_k.decode_into(code, n, &mut t);
                for start in 0..cosets.len() {
                    let mut s = start;
                    out.clear();
                    for &e in &t {
                        let (hp, next) = cosets.thread(s, k.parent_index(e));
                        if hp == 0 {
                            break;
                        }
                        out.push(h.local_index(hp));
                        s = next;
                    }
                    if out.len() == n {
                        acc.add(codec_h.encode(&out), v);
                    }
                }
            }
        }
        Ok(SubgroupClass::new(h.clone(), TateElement::new(c.degree(), acc.finish())))
    }

    /// `cor^K_H` for `H ≤ K`.
    pub fn corestriction(&self, k: &Subgroup, h: &Subgroup, c: &SubgroupClass) -> Result<SubgroupClass> {
        self.check_pair(k, h, c, h)?;
        let grp = &*self.group;
        let codec_k = self.complex(k).codec();
        let codec_h = self.complex(h).codec();
        let n = arity(c.degree());
        let mut t = Vec::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        let mut acc = Accumulator::new(self.field);
        if c.degree() < 0 {
            for (code, v) in c.rep.coeffs.iter() {
                codec_h.decode_into(code, n, &mut t);
                out.clear();
                out.extend(t.iter().map(|&e| k.local_index(h.parent_index(e))));
                acc.add(codec_k.encode(&out), v);
            }
        } else {
            let cosets = CosetSystem::within(h, k)?;
            let gamma = cosets.gamma();
            for (code, v) in c.rep.coeffs.iter() {
                codec_h.decode_into(code, n, &mut t);
                crate::decomposition::for_each_sequence(gamma.len(), n + 1, |s| {
                    out.clear();
                    for j in 0..n {
                        let hj = h.parent_index(t[j]);
                        let gj = grp.mul(grp.mul(grp.inv(gamma[s[j]]), hj), gamma[s[j + 1]]);
                        if gj == 0 {
                            return;
                        }
                        out.push(k.local_index(gj));
                    }
                    acc.add(codec_k.encode(&out), v);
                });
            }
        }
        Ok(SubgroupClass::new(k.clone(), TateElement::new(c.degree(), acc.finish())))
    }

    /// The cup product of `Ĥ*(H,k)`: embed both classes through the identity
    /// class of `D*(kH,kH)`, multiply there and project back.
    pub fn group_cup(&self, a: &SubgroupClass, b: &SubgroupClass) -> Result<SubgroupClass> {
        if a.subgroup != b.subgroup {
            return Err(Error::NotSubgroup("cup product of classes over different subgroups".into()));
        }
        let degree = a.degree() + b.degree();
        if degree < self.window.lo || degree > self.window.hi {
            return Err(Error::Window { degree, lo: self.window.lo, hi: self.window.hi });
        }
        let dec = self.decomposition(&a.subgroup);
        let classes = dec.len();
        let ea = dec.iota_hat(&DecomposedElement::single(classes, 0, a.rep.clone()))?;
        let eb = dec.iota_hat(&DecomposedElement::single(classes, 0, b.rep.clone()))?;
        let prod = dec.hochschild().cup(&ea, &eb);
        let mut parts = dec.rho_hat(&prod)?.parts;
        Ok(SubgroupClass::new(a.subgroup.clone(), parts.swap_remove(0)))
    }

    /// The double-coset formula: for classes `α` over `H_i = C_G(g_i)` and
    /// `β` over `H_j`, returns the class components
    /// `Σ_{x ∈ H_i\G/H_j} cor^{H_k}_W(res y*(α) ∪ res (yx)*(β))`, where
    /// `y·g_i·ˣg_j·y⁻¹ = g_k` and `W = ʸˣH_j ∩ ʸH_i`, grouped by `k`.
    pub fn double_coset_cup(
        &self,
        dec: &ClassDecomposition,
        i: usize,
        j: usize,
        a: &SubgroupClass,
        b: &SubgroupClass,
    ) -> Result<Vec<(usize, SubgroupClass)>> {
        let grp = &*self.group;
        let cd = dec.hochschild().conjugacy();
        let (hi, hj) = (dec.class(i).centralizer(), dec.class(j).centralizer());
        if &a.subgroup != hi || &b.subgroup != hj {
            return Err(Error::NotSubgroup("classes must live on the centralizers of their conjugacy classes".into()));
        }
        let (gi, gj) = (cd.rep(i), cd.rep(j));
        let degree = a.degree() + b.degree();
        let mut sums: Vec<Option<TateElement>> = vec![None; dec.len()];
        for &x in DoubleCosetSystem::new(hi, hj).reps() {
            let w = grp.mul(gi, grp.conj(x, gj));
            let (k, y) = cd.rep_and_witness(w);
            let yx = grp.mul(y, x);
            let yhi = hi.conjugate(y);
            let yxhj = hj.conjugate(yx);
            let small = yxhj.intersect(&yhi);
            let ra = self.restriction(&yhi, &small, &self.conjugation(y, a))?;
            let rb = self.restriction(&yxhj, &small, &self.conjugation(yx, b))?;
            let prod = self.group_cup(&ra, &rb)?;
            let term = self.corestriction(dec.class(k).centralizer(), &small, &prod)?;
            let slot = sums[k].get_or_insert_with(|| TateElement::zero(degree));
            *slot = slot.add(&self.field, &term.rep);
        }
        Ok(sums
            .into_iter()
            .enumerate()
            .filter_map(|(k, s)| s.map(|rep| (k, SubgroupClass::new(dec.class(k).centralizer().clone(), rep))))
            .collect())
    }

    fn check_pair(&self, k: &Subgroup, h: &Subgroup, c: &SubgroupClass, source: &Subgroup) -> Result<()> {
        if !h.is_subgroup_of(k) {
            return Err(Error::NotSubgroup("H is not contained in K".into()));
        }
        if &c.subgroup != source {
            return Err(Error::NotSubgroup("class lives on a different subgroup".into()));
        }
        Ok(())
    }
}
