//! Randomized identity suites driven by a seed: the chain-level identities of
//! the cyclic `A∞` structure, the BV operator, the decomposition retracts,
//! the double-coset product, and the BV identities on cohomology.
//!
//! Every suite returns a [`SuiteReport`] with the number of checks made, the
//! number that failed, and the coverage labels it reached. A suite that does
//! not reach one of its required labels fails, so a report can never pass
//! vacuously on inputs that do not exercise the identity.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use tatebv_core::complex::arity;
use tatebv_core::{
    ClassDecomposition, DecomposedElement, DecomposedRing, Hochschild, Mackey, Result, Scalar, SubgroupClass,
    TateElement,
};

const MAX_MESSAGES: usize = 8;

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    /// Coverage labels reached (degree patterns, product cases, ...).
    pub covered: BTreeSet<String>,
    /// Required coverage labels that were never reached.
    pub missing: Vec<String>,
    /// The first few failure descriptions.
    pub messages: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checked: 0, failed: 0, covered: BTreeSet::new(), missing: Vec::new(), messages: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.messages.len() < MAX_MESSAGES {
                self.messages.push(what());
            }
        }
    }

    fn cover(&mut self, label: impl Into<String>) {
        self.covered.insert(label.into());
    }

    fn require<I: IntoIterator<Item = S>, S: Into<String>>(mut self, labels: I) -> Self {
        for label in labels {
            let label = label.into();
            if !self.covered.contains(&label) {
                self.missing.push(label);
            }
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.missing.is_empty()
    }

    /// One line: `name: N checked, F failed`.
    pub fn summary(&self) -> String {
        let mut line = format!("{}: {} checked, {} failed", self.name, self.checked, self.failed);
        if !self.missing.is_empty() {
            line.push_str(&format!(", never reached {}", self.missing.join(", ")));
        }
        line
    }
}

/// Knobs shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Minimum number of samples per suite (per class and side for the retracts).
    pub samples: usize,
    /// Degree range of the random inputs.
    pub lo: i32,
    pub hi: i32,
    /// Number of basis terms in a random chain-level element.
    pub terms: usize,
    /// Fault injection: perturb the differential seen by the `d² = 0` suite.
    pub mutate_differential: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, samples: 200, lo: -3, hi: 2, terms: 3, mutate_differential: false }
    }
}

/// The six cases of the generalized cup product `D^n ⊗ D^m → D^{n+m}`.
pub fn cup_case(n: i32, m: i32) -> &'static str {
    match (n >= 0, m >= 0) {
        (true, true) => "cochain*cochain",
        (false, false) => "chain*chain",
        (true, false) if n + m <= -1 => "cochain*chain->chain",
        (true, false) => "cochain*chain->cochain",
        (false, true) if n + m <= -1 => "chain*cochain->chain",
        (false, true) => "chain*cochain->cochain",
    }
}

pub const CUP_CASES: [&str; 6] = [
    "cochain*cochain",
    "chain*chain",
    "cochain*chain->chain",
    "cochain*chain->cochain",
    "chain*cochain->chain",
    "chain*cochain->cochain",
];

/// The two input patterns on which `m3` is not identically zero.
pub const M3_CASES: [&str; 2] = ["m3(cochain,chain,cochain)", "m3(chain,cochain,chain)"];

fn m3_case(a: i32, b: i32, c: i32) -> Option<&'static str> {
    match (a >= 0, b >= 0, c >= 0) {
        (true, false, true) => Some(M3_CASES[0]),
        (false, true, false) => Some(M3_CASES[1]),
        _ => None,
    }
}

/// Driver holding the complexes shared by the suites.
pub struct Suites {
    hh: Arc<Hochschild>,
    dec: Arc<ClassDecomposition>,
    ring: DecomposedRing,
    mackey: Mackey,
    opts: SuiteOptions,
}

impl Suites {
    pub fn new(hh: Arc<Hochschild>, opts: SuiteOptions) -> Self {
        let dec = Arc::new(ClassDecomposition::new(hh.clone()));
        let ring = DecomposedRing::new(dec.clone());
        let mackey = Mackey::new(hh.group().clone(), *hh.field());
        Suites { hh, dec, ring, mackey, opts }
    }

    pub fn options(&self) -> &SuiteOptions {
        &self.opts
    }

    /// Every suite, in a fixed order.
    pub fn run_all(&self) -> Result<Vec<SuiteReport>> {
        Ok(vec![
            self.differential_squares_to_zero(),
            self.leibniz(),
            self.homotopy_associativity(),
            self.m3_vanishing(),
            self.pairing_adjunction(),
            self.cyclicity(),
            self.delta_chain_map(),
            self.retract()?,
            self.path_equivalence()?,
            self.bv_identities()?,
        ])
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.opts.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }

    fn degrees(&self) -> Vec<i32> {
        (self.opts.lo..=self.opts.hi).collect()
    }

    fn in_window(&self, n: i32) -> bool {
        self.opts.lo <= n && n <= self.opts.hi
    }

    fn random(&self, m: i32, rng: &mut ChaCha8Rng) -> TateElement {
        if self.hh.dim(m) == 0 {
            TateElement::zero(m)
        } else {
            self.hh.random_element(m, self.opts.terms, rng)
        }
    }

    /// Number of passes over `patterns` degree patterns needed for `samples` checks.
    fn rounds(&self, patterns: usize) -> usize {
        self.opts.samples.div_ceil(patterns.max(1)).max(1)
    }

    fn differential(&self, x: &TateElement) -> TateElement {
        let d = self.hh.differential(x);
        if !self.opts.mutate_differential {
            return d;
        }
        // Fault injection: add the index-preserving shift into the next degree.
        let f = self.hh.field();
        let dim = self.hh.dim(x.degree + 1);
        let shifted = x.coeffs.filter(|i| i < dim);
        TateElement::new(d.degree, d.coeffs.add(f, &shifted))
    }

    /// `∂′∂′ = 0` on random elements of every degree.
    pub fn differential_squares_to_zero(&self) -> SuiteReport {
        let mut rep = SuiteReport::new("differential squares to zero");
        let mut rng = self.rng(1);
        let degrees = self.degrees();
        for _ in 0..self.rounds(degrees.len()) {
            for &m in &degrees {
                let x = self.random(m, &mut rng);
                let dd = self.differential(&self.differential(&x));
                rep.check(dd.is_zero(), || format!("d(d(x)) != 0 for x in degree {m}"));
                rep.cover(format!("degree {m}"));
            }
        }
        rep
    }

    /// `∂′(a∪b) = ∂′a∪b + (-1)^{|a|} a∪∂′b` on every degree pair.
    pub fn leibniz(&self) -> SuiteReport {
        let (hh, f) = (&self.hh, *self.hh.field());
        let mut rep = SuiteReport::new("Leibniz rule");
        let mut rng = self.rng(2);
        let degrees = self.degrees();
        for _ in 0..self.rounds(degrees.len().pow(2)) {
            for &m in &degrees {
                for &n in &degrees {
                    let a = self.random(m, &mut rng);
                    let b = self.random(n, &mut rng);
                    let lhs = hh.differential(&hh.cup(&a, &b));
                    let rhs = hh.cup(&hh.differential(&a), &b).add_scaled(&f, &hh.cup(&a, &hh.differential(&b)), f.sign(m as i64));
                    rep.check(lhs == rhs, || format!("degrees ({m}, {n})"));
                    rep.cover(cup_case(m, n));
                }
            }
        }
        rep.require(CUP_CASES)
    }

    fn associator_defect(&self, a: &TateElement, b: &TateElement, c: &TateElement) -> TateElement {
        let (hh, f) = (&self.hh, *self.hh.field());
        let d = |x: &TateElement| hh.differential(x);
        let lhs = hh.cup(a, &hh.cup(b, c)).sub(&f, &hh.cup(&hh.cup(a, b), c));
        let rhs = d(&hh.m3(a, b, c))
            .add(&f, &hh.m3(&d(a), b, c))
            .add_scaled(&f, &hh.m3(a, &d(b), c), f.sign(a.degree as i64))
            .add_scaled(&f, &hh.m3(a, b, &d(c)), f.sign((a.degree + b.degree) as i64));
        lhs.sub(&f, &rhs)
    }

    /// `a(bc) - (ab)c = ∂′m3(a,b,c) + m3(∂′a,b,c) + (-1)^{|a|}m3(a,∂′b,c) + (-1)^{|a|+|b|}m3(a,b,∂′c)`.
    pub fn homotopy_associativity(&self) -> SuiteReport {
        let mut rep = SuiteReport::new("homotopy associativity");
        let mut rng = self.rng(3);
        let degrees = self.degrees();
        for _ in 0..self.rounds(degrees.len().pow(3)) {
            for &l in &degrees {
                for &m in &degrees {
                    for &n in &degrees {
                        let a = self.random(l, &mut rng);
                        let b = self.random(m, &mut rng);
                        let c = self.random(n, &mut rng);
                        rep.check(self.associator_defect(&a, &b, &c).is_zero(), || format!("degrees ({l}, {m}, {n})"));
                        if let Some(case) = m3_case(l, m, n) {
                            if !self.hh.m3(&a, &b, &c).is_zero() {
                                rep.cover(case);
                            }
                        }
                    }
                }
            }
        }
        rep.require(M3_CASES)
    }

    /// `m3` vanishes on three cochains, three chains, the remaining mixed
    /// patterns, and on (cochain, chain, cochain) inputs with `r + 2 > m + n`.
    pub fn m3_vanishing(&self) -> SuiteReport {
        let mut rep = SuiteReport::new("m3 vanishing cases");
        let mut rng = self.rng(4);
        let degrees = self.degrees();
        for _ in 0..self.rounds(degrees.len().pow(3)) {
            for &l in &degrees {
                for &m in &degrees {
                    for &n in &degrees {
                        let label = match (l >= 0, m >= 0, n >= 0) {
                            (true, true, true) => "three cochains",
                            (false, false, false) => "three chains",
                            (true, false, true) if arity(m) + 2 > (l + n) as usize => "cochain, chain, cochain with r+2 > m+n",
                            (true, false, true) | (false, true, false) => continue,
                            _ => "other mixed patterns",
                        };
                        let a = self.random(l, &mut rng);
                        let b = self.random(m, &mut rng);
                        let c = self.random(n, &mut rng);
                        rep.check(self.hh.m3(&a, &b, &c).is_zero(), || format!("{label}: degrees ({l}, {m}, {n})"));
                        rep.cover(label);
                    }
                }
            }
        }
        rep.require(["three cochains", "three chains", "other mixed patterns", "cochain, chain, cochain with r+2 > m+n"])
    }

    /// `⟨a∪b, c⟩ = ⟨a, b∪c⟩` for `|a| + |b| + |c| = -1`.
    pub fn pairing_adjunction(&self) -> SuiteReport {
        let hh = &self.hh;
        let mut rep = SuiteReport::new("pairing adjunction");
        let mut rng = self.rng(5);
        let triples = self.triples_with_sum(-1);
        for _ in 0..self.rounds(triples.len()) {
            for &(l, m, n) in &triples {
                let a = self.random(l, &mut rng);
                let b = self.random(m, &mut rng);
                let c = self.random(n, &mut rng);
                let lhs = hh.pairing(&hh.cup(&a, &b), &c);
                let rhs = hh.pairing(&a, &hh.cup(&b, &c));
                rep.check(lhs == rhs, || format!("degrees ({l}, {m}, {n}): {lhs} != {rhs}"));
                if lhs != 0 {
                    rep.cover("nonzero pairing");
                }
            }
        }
        rep.require(["nonzero pairing"])
    }

    fn triples_with_sum(&self, sum: i32) -> Vec<(i32, i32, i32)> {
        let degrees = self.degrees();
        let mut out = Vec::new();
        for &l in &degrees {
            for &m in &degrees {
                let n = sum - l - m;
                if degrees.contains(&n) {
                    out.push((l, m, n));
                }
            }
        }
        out
    }

    /// `⟨α₀, m_k(α₁..α_k)⟩ = (-1)^{|α₀|(2-k)+k} ⟨m_k(α₀..α_{k-1}), α_k⟩` for `k = 2, 3`.
    pub fn cyclicity(&self) -> SuiteReport {
        let (hh, f) = (&self.hh, *self.hh.field());
        let mut rep = SuiteReport::new("cyclicity (k = 2, 3)");
        let mut rng = self.rng(6);
        let triples = self.triples_with_sum(-1);
        for _ in 0..self.rounds(triples.len()) {
            for &(d0, d1, d2) in &triples {
                let a: Vec<TateElement> = [d0, d1, d2].iter().map(|&d| self.random(d, &mut rng)).collect();
                let lhs = hh.pairing(&a[0], &hh.cup(&a[1], &a[2]));
                let rhs = hh.pairing(&hh.cup(&a[0], &a[1]), &a[2]);
                rep.check(lhs == rhs, || format!("k = 2, degrees ({d0}, {d1}, {d2})"));
                if lhs != 0 {
                    rep.cover(cup_case(d1, d2));
                    rep.cover(cup_case(d0, d1));
                }
            }
        }
        let degrees = self.degrees();
        let mut quads = Vec::new();
        for &d0 in &degrees {
            for (d1, d2, d3) in self.triples_with_sum(-d0) {
                quads.push((d0, d1, d2, d3));
            }
        }
        for _ in 0..self.rounds(quads.len()) {
            for &(d0, d1, d2, d3) in &quads {
                let a: Vec<TateElement> = [d0, d1, d2, d3].iter().map(|&d| self.random(d, &mut rng)).collect();
                let lhs = hh.pairing(&a[0], &hh.m3(&a[1], &a[2], &a[3]));
                let rhs = hh.pairing(&hh.m3(&a[0], &a[1], &a[2]), &a[3]);
                let sign = f.sign((3 - d0) as i64);
                rep.check(lhs == f.mul(sign, rhs), || format!("k = 3, degrees ({d0}, {d1}, {d2}, {d3})"));
                if lhs != 0 {
                    if let Some(case) = m3_case(d1, d2, d3) {
                        rep.cover(case);
                    }
                    if let Some(case) = m3_case(d0, d1, d2) {
                        rep.cover(case);
                    }
                }
            }
        }
        rep.require(CUP_CASES.into_iter().chain(M3_CASES))
    }

    /// `Δ̂² = 0` and `∂′Δ̂ + Δ̂∂′ = 0` on random elements.
    pub fn delta_chain_map(&self) -> SuiteReport {
        let (hh, f) = (&self.hh, *self.hh.field());
        let mut rep = SuiteReport::new("BV operator squares to zero and anticommutes with the differential");
        let mut rng = self.rng(7);
        let degrees = self.degrees();
        let mut elements = 0;
        for _ in 0..self.rounds(degrees.len()) {
            for &m in &degrees {
                let x = self.random(m, &mut rng);
                let dx = hh.delta_hat(&x);
                rep.check(hh.delta_hat(&dx).is_zero(), || format!("Δ̂Δ̂ != 0, degree {m}"));
                let anti = hh.differential(&dx).add(&f, &hh.delta_hat(&hh.differential(&x)));
                rep.check(anti.is_zero(), || format!("∂′Δ̂ + Δ̂∂′ != 0, degree {m}"));
                if !dx.is_zero() {
                    rep.cover(if m < 0 { "nonzero on chains" } else { "nonzero on cochains" });
                }
                elements += 1;
            }
        }
        let mut rep = rep.require(["nonzero on chains", "nonzero on cochains"]);
        if elements < self.opts.samples {
            rep.missing.push(format!("{} elements", self.opts.samples));
        }
        rep
    }

    /// `ρι = id` and `id - ιρ = ds + sd` for every class, on both sides.
    pub fn retract(&self) -> Result<SuiteReport> {
        let (hh, dec, f) = (&self.hh, &self.dec, *self.hh.field());
        let mut rep = SuiteReport::new("retract identities");
        let mut rng = self.rng(8);
        let cochain_degrees: Vec<i32> = (self.opts.lo.max(0)..=self.opts.hi).collect();
        let chain_degrees: Vec<i32> = (self.opts.lo..=self.opts.hi.min(-1)).collect();
        let unsigned_boundary = |x: &TateElement| -> Result<TateElement> {
            if x.degree == -1 {
                Ok(TateElement::zero(0))
            } else {
                hh.boundary(x)
            }
        };
        for k in 0..dec.len() {
            let cx = dec.class(k).complex();
            let mut count = 0;
            for _ in 0..self.rounds(cochain_degrees.len()) {
                for &n in &cochain_degrees {
                    if cx.dim(n) > 0 {
                        let psi = cx.random_element(n, self.opts.terms, &mut rng);
                        let back = dec.iota_cochain(k, &dec.rho_cochain(k, &psi)?)?;
                        rep.check(back == psi, || format!("cochain ρι != id, class {k}, degree {n}"));
                    }
                    let phi = hh.random_class_element(n, k, self.opts.terms * 2, &mut rng);
                    let lhs = phi.sub(&f, &dec.rho_cochain(k, &dec.iota_cochain(k, &phi)?)?);
                    let mut rhs = dec.homotopy_cochain(k, &hh.coboundary(&phi)?)?;
                    if n > 0 {
                        rhs = rhs.add(&f, &hh.coboundary(&dec.homotopy_cochain(k, &phi)?)?);
                    }
                    rep.check(lhs == rhs, || format!("cochain homotopy, class {k}, degree {n}"));
                    count += 1;
                }
            }
            if count >= self.opts.samples {
                rep.cover(format!("class {k} cochains"));
            }
            let mut count = 0;
            for _ in 0..self.rounds(chain_degrees.len()) {
                for &m in &chain_degrees {
                    if cx.dim(m) > 0 {
                        let gamma = cx.random_element(m, self.opts.terms, &mut rng);
                        let back = dec.rho_chain(k, &dec.iota_chain(k, &gamma)?)?;
                        rep.check(back == gamma, || format!("chain ρι != id, class {k}, degree {m}"));
                    }
                    let alpha = hh.random_class_element(m, k, self.opts.terms * 2, &mut rng);
                    let lhs = alpha.sub(&f, &dec.iota_chain(k, &dec.rho_chain(k, &alpha)?)?);
                    let mut rhs = unsigned_boundary(&dec.homotopy_chain(k, &alpha)?)?;
                    if m < -1 {
                        rhs = rhs.add(&f, &dec.homotopy_chain(k, &hh.boundary(&alpha)?)?);
                    }
                    rep.check(lhs == rhs, || format!("chain homotopy, class {k}, degree {m}"));
                    count += 1;
                }
            }
            if count >= self.opts.samples {
                rep.cover(format!("class {k} chains"));
            }
        }
        let required: Vec<String> = (0..dec.len()).flat_map(|k| [format!("class {k} cochains"), format!("class {k} chains")]).collect();
        Ok(rep.require(required))
    }

    fn random_subgroup_class(&self, k: usize, n: i32, rng: &mut ChaCha8Rng) -> Result<SubgroupClass> {
        let h = self.dec.class(k).centralizer().clone();
        let cx = self.dec.class(k).complex();
        let rep = if cx.dim(n) == 0 {
            TateElement::zero(n)
        } else {
            let space = cx.cohomology(n)?;
            let p = self.hh.field().p();
            let coords: Vec<Scalar> = (0..space.dim()).map(|_| rng.gen_range(0..p)).collect();
            TateElement::new(n, space.lift(&coords))
        };
        Ok(SubgroupClass::new(h, rep))
    }

    /// The double-coset product equals the decomposition of the direct
    /// chain-level product of the embedded classes, for every class pair and
    /// every degree pair with sum in the window.
    pub fn path_equivalence(&self) -> Result<SuiteReport> {
        let (hh, dec, mk) = (&self.hh, &self.dec, &self.mackey);
        let mut rep = SuiteReport::new("path equivalence");
        let mut rng = self.rng(9);
        let classes = dec.len();
        let (lo, hi) = (self.opts.lo, self.opts.hi);
        for i in 0..classes {
            for j in 0..classes {
                for m in lo..=hi {
                    for n in lo..=hi {
                        if !self.in_window(m + n) {
                            continue;
                        }
                        let a = self.random_subgroup_class(i, m, &mut rng)?;
                        let b = self.random_subgroup_class(j, n, &mut rng)?;
                        let ea = dec.iota_hat(&DecomposedElement::single(classes, i, a.rep.clone()))?;
                        let eb = dec.iota_hat(&DecomposedElement::single(classes, j, b.rep.clone()))?;
                        let direct = dec.rho_hat(&hh.cup(&ea, &eb))?;
                        let formula = mk.double_coset_cup(dec, i, j, &a, &b)?;
                        for k in 0..classes {
                            let h = dec.class(k).centralizer().clone();
                            let lhs = SubgroupClass::new(h.clone(), direct.parts[k].clone());
                            let rhs = formula
                                .iter()
                                .find(|(kk, _)| *kk == k)
                                .map(|(_, c)| c.clone())
                                .unwrap_or_else(|| SubgroupClass::new(h, TateElement::zero(m + n)));
                            if mk.project(&lhs)?.iter().any(|&c| c != 0) {
                                rep.cover("nonzero product");
                            }
                            rep.check(mk.same_class(&lhs, &rhs)?, || format!("classes ({i}, {j}) -> {k}, degrees ({m}, {n})"));
                        }
                        rep.cover("class pair");
                    }
                }
            }
        }
        // Vacuous when every centralizer has zero Tate cohomology (p ∤ |G|).
        let p = hh.field().p() as usize;
        Ok(if hh.group().order() % p == 0 { rep.require(["nonzero product"]) } else { rep })
    }

    fn random_ring_class(&self, n: i32, rng: &mut ChaCha8Rng) -> Result<DecomposedElement> {
        let dim: usize = self.ring.class_dims(n)?.iter().sum();
        let p = self.hh.field().p();
        let coords: Vec<Scalar> = (0..dim).map(|_| rng.gen_range(0..p)).collect();
        self.ring.from_coordinates(n, &coords)
    }

    /// On cohomology: `Δ² = 0`, antisymmetry of the bracket, and the Poisson
    /// rule `[ab, c] = [a,c]b + (-1)^{|a|(|c|-1)} a[b,c]`. Only degree
    /// patterns whose intermediate products stay in the window are sampled.
    pub fn bv_identities(&self) -> Result<SuiteReport> {
        let (r, f) = (&self.ring, *self.hh.field());
        let mut rep = SuiteReport::new("BV identities on cohomology (Δ² = 0, antisymmetry, Poisson)");
        let mut rng = self.rng(10);
        let degrees = self.degrees();
        let mut nonzero = false;
        for &m in &degrees {
            let a = self.random_ring_class(m, &mut rng)?;
            if self.in_window(m - 2) {
                rep.check(r.is_zero_class(&r.delta(&r.delta(&a)?)?)?, || format!("Δ² != 0, degree {m}"));
            }
            for &n in degrees.iter().filter(|&&n| self.in_window(m + n)) {
                let b = self.random_ring_class(n, &mut rng)?;
                let ab = r.bracket(&a, &b)?;
                let ba = r.scale(&r.bracket(&b, &a)?, f.neg(f.sign(((m - 1) * (n - 1)) as i64)));
                rep.check(r.same_class(&ab, &ba)?, || format!("antisymmetry, degrees ({m}, {n})"));
                nonzero |= !r.is_zero_class(&ab)?;
            }
        }
        let mut triples = Vec::new();
        for &l in &degrees {
            for &m in &degrees {
                for &n in &degrees {
                    if [l + m, l + n, m + n, l + m + n].into_iter().all(|d| self.in_window(d)) {
                        triples.push((l, m, n));
                    }
                }
            }
        }
        for _ in 0..self.rounds(triples.len()) {
            for &(l, m, n) in &triples {
                let a = self.random_ring_class(l, &mut rng)?;
                let b = self.random_ring_class(m, &mut rng)?;
                let c = self.random_ring_class(n, &mut rng)?;
                let lhs = r.bracket(&r.cup(&a, &b)?, &c)?;
                let first = r.cup(&r.bracket(&a, &c)?, &b)?;
                let second = r.scale(&r.cup(&a, &r.bracket(&b, &c)?)?, f.sign((l * (n - 1)) as i64));
                rep.check(r.same_class(&lhs, &r.add(&first, &second)?)?, || format!("Poisson, degrees ({l}, {m}, {n})"));
                nonzero |= !r.is_zero_class(&lhs)?;
            }
        }
        if nonzero {
            rep.cover("nonzero bracket");
        }
        Ok(rep)
    }
}
