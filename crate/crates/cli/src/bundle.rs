//! The machine-readable result bundle and the computations that fill it:
//! dimensions (total, per class, and on the direct complex when affordable),
//! class data, and structure-constant tables for `∪`, `Δ` and the bracket.
//!
//! The JSON form has the frozen top-level shape
//! `{"config", "dims", "classes", "tables", "provenance"}`; `tables` is an
//! object whose keys depend on the command. Everything is ordered by degree,
//! then class index, then basis index, so identical configurations give
//! byte-identical output.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use tatebv_core::{ClassDecomposition, DecomposedElement, DecomposedRing, Hochschild, Scalar, Window};

use crate::config::{CliError, JobConfig};

/// Version of the JSON layout below.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ResultBundle {
    pub config: JobConfig,
    pub dims: Vec<DimRow>,
    pub classes: Vec<ClassInfo>,
    pub tables: BTreeMap<String, serde_json::Value>,
    pub provenance: Provenance,
}

/// `dim ĤH^n(kG,kG)` in one degree.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DimRow {
    pub degree: i32,
    pub total: usize,
    /// `dim Ĥ^n(C_G(x),k)` per class, in class order.
    pub per_class: Vec<usize>,
    /// The dimension computed on `D*(kG,kG)` itself, when affordable.
    pub direct: Option<usize>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassInfo {
    pub index: usize,
    pub representative: String,
    pub size: usize,
    pub centralizer_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    pub config_hash: String,
}

/// One basis class of `ĤH^n`: a cohomology representative of the
/// centralizer summand of `class`.
#[derive(Debug, Clone, Serialize)]
pub struct BasisLabel {
    pub label: String,
    pub degree: i32,
    pub class: usize,
    pub index: usize,
}

/// A structure constant row: the coordinates of `op(inputs)` in the basis
/// of `degree` (dense, in the order of the declared basis).
#[derive(Debug, Clone, Serialize)]
pub struct TableEntry {
    pub inputs: Vec<String>,
    pub degree: i32,
    pub coords: Vec<Scalar>,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct SpotChecks {
    /// `direct` when re-verified on `D*(kG,kG)`, `fingerprint` otherwise.
    pub path: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Tables {
    pub basis: Vec<BasisLabel>,
    pub cup: Vec<TableEntry>,
    pub delta: Vec<TableEntry>,
    pub bracket: Vec<TableEntry>,
    pub spot_checks: SpotChecks,
}

/// The complexes for one job.
pub struct Job {
    pub config: JobConfig,
    pub hh: Arc<Hochschild>,
    pub dec: Arc<ClassDecomposition>,
    pool: rayon::ThreadPool,
}

impl Job {
    pub fn new(config: JobConfig) -> Result<Self, CliError> {
        let group = config.group()?;
        let (lo, hi) = config.window;
        let hh = Arc::new(Hochschild::new(group, config.field()).with_window(Window::new(lo - 1, hi + 1)).with_caps(config.caps()));
        let dec = Arc::new(ClassDecomposition::new(hh.clone()));
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| CliError::Config(format!("cannot start {} threads: {e}", config.threads)))?;
        Ok(Job { config, hh, dec, pool })
    }

    pub fn degrees(&self) -> Vec<i32> {
        (self.config.window.0..=self.config.window.1).collect()
    }

    /// Refuses windows whose centralizer complexes exceed the cap.
    pub fn check_decomposition_cost(&self) -> Result<(), CliError> {
        let (lo, hi) = self.config.window;
        let worst = (lo - 1..=hi + 1).map(|m| self.dec.cost_estimate(m)).max().unwrap_or(0);
        if worst > self.config.decomposition_cap {
            return Err(CliError::CostCap(format!(
                "the centralizer complexes need {worst} basis elements in one degree (cap {})",
                self.config.decomposition_cap
            )));
        }
        Ok(())
    }

    /// Largest basis of `D*(kG,kG)` needed for the window.
    pub fn direct_cost(&self) -> u128 {
        let (lo, hi) = self.config.window;
        (lo - 1..=hi + 1).map(|m| self.hh.dim_u128(m)).max().unwrap_or(0)
    }

    pub fn direct_affordable(&self) -> bool {
        self.direct_cost() <= self.config.direct_cap
    }

    pub fn classes(&self) -> Vec<ClassInfo> {
        let g = self.hh.group();
        self.dec
            .classes()
            .iter()
            .enumerate()
            .map(|(index, c)| ClassInfo {
                index,
                representative: g.label(c.rep()),
                size: g.order() / c.centralizer().order(),
                centralizer_order: c.centralizer().order(),
            })
            .collect()
    }

    /// Dimensions on the decomposition path, confirmed on the direct path
    /// when affordable. A disagreement is an error.
    pub fn dims(&self) -> Result<Vec<DimRow>, CliError> {
        self.check_decomposition_cost()?;
        let direct = self.direct_affordable();
        let degrees = self.degrees();
        let rows: Vec<DimRow> = self.pool.install(|| {
            degrees
                .par_iter()
                .map(|&n| -> Result<DimRow, CliError> {
                    let per_class = self.dec.class_dims(n)?;
                    let total = per_class.iter().sum();
                    let direct = if direct { Some(self.hh.cohomology(n)?.dim()) } else { None };
                    Ok(DimRow { degree: n, total, per_class, direct })
                })
                .collect::<Result<Vec<_>, CliError>>()
        })?;
        if let Some(row) = rows.iter().find(|r| r.direct.is_some_and(|d| d != r.total)) {
            return Err(CliError::Failure(format!(
                "degree {}: decomposition gives {} but the direct complex gives {}",
                row.degree,
                row.total,
                row.direct.unwrap()
            )));
        }
        Ok(rows)
    }

    pub fn provenance(&self, command: &str) -> Provenance {
        Provenance {
            tool: "tatebv",
            version: env!("CARGO_PKG_VERSION"),
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            seed: self.config.seed,
            config_hash: self.config.hash(),
        }
    }

    pub fn bundle(&self, command: &str, dims: Vec<DimRow>, tables: BTreeMap<String, serde_json::Value>) -> ResultBundle {
        ResultBundle { config: self.config.clone(), dims, classes: self.classes(), tables, provenance: self.provenance(command) }
    }

    /// Full `∪`, `Δ` and bracket tables over the cohomology bases of the
    /// window, with about 10% of the entries re-verified independently.
    pub fn tables(&self) -> Result<Tables, CliError> {
        self.check_decomposition_cost()?;
        let ring = DecomposedRing::new(self.dec.clone());
        let degrees = self.degrees();
        let (lo, hi) = self.config.window;
        let in_window = |n: i32| lo <= n && n <= hi;

        let mut basis: BTreeMap<i32, Vec<(BasisLabel, DecomposedElement)>> = BTreeMap::new();
        for &n in &degrees {
            let mut index_in_class = vec![0usize; self.dec.len()];
            let mut row = Vec::new();
            for (k, e) in ring.basis(n)? {
                let i = index_in_class[k];
                index_in_class[k] += 1;
                row.push((BasisLabel { label: format!("H{n}.c{k}.{i}"), degree: n, class: k, index: i }, e));
            }
            basis.insert(n, row);
        }

        #[derive(Clone, Copy)]
        enum Op {
            Cup,
            Delta,
            Bracket,
        }
        // (operation, degree and index of the left input, right input if binary)
        type Entry = (Op, i32, usize, Option<(i32, usize)>);
        let mut jobs: Vec<Entry> = Vec::new();
        for &m in &degrees {
            for &n in &degrees {
                if in_window(m + n) {
                    for i in 0..basis[&m].len() {
                        for j in 0..basis[&n].len() {
                            jobs.push((Op::Cup, m, i, Some((n, j))));
                        }
                    }
                }
            }
        }
        for &m in &degrees {
            if in_window(m - 1) {
                for i in 0..basis[&m].len() {
                    jobs.push((Op::Delta, m, i, None));
                }
            }
        }
        for &m in &degrees {
            for &n in &degrees {
                if in_window(m + n - 1) {
                    for i in 0..basis[&m].len() {
                        for j in 0..basis[&n].len() {
                            jobs.push((Op::Bracket, m, i, Some((n, j))));
                        }
                    }
                }
            }
        }

        let evaluate = |op: Op, m: i32, i: usize, other: Option<(i32, usize)>| -> Result<(TableEntry, DecomposedElement), CliError> {
            let (la, a) = &basis[&m][i];
            let (value, inputs) = match (op, other) {
                (Op::Delta, _) => (ring.delta(a)?, vec![la.label.clone()]),
                (op, Some((n, j))) => {
                    let (lb, b) = &basis[&n][j];
                    let v = if matches!(op, Op::Cup) { ring.cup(a, b)? } else { ring.bracket(a, b)? };
                    (v, vec![la.label.clone(), lb.label.clone()])
                }
                _ => unreachable!("binary operations carry a second input"),
            };
            let coords = ring.coordinates(&value)?;
            Ok((TableEntry { inputs, degree: value.degree, coords }, value))
        };
        let results: Vec<(TableEntry, DecomposedElement)> = self.pool.install(|| {
            jobs.par_iter().map(|&(op, m, i, other)| evaluate(op, m, i, other)).collect::<Result<Vec<_>, CliError>>()
        })?;

        // Spot checks: a seeded ~10% sample (at least one entry) re-derived
        // from fresh representatives.
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed ^ 0x7ab1e5);
        let mut picked: Vec<usize> = (0..jobs.len()).filter(|_| rng.gen_bool(0.1)).collect();
        if picked.is_empty() && !jobs.is_empty() {
            picked.push(rng.gen_range(0..jobs.len()));
        }
        let direct = self.direct_affordable();
        let mut spot = SpotChecks { path: if direct { "direct" } else { "fingerprint" }.to_string(), ..Default::default() };
        for &t in &picked {
            let (op, m, i, other) = jobs[t];
            let (entry, _) = &results[t];
            let ok = self.spot_check(&ring, &basis, op_name(&op), m, i, other, entry, direct)?;
            spot.checked += 1;
            if !ok {
                spot.failed += 1;
                spot.failures.push(format!("{}({})", op_name(&op), entry.inputs.join(", ")));
            }
        }

        fn op_name(op: &Op) -> &'static str {
            match op {
                Op::Cup => "cup",
                Op::Delta => "delta",
                Op::Bracket => "bracket",
            }
        }

        let mut cup = Vec::new();
        let mut delta = Vec::new();
        let mut bracket = Vec::new();
        for ((op, ..), (entry, _)) in jobs.iter().zip(results) {
            match op {
                Op::Cup => cup.push(entry),
                Op::Delta => delta.push(entry),
                Op::Bracket => bracket.push(entry),
            }
        }
        let basis = basis.into_values().flat_map(|row| row.into_iter().map(|(l, _)| l)).collect();
        Ok(Tables { basis, cup, delta, bracket, spot_checks: spot })
    }

    #[allow(clippy::too_many_arguments)]
    fn spot_check(
        &self,
        ring: &DecomposedRing,
        basis: &BTreeMap<i32, Vec<(BasisLabel, DecomposedElement)>>,
        op: &str,
        m: i32,
        i: usize,
        other: Option<(i32, usize)>,
        entry: &TableEntry,
        direct: bool,
    ) -> Result<bool, CliError> {
        let a = &basis[&m][i].1;
        let b = other.map(|(n, j)| &basis[&n][j].1);
        if direct {
            let hh = &self.hh;
            let da = ring.to_direct(a)?;
            let value = match (op, b) {
                ("delta", _) => hh.delta_hat(&da),
                ("cup", Some(b)) => hh.cup(&da, &ring.to_direct(b)?),
                (_, Some(b)) => hh.bracket(&da, &ring.to_direct(b)?),
                _ => unreachable!("binary operations carry a second input"),
            };
            let fresh = ring.coordinates(&ring.from_direct(&value)?)?;
            Ok(fresh == entry.coords)
        } else {
            let fresh = match (op, b) {
                ("delta", _) => ring.delta(a)?,
                ("cup", Some(b)) => ring.cup(a, b)?,
                (_, Some(b)) => ring.bracket(a, b)?,
                _ => unreachable!("binary operations carry a second input"),
            };
            let claimed = ring.from_coordinates(entry.degree, &entry.coords)?;
            Ok(ring.same_class(&fresh, &claimed)?)
        }
    }
}

impl Tables {
    pub fn to_json(&self) -> BTreeMap<String, serde_json::Value> {
        let mut out = BTreeMap::new();
        out.insert("basis".into(), serde_json::to_value(&self.basis).expect("serializable"));
        out.insert("cup".into(), serde_json::to_value(&self.cup).expect("serializable"));
        out.insert("delta".into(), serde_json::to_value(&self.delta).expect("serializable"));
        out.insert("bracket".into(), serde_json::to_value(&self.bracket).expect("serializable"));
        out.insert("spot_checks".into(), serde_json::to_value(&self.spot_checks).expect("serializable"));
        out
    }
}
