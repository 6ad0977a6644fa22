//! The acceptance criteria, each checked exactly (every tolerance is zero).
//!
//! This target runs without the libtest harness so that it always prints one
//! `PASS`/`FAIL` line per criterion. It exits nonzero if any criterion
//! behaves differently from what is recorded below.
//!
//! Criterion 3 is a recorded expected failure: ten of the printed bracket
//! values are inconsistent with the printed Δ table and the defining formula
//! of the bracket (see `s3::CORRECTIONS`). The criterion is evaluated
//! verbatim and reported as `FAIL`; the run only succeeds if exactly those ten
//! items fail and every corrected value holds.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tatebv_cli::suites::{SuiteOptions, SuiteReport, Suites, CUP_CASES, M3_CASES};
use tatebv_cli::{connes, s3};
use tatebv_core::group::{preset_group, Preset};
use tatebv_core::linalg::rank;
use tatebv_core::{ClassDecomposition, DecomposedRing, FieldSpec, Hochschild, SparseMatrix, SparseVec};

type Outcome = Result<String, String>;

fn hochschild(preset: Preset, param: usize, p: u32) -> Arc<Hochschild> {
    Arc::new(Hochschild::new(Arc::new(preset_group(preset, param).unwrap()), FieldSpec::new(p).unwrap()))
}

fn ring(preset: Preset, param: usize, p: u32) -> DecomposedRing {
    DecomposedRing::new(Arc::new(ClassDecomposition::new(hochschild(preset, param, p))))
}

fn suites(preset: Preset, param: usize, p: u32, lo: i32, hi: i32, samples: usize) -> Suites {
    Suites::new(hochschild(preset, param, p), SuiteOptions { lo, hi, samples, ..SuiteOptions::default() })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_suite(r: &SuiteReport, min_checks: usize) -> Result<(), String> {
    ensure(r.passed(), || format!("{} {:?}", r.summary(), r.messages))?;
    ensure(r.checked >= min_checks, || format!("{}: fewer than {min_checks} checks", r.summary()))
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn cli_json(args: &[&str]) -> Result<serde_json::Value, String> {
    let out = tatebv_cli::run(std::iter::once("tatebv").chain(args.iter().copied()).map(std::ffi::OsString::from));
    ensure(out.code == 0, || format!("exit {}: {}", out.code, out.stderr))?;
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

/// S3/F3 dimensions on both paths.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let bundle = cli_json(&["--group", "symmetric:3", "--char", "3", "--window", "-4..3", "--format", "json", "dims"])?;
    let rows = bundle["dims"].as_array().ok_or("no dims")?;
    let totals: Vec<u64> = rows.iter().map(|r| r["total"].as_u64().unwrap()).collect();
    ensure(totals == [2, 1, 1, 2, 2, 1, 1, 2], || format!("dims {totals:?}"))?;
    for r in rows {
        let n = r["degree"].as_i64().unwrap();
        if (-3..=2).contains(&n) {
            ensure(r["direct"].as_u64() == r["total"].as_u64(), || format!("degree {n}: direct {}", r["direct"]))?;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("dims {totals:?} for n = -4..3, direct path agrees on -3..2 ({:.1?})", start.elapsed()))
}

/// S3/F3 presentation, invariant relations plus an exact normalization.
fn criterion_2(report: &s3::S3Report, elapsed: Duration) -> Outcome {
    ensure(elapsed <= Duration::from_secs(120), || format!("took {elapsed:.1?}"))?;
    ensure(report.presentation_ok(), || format!("failures: {:?}", report.failures().iter().map(|c| &c.label).collect::<Vec<_>>()))?;
    for label in ["W2^3 = 0", "W2^-3 = 0", "W2^2 = zC", "C^2 = 0"] {
        let holds = report.invariant.iter().chain(&report.identities).any(|c| c.label == label && c.holds);
        ensure(holds, || format!("{label} not verified"))?;
    }
    Ok(format!("all relations hold; {} normalizations solve the presentation", report.presentation_solutions.len()))
}

/// S3/F3 BV table as printed. Recorded expected failure: see the module docs.
fn criterion_3(report: &s3::S3Report) -> Result<Outcome, String> {
    let delta_ok = report.identities.iter().filter(|c| c.group == "delta").all(|c| c.holds);
    let delta_count = report.identities.iter().filter(|c| c.group == "delta").count();
    let brackets = report.identities.iter().filter(|c| c.group == "bracket").count();
    let failing = report.failing_brackets();
    let expected: Vec<usize> = s3::CORRECTIONS.iter().map(|&(i, _)| i).collect();
    let corrected_ok = report.identities.iter().filter(|c| c.group == "corrected").all(|c| c.holds)
        && report.identities.iter().filter(|c| c.group == "corrected").count() == expected.len()
        && !report.corrected_solutions.is_empty();
    // Anything other than the recorded outcome is a real regression.
    ensure(delta_ok && delta_count >= 10, || "a Δ value does not hold".into())?;
    ensure(brackets == 49, || format!("{brackets} brackets checked, expected 49"))?;
    ensure(failing == expected, || format!("failing brackets {failing:?}, recorded {expected:?}"))?;
    ensure(corrected_ok, || "a corrected bracket value does not hold".into())?;
    if report.bv_ok() {
        return Err("the printed table now holds verbatim; update the recorded failure".into());
    }
    Ok(Err(format!(
        "all {delta_count} Δ values hold, {} of 49 brackets hold verbatim; items {failing:?} fail as printed and hold with corrected values",
        49 - failing.len()
    )))
}

/// Double-coset products against the decomposed direct product.
fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    for (name, preset, param, p, lo, hi) in [("S3/F3", Preset::Symmetric, 3, 3, -4, 3), ("D4/F2", Preset::Dihedral, 4, 2, -3, 2)] {
        let s = suites(preset, param, p, lo, hi, 30);
        let classes = ClassDecomposition::new(hochschild(preset, param, p)).len();
        let r = s.path_equivalence().map_err(|e| e.to_string())?;
        let pairs = r.checked / classes;
        ensure_suite(&r, 30 * classes)?;
        parts.push(format!("{name}: {pairs} pairs"));
    }
    Ok(format!("zero mismatches ({})", parts.join(", ")))
}

/// Retract identities on both sides for every class.
fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for (name, preset, param, p) in [("S3/F3", Preset::Symmetric, 3, 3), ("D4/F2", Preset::Dihedral, 4, 2)] {
        let r = suites(preset, param, p, -3, 2, 100).retract().map_err(|e| e.to_string())?;
        ensure_suite(&r, 100)?;
        parts.push(format!("{name}: {} checks", r.checked));
    }
    Ok(format!("ρι = id and id - ιρ = ds + sd exact ({})", parts.join(", ")))
}

/// The cyclic A∞ identities and the BV operator at chain level.
fn criterion_6() -> Outcome {
    let s = suites(Preset::Symmetric, 3, 3, -3, 2, 200);
    let reports = [s.leibniz(), s.homotopy_associativity(), s.m3_vanishing(), s.cyclicity()];
    let mut covered = BTreeSet::new();
    for r in &reports {
        ensure_suite(r, 100)?;
        covered.extend(r.covered.iter().cloned());
    }
    for case in CUP_CASES.into_iter().chain(M3_CASES) {
        ensure(covered.contains(case), || format!("case {case} never exercised"))?;
    }
    let delta = s.delta_chain_map();
    ensure_suite(&delta, 2 * 200)?;
    let checks: usize = reports.iter().map(|r| r.checked).sum();
    Ok(format!("{checks} tuples over all six cup cases and both m3 cases; {} Δ̂ checks", delta.checked))
}

/// Degenerate and abelian groups.
fn criterion_7() -> Outcome {
    let degrees = -4..=3;
    for (name, preset, param, p, dim) in [("C2/F3", Preset::Cyclic, 2, 3, 0), ("C2/F2", Preset::Cyclic, 2, 2, 2), ("C3/F3", Preset::Cyclic, 3, 3, 3)] {
        let hh = hochschild(preset, param, p);
        let dec = ClassDecomposition::new(hh.clone());
        for n in degrees.clone() {
            let d = dec.dim(n).map_err(|e| e.to_string())?;
            let direct = hh.cohomology(n).map_err(|e| e.to_string())?.dim();
            ensure(d == dim && direct == dim, || format!("{name} degree {n}: {d} / {direct}, expected {dim}"))?;
        }
    }
    // kC2 ⊗ Ĥ*(C2,F2): the product of g^k u^m and g^l u^n is g^{k+l} u^{m+n}.
    let r = ring(Preset::Cyclic, 2, 2);
    let conj = r.decomposition().hochschild().conjugacy().clone();
    let g = conj.group().clone();
    let mut pairs = 0;
    for m in degrees.clone() {
        for n in degrees.clone() {
            if !degrees.contains(&(m + n)) {
                continue;
            }
            for (k, a) in r.basis(m).map_err(|e| e.to_string())? {
                for (l, b) in r.basis(n).map_err(|e| e.to_string())? {
                    let product = r.cup(&a, &b).map_err(|e| e.to_string())?;
                    let coords = r.coordinates(&product).map_err(|e| e.to_string())?;
                    let target = conj.class_of(g.mul(conj.rep(k), conj.rep(l)));
                    let expected: Vec<u32> = (0..2).map(|c| u32::from(c == target)).collect();
                    ensure(coords == expected, || format!("g^{k}u^{m} · g^{l}u^{n} = {coords:?}, expected {expected:?}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("C2/F3 zero, C2/F2 dim 2, C3/F3 dim 3 on -4..3; C2/F2 tensor rule on {pairs} basis pairs"))
}

/// The identity-class component is a BV subalgebra.
fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for (name, preset, param, p, lo, hi) in [("S3/F3", Preset::Symmetric, 3, 3, -4, 3), ("D4/F2", Preset::Dihedral, 4, 2, -3, 2)] {
        let r = ring(preset, param, p);
        let outside = |x: &tatebv_core::DecomposedElement| -> Result<bool, String> {
            let own = r.class_dims(x.degree).map_err(|e| e.to_string())?[0];
            let coords = r.coordinates(x).map_err(|e| e.to_string())?;
            Ok(coords[own..].iter().any(|&c| c != 0))
        };
        let mut checked = 0;
        for m in lo..=hi {
            let basis = r.class_basis(0, m).map_err(|e| e.to_string())?;
            for a in &basis {
                if m > lo {
                    ensure(!outside(&r.delta(a).map_err(|e| e.to_string())?)?, || format!("{name}: Δ leaves the identity class in degree {m}"))?;
                    checked += 1;
                }
                for n in lo..=hi {
                    if !(lo..=hi).contains(&(m + n)) {
                        continue;
                    }
                    for b in r.class_basis(0, n).map_err(|e| e.to_string())? {
                        let ab = r.cup(a, &b).map_err(|e| e.to_string())?;
                        ensure(!outside(&ab)?, || format!("{name}: product leaves the identity class in degrees ({m}, {n})"))?;
                        checked += 1;
                    }
                }
            }
        }
        parts.push(format!("{name}: {checked} products and Δ values"));
    }
    Ok(format!("closed under ∪ and Δ ({})", parts.join(", ")))
}

/// Connes' operator vanishes on group homology.
fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    for (name, preset, param, p) in [("C3/F3", Preset::Cyclic, 3, 3), ("S3/F3", Preset::Symmetric, 3, 3), ("V4/F2", Preset::KleinFour, 0, 2)] {
        let report = connes::verify(hochschild(preset, param, p), 2).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{name}: {report:?}"))?;
        let cycles: usize = report.degrees.iter().map(|d| d.cycles).sum();
        parts.push(format!("{name}: {cycles} cycles"));
    }
    Ok(format!("B̃₁ sends cycles to boundaries for s ≤ 2 ({})", parts.join(", ")))
}

/// Nondegeneracy of the pairing and its class selection rule.
fn criterion_10() -> Outcome {
    let hh = hochschild(Preset::Symmetric, 3, 3);
    let f = *hh.field();
    let mut dims = Vec::new();
    for n in 0..=3 {
        let left = hh.cohomology(n).map_err(|e| e.to_string())?;
        let right = hh.cohomology(-n - 1).map_err(|e| e.to_string())?;
        let (a, b) = (left.representatives(), right.representatives());
        ensure(a.len() == b.len(), || format!("degree {n}: dims {} and {}", a.len(), b.len()))?;
        let columns: Vec<SparseVec> = b
            .iter()
            .map(|y| {
                let pairs = a.iter().enumerate().map(|(i, x)| {
                    (i, hh.pairing(&tatebv_core::TateElement::new(n, x.clone()), &tatebv_core::TateElement::new(-n - 1, y.clone())))
                });
                SparseVec::from_pairs(&f, pairs)
            })
            .collect();
        let matrix = SparseMatrix::from_columns(a.len(), columns).map_err(|e| e.to_string())?;
        ensure(rank(&f, &matrix) == a.len(), || format!("degree {n}: pairing matrix is singular"))?;
        dims.push(a.len());
    }
    // Components of classes x, y pair to zero unless y is the class of x⁻¹.
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checked = 0;
    for (preset, param, p) in [(Preset::Symmetric, 3, 3), (Preset::Cyclic, 3, 3)] {
        let hh = hochschild(preset, param, p);
        let conj = hh.conjugacy().clone();
        let mut matched_nonzero = false;
        for n in -3..=2 {
            for k in 0..conj.len() {
                for l in 0..conj.len() {
                    for _ in 0..20 {
                        let x = hh.random_class_element(n, k, 4, &mut rng);
                        let y = hh.random_class_element(-n - 1, l, 4, &mut rng);
                        let value = hh.pairing(&x, &y);
                        if l == conj.inverse_class(k) {
                            matched_nonzero |= value != 0;
                        } else {
                            ensure(value == 0, || format!("classes {k}, {l} pair nontrivially in degree {n}"))?;
                            checked += 1;
                        }
                    }
                }
            }
        }
        ensure(matched_nonzero, || "inverse classes never pair nontrivially".into())?;
    }
    Ok(format!("pairing matrices of sizes {dims:?} are invertible for n = 0..3; {checked} cross-class pairings vanish"))
}

fn print_line(number: usize, outcome: &Outcome) {
    let (status, detail) = match outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("criterion {number:>2}: {status} — {detail}");
}

fn main() {
    let mut unexpected = Vec::new();
    let mut expect_pass = |number: usize, outcome: Outcome| {
        print_line(number, &outcome);
        if outcome.is_err() {
            unexpected.push(number);
        }
    };

    expect_pass(1, criterion_1());
    let start = Instant::now();
    match s3::verify() {
        Ok(report) => {
            let elapsed = start.elapsed();
            expect_pass(2, criterion_2(&report, elapsed));
            match criterion_3(&report) {
                // Expected: the table fails as printed in exactly the recorded way.
                Ok(outcome) if outcome.is_err() => print_line(3, &outcome),
                Ok(outcome) => expect_pass(3, outcome),
                Err(regression) => expect_pass(3, Err(format!("unexpected outcome: {regression}"))),
            }
        }
        Err(e) => {
            expect_pass(2, Err(e.to_string()));
            expect_pass(3, Err(e.to_string()));
        }
    }
    expect_pass(4, criterion_4());
    expect_pass(5, criterion_5());
    expect_pass(6, criterion_6());
    expect_pass(7, criterion_7());
    expect_pass(8, criterion_8());
    expect_pass(9, criterion_9());
    expect_pass(10, criterion_10());

    if unexpected.is_empty() {
        println!("acceptance: all criteria behave as recorded (criterion 3 is a recorded failure of the printed table)");
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
