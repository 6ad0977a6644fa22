use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::group::{preset_group, Preset};
use crate::linalg::FieldSpec;

fn decomposition(preset: Preset, param: usize, p: u32) -> ClassDecomposition {
    let g = Arc::new(preset_group(preset, param).unwrap());
    ClassDecomposition::new(Arc::new(Hochschild::new(g, FieldSpec::new(p).unwrap())))
}

fn s3() -> ClassDecomposition {
    decomposition(Preset::Symmetric, 3, 3)
}

fn d4() -> ClassDecomposition {
    decomposition(Preset::Dihedral, 4, 2)
}

/// Unsigned boundary, zero out of `C_0`.
fn boundary(hh: &Hochschild, x: &TateElement) -> TateElement {
    if x.degree == -1 {
        TateElement::zero(0)
    } else {
        hh.boundary(x).unwrap()
    }
}

#[test]
fn s3_dims_match_direct_path() {
    let dec = s3();
    let dims: Vec<usize> = (-4..=3).map(|n| dec.dim(n).unwrap()).collect();
    assert_eq!(dims, vec![2, 1, 1, 2, 2, 1, 1, 2]);
    for n in -3..=2 {
        assert_eq!(dec.dim(n).unwrap(), dec.hochschild().cohomology(n).unwrap().dim(), "degree {n}");
    }
}

#[test]
fn small_cyclic_dims() {
    let c2 = decomposition(Preset::Cyclic, 2, 3);
    let c3 = decomposition(Preset::Cyclic, 3, 3);
    for n in -3..=3 {
        assert_eq!(c2.dim(n).unwrap(), 0);
        assert_eq!(c3.dim(n).unwrap(), 3);
    }
}

#[test]
fn thread_table_matches_cosets() {
    let dec = s3();
    let g = dec.hochschild().group().clone();
    for cls in dec.classes() {
        let gamma = cls.cosets().gamma();
        assert_eq!(gamma[0], 0);
        assert_eq!(cls.conjugates()[0], cls.rep());
        for i in 0..gamma.len() {
            for e in g.elements() {
                let (h, s) = cls.thread(i, e);
                assert!(cls.centralizer().contains(h));
                assert_eq!(g.mul(gamma[i], e), g.mul(h, gamma[s]));
            }
        }
    }
}

#[test]
fn cochain_retract() {
    for dec in [s3(), d4()] {
        let hh = dec.hochschild().clone();
        let f = *hh.field();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in 0..dec.len() {
            let cx = dec.class(k).complex();
            for n in 0..=3 {
                for _ in 0..8 {
                    let psi = cx.random_element(n, 4, &mut rng);
                    let back = dec.iota_cochain(k, &dec.rho_cochain(k, &psi).unwrap()).unwrap();
                    assert_eq!(back, psi, "ιρ = id, class {k}, degree {n}");
                    let phi = hh.random_class_element(n, k, 6, &mut rng);
                    let lhs = phi.sub(&f, &dec.rho_cochain(k, &dec.iota_cochain(k, &phi).unwrap()).unwrap());
                    let mut rhs = dec.homotopy_cochain(k, &hh.coboundary(&phi).unwrap()).unwrap();
                    if n > 0 {
                        rhs = rhs.add(&f, &hh.coboundary(&dec.homotopy_cochain(k, &phi).unwrap()).unwrap());
                    }
                    assert_eq!(lhs, rhs, "cochain retract, class {k}, degree {n}");
                }
            }
        }
    }
}

#[test]
fn chain_retract() {
    for dec in [s3(), d4()] {
        let hh = dec.hochschild().clone();
        let f = *hh.field();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for k in 0..dec.len() {
            let cx = dec.class(k).complex();
            for m in -4..=-1 {
                for _ in 0..8 {
                    let gamma = cx.random_element(m, 4, &mut rng);
                    let back = dec.rho_chain(k, &dec.iota_chain(k, &gamma).unwrap()).unwrap();
                    assert_eq!(back, gamma, "ρι = id, class {k}, degree {m}");
                    let alpha = hh.random_class_element(m, k, 6, &mut rng);
                    let lhs = alpha.sub(&f, &dec.iota_chain(k, &dec.rho_chain(k, &alpha).unwrap()).unwrap());
                    let mut rhs = boundary(&hh, &dec.homotopy_chain(k, &alpha).unwrap());
                    if m < -1 {
                        rhs = rhs.add(&f, &dec.homotopy_chain(k, &hh.boundary(&alpha).unwrap()).unwrap());
                    }
                    assert_eq!(lhs, rhs, "chain retract, class {k}, degree {m}");
                }
            }
        }
    }
}

#[test]
fn comparison_maps_are_chain_maps() {
    for dec in [s3(), d4()] {
        let hh = dec.hochschild().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for m in -4..=2 {
            for _ in 0..6 {
                let y = dec.random_element(m, 3, &mut rng);
                let a = hh.differential(&dec.iota_hat(&y).unwrap());
                let b = dec.iota_hat(&dec.differential(&y).unwrap()).unwrap();
                assert_eq!(a, b, "ι̂ chain map, degree {m}");
                let x = hh.random_element(m, 8, &mut rng);
                let a = dec.rho_hat(&hh.differential(&x)).unwrap();
                let b = dec.differential(&dec.rho_hat(&x).unwrap()).unwrap();
                assert_eq!(a, b, "ρ̂ chain map, degree {m}");
            }
        }
    }
}

#[test]
fn assembled_retract() {
    for dec in [s3(), d4()] {
        let hh = dec.hochschild().clone();
        let f = *hh.field();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for m in -4..=3 {
            for _ in 0..6 {
                let y = dec.random_element(m, 3, &mut rng);
                assert_eq!(dec.rho_hat(&dec.iota_hat(&y).unwrap()).unwrap(), y, "ρ̂ι̂ = id, degree {m}");
                let x = hh.random_element(m, 8, &mut rng);
                let lhs = x.sub(&f, &dec.iota_hat(&dec.rho_hat(&x).unwrap()).unwrap());
                let rhs = hh.differential(&dec.s_hat(&x).unwrap()).add(&f, &dec.s_hat(&hh.differential(&x)).unwrap());
                assert_eq!(lhs, rhs, "assembled retract, degree {m}");
            }
        }
    }
}

#[test]
fn gluing_in_degrees_zero_and_minus_one() {
    let dec = s3();
    let hh = dec.hochschild().clone();
    let k = 1;
    let cls = dec.class(k);
    let one = TateElement::new(0, crate::SparseVec::unit(0, 1));
    // Cochains: 1_x ↦ Σ x_i and x ↦ 1_x, x_i ↦ 0 otherwise.
    let up = dec.rho_cochain(k, &one).unwrap();
    let expected = hh.from_group_algebra(0, &cls.conjugates().iter().map(|&x| (x, 1)).collect::<Vec<_>>());
    assert_eq!(up, expected);
    for (i, &xi) in cls.conjugates().iter().enumerate() {
        let down = dec.iota_cochain(k, &hh.from_group_algebra(0, &[(xi, 1)])).unwrap();
        assert_eq!(down.is_zero(), i != 0);
        let chain = dec.rho_chain(k, &hh.from_group_algebra(-1, &[(xi, 1)])).unwrap();
        assert_eq!(chain, TateElement::new(-1, crate::SparseVec::unit(0, 1)));
    }
    let one_chain = TateElement::new(-1, crate::SparseVec::unit(0, 1));
    assert_eq!(dec.iota_chain(k, &one_chain).unwrap(), hh.from_group_algebra(-1, &[(cls.rep(), 1)]));
}

#[test]
fn class_mismatch_is_refused() {
    let dec = s3();
    let hh = dec.hochschild();
    let phi = hh.basis(1, &[1], 0);
    let k = hh.class_of_index(1, phi.coeffs.leading().unwrap().0);
    assert!(dec.iota_cochain((k + 1) % dec.len(), &phi).is_err());
    assert!(dec.iota_cochain(k, &phi).is_ok());
}

#[test]
fn global_iso_is_an_isomorphism_of_complexes() {
    for dec in [s3(), d4()] {
        let hh = dec.hochschild().clone();
        let model = ConjugationModel::new(hh.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        for m in -4..=3 {
            for _ in 0..8 {
                let x = hh.random_element(m, 8, &mut rng);
                assert_eq!(model.rho_inverse(&model.rho(&x)), x);
                assert_eq!(model.rho(&model.rho_inverse(&x)), x);
                assert_eq!(model.rho(&hh.differential(&x)), model.differential(&model.rho(&x)), "degree {m}");
            }
        }
        let unit = hh.unit();
        assert_eq!(model.rho(&unit), unit);
    }
}

#[test]
fn b_tilde_examples() {
    let dec = s3();
    let empty = TateElement::new(-1, crate::SparseVec::unit(0, 1));
    assert!(dec.b_tilde(0, &empty).unwrap().is_zero());
    let k = 1;
    let cls = dec.class(k);
    let x_local = cls.centralizer().local_index(cls.rep());
    assert_eq!(dec.b_tilde(k, &empty).unwrap(), cls.complex().basis(-2, &[x_local]));
}

#[test]
fn transported_delta_represents_delta_hat() {
    for dec in [s3(), d4()] {
        let hh = dec.hochschild().clone();
        for k in 0..dec.len() {
            let cx = dec.class(k).complex();
            for n in -4..=4 {
                if cx.dim(n) == 0 {
                    continue;
                }
                for rep in cx.cohomology(n).unwrap().representatives() {
                    let c = TateElement::new(n, rep.clone());
                    let lifted = dec.iota_hat(&DecomposedElement::single(dec.len(), k, c.clone())).unwrap();
                    let back = dec.rho_hat(&hh.delta_hat(&lifted)).unwrap();
                    let local = dec.delta_transported(k, &c).unwrap();
                    for (j, part) in back.parts.iter().enumerate() {
                        let cj = dec.class(j).complex();
                        if cj.dim(n - 1) == 0 {
                            continue;
                        }
                        let got = cj.project(part).unwrap();
                        let want = if j == k { cj.project(&local).unwrap() } else { vec![0; got.len()] };
                        assert_eq!(got, want, "class {k} → {j}, degree {n}");
                    }
                }
            }
        }
    }
}
