//! Property tests of the public API: exact linear algebra, group
//! construction, and the chain-level structure on small groups.

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tatebv_core::group::{preset_group, Preset};
use tatebv_core::linalg::{kernel_basis, rank, solve};
use tatebv_core::{
    ClassDecomposition, ConjugacyData, DecomposedRing, FieldSpec, Group, Hochschild, Scalar, SparseMatrix, SparseVec,
    TateElement,
};

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7, 11])
}

fn matrix(p: u32) -> impl Strategy<Value = (FieldSpec, SparseMatrix, usize)> {
    (1usize..7, 1usize..7).prop_flat_map(move |(rows, cols)| {
        prop::collection::vec(prop::collection::vec(0i64..p as i64, cols), rows).prop_map(move |dense| {
            let f = FieldSpec::new(p).unwrap();
            (f, SparseMatrix::from_dense_rows(&f, &dense), cols)
        })
    })
}

fn small_group() -> impl Strategy<Value = (Preset, usize, u32)> {
    prop::sample::select(vec![
        (Preset::Cyclic, 2, 2),
        (Preset::Cyclic, 3, 3),
        (Preset::Cyclic, 4, 2),
        (Preset::KleinFour, 0, 2),
        (Preset::Symmetric, 3, 3),
        (Preset::Symmetric, 3, 2),
        (Preset::Dihedral, 4, 2),
    ])
}

fn hochschild(preset: Preset, param: usize, p: u32) -> Arc<Hochschild> {
    Arc::new(Hochschild::new(Arc::new(preset_group(preset, param).unwrap()), FieldSpec::new(p).unwrap()))
}

fn random(hh: &Hochschild, m: i32, rng: &mut ChaCha8Rng) -> TateElement {
    if hh.dim(m) == 0 {
        TateElement::zero(m)
    } else {
        hh.random_element(m, 3, rng)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_operations_are_exact(p in prime(), a in 0u32..11, b in 0u32..11) {
        let f = FieldSpec::new(p).unwrap();
        let (a, b) = (a % p, b % p);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            prop_assert_eq!(f.pow(a, p - 1), 1);
        }
        prop_assert_eq!(f.from_i64(f.centered(a)), a);
    }

    #[test]
    fn kernel_and_rank_are_complementary((f, m, cols) in prime().prop_flat_map(matrix)) {
        let kernel = kernel_basis(&f, &m);
        prop_assert_eq!(rank(&f, &m) + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.apply(&f, v).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_finds_preimages((f, m, cols) in prime().prop_flat_map(matrix), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<Scalar> = (0..cols).map(|_| rand::Rng::gen_range(&mut rng, 0..f.p())).collect();
        let b = m.apply(&f, &SparseVec::from_dense(&f, &x)).unwrap();
        let y = solve(&f, &m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.apply(&f, &y).unwrap(), b);
    }

    #[test]
    fn permutation_groups_satisfy_the_class_equation(
        gens in prop::collection::vec(Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(), 1..3)
    ) {
        let g = Arc::new(Group::from_permutations(&gens, 100).unwrap());
        prop_assert_eq!(24 % g.order(), 0);
        for a in g.elements() {
            prop_assert_eq!(g.mul(a, g.inv(a)), g.identity());
            prop_assert_eq!(g.mul(g.identity(), a), a);
        }
        let conj = ConjugacyData::new(g.clone());
        let sizes: usize = conj.classes().iter().map(Vec::len).sum();
        prop_assert_eq!(sizes, g.order());
        for (k, class) in conj.classes().iter().enumerate() {
            prop_assert_eq!(conj.centralizer(k).order() * class.len(), g.order());
            prop_assert_eq!(conj.classes()[conj.inverse_class(k)].len(), class.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn chain_level_identities((preset, param, p) in small_group(), seed in any::<u64>(), m in -3i32..=2, n in -3i32..=2) {
        let hh = hochschild(preset, param, p);
        let f = *hh.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random(&hh, m, &mut rng), random(&hh, n, &mut rng));
        // ∂′∂′ = 0, Δ̂Δ̂ = 0, and Δ̂ anticommutes with ∂′.
        prop_assert!(hh.differential(&hh.differential(&a)).is_zero());
        prop_assert!(hh.delta_hat(&hh.delta_hat(&a)).is_zero());
        let anti = hh.differential(&hh.delta_hat(&a)).add(&f, &hh.delta_hat(&hh.differential(&a)));
        prop_assert!(anti.is_zero());
        // Leibniz: ∂′(ab) = ∂′a·b + (-1)^{|a|} a·∂′b.
        let lhs = hh.differential(&hh.cup(&a, &b));
        let rhs = hh.cup(&hh.differential(&a), &b).add_scaled(&f, &hh.cup(&a, &hh.differential(&b)), f.sign(m as i64));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(hh.cup(&a, &b).degree, m + n);
    }

    #[test]
    fn pairing_is_compatible_with_the_differential((preset, param, p) in small_group(), seed in any::<u64>(), m in -3i32..=2) {
        let hh = hochschild(preset, param, p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random(&hh, m, &mut rng);
        let b = random(&hh, -m - 1, &mut rng);
        // Cyclicity for m1: ⟨∂′x, y⟩ = (-1)^{|x|+1} ⟨x, ∂′y⟩.
        let x = random(&hh, m - 1, &mut rng);
        let left = hh.pairing(&hh.differential(&x), &b);
        let right = hh.pairing(&x, &hh.differential(&b));
        let f = *hh.field();
        prop_assert_eq!(left, f.mul(f.sign(m as i64), right));
        prop_assert_eq!(hh.pairing(&a, &TateElement::zero(-m - 1)), 0);
    }

    #[test]
    fn comparison_maps_split_the_class_summand((preset, param, p) in small_group(), seed in any::<u64>(), n in -3i32..=2) {
        let hh = hochschild(preset, param, p);
        let dec = ClassDecomposition::new(hh.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..dec.len() {
            let cx = dec.class(k).complex();
            let x = cx.random_element(n, 3, &mut rng);
            // On cochains ι^x restricts to the centralizer and ρ^x induces back;
            // on chains ι_x includes and ρ_x retracts.
            let back = if n >= 0 {
                dec.iota_cochain(k, &dec.rho_cochain(k, &x).unwrap()).unwrap()
            } else {
                dec.rho_chain(k, &dec.iota_chain(k, &x).unwrap()).unwrap()
            };
            prop_assert_eq!(back, x);
        }
    }

    #[test]
    fn cohomology_ring_is_graded_commutative((preset, param, p) in small_group(), seed in any::<u64>(), m in -2i32..=2, n in -2i32..=2) {
        let hh = hochschild(preset, param, p);
        let ring = DecomposedRing::new(Arc::new(ClassDecomposition::new(hh)));
        let f = *ring.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut class = |d: i32| {
            let dim: usize = ring.class_dims(d).unwrap().iter().sum();
            let coords: Vec<Scalar> = (0..dim).map(|_| rand::Rng::gen_range(&mut rng, 0..f.p())).collect();
            ring.from_coordinates(d, &coords).unwrap()
        };
        let (a, b) = (class(m), class(n));
        let ab = ring.cup(&a, &b).unwrap();
        let ba = ring.scale(&ring.cup(&b, &a).unwrap(), f.sign((m * n) as i64));
        prop_assert!(ring.same_class(&ab, &ba).unwrap());
        prop_assert!(ring.same_class(&ring.cup(&ring.unit(), &a).unwrap(), &a).unwrap());
    }
}
