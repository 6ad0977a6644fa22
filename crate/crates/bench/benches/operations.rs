use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tatebv_bench::{hochschild, ring, FIXTURES};
use tatebv_core::ClassDecomposition;

fn cohomology(c: &mut Criterion) {
    let mut group = c.benchmark_group("cohomology");
    group.sample_size(10);
    for (name, preset, param, p) in FIXTURES {
        group.bench_function(BenchmarkId::new("direct, degree 2", name), |b| {
            b.iter(|| hochschild(preset, param, p).cohomology(black_box(2)).unwrap().dim())
        });
        group.bench_function(BenchmarkId::new("decomposition, degrees -3..2", name), |b| {
            b.iter(|| {
                let dec = ClassDecomposition::new(hochschild(preset, param, p));
                (-3..=2).map(|n| dec.dim(n).unwrap()).sum::<usize>()
            })
        });
    }
    group.finish();
}

fn chain_level(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain level");
    for (name, preset, param, p) in FIXTURES {
        let hh = hochschild(preset, param, p);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let (a, b, x) = (hh.random_element(1, 4, &mut rng), hh.random_element(-2, 4, &mut rng), hh.random_element(-2, 4, &mut rng));
        // Dense enough in degree 2 that m3 on (2, -2, 2) has work to do.
        let phi = hh.random_element(2, 40, &mut rng);
        group.bench_function(BenchmarkId::new("cup 1 x -2", name), |bench| bench.iter(|| hh.cup(black_box(&a), black_box(&b))));
        group.bench_function(BenchmarkId::new("m3 2 x -2 x 2", name), |bench| bench.iter(|| hh.m3(&phi, black_box(&b), &phi)));
        group.bench_function(BenchmarkId::new("connes B, degree -2", name), |bench| bench.iter(|| hh.delta_hat(black_box(&x))));
        group.bench_function(BenchmarkId::new("differential, degree -2", name), |bench| bench.iter(|| hh.differential(black_box(&x))));
    }
    group.finish();
}

fn cohomology_ring(c: &mut Criterion) {
    let mut group = c.benchmark_group("cohomology ring");
    group.sample_size(20);
    for (name, preset, param, p) in FIXTURES {
        let r = ring(hochschild(preset, param, p));
        let a = r.basis(1).unwrap().last().unwrap().1.clone();
        let b = r.basis(-2).unwrap().last().unwrap().1.clone();
        group.bench_function(BenchmarkId::new("cup 1 x -2", name), |bench| bench.iter(|| r.cup(&a, &b).unwrap()));
        group.bench_function(BenchmarkId::new("bracket 1 x -2", name), |bench| bench.iter(|| r.bracket(&a, &b).unwrap()));
        let product = r.cup(&a, &b).unwrap();
        group.bench_function(BenchmarkId::new("coordinates", name), |bench| bench.iter(|| r.coordinates(&product).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, cohomology, chain_level, cohomology_ring);
criterion_main!(benches);
