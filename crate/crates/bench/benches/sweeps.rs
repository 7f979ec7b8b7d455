use criterion::{criterion_group, criterion_main, Criterion};
use paraverify_core::parastat::ParaSystem;
use paraverify_core::{GlScheme, OspAlgebra};

fn bench_gl_closed_form(c: &mut Criterion) {
    let gl = GlScheme::build(1, 1, 1, 1).unwrap();
    c.bench_function("gl(1,1|1,1) closed-form sweep", |b| {
        b.iter(|| {
            let report = gl.check_closed_form(10);
            assert!(report.passed());
        })
    });
}

fn bench_osp_closed_form(c: &mut Criterion) {
    let alg = OspAlgebra::build(1, 1, 1).unwrap();
    c.bench_function("osp(3,2|2,0) closed-form sweep (2401 quadruples)", |b| {
        b.iter(|| {
            let report = alg.check_closed_form(10);
            assert!(report.passed());
        })
    });
}

fn bench_dimension_rank(c: &mut Criterion) {
    let alg = OspAlgebra::build(1, 1, 1).unwrap();
    c.bench_function("osp(3,2|2,0) rank-oracle dimension", |b| {
        b.iter(|| assert_eq!(alg.dimension(), 23))
    });
}

fn bench_closure(c: &mut Criterion) {
    let alg = OspAlgebra::build(1, 1, 1).unwrap();
    c.bench_function("osp(3,2|2,0) short-root closure", |b| {
        b.iter(|| {
            let result = ParaSystem::new(&alg).closure_dimension();
            assert_eq!(result.rank, 23);
        })
    });
}

criterion_group!(
    benches,
    bench_gl_closed_form,
    bench_osp_closed_form,
    bench_dimension_rank,
    bench_closure
);
criterion_main!(benches);
