//! Data-parallel kernels, benched under both execution modes: run
//! `cargo bench` for the rayon path and `cargo bench --no-default-features`
//! for the sequential fallback; the mode is part of each bench id so the
//! reports line up side by side.

use criterion::{criterion_group, criterion_main, Criterion};

use groth::combinat;
use groth::genfun::GTable;
use groth::localization::PhiMatrix;
use groth::symfun::{self, FactParam};
use groth::weyl::{GroupElt, StrictPartition, WeylType};

fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}

fn bench_kernels(c: &mut Criterion) {
    let m = mode();

    c.bench_function(&format!("gq_orbit_n4_lam21/{m}"), |b| {
        let lam = StrictPartition::new(vec![2, 1]);
        b.iter(|| symfun::gq(std::hint::black_box(&lam), 4, FactParam::Std).unwrap())
    });

    c.bench_function(&format!("first_kind_table_c3/{m}"), |b| {
        b.iter(|| GTable::first_kind(WeylType::c(3)).unwrap())
    });

    c.bench_function(&format!("eyd_state_sum_c3_w0/{m}"), |b| {
        let w0 = GroupElt::longest(WeylType::c(3));
        b.iter(|| combinat::groth_via_eyd(std::hint::black_box(&w0)).unwrap())
    });

    c.bench_function(&format!("phi_matrix_c2/{m}"), |b| {
        b.iter(|| PhiMatrix::build(WeylType::c(2)).unwrap())
    });

    c.bench_function(&format!("stanley_compat_c2_w0/{m}"), |b| {
        let typ = WeylType::c(2);
        let w0 = GroupElt::longest(typ);
        let cap = combinat::stanley_word_cap(typ);
        b.iter(|| combinat::stanley_via_compat(std::hint::black_box(&w0), cap).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_kernels
}
criterion_main!(benches);
