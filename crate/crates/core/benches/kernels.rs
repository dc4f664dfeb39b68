//! Sequential vs chunked-parallel twofold kernels, with the plain dotted
//! kernel of the same family as the reference line.
//!
//! Run with `cargo bench -p twofold`; build with `--no-default-features`
//! to see the parallel driver collapse to the sequential one.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use twofold::batch::{apply, par_apply, Kernel};
use twofold::bench::{BenchData, SizeClass};
use twofold::Scalar;

const KERNELS: [Kernel; 4] = [Kernel::VtAdd2, Kernel::VtMul2, Kernel::VtDiv2, Kernel::VtSqrt1];

fn family<T: Scalar>(c: &mut Criterion, format: &str) {
    for size in [SizeClass::Medium, SizeClass::Large] {
        let n = size.elements();
        let mut data = BenchData::<T>::generate(n, 0x7f01d);
        for kernel in KERNELS {
            let mut group = c.benchmark_group(format!("{kernel}/{format}"));
            group.throughput(Throughput::Elements(n as u64));
            let baseline = kernel.baseline();
            group.bench_function(BenchmarkId::new(format!("dotted {baseline}"), size), |b| {
                b.iter(|| {
                    let (inputs, out) = data.split(baseline);
                    apply(baseline, inputs, out).unwrap();
                    black_box(&mut data);
                })
            });
            group.bench_function(BenchmarkId::new("sequential", size), |b| {
                b.iter(|| {
                    let (inputs, out) = data.split(kernel);
                    apply(kernel, inputs, out).unwrap();
                    black_box(&mut data);
                })
            });
            group.bench_function(BenchmarkId::new("parallel", size), |b| {
                b.iter(|| {
                    let (inputs, out) = data.split(kernel);
                    par_apply(kernel, inputs, out).unwrap();
                    black_box(&mut data);
                })
            });
            group.finish();
        }
    }
}

fn kernels(c: &mut Criterion) {
    family::<f32>(c, "f32");
    family::<f64>(c, "f64");
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = kernels
}
criterion_main!(benches);
