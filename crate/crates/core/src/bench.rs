//! Throughput harness: array kernels against their dotted baselines.
//!
//! Each cell is timed as the best of several repetitions (the fastest run
//! filters out interference), with the inner iteration count grown until a
//! single repetition takes at least [`BenchConfig::min_time`]. Throughput is
//! reported in millions of outputs per second; the ratio is
//! `baseline throughput / kernel throughput` for the same format and size,
//! so 2.0 means "half as fast as plain arithmetic".

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::batch::{BatchInputs, BatchOutput, Kernel, OpFamily, Shape};
use crate::fp_core::{FloatFormat, Scalar};

/// Array-size regime: fits L1, fits the last-level cache, or streams from
/// memory on typical hardware.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SizeClass {
    Small,
    Medium,
    Large,
}

impl SizeClass {
    pub const ALL: [SizeClass; 3] = [SizeClass::Small, SizeClass::Medium, SizeClass::Large];

    pub fn elements(self) -> usize {
        match self {
            SizeClass::Small => 100,
            SizeClass::Medium => 10_000,
            SizeClass::Large => 1_000_000,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SizeClass::Small => "small",
            SizeClass::Medium => "medium",
            SizeClass::Large => "large",
        }
    }
}

impl std::fmt::Display for SizeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SizeClass {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SizeClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| BenchError::UnknownSize(s.to_string()))
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BenchError {
    #[error("at least 3 repetitions are required, got {0}")]
    TooFewRepetitions(usize),
    #[error("unknown size class `{0}` (expected small, medium or large)")]
    UnknownSize(String),
}

/// One requested measurement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BenchCell {
    pub kernel: Kernel,
    pub format: FloatFormat,
    pub size: SizeClass,
}

impl BenchCell {
    /// The cross product of kernels, formats and sizes, sizes innermost.
    pub fn grid(kernels: &[Kernel], formats: &[FloatFormat], sizes: &[SizeClass]) -> Vec<BenchCell> {
        let mut cells = Vec::new();
        for &format in formats {
            for &kernel in kernels {
                for &size in sizes {
                    cells.push(BenchCell { kernel, format, size });
                }
            }
        }
        cells
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    /// Timed repetitions per cell; the best one is kept. At least 3.
    pub repetitions: usize,
    /// Minimum duration of one repetition.
    pub min_time: Duration,
    /// Seed for the input data.
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { repetitions: 5, min_time: Duration::from_millis(10), seed: 0x7f01d }
    }
}

/// One measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub op: Kernel,
    pub shape: Shape,
    pub format: FloatFormat,
    pub size_class: SizeClass,
    pub elements: usize,
    /// Millions of outputs per second, best repetition.
    pub mega_ops: f64,
    /// Baseline throughput over this kernel's throughput.
    pub ratio_vs_dotted: f64,
}

pub const CSV_HEADER: &str = "op,shape,format,size_class,elements,mega_ops,ratio_vs_dotted";

/// Fixed-seed benchmark operands: magnitudes uniform in [1, 2) with random
/// signs, error planes uniform within half an ulp (so they are also valid
/// coupled inputs). Square-root kernels read the absolute values.
///
/// All planes, outputs included, live in one buffer at staggered offsets.
/// Separately allocated large planes tend to share their address modulo
/// 4 KiB, and loads that alias a pending store at that granularity stall;
/// the stagger keeps every kernel, baseline or not, clear of that.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchData<T> {
    buf: Vec<T>,
    len: usize,
    stride: usize,
}

const X_VALUE: usize = 0;
const X_ERROR: usize = 1;
const Y_VALUE: usize = 2;
const Y_ERROR: usize = 3;
const ABS_VALUE: usize = 4;
const ABS_ERROR: usize = 5;
const OUT_VALUE: usize = 6;
const PLANES: usize = 8;

impl<T: Scalar> BenchData<T> {
    pub fn generate(len: usize, seed: u64) -> Self {
        // Round to a 4 KiB multiple for any element size, then shift each
        // plane by another 32 elements.
        let stride = len.div_ceil(1024) * 1024 + 32;
        let mut data = BenchData { buf: vec![T::zero(); stride * PLANES], len, stride };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (value, error) in [(X_VALUE, X_ERROR), (Y_VALUE, Y_ERROR)] {
            for i in 0..len {
                let mag = T::from_f64(rng.random_range(1.0..2.0));
                let v = if rng.random::<bool>() { -mag } else { mag };
                // ulp is a power of two, so the product is exact.
                let e = T::from_f64(rng.random_range(-0.5..0.5)) * v.ulp();
                data.buf[value * stride + i] = v;
                data.buf[error * stride + i] = e;
            }
        }
        for i in 0..len {
            let (v, e) = (data.x_value()[i], data.x_error()[i]);
            let (v, e) = if v < T::zero() { (-v, -e) } else { (v, e) };
            data.buf[ABS_VALUE * stride + i] = v;
            data.buf[ABS_ERROR * stride + i] = e;
        }
        data
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn plane(&self, k: usize) -> &[T] {
        &self.buf[k * self.stride..k * self.stride + self.len]
    }

    pub fn x_value(&self) -> &[T] {
        self.plane(X_VALUE)
    }

    pub fn x_error(&self) -> &[T] {
        self.plane(X_ERROR)
    }

    pub fn y_value(&self) -> &[T] {
        self.plane(Y_VALUE)
    }

    pub fn y_error(&self) -> &[T] {
        self.plane(Y_ERROR)
    }

    /// `|x|`, with the error sign adjusted to match.
    pub fn abs_value(&self) -> &[T] {
        self.plane(ABS_VALUE)
    }

    pub fn abs_error(&self) -> &[T] {
        self.plane(ABS_ERROR)
    }

    /// The planes `kernel` reads, and the output planes.
    pub fn split(&mut self, kernel: Kernel) -> (BatchInputs<'_, T>, BatchOutput<'_, T>) {
        let (stride, len) = (self.stride, self.len);
        let (ins, outs) = self.buf.split_at_mut(OUT_VALUE * stride);
        let ins: &[T] = ins;
        let plane = |k: usize| &ins[k * stride..k * stride + len];
        let (xv, xe) = if kernel.family() == OpFamily::Sqrt {
            (plane(ABS_VALUE), plane(ABS_ERROR))
        } else {
            (plane(X_VALUE), plane(X_ERROR))
        };
        let inputs = BatchInputs { x_value: xv, x_error: xe, y_value: plane(Y_VALUE), y_error: plane(Y_ERROR) };
        let (value, error) = outs.split_at_mut(stride);
        (inputs, BatchOutput { value: &mut value[..len], error: &mut error[..len] })
    }
}

/// Measures every cell of `plan`, plus the copy kernel and each cell's
/// dotted baseline for the same format and size. Records come grouped by
/// (format, size) in order of first appearance, baselines first.
pub fn run_bench(plan: &[BenchCell], config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    if config.repetitions < 3 {
        return Err(BenchError::TooFewRepetitions(config.repetitions));
    }
    let mut groups: Vec<(FloatFormat, SizeClass, Vec<Kernel>)> = Vec::new();
    for cell in plan {
        let pos = match groups.iter().position(|g| g.0 == cell.format && g.1 == cell.size) {
            Some(pos) => pos,
            None => {
                groups.push((cell.format, cell.size, Vec::new()));
                groups.len() - 1
            }
        };
        groups[pos].2.push(cell.kernel);
    }

    let mut records = Vec::new();
    for (format, size, requested) in groups {
        let mut kernels = vec![Kernel::VMem];
        for k in requested.iter().map(|k| k.baseline()).chain(requested.iter().copied()) {
            if !kernels.contains(&k) {
                kernels.push(k);
            }
        }
        // Baselines first so every ratio has its denominator.
        kernels.sort_by_key(|k| !k.is_baseline());
        let rates = match format {
            FloatFormat::Binary32 => measure_group::<f32>(&kernels, size, config),
            FloatFormat::Binary64 => measure_group::<f64>(&kernels, size, config),
        };
        for (&kernel, &mega_ops) in kernels.iter().zip(&rates) {
            let base = kernels.iter().position(|&k| k == kernel.baseline()).expect("baseline measured");
            records.push(BenchRecord {
                op: kernel,
                shape: kernel.shape(),
                format,
                size_class: size,
                elements: size.elements(),
                mega_ops,
                ratio_vs_dotted: rates[base] / mega_ops,
            });
        }
    }
    Ok(records)
}

fn measure_group<T: Scalar>(kernels: &[Kernel], size: SizeClass, config: &BenchConfig) -> Vec<f64> {
    let n = size.elements();
    let mut data = BenchData::<T>::generate(n, config.seed);
    kernels
        .iter()
        .map(|&kernel| {
            let entry = kernel.entry::<T>();
            let mut run = || {
                let (inputs, out) = data.split(kernel);
                entry(inputs, out).expect("bench planes have equal lengths");
                std::hint::black_box(&mut data);
            };
            best_rate(&mut run, n, config)
        })
        .collect()
}

/// Best throughput over the repetitions, in millions of elements per second.
fn best_rate(run: &mut impl FnMut(), elements: usize, config: &BenchConfig) -> f64 {
    // Warm caches and grow the iteration count until one repetition is long
    // enough for the timer.
    let mut iters: u64 = 1;
    loop {
        let t = time(run, iters);
        if t >= config.min_time {
            break;
        }
        let grow = if t.is_zero() {
            16.0
        } else {
            (config.min_time.as_secs_f64() / t.as_secs_f64() * 1.2).clamp(2.0, 16.0)
        };
        iters = (iters as f64 * grow).ceil() as u64;
    }
    (0..config.repetitions)
        .map(|_| {
            let t = time(run, iters);
            (elements as f64 * iters as f64) / t.as_secs_f64() / 1e6
        })
        .fold(0.0, f64::max)
}

fn time(run: &mut impl FnMut(), iters: u64) -> Duration {
    let start = Instant::now();
    for _ in 0..iters {
        run();
    }
    start.elapsed()
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:.3},{:.4}",
            r.op,
            r.shape,
            r.format.short_name(),
            r.size_class,
            r.elements,
            r.mega_ops,
            r.ratio_vs_dotted
        );
    }
    out
}

/// Fixed-width table for terminals.
pub fn to_table(records: &[BenchRecord]) -> String {
    let mut out = format!(
        "{:<8} {:<5} {:<6} {:<6} {:>9} {:>12} {:>8}\n",
        "op", "shape", "format", "size", "elements", "mega-ops", "ratio"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:<8} {:<5} {:<6} {:<6} {:>9} {:>12.2} {:>8.2}",
            r.op.name(),
            r.shape.name(),
            r.format.short_name(),
            r.size_class.name(),
            r.elements,
            r.mega_ops,
            r.ratio_vs_dotted
        );
    }
    out
}
