//! The demo estimates against the exact error of the printed values.

use twofold::demos::{gauss_eliminate, gauss_system, quadratic_solve, sum100h_seconds, sum100h_steps, GaussCase};
use twofold::{Scalar, Twofold};
use twofold_oracle::{rational_f64, rational_to_f64, sqrt_rational, BigRational};

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Exact error of `z.value` against `truth`, beside the estimate.
fn exact_error<T: Scalar>(z: Twofold<T>, truth: &BigRational) -> f64 {
    rational_to_f64(&(truth - rational_f64(z.value.to_f64())))
}

fn assert_close(label: &str, estimate: f64, exact: f64, rel: f64) {
    assert!(
        (estimate - exact).abs() <= rel * exact.abs(),
        "{label}: estimate {estimate:e}, exact error {exact:e}"
    );
}

#[test]
fn clock_estimate_matches_true_drift() {
    for hours in [1, 100] {
        // Against the decimal clock: n steps of exactly 1/10 s.
        let truth = BigRational::new(sum100h_steps(hours).into(), 10.into());
        let (_, clock) = sum100h_seconds::<f64>(hours);
        assert_close(&format!("f64 {hours}h"), clock.error, exact_error(clock, &truth), 0.1);
        let (_, clock) = sum100h_seconds::<f32>(hours);
        assert_close(&format!("f32 {hours}h"), clock.error as f64, exact_error(clock, &truth), 0.1);
    }
}

#[test]
fn float_clock_estimate_signals_the_loss_at_1000h() {
    let truth = BigRational::new(sum100h_steps(1000).into(), 10.into());
    let (_, clock) = sum100h_seconds::<f32>(1000);
    let exact = exact_error(clock, &truth);
    // The value is off by ~40%; the estimate is right to within a quarter.
    assert!(exact > 0.4 * 3_600_000.0 * 0.9);
    assert_close("f32 1000h", clock.error as f64, exact, 0.25);
}

/// Exact solution of the stored Jordan system (upper triangular, so back
/// substitution alone solves it).
fn gauss_truth<T: Scalar>(case: GaussCase) -> Vec<BigRational> {
    let (a, f) = gauss_system::<T>(case);
    let lambda = rational_f64(a[0][0].value.to_f64()) + rational_f64(a[0][0].error.to_f64());
    let fv: Vec<BigRational> = f.iter().map(|z| rational_f64(z.value.to_f64())).collect();
    let x2 = &fv[2] / &lambda;
    let x1 = (&fv[1] - &x2) / &lambda;
    let x0 = (&fv[0] - &x1) / &lambda;
    vec![x0, x1, x2]
}

#[test]
fn gauss_double_estimates_track_exact_errors() {
    for case in [GaussCase::Well3, GaussCase::Ill3] {
        let (a, f) = gauss_system::<f64>(case);
        let x = gauss_eliminate(a, f);
        for (i, (z, truth)) in x.iter().zip(gauss_truth::<f64>(case)).enumerate() {
            let exact = exact_error(*z, &truth);
            assert_close(&format!("{} x[{i}]", case.name()), z.error, exact, 0.1);
        }
    }
}

#[test]
fn gauss_float_ill3_estimate_has_right_size() {
    let (a, f) = gauss_system::<f32>(GaussCase::Ill3);
    let x = gauss_eliminate(a, f);
    let truth = gauss_truth::<f32>(GaussCase::Ill3);
    let exact = exact_error(x[0], &truth[0]);
    assert_close("float ill3 x[0]", x[0].error as f64, exact, 0.5);
}

#[test]
fn quadratic_double_estimates_are_exact_errors() {
    let (a, b, c) = (Twofold::from(1.0), Twofold::from(2.0), Twofold::<f64>::from_decimal(1e-8));
    let (d, x0, x1) = quadratic_solve(a, b, c);
    let true_d = sqrt_rational(&(int(4) - int(4) * rational_f64(c.value)), 300);
    let true_x0 = (int(-2) - &true_d) / int(2);
    let true_x1 = (int(-2) + &true_d) / int(2);
    assert_close("d", d.error, exact_error(d, &true_d), 0.01);
    assert_close("x0", x0.error, exact_error(x0, &true_x0), 0.01);
    assert_close("x1", x1.error, exact_error(x1, &true_x1), 0.01);
}
