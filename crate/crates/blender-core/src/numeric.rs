//! Floating-point sampling utilities.
//!
//! Everything here is advisory: sampling backs up the exact kernels as an
//! independent oracle, estimates the convexification bound, and probes
//! forms in three or more variables where no exact kernel is in scope.
//! No membership verdict is ever produced from floating point alone.

use crate::forms::{hessian_biform, Form, QForm};
use crate::rat::{rat_i, Rat};
use crate::scalar::Scalar;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Result of a randomized Hessian positivity probe.
#[derive(Clone, Debug, PartialEq)]
pub enum SampleCheck {
    NoViolation,
    /// A pair of unit vectors with a numerically negative Hessian value.
    Witness(Vec<f64>, Vec<f64>),
}

/// Samples `Hes(p; u, v)` at `trials` pairs of unit vectors; reports a
/// witness if any value drops below `-1e-9`.  Advisory only.
pub fn hessian_sample_check<K: Scalar>(p: &Form<K>, trials: u32, seed: u64) -> SampleCheck {
    let hes = hessian_biform(p);
    let n = p.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-3 {
                return v.iter().map(|x| x / norm).collect();
            }
        }
    };
    for _ in 0..trials {
        let u = unit(&mut rng);
        let v = unit(&mut rng);
        if hes.evaluate_f64(&u, &v) < -1e-9 {
            return SampleCheck::Witness(u, v);
        }
    }
    SampleCheck::NoViolation
}

/// Dense circle sampling of a binary form: the minimum value over
/// `npoints` directions, for cross-checking the exact psd kernel.
pub fn circle_min<K: Scalar>(p: &Form<K>, npoints: u32) -> f64 {
    let mut min = f64::INFINITY;
    for k in 0..npoints {
        let t = std::f64::consts::PI * (k as f64) / (npoints as f64);
        let v = p.evaluate_f64(&[t.cos(), t.sin()]);
        if v < min {
            min = v;
        }
    }
    min
}

/// The sampled `(T² + U)/2` estimate for the convexifying exponent of a
/// pd binary form: `T` bounds `|∇p|/p` and `U` bounds the Hessian spectral
/// radius over `p`, both over the unit circle (4096-point grid plus local
/// refinement).  An estimate, not a certificate.
pub fn convexify_estimate(p: &QForm) -> f64 {
    let px = p.derivative(0);
    let py = p.derivative(1);
    let pxx = px.derivative(0);
    let pxy = px.derivative(1);
    let pyy = py.derivative(1);
    let ratio_t = |theta: f64| -> f64 {
        let pt = [theta.cos(), theta.sin()];
        let val = p.evaluate_f64(&pt);
        let gx = px.evaluate_f64(&pt);
        let gy = py.evaluate_f64(&pt);
        (gx * gx + gy * gy).sqrt() / val
    };
    let ratio_u = |theta: f64| -> f64 {
        let pt = [theta.cos(), theta.sin()];
        let val = p.evaluate_f64(&pt);
        let (hxx, hxy, hyy) = (
            pxx.evaluate_f64(&pt),
            pxy.evaluate_f64(&pt),
            pyy.evaluate_f64(&pt),
        );
        // Spectral radius of the 2x2 symmetric Hessian.
        let mean = 0.5 * (hxx + hyy);
        let rad = (0.25 * (hxx - hyy) * (hxx - hyy) + hxy * hxy).sqrt();
        (mean + rad).abs().max((mean - rad).abs()) / val
    };
    let t = grid_max(&ratio_t, 4096, 3);
    let u = grid_max(&ratio_u, 4096, 3);
    0.5 * (t * t + u)
}

/// Maximum of a π-periodic function over a grid with local refinement.
fn grid_max(f: &dyn Fn(f64) -> f64, npoints: u32, rounds: u32) -> f64 {
    let pi = std::f64::consts::PI;
    let mut best_x = 0.0;
    let mut best = f64::NEG_INFINITY;
    for k in 0..npoints {
        let x = pi * (k as f64) / (npoints as f64);
        let v = f(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let mut width = pi / (npoints as f64);
    for _ in 0..rounds {
        for k in 0..64 {
            let x = best_x - width + 2.0 * width * (k as f64) / 64.0;
            let v = f(x);
            if v > best {
                best = v;
                best_x = x;
            }
        }
        width /= 32.0;
    }
    best
}

/// The boundary parameterisation `ψ(λ)` of the convex-sextic section:
/// `(A, B) = (ψ(λ), ψ(−λ))` for λ ∈ [−1/2, 1/2].
pub fn psi_curve(l: f64) -> f64 {
    let num = (1.0 - l).powf(2.0 / 3.0) * (1.0 + l).powf(1.0 / 3.0) * (1.0 + 2.0 * l);
    let den = (1.0 + 5.0 * l + 10.0 * l * l).powf(2.0 / 3.0)
        * (1.0 - 5.0 * l + 10.0 * l * l).powf(1.0 / 3.0);
    num / den
}

/// Grid-plus-refinement maximum of ψ over [−1/2, 1/2].
pub fn psi_curve_max() -> (f64, f64) {
    let mut best_x = 0.0;
    let mut best = f64::NEG_INFINITY;
    let n = 4096;
    for k in 0..=n {
        let x = -0.5 + (k as f64) / (n as f64);
        let v = psi_curve(x);
        if v > best {
            best = v;
            best_x = x;
        }
    }
    let mut width = 1.0 / (n as f64);
    for _ in 0..4 {
        for k in 0..128 {
            let x = best_x - width + 2.0 * width * (k as f64) / 128.0;
            let v = psi_curve(x);
            if v > best {
                best = v;
                best_x = x;
            }
        }
        width /= 32.0;
    }
    (best_x, best)
}

/// Closed form of the ψ maximum: `5^(−5/3)·(1565 + 496·√10)^(1/3)`,
/// attained at `λ = (2√10 − 5)/15`.
pub fn psi_curve_max_reference() -> (f64, f64) {
    let s10 = 10f64.sqrt();
    let lmax = (2.0 * s10 - 5.0) / 15.0;
    let vmax = 5f64.powf(-5.0 / 3.0) * (1565.0 + 496.0 * s10).powf(1.0 / 3.0);
    (lmax, vmax)
}

/// Numeric second derivative at `t = 0` of `q(t)^(1/d)` with
/// `q(t) = p(1, t)`, against the exact closed form
/// `(d−1)·a₀^(1/d − 2)·(a₀a₂ − a₁²)`; returns `(sampled, exact)`.
pub fn radial_root_second_derivative(p: &QForm) -> (f64, f64) {
    let d = p.degree();
    let a = p.binary_a_coeffs();
    let a0 = crate::rat::rat_to_f64(&a[0]);
    let a1 = crate::rat::rat_to_f64(&a[1]);
    let a2 = crate::rat::rat_to_f64(&a[2]);
    let exact = (d as f64 - 1.0) * a0.powf(1.0 / d as f64 - 2.0) * (a0 * a2 - a1 * a1);
    let f = |t: f64| p.evaluate_f64(&[1.0, t]).powf(1.0 / d as f64);
    let h = 1e-5;
    let sampled = (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    (sampled, exact)
}

/// A convex ternary quartic that is not a sum of fourth powers:
/// `x⁴ + y⁴ + z⁴ + 6x²y² + 6x²z² + 2y²z²`.
pub fn dmitriev_ternary_quartic() -> QForm {
    Form::from_terms(
        3,
        4,
        [
            (vec![4, 0, 0], rat_i(1)),
            (vec![0, 4, 0], rat_i(1)),
            (vec![0, 0, 4], rat_i(1)),
            (vec![2, 2, 0], rat_i(6)),
            (vec![2, 0, 2], rat_i(6)),
            (vec![0, 2, 2], rat_i(2)),
        ],
    )
    .expect("ternary quartic exponents")
}

/// Deterministic random rational in `[-bound, bound]` with denominator
/// up to `max_den`, for seeded test-data generation.
pub fn random_rat(rng: &mut ChaCha8Rng, bound: i64, max_den: i64) -> Rat {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-bound * den..=bound * den);
    crate::rat::rat(num, den)
}

/// Deterministic random binary form of the given degree with small
/// rational coefficients.
pub fn random_binary_form(rng: &mut ChaCha8Rng, degree: u32, bound: i64, max_den: i64) -> QForm {
    loop {
        let coeffs: Vec<Rat> = (0..=degree).map(|_| random_rat(rng, bound, max_den)).collect();
        let f: QForm = Form::binary_from_raw(&coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn hessian_probe_finds_the_classic_witness() {
        // x²y² embedded in two variables: a negative Hessian pair exists.
        let p: QForm = Form::monomial(2, &[2, 2], rat_i(1));
        match hessian_sample_check(&p, 20_000, 7) {
            SampleCheck::Witness(u, v) => {
                let hes = hessian_biform(&p);
                assert!(hes.evaluate_f64(&u, &v) < 0.0);
            }
            SampleCheck::NoViolation => panic!("x²y² is not convex"),
        }
        // (x²+y²+z²)² is convex: no violation.
        let circle3: QForm = Form::from_terms(
            3,
            2,
            [(vec![2, 0, 0], rat_i(1)), (vec![0, 2, 0], rat_i(1)), (vec![0, 0, 2], rat_i(1))],
        )
        .unwrap();
        assert_eq!(hessian_sample_check(&circle3.pow(2), 5_000, 11), SampleCheck::NoViolation);
    }

    #[test]
    fn dmitriev_quartic_passes_the_probe() {
        let p = dmitriev_ternary_quartic();
        assert_eq!(hessian_sample_check(&p, 100_000, 417), SampleCheck::NoViolation);
    }

    #[test]
    fn psi_maximum_matches_the_closed_form() {
        let (lx, vx) = psi_curve_max();
        let (lr, vr) = psi_curve_max_reference();
        assert!((vx - vr).abs() < 1e-7, "max {} vs {}", vx, vr);
        assert!((lx - lr).abs() < 1e-4, "argmax {} vs {}", lx, lr);
        assert!((vr - 1.000905).abs() < 1e-5);
        // Intercepts at λ = ±1/2.
        assert!((psi_curve(0.5) - 12f64.powf(-1.0 / 3.0)).abs() < 1e-12);
        assert!(psi_curve(-0.5).abs() < 1e-12);
    }

    #[test]
    fn radial_root_second_derivative_identity() {
        // Pd binary forms with p(1,0) > 0: sampled vs closed form.
        for coeffs in [
            vec![rat_i(2), rat(1, 3), rat(1, 2), rat_i(0), rat_i(1)],
            vec![rat_i(1), rat_i(0), rat_i(1), rat_i(0), rat_i(1), rat_i(0), rat_i(2)],
        ] {
            let p: QForm = Form::binary_from_a(&coeffs);
            let (sampled, exact) = radial_root_second_derivative(&p);
            let scale = exact.abs().max(1.0);
            assert!(
                ((sampled - exact) / scale).abs() < 1e-5,
                "sampled {} vs exact {}",
                sampled,
                exact
            );
        }
    }

    #[test]
    fn convexify_estimate_is_finite_and_positive() {
        let p: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(12), rat_i(0), rat_i(1)]);
        let est = convexify_estimate(&p);
        assert!(est.is_finite() && est > 0.0);
    }
}
