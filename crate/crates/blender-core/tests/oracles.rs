//! Independent-oracle cross-checks on the exact kernels: dense sampling
//! against the psd trichotomy, constructed-root and eigenvalue oracles for
//! the Sturm machinery, floating eigensolvers against the matrix kernel,
//! and the cone-theoretic stability and nesting properties.

use blender_core::convexity::convex_status;
use blender_core::forms::{power_form, Form, QForm, SquareMatrix};
use blender_core::numeric::{radial_root_second_derivative, random_binary_form, random_rat};
use blender_core::quartics::{btau_membership, flam};
use blender_core::rat::{rat, rat_i, rat_to_f64, Rat};
use blender_core::realroots::{binary_psd_status, sym_psd_status, PsdStatus, SymMatrix, SymPsdStatus};
use blender_core::unipoly::Poly;
use blender_core::verdict::MembershipVerdict;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum of a binary form over projective circle directions, with local
/// refinement around the best candidate.
fn circle_min_refined(p: &QForm, npoints: u32) -> f64 {
    let pi = std::f64::consts::PI;
    let mut best = f64::INFINITY;
    let mut best_t = 0.0;
    for k in 0..npoints {
        let t = pi * (k as f64) / (npoints as f64);
        let v = p.evaluate_f64(&[t.cos(), t.sin()]);
        if v < best {
            best = v;
            best_t = t;
        }
    }
    let mut width = pi / (npoints as f64);
    for _ in 0..3 {
        for k in 0..64 {
            let t = best_t - width + 2.0 * width * (k as f64) / 64.0;
            let v = p.evaluate_f64(&[t.cos(), t.sin()]);
            if v < best {
                best = v;
                best_t = t;
            }
        }
        width /= 16.0;
    }
    best
}

#[test]
fn psd_kernel_agrees_with_dense_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(501);
    let mut counts = [0usize; 3];
    for k in 0..500u32 {
        let d = 2 + 2 * (k % 6);
        let p = random_binary_form(&mut rng, d, 5, 3);
        let scale: f64 = p.terms().map(|(_, c)| rat_to_f64(c).abs()).sum::<f64>().max(1.0);
        let min = circle_min_refined(&p, 10_000);
        match binary_psd_status(&p).unwrap() {
            PsdStatus::PositiveDefinite => {
                counts[0] += 1;
                assert!(min > 0.0, "pd form sampled min {} (form {})", min, p);
            }
            PsdStatus::PsdWithZeros(_) => {
                counts[1] += 1;
                assert!(min > -1e-9 * scale, "psd form sampled min {}", min);
            }
            PsdStatus::Indefinite => {
                counts[2] += 1;
                assert!(min < 1e-7 * scale, "indefinite form sampled min {}", min);
            }
        }
    }
    // Random signed coefficients should exercise all three classes.
    assert!(counts[0] > 0 && counts[2] > 0, "class counts {:?}", counts);
}

#[test]
fn sturm_counts_match_constructed_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(502);
    for _ in 0..500 {
        // Product of distinct rational linear factors and complex-rooted
        // quadratics: the real-root count is known by construction.
        let n_lin = rng.gen_range(0..=4usize);
        let n_quad = rng.gen_range(0..=(6 - n_lin) / 2 + 1).min(3);
        let mut f = Poly::constant(rat_i(1));
        let mut roots: Vec<Rat> = Vec::new();
        for _ in 0..n_lin {
            loop {
                let r = random_rat(&mut rng, 6, 4);
                if roots.iter().all(|x| x != &r) {
                    f = f.mul(&Poly::new(vec![-r.clone(), rat_i(1)]));
                    roots.push(r);
                    break;
                }
            }
        }
        for _ in 0..n_quad {
            // (x − a)² + b² with b ≠ 0 has no real roots.
            let a = random_rat(&mut rng, 4, 3);
            let b = random_rat(&mut rng, 3, 2).abs() + rat(1, 2);
            let q = Poly::new(vec![&a * &a + &b * &b, rat_i(-2) * &a, rat_i(1)]);
            f = f.mul(&q);
        }
        if f.degree() == 0 {
            continue;
        }
        assert_eq!(f.count_real_roots(), roots.len(), "roots {:?}", roots);
        // The isolating intervals really separate them.
        let isolated = f.isolate_real_roots();
        assert_eq!(isolated.len(), roots.len());
        for (lo, hi) in &isolated {
            assert_eq!(roots.iter().filter(|r| *r > lo && *r <= hi).count(), 1);
        }
    }
}

#[test]
fn sturm_counts_match_companion_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(503);
    let mut checked = 0;
    while checked < 60 {
        let deg = rng.gen_range(2..=8usize);
        let coeffs: Vec<Rat> = (0..=deg).map(|_| random_rat(&mut rng, 5, 3)).collect();
        let f = Poly::new(coeffs);
        if f.degree() < 2 {
            continue;
        }
        // Only squarefree inputs with well-separated eigenvalues are fair
        // game for the floating oracle.
        if f.gcd(&f.derivative()).degree() > 0 {
            continue;
        }
        let n = f.degree();
        let lead = rat_to_f64(&f.leading());
        let mut companion = nalgebra::DMatrix::<f64>::zeros(n, n);
        for i in 1..n {
            companion[(i, i - 1)] = 1.0;
        }
        for i in 0..n {
            companion[(i, n - 1)] = -rat_to_f64(&f.coeff(i)) / lead;
        }
        let eigen = companion.complex_eigenvalues();
        let mut real_count = 0;
        let mut clear = true;
        for e in eigen.iter() {
            let scale = e.norm().max(1.0);
            if e.im.abs() < 1e-9 * scale {
                real_count += 1;
            } else if e.im.abs() < 1e-4 * scale {
                clear = false; // numerically ambiguous; skip this sample
            }
        }
        if !clear {
            continue;
        }
        assert_eq!(f.count_real_roots(), real_count, "f = {:?}", f);
        checked += 1;
    }
}

#[test]
fn matrix_kernel_agrees_with_floating_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(504);
    let mut compared = 0;
    for k in 0..500u32 {
        let n = 2 + (k % 5) as usize;
        // Mix definitely-psd Gram matrices with general symmetric ones.
        let mut a = vec![vec![Rat::zero(); n]; n];
        let gram = k % 2 == 0;
        if gram {
            let b: Vec<Vec<Rat>> =
                (0..n).map(|_| (0..n).map(|_| random_rat(&mut rng, 3, 2)).collect()).collect();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Rat::zero();
                    for l in 0..n {
                        acc += &b[l][i] * &b[l][j];
                    }
                    a[i][j] = acc;
                }
            }
        } else {
            for i in 0..n {
                for j in 0..=i {
                    let v = random_rat(&mut rng, 4, 2);
                    a[i][j] = v.clone();
                    a[j][i] = v;
                }
            }
        }
        let m = SymMatrix::from_rows(a.clone()).unwrap();
        let status = sym_psd_status(&m);
        if gram {
            assert!(
                status.is_psd(),
                "a Gram matrix is always psd: {:?}",
                a
            );
        }
        let mut fm = nalgebra::DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                fm[(i, j)] = rat_to_f64(&a[i][j]);
            }
        }
        let scale = fm.amax().max(1.0);
        let eig = fm.symmetric_eigenvalues();
        let min = eig.iter().cloned().fold(f64::INFINITY, f64::min);
        // Only clear-cut eigenvalue signs are compared.
        if min > 1e-6 * scale {
            assert_eq!(status, SymPsdStatus::PositiveDefinite, "matrix {:?}", a);
            compared += 1;
        } else if min < -1e-6 * scale {
            assert_eq!(status, SymPsdStatus::Indefinite, "matrix {:?}", a);
            compared += 1;
        }
    }
    assert!(compared > 300, "only {} clear comparisons", compared);
}

#[test]
fn psd_forms_stay_psd_under_substitution() {
    // Closure under (possibly singular) changes of variables.
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for _ in 0..100 {
        let d = 2 * rng.gen_range(1..=3u32);
        // Build a psd form as a sum of d-th powers of linear forms.
        let mut p: QForm = Form::zero(2, d);
        for _ in 0..3 {
            let alpha = [random_rat(&mut rng, 4, 3), random_rat(&mut rng, 4, 3)];
            p = p.add(&power_form(&alpha, d)).unwrap();
        }
        if p.is_zero() {
            continue;
        }
        let m = SquareMatrix::from_rows(vec![
            vec![random_rat(&mut rng, 3, 2), random_rat(&mut rng, 3, 2)],
            vec![random_rat(&mut rng, 3, 2), random_rat(&mut rng, 3, 2)],
        ]);
        let q = p.compose(&m).unwrap();
        if q.is_zero() {
            continue;
        }
        assert_ne!(
            binary_psd_status(&q).unwrap(),
            PsdStatus::Indefinite,
            "p = {} composed with a matrix went indefinite",
            p
        );
    }
}

#[test]
fn power_sums_are_convex() {
    // Sums of d-th powers land inside the convex cone.
    let mut rng = ChaCha8Rng::seed_from_u64(506);
    for _ in 0..50 {
        let d = 2 * rng.gen_range(2..=4u32);
        let mut p: QForm = Form::zero(2, d);
        for _ in 0..4 {
            let alpha = [random_rat(&mut rng, 3, 2), random_rat(&mut rng, 3, 2)];
            let w = random_rat(&mut rng, 3, 2);
            p = p.add(&power_form(&alpha, d).scale(&(&w * &w))).unwrap();
        }
        if p.is_zero() {
            continue;
        }
        assert_ne!(convex_status(&p).unwrap(), MembershipVerdict::Outside, "p = {}", p);
    }
}

#[test]
fn mixed_monomials_are_never_convex() {
    for (a, b) in [(1u32, 1u32), (2, 1), (1, 2), (2, 2), (3, 1)] {
        let m: QForm = Form::monomial(2, &[2 * a, 2 * b], rat_i(1));
        assert_eq!(convex_status(&m).unwrap(), MembershipVerdict::Outside);
    }
}

#[test]
fn radial_root_second_derivative_on_random_pd_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(507);
    let mut checked = 0;
    while checked < 40 {
        let d = 2 * rng.gen_range(1..=3u32);
        let p = random_binary_form(&mut rng, d, 4, 3);
        if binary_psd_status(&p).unwrap() != PsdStatus::PositiveDefinite {
            continue;
        }
        let (sampled, exact) = radial_root_second_derivative(&p);
        let scale = exact.abs().max(1.0);
        assert!(
            ((sampled - exact) / scale).abs() < 1e-5,
            "sampled {} vs exact {} for {}",
            sampled,
            exact,
            p
        );
        checked += 1;
    }
}

#[test]
fn quartic_cones_are_nested_and_substitution_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(508);
    let taus = [rat(-1, 3), rat(-1, 4), rat(-1, 8), rat_i(0)];
    for _ in 0..60 {
        let p = random_binary_form(&mut rng, 4, 4, 3);
        // Nesting: a member at τ₂ is a member at every τ₁ ≤ τ₂.
        let verdicts: Vec<MembershipVerdict> =
            taus.iter().map(|t| btau_membership(&p, t).unwrap()).collect();
        for i in 0..taus.len() {
            for j in i + 1..taus.len() {
                if verdicts[j].is_member() {
                    assert!(
                        verdicts[i].is_member(),
                        "member at τ={} but not τ={} for {}",
                        taus[j],
                        taus[i],
                        p
                    );
                }
            }
        }
        // Substitution invariance under invertible changes of variables.
        let m = SquareMatrix::from_i64(&[&[3, 1], &[-2, 4]]);
        let q = p.compose(&m).unwrap();
        for t in &taus {
            assert_eq!(
                btau_membership(&p, t).unwrap(),
                btau_membership(&q, t).unwrap(),
                "τ = {} p = {}",
                t,
                p
            );
        }
    }
    // The family anchor: f_λ member of B_τ iff λ ∈ [τ, T(τ)].
    let tau = rat(-1, 4);
    let t_tau = blender_core::quartics::map_t(&tau).unwrap();
    for k in -10..=20 {
        let l = rat(k, 8);
        let member = btau_membership(&flam(&l), &tau).unwrap().is_member();
        assert_eq!(member, l >= tau && l <= t_tau, "λ = {}", l);
    }
}

#[test]
fn wtilde_boundary_perturbation_coherence() {
    // Points exactly on the parabola face are boundary; nudging C by
    // ±1e-6 flips to interior/outside respectively.
    let mut rng = ChaCha8Rng::seed_from_u64(509);
    for _ in 0..50 {
        let a = random_rat(&mut rng, 3, 2).abs() + rat(1, 2);
        let mut b = random_rat(&mut rng, 6, 2);
        if b <= rat_i(-4) * &a {
            b = rat_i(-4) * &a + rat(1, 3); // stay off the other face
        }
        let c = (&b * &b - rat_i(64) * &a * &b - rat_i(56) * &a * &a) / (rat_i(36) * &a);
        let eps = rat(1, 1_000_000);
        use blender_core::waring::{wtilde_membership, EvenSymmetricOctic};
        let exact = EvenSymmetricOctic::new(a.clone(), b.clone(), c.clone());
        assert_eq!(wtilde_membership(&exact), MembershipVerdict::Boundary);
        let up = EvenSymmetricOctic::new(a.clone(), b.clone(), &c + &eps);
        let down = EvenSymmetricOctic::new(a.clone(), b.clone(), &c - &eps);
        assert_eq!(wtilde_membership(&up), MembershipVerdict::Interior);
        assert_eq!(wtilde_membership(&down), MembershipVerdict::Outside);
    }
}

#[test]
fn tower_exact_trinomial_boundary_status() {
    use blender_core::convexity::theta;
    use blender_core::forms::TForm;
    use blender_core::tower::Tower;
    // The exact upper endpoint for the quartic window: a = 17 + 12√2.
    let a = Tower::quadratic(rat_i(17), rat_i(12), rat_i(2)).unwrap();
    let circle: TForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(1)]).to_tower();
    let quad: TForm =
        Form::from_terms(2, 2, [(vec![2, 0], Tower::from_int(1)), (vec![0, 2], a)]).unwrap();
    let p = circle.mul(&quad).unwrap();
    assert_eq!(convex_status(&p).unwrap(), MembershipVerdict::Boundary);
    // Its Θ is psd with a genuine zero, never negative on samples.
    let th = theta(&p).unwrap();
    match binary_psd_status(&th).unwrap() {
        PsdStatus::PsdWithZeros(zeros) => assert!(!zeros.is_empty()),
        other => panic!("expected boundary zeros, got {:?}", other),
    }
}
