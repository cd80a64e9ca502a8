//! Property-based invariants of the form calculus and the scalar tower.

use blender_core::forms::{hessian_biform, power_form, Form, QForm, SquareMatrix};
use blender_core::rat::{rat, Rat};
use blender_core::tower::Tower;
use num::{BigInt, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn binary_form(degree: u32) -> impl Strategy<Value = QForm> {
    proptest::collection::vec(small_rat(), (degree + 1) as usize)
        .prop_map(|coeffs| Form::binary_from_raw(&coeffs))
}

fn matrix2() -> impl Strategy<Value = SquareMatrix<Rat>> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c, d)| SquareMatrix::from_rows(vec![vec![a, b], vec![c, d]]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inner_product_is_symmetric_bilinear_definite(
        p in binary_form(4),
        q in binary_form(4),
        r in binary_form(4),
        c in small_rat(),
    ) {
        let pq = p.inner_product(&q).unwrap();
        let qp = q.inner_product(&p).unwrap();
        prop_assert_eq!(&pq, &qp);
        // [p + c·r, q] = [p,q] + c[r,q].
        let lhs = p.add(&r.scale(&c)).unwrap().inner_product(&q).unwrap();
        let rhs = &pq + &c * r.inner_product(&q).unwrap();
        prop_assert_eq!(lhs, rhs);
        if !p.is_zero() {
            prop_assert!(p.inner_product(&p).unwrap() > Rat::zero());
        }
    }

    #[test]
    fn substitution_is_contravariant(
        p in binary_form(4),
        q in binary_form(4),
        m in matrix2(),
    ) {
        // [p∘M, q] = [p, q∘Mᵗ].
        let lhs = p.compose(&m).unwrap().inner_product(&q).unwrap();
        let rhs = p.inner_product(&q.compose(&m.transpose()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_respects_products(
        p in binary_form(3),
        q in binary_form(2),
        m in matrix2(),
    ) {
        let lhs = p.mul(&q).unwrap().compose(&m).unwrap();
        let rhs = p.compose(&m).unwrap().mul(&q.compose(&m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_operators_compose(
        f in binary_form(1),
        g in binary_form(2),
        p in binary_form(6),
    ) {
        // (f·g)(D)p = f(D)(g(D)p).
        let fg = f.mul(&g).unwrap();
        let lhs = Form::diff_apply(&fg, &p).unwrap();
        let rhs = Form::diff_apply(&f, &Form::diff_apply(&g, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn differential_adjoint_identity(
        f in binary_form(2),
        h in binary_form(3),
        p in binary_form(5),
    ) {
        // d!·[p, h·f] = (d−k)!·[h, f(D)p] with d = 5, k = 2.
        let d_fact = Rat::from_integer(blender_core::rat::factorial(5));
        let dk_fact = Rat::from_integer(blender_core::rat::factorial(3));
        let lhs = d_fact * p.inner_product(&h.mul(&f).unwrap()).unwrap();
        let rhs = dk_fact * h.inner_product(&Form::diff_apply(&f, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_forms_evaluate_by_pairing(
        p in binary_form(6),
        ax in small_rat(),
        ay in small_rat(),
    ) {
        let alpha = [ax, ay];
        let pw = power_form(&alpha, 6);
        prop_assert_eq!(
            p.inner_product(&pw).unwrap(),
            p.evaluate(&alpha).unwrap()
        );
    }

    #[test]
    fn hessian_diagonal_recovers_the_form(p in binary_form(6)) {
        // Hes(p; u, u) = d(d−1)·p(u) as a form identity.
        prop_assume!(!p.is_zero());
        let hes = hessian_biform(&p);
        prop_assert_eq!(hes.diagonal(), p.scale(&rat(30, 1)));
    }

    #[test]
    fn form_json_round_trip(p in binary_form(5)) {
        let s = blender_core::forms::json::form_to_json(&p);
        let back = blender_core::forms::json::form_from_json(&s).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn tower_conjugate_norm(
        a in small_rat(),
        b in small_rat(),
        s in prop::sample::select(vec![2i64, 3, 5, 7, 10, 13]),
    ) {
        let sq = rat(s, 1);
        let x = Tower::quadratic(a.clone(), b.clone(), sq.clone()).unwrap();
        let y = Tower::quadratic(a.clone(), -b.clone(), sq.clone()).unwrap();
        let norm = x.try_mul(&y).unwrap();
        prop_assert_eq!(norm.as_rat().unwrap(), &a * &a - &b * &b * sq);
        // Squares never go negative.
        prop_assert!(x.try_mul(&x).unwrap().sign() >= 0);
    }

    #[test]
    fn tower_sqrt_round_trip(
        a in (0i64..=30).prop_map(|n| rat(n, 1)),
        b in small_rat(),
        s in prop::sample::select(vec![2i64, 3, 5, 7]),
    ) {
        let x = Tower::quadratic(a, b, rat(s, 1)).unwrap();
        if x.sign() >= 0 {
            if let Ok(r) = x.sqrt() {
                prop_assert_eq!(r.try_mul(&r).unwrap(), x);
                prop_assert!(r.sign() >= 0);
            }
        } else {
            prop_assert!(x.sqrt().is_err());
        }
    }

    #[test]
    fn hessian_matches_finite_differences(
        p in binary_form(6),
        u1 in -5i64..=5, u2 in -5i64..=5,
        v1 in -5i64..=5, v2 in -5i64..=5,
    ) {
        prop_assume!((u1, u2) != (0, 0) && (v1, v2) != (0, 0));
        let hes = hessian_biform(&p);
        let u = [u1 as f64, u2 as f64];
        let v = [v1 as f64, v2 as f64];
        let exact = hes.evaluate_f64(&u, &v);
        let h = 1e-4;
        let at = |t: f64| p.evaluate_f64(&[u[0] + t * v[0], u[1] + t * v[1]]);
        let approx = (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h);
        // Relative to the natural magnitude of the second derivative, so
        // cancellation-to-zero cases stay well conditioned.
        let sumabs: f64 = p.terms().map(|(_, c)| blender_core::rat::rat_to_f64(c).abs()).sum();
        let umax = u[0].abs().max(u[1].abs()).max(1.0);
        let vmax = v[0].abs().max(v[1].abs()).max(1.0);
        let scale = (36.0 * sumabs * umax.powi(4) * vmax * vmax).max(1.0);
        prop_assert!(((exact - approx) / scale).abs() < 1e-6,
            "exact {} vs finite difference {} (scale {})", exact, approx, scale);
    }
}

#[test]
fn big_integer_coefficients_survive_round_trips() {
    // Exactness is not bounded by machine words.
    let huge = Rat::new(BigInt::from(10).pow(40) + 1, BigInt::from(3));
    let p: QForm = Form::binary_from_raw(&[huge.clone(), rat(1, 7), huge.clone()]);
    let s = blender_core::forms::json::form_to_json(&p);
    assert_eq!(blender_core::forms::json::form_from_json(&s).unwrap(), p);
    let sq = p.mul(&p).unwrap();
    assert_eq!(sq.raw_coeff(&[4, 0]), &huge * &huge);
}
