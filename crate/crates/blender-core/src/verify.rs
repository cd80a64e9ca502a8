//! The bundled identity suite behind the `verify-paper` command: every
//! closed-form identity, certificate and boundary value the kernels rest
//! on, checked by exact expansion.  A failure here is a build-breaking
//! defect, never a tolerance issue — all comparisons are in exact
//! arithmetic except the two explicitly sampled curve checks.

use crate::convexity::{
    c_lambda, convex_status, k28_fixture, q_lambda_status, qlam, ring_trinomial, theta,
};
use crate::forms::{Form, QForm, SquareMatrix};
use crate::numeric::{psi_curve_max, psi_curve_max_reference, random_binary_form};
use crate::quartics::{flam, glam, map_u, nu0_is_self_dual, phi_squared};
use crate::rat::{rat, rat_i, Rat};
use crate::verdict::MembershipVerdict;
use crate::waring::{flam_product_eso, flam_product_membership, wtilde_membership};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Outcome of one fixture.
#[derive(Clone, Debug)]
pub struct FixtureResult {
    pub name: String,
    pub error: Option<String>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.error.is_none()
    }
}

fn run(name: &str, f: impl FnOnce() -> Result<(), String>) -> FixtureResult {
    FixtureResult { name: name.to_string(), error: f().err() }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(lhs: T, rhs: T, what: &str) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {:?} ≠ {:?}", what, lhs, rhs))
    }
}

/// Runs the whole identity suite; one result per fixture.
pub fn paper_suite() -> Vec<FixtureResult> {
    let mut out = Vec::new();

    out.push(run("certificate-suite", || {
        for cert in crate::waring::certificate_suite() {
            cert.verify().map_err(|e| e.to_string())?;
        }
        Ok(())
    }));

    out.push(run("apolarity-pairing-closed-form", || {
        // [f_λ, g_μ] = 4(1 + 3λ + 3μ − 3λμ) on a 20×20 rational grid.
        for i in -9..=10 {
            let l = rat(i, 7);
            for j in -9..=10 {
                let m = rat(j, 5);
                let ip = flam(&l).inner_product(&glam(&m)).map_err(|e| e.to_string())?;
                let want =
                    rat_i(4) * (rat_i(1) + rat_i(3) * &l + rat_i(3) * &m - rat_i(3) * &l * &m);
                expect_eq(ip, want, &format!("pairing at λ={} μ={}", l, m))?;
            }
        }
        Ok(())
    }));

    out.push(run("dual-pairing-vanishing", || {
        // [f_λ, g_{U(λ)+τ}] = 12(1−λ)τ.
        for i in [-2i64, -1, 1, 2, 3] {
            let l = rat(i, 7);
            let u = map_u(&l).map_err(|e| e.to_string())?;
            for j in [-1i64, 0, 1, 2] {
                let t = rat(j, 9);
                let ip =
                    flam(&l).inner_product(&glam(&(&u + &t))).map_err(|e| e.to_string())?;
                expect_eq(ip, rat_i(12) * (rat_i(1) - &l) * &t, "dual pairing")?;
            }
        }
        Ok(())
    }));

    out.push(run("differential-pairing", || {
        // p(D)q = q(D)p = d!·[p, q] on 100 seeded random pairs.
        let mut rng = ChaCha8Rng::seed_from_u64(160);
        for _ in 0..100 {
            let d = 2 + (rng.next_u32() % 4);
            let p = random_binary_form(&mut rng, d, 4, 3);
            let q = random_binary_form(&mut rng, d, 4, 3);
            let fact = Rat::from_integer(crate::rat::factorial(d));
            let pd_q = Form::diff_apply(&p, &q).map_err(|e| e.to_string())?.raw_coeff(&[0, 0]);
            let qd_p = Form::diff_apply(&q, &p).map_err(|e| e.to_string())?.raw_coeff(&[0, 0]);
            let ip = p.inner_product(&q).map_err(|e| e.to_string())?;
            expect_eq(pd_q, &fact * &ip, "p(D)q")?;
            expect_eq(qd_p, fact * ip, "q(D)p")?;
        }
        Ok(())
    }));

    out.push(run("theta-hessian-determinant", || {
        // (2r)²(2r−1)²·Θ_p = p_xx·p_yy − p_xy² on 200 seeded random forms.
        let mut rng = ChaCha8Rng::seed_from_u64(161);
        for k in 0..200u32 {
            let d = 4 + 2 * (k % 5);
            let p = random_binary_form(&mut rng, d, 5, 4);
            let f = rat_i((d as i64) * (d as i64) * (d as i64 - 1) * (d as i64 - 1));
            let lhs = theta(&p).map_err(|e| e.to_string())?.scale(&f);
            let pxy = p.derivative(0).derivative(1);
            let det = p
                .derivative(0)
                .derivative(0)
                .mul(&p.derivative(1).derivative(1))
                .and_then(|h| h.sub(&pxy.mul(&pxy).expect("same nvars")))
                .map_err(|e| e.to_string())?;
            expect_eq(lhs, det, "theta vs determinant")?;
        }
        Ok(())
    }));

    out.push(run("extremal-sextic-window", || {
        // Θ(q_λ) = (1−λ²)x²y²C_λ, and membership exactly on |λ| ≤ 1/2.
        for l in [rat_i(0), rat(1, 4), rat(-1, 4), rat(1, 2), rat(-1, 2)] {
            let th = theta(&qlam(&l)).map_err(|e| e.to_string())?;
            let xy: QForm = Form::monomial(2, &[2, 2], rat_i(1));
            let want = xy
                .mul(&c_lambda(&l))
                .map_err(|e| e.to_string())?
                .scale(&(rat_i(1) - &l * &l));
            expect_eq(th, want, &format!("theta cofactor at λ={}", l))?;
        }
        for (l, member) in [
            (rat(1, 2), true),
            (rat(-1, 2), true),
            (rat(501, 1000), false),
            (rat(-501, 1000), false),
            (rat(1, 4), true),
        ] {
            let got = q_lambda_status(&l).is_member();
            expect_eq(got, member, &format!("membership at λ={}", l))?;
        }
        Ok(())
    }));

    out.push(run("even-rotation-identity", || {
        // q_λ(x+y, x−y) against its closed-form even quadrinomial.
        let m = SquareMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        for l in [rat_i(0), rat(1, 4), rat(-1, 4), rat(1, 2), rat(-1, 2)] {
            let rot = qlam(&l).compose(&m).map_err(|e| e.to_string())?;
            let l2 = &l * &l;
            let want: QForm = Form::binary_from_raw(&[
                rat_i(2) * (rat_i(1) + &l) * (rat_i(1) + rat_i(5) * &l + rat_i(10) * &l2),
                rat_i(0),
                rat_i(30) * (rat_i(1) - &l2) * (rat_i(1) + rat_i(2) * &l),
                rat_i(0),
                rat_i(30) * (rat_i(1) - &l2) * (rat_i(1) - rat_i(2) * &l),
                rat_i(0),
                rat_i(2) * (rat_i(1) - &l) * (rat_i(1) - rat_i(5) * &l + rat_i(10) * &l2),
            ]);
            expect_eq(rot, want, &format!("rotation at λ={}", l))?;
        }
        Ok(())
    }));

    out.push(run("phi-duality-sum", || {
        // φ²(λ) + φ²(U(λ)) = 1/27 on 50 rationals.
        for i in -25..25 {
            let l = rat(i, 80);
            let u = map_u(&l).map_err(|e| e.to_string())?;
            expect_eq(phi_squared(&l) + phi_squared(&u), rat(1, 27), "duality sum")?;
        }
        Ok(())
    }));

    out.push(run("self-dual-parameter", || {
        if nu0_is_self_dual() {
            Ok(())
        } else {
            Err("1 − √(4/3) is not fixed by the duality map".into())
        }
    }));

    out.push(run("ring-trinomial-square-completion", || {
        // 4(1+r)(a+r)·q = (2(1+r)(a+r)x² + c·y²)² + a·r²(a−1)²(S − a − 1/a)·y⁴
        // with c = 2a − r + 6ar − a²r + 2ar², S = 8r + 18 + 8/r, where q is
        // the Hessian-determinant cofactor of (x²+y²)^r(x²+ay²).
        for r in 1u32..=3 {
            let ri = rat_i(r as i64);
            for ai in 1..=9i64 {
                let a = rat(ai, 2);
                let p = ring_trinomial(r, &a);
                let pxy = p.derivative(0).derivative(1);
                let det = p
                    .derivative(0)
                    .derivative(0)
                    .mul(&p.derivative(1).derivative(1))
                    .and_then(|h| h.sub(&pxy.mul(&pxy).expect("same nvars")))
                    .map_err(|e| e.to_string())?;
                let circle: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(1)]);
                let divisor =
                    circle.pow(2 * r - 2).scale(&(rat_i(4) * (rat_i(2) * &ri + rat_i(1))));
                let q = det
                    .binary_div_exact(&divisor)
                    .ok_or("determinant is not divisible by the circle power")?;
                let c = rat_i(2) * &a - &ri + rat_i(6) * &a * &ri - &a * &a * &ri
                    + rat_i(2) * &a * &ri * &ri;
                let qa = (rat_i(1) + &ri) * (&a + &ri);
                let want: QForm = Form::binary_from_raw(&[
                    qa.clone(),
                    rat_i(0),
                    c.clone(),
                    rat_i(0),
                    &a * (rat_i(1) + &ri) * (rat_i(1) + &a * &ri),
                ]);
                expect_eq(q.clone(), want, &format!("cofactor at r={} a={}", r, a))?;
                let square: QForm =
                    Form::binary_from_raw(&[rat_i(2) * &qa, rat_i(0), c.clone()]);
                let s = rat_i(8 * r as i64) + rat_i(18) + rat(8, r as i64);
                let slack = &a * &ri * &ri * (&a - rat_i(1)) * (&a - rat_i(1))
                    * (&s - &a - rat_i(1) / &a);
                let rhs = square
                    .mul(&square)
                    .and_then(|sq| sq.add(&Form::monomial(2, &[0, 4], slack)))
                    .map_err(|e| e.to_string())?;
                expect_eq(
                    q.scale(&(rat_i(4) * &qa)),
                    rhs,
                    &format!("completion r={} a={}", r, a),
                )?;
            }
        }
        Ok(())
    }));

    out.push(run("product-window-cross-check", || {
        // The product membership window agrees with the even-octic
        // trichotomy everywhere on a rational grid.
        for i in -6..=9 {
            let l = rat(i, 3);
            for j in -6..=9 {
                let m = rat(j, 3);
                let direct = flam_product_membership(&l, &m).map_err(|e| e.to_string())?;
                let via = wtilde_membership(&flam_product_eso(&l, &m));
                expect_eq(direct, via, &format!("window at λ={} μ={}", l, m))?;
            }
        }
        Ok(())
    }));

    out.push(run("extremal-octic-theta", || {
        let (p, th) = k28_fixture();
        let xy: QForm = Form::monomial(2, &[2, 2], rat_i(1));
        let split: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(-1)]);
        let circle: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(1)]);
        let want = xy
            .mul(&split.pow(2))
            .and_then(|f| f.mul(&circle.pow(2)))
            .map_err(|e| e.to_string())?
            .scale(&rat_i(3072));
        let got = th
            .try_to_rational()
            .ok_or("theta of the octic should be rational")?
            .scale(&rat_i(64 * 49));
        expect_eq(got, want, "octic theta")?;
        expect_eq(
            convex_status(&p).map_err(|e| e.to_string())?,
            MembershipVerdict::Boundary,
            "octic status",
        )
    }));

    out.push(run("psi-curve-maximum", || {
        let (_, sampled) = psi_curve_max();
        let (_, reference) = psi_curve_max_reference();
        if (sampled - reference).abs() < 1e-6 && (reference - 1.000905).abs() < 1e-5 {
            Ok(())
        } else {
            Err(format!("sampled {} vs closed form {}", sampled, reference))
        }
    }));

    out.push(run("quartic-window-boundaries", || {
        // f_λ: psd iff λ ≥ −1/3 (pd iff strict); sixth-power-cone window
        // [0,1] with boundary at the endpoints.
        use crate::realroots::{binary_psd_status, q_membership, PsdStatus};
        let cases = [
            (rat(-1, 2), false, false),
            (rat(-1, 3), true, false),
            (rat(-33, 100), true, true),
            (rat_i(0), true, true),
            (rat_i(5), true, true),
        ];
        for (l, psd, pd) in cases {
            let st = binary_psd_status(&flam(&l)).map_err(|e| e.to_string())?;
            expect_eq(st.is_psd(), psd, &format!("psd at λ={}", l))?;
            expect_eq(
                matches!(st, PsdStatus::PositiveDefinite),
                pd,
                &format!("pd at λ={}", l),
            )?;
        }
        let windows = [
            (rat(-1, 100), MembershipVerdict::Outside),
            (rat_i(0), MembershipVerdict::Boundary),
            (rat(1, 2), MembershipVerdict::Interior),
            (rat_i(1), MembershipVerdict::Boundary),
            (rat(101, 100), MembershipVerdict::Outside),
        ];
        for (l, want) in windows {
            expect_eq(
                q_membership(&flam(&l)).map_err(|e| e.to_string())?,
                want,
                &format!("power cone at λ={}", l),
            )?;
        }
        Ok(())
    }));

    out
}

/// Convenience wrapper: true iff every fixture passed.
pub fn all_pass(results: &[FixtureResult]) -> bool {
    results.iter().all(|r| r.passed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_whole_suite_passes() {
        let results = paper_suite();
        for r in &results {
            assert!(r.passed(), "fixture {} failed: {:?}", r.name, r.error);
        }
        assert!(results.len() >= 12);
    }

    #[test]
    fn an_injected_defect_is_caught() {
        // Corrupt one coefficient of Θ and watch the determinant identity
        // fail: guards against a suite that cannot fail.
        let p: QForm =
            Form::binary_from_raw(&[rat_i(1), rat_i(2), rat(1, 3), rat_i(-1), rat_i(4)]);
        let broken = theta(&p)
            .unwrap()
            .add(&Form::monomial(2, &[4, 0], rat(1, 7)))
            .unwrap()
            .scale(&rat_i(4 * 4 * 3 * 3));
        let pxy = p.derivative(0).derivative(1);
        let det = p
            .derivative(0)
            .derivative(0)
            .mul(&p.derivative(1).derivative(1))
            .unwrap()
            .sub(&pxy.mul(&pxy).unwrap())
            .unwrap();
        assert_ne!(broken, det);
    }
}
