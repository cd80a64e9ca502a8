//! The complete classification of binary-quartic cones: the fundamental
//! invariants I and J, the scale-free comparator K = J/I^(3/2), the
//! fractional-linear maps T and U, the pivotal family f_λ = x⁴+6λx²y²+y⁴,
//! membership in the one-parameter cones B_τ, duality, and the Ψ
//! sum-of-squares certificate.
//!
//! K(p) is never materialised as a real number: every comparison of
//! K(p) against φ(τ) = (τ−τ³)/(1+3τ²)^(3/2) is a sign-aware comparison of
//! the cleared squares J²·(1+3τ²)³ versus (τ−τ³)²·I³, so boundary cases
//! are decided exactly.

use crate::cert::{Certificate, CertificateTerm};
use crate::forms::{Form, QForm, SquareMatrix};
use crate::rat::{rat, rat_i, Rat};
use crate::realroots::{binary_psd_status, catalecticant, PsdStatus};
use crate::scalar::Scalar;
use crate::tower::Tower;
use crate::unipoly::Poly;
use crate::verdict::MembershipVerdict;
use num::Zero;
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuarticsError {
    #[error("expected a binary quartic, got nvars={0}, degree={1}")]
    NotBinaryQuartic(usize, u32),
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("τ = {0} lies outside [-1/3, 0]")]
    TauOutOfRange(Rat),
    #[error("pole of the fractional-linear map at z = {0}")]
    Pole(Rat),
    #[error("r = {0} outside [-1/3, 0]: certificate weights lose non-negativity")]
    CertificateRange(Rat),
}

/// The quartic family `f_λ = x⁴ + 6λ·x²y² + y⁴`.
pub fn flam(l: &Rat) -> QForm {
    Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(6) * l, rat_i(0), rat_i(1)])
}

/// Its rotation `g_λ = f_λ(x+y, x−y) = (2+6λ)x⁴ + (12−12λ)x²y² + (2+6λ)y⁴`.
pub fn glam(l: &Rat) -> QForm {
    flam(l)
        .compose(&SquareMatrix::from_i64(&[&[1, 1], &[1, -1]]))
        .expect("2x2 substitution on a binary form")
}

/// `T(z) = (1−z)/(1+3z)`, an involution pairing equivalent family members.
pub fn map_t(z: &Rat) -> Result<Rat, QuarticsError> {
    let den = rat_i(1) + rat_i(3) * z;
    if den.is_zero() {
        return Err(QuarticsError::Pole(z.clone()));
    }
    Ok((rat_i(1) - z) / den)
}

/// `U(z) = −(1+3z)/(3−3z)`, the duality involution on [-1/3, 0].
pub fn map_u(z: &Rat) -> Result<Rat, QuarticsError> {
    let den = rat_i(3) - rat_i(3) * z;
    if den.is_zero() {
        return Err(QuarticsError::Pole(z.clone()));
    }
    Ok(-(rat_i(1) + rat_i(3) * z) / den)
}

/// The two fundamental invariants of a binary quartic, in the normalised
/// coefficients `a_k = a(p; (4−k, k))`:
/// `I = a₀a₄ − 4a₁a₃ + 3a₂²` and `J = det of the 3×3 Hankel of the a_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuarticInvariants {
    pub i: Rat,
    pub j: Rat,
}

pub fn invariants(p: &QForm) -> Result<QuarticInvariants, QuarticsError> {
    if p.nvars() != 2 || p.degree() != 4 {
        return Err(QuarticsError::NotBinaryQuartic(p.nvars(), p.degree()));
    }
    let a = p.binary_a_coeffs();
    let i = &a[0] * &a[4] - rat_i(4) * &a[1] * &a[3] + rat_i(3) * &a[2] * &a[2];
    let j = &a[0] * (&a[2] * &a[4] - &a[3] * &a[3]) - &a[1] * (&a[1] * &a[4] - &a[2] * &a[3])
        + &a[2] * (&a[1] * &a[3] - &a[2] * &a[2]);
    Ok(QuarticInvariants { i, j })
}

/// `φ(λ)² = (λ−λ³)²/(1+3λ²)³` as an exact rational.
pub fn phi_squared(l: &Rat) -> Rat {
    let num = l - l * l * l;
    let den = rat_i(1) + rat_i(3) * l * l;
    &num * &num / (&den * &den * &den)
}

pub fn phi_sign(l: &Rat) -> i32 {
    crate::rat::rat_sign(&(l - l * l * l))
}

/// The sign-aware comparison of `K(p) = J/I^(3/2)` against `φ(τ)`, together
/// with the two cleared squares that decide it.
#[derive(Clone, Debug)]
pub struct KPhiComparison {
    /// `J² · (1+3τ²)³`
    pub lhs: Rat,
    /// `(τ−τ³)² · I³`
    pub rhs: Rat,
    pub sign_j: i32,
    pub sign_phi_tau: i32,
    pub ordering: Ordering,
}

/// Compares `K(p)` with `φ(τ)` exactly; requires `I > 0` (true for pd `p`).
pub fn compare_k_phi(inv: &QuarticInvariants, tau: &Rat) -> KPhiComparison {
    assert!(inv.i > Rat::zero(), "comparator needs I > 0");
    let sj = crate::rat::rat_sign(&inv.j);
    let sp = phi_sign(tau);
    let tau_num = tau - tau * tau * tau;
    let one_plus = rat_i(1) + rat_i(3) * tau * tau;
    let lhs = &inv.j * &inv.j * &one_plus * &one_plus * &one_plus;
    let rhs = &tau_num * &tau_num * &inv.i * &inv.i * &inv.i;
    let ordering = if sj != sp {
        sj.cmp(&sp)
    } else if sj == 0 {
        Ordering::Equal
    } else {
        let mag = lhs.cmp(&rhs);
        if sj > 0 {
            mag
        } else {
            mag.reverse()
        }
    };
    KPhiComparison { lhs, rhs, sign_j: sj, sign_phi_tau: sp, ordering }
}

/// The canonical parameter of a pd binary quartic: the unique λ in
/// (−1/3, 1/3] with `K(p) = φ(λ)`, exact when rational, otherwise an
/// isolated algebraic description.
#[derive(Clone, PartialEq, Debug)]
pub enum CanonicalLambda {
    Rational(Rat),
    Algebraic {
        /// Squarefree divisor of `(λ−λ³)²I³ − J²(1+3λ²)³` that vanishes at λ.
        poly: Poly<Rat>,
        lo: Rat,
        hi: Rat,
        /// Matches sign(J).
        sign: i32,
    },
}

impl CanonicalLambda {
    pub fn to_f64(&self) -> f64 {
        match self {
            CanonicalLambda::Rational(q) => crate::rat::rat_to_f64(q),
            CanonicalLambda::Algebraic { lo, hi, .. } => {
                (crate::rat::rat_to_f64(lo) + crate::rat::rat_to_f64(hi)) / 2.0
            }
        }
    }
}

pub fn canonical_lambda(p: &QForm) -> Result<CanonicalLambda, QuarticsError> {
    if p.nvars() != 2 || p.degree() != 4 {
        return Err(QuarticsError::NotBinaryQuartic(p.nvars(), p.degree()));
    }
    match binary_psd_status(p) {
        Ok(PsdStatus::PositiveDefinite) => {}
        _ => return Err(QuarticsError::NotPositiveDefinite),
    }
    let inv = invariants(p)?;
    let sj = crate::rat::rat_sign(&inv.j);
    if sj == 0 {
        return Ok(CanonicalLambda::Rational(Rat::zero()));
    }
    // Resolvent (λ−λ³)²·I³ − J²·(1+3λ²)³, degree 6 in λ.
    let i3 = &inv.i * &inv.i * &inv.i;
    let j2 = &inv.j * &inv.j;
    let lam = Poly::new(vec![Rat::zero(), rat_i(1)]);
    let lam3 = lam.mul(&lam).mul(&lam);
    let tau_num = lam.sub(&lam3);
    let one_plus = Poly::new(vec![rat_i(1), rat_i(0), rat_i(3)]);
    let resolvent = tau_num
        .mul(&tau_num)
        .scale(&i3)
        .sub(&one_plus.mul(&one_plus).mul(&one_plus).scale(&j2));
    let (radical, _) = resolvent.radical_and_odd_part();
    let (lo, hi) = if sj > 0 {
        (Rat::zero(), rat(1, 3))
    } else {
        (rat(-1, 3), Rat::zero())
    };
    let n = radical.count_real_roots_in(&lo, &hi);
    assert_eq!(n, 1, "φ is strictly monotone, the canonical root is unique");
    // Shrink to an isolating bracket within the window (lo, hi].
    let mut bracket = (lo.clone(), hi.clone());
    for (rlo, rhi) in radical.isolate_real_roots() {
        let ilo = if rlo > bracket.0 { rlo } else { bracket.0.clone() };
        let ihi = if rhi < bracket.1 { rhi } else { bracket.1.clone() };
        if ilo < ihi && radical.count_real_roots_in(&ilo, &ihi) == 1 {
            bracket = (ilo, ihi);
            break;
        }
    }
    if let Some(r) = radical.rational_root_in(&bracket.0, &bracket.1) {
        return Ok(CanonicalLambda::Rational(r));
    }
    let (lo, hi) = radical.refine_interval(bracket.0, bracket.1, &rat(1, 1_000_000));
    Ok(CanonicalLambda::Algebraic { poly: radical, lo, hi, sign: sj })
}

/// Whether a binary quartic is (a positive multiple of) a fourth power of
/// a linear form: exactly the rank-one Hankel case among psd forms.
pub fn is_fourth_power(p: &QForm) -> bool {
    if p.is_zero() {
        return false;
    }
    let h = catalecticant(p).expect("binary quartic");
    let rank = 3 - h.kernel_basis().len();
    rank == 1
}

/// Membership of a binary quartic in the cone `B_τ`, τ ∈ [−1/3, 0]:
/// the closed convex hull of the orbits of `f_λ` for λ ≥ τ.  Decided by
/// the exact comparison of `K(p)` against `φ(τ)` for pd forms; forms with
/// zeros are members only in the degenerate cases (fourth powers always,
/// any psd form when τ = −1/3).
pub fn btau_membership(p: &QForm, tau: &Rat) -> Result<MembershipVerdict, QuarticsError> {
    if p.nvars() != 2 || (p.degree() != 4 && !p.is_zero()) {
        return Err(QuarticsError::NotBinaryQuartic(p.nvars(), p.degree()));
    }
    if tau < &rat(-1, 3) || tau > &Rat::zero() {
        return Err(QuarticsError::TauOutOfRange(tau.clone()));
    }
    if p.is_zero() {
        return Ok(MembershipVerdict::Boundary);
    }
    match binary_psd_status(p).expect("nonzero binary form") {
        PsdStatus::Indefinite => Ok(MembershipVerdict::Outside),
        PsdStatus::PositiveDefinite => {
            let inv = invariants(p)?;
            Ok(match compare_k_phi(&inv, tau).ordering {
                Ordering::Greater => MembershipVerdict::Interior,
                Ordering::Equal => MembershipVerdict::Boundary,
                Ordering::Less => MembershipVerdict::Outside,
            })
        }
        PsdStatus::PsdWithZeros(_) => {
            if is_fourth_power(p) {
                Ok(MembershipVerdict::Boundary)
            } else if tau == &rat(-1, 3) {
                // B_{-1/3} is the full psd cone; forms with zeros sit on
                // its boundary.
                Ok(MembershipVerdict::Boundary)
            } else {
                Ok(MembershipVerdict::Outside)
            }
        }
    }
}

/// The dual parameter: the dual of `B_τ` is `B_{U(τ)}`.
pub fn dual_tau(tau: &Rat) -> Result<Rat, QuarticsError> {
    if tau < &rat(-1, 3) || tau > &Rat::zero() {
        return Err(QuarticsError::TauOutOfRange(tau.clone()));
    }
    map_u(tau)
}

/// Exact check, in the quadratic tower, that `ν₀ = 1 − √(4/3)` is a fixed
/// point of `U`, i.e. that `B_{ν₀}` is self-dual.
pub fn nu0_is_self_dual() -> bool {
    let nu0 = Tower::from_int(1).sub_ref(
        &Tower::from_rat(rat(4, 3)).sqrt().expect("4/3 is positive"),
    );
    // U(z) = -(1+3z)/(3-3z) evaluated in the tower.
    let three = Tower::from_int(3);
    let num = Tower::from_int(1).add_ref(&three.mul_ref(&nu0)).neg_ref();
    let den = three.sub_ref(&three.mul_ref(&nu0));
    let u = num.div_ref(&den);
    u == nu0
}

/// `Ψ(a,b,c,d; r,s) = [f_r(x,y), f_s(ax+by, cx+dy)]` by its expansion.
pub fn psi_value(a: &Rat, b: &Rat, c: &Rat, d: &Rat, r: &Rat, s: &Rat) -> Rat {
    let sq = |x: &Rat| x * x;
    let (a2, b2, c2, d2) = (sq(a), sq(b), sq(c), sq(d));
    &a2 * &a2
        + &b2 * &b2
        + &c2 * &c2
        + &d2 * &d2
        + rat_i(6) * r * (&a2 * &b2 + &c2 * &d2)
        + rat_i(6) * s * (&a2 * &c2 + &b2 * &d2)
        + rat_i(6) * r * s * (&a2 * &d2 + rat_i(4) * a * b * c * d + &b2 * &c2)
}

/// Ψ(·; r, s) as a quartic form in the four matrix entries.
pub fn psi_form(r: &Rat, s: &Rat) -> QForm {
    let rs = r * s;
    let terms: Vec<(Vec<u32>, Rat)> = vec![
        (vec![4, 0, 0, 0], rat_i(1)),
        (vec![0, 4, 0, 0], rat_i(1)),
        (vec![0, 0, 4, 0], rat_i(1)),
        (vec![0, 0, 0, 4], rat_i(1)),
        (vec![2, 2, 0, 0], rat_i(6) * r),
        (vec![0, 0, 2, 2], rat_i(6) * r),
        (vec![2, 0, 2, 0], rat_i(6) * s),
        (vec![0, 2, 0, 2], rat_i(6) * s),
        (vec![2, 0, 0, 2], rat_i(6) * &rs),
        (vec![0, 2, 2, 0], rat_i(6) * &rs),
        (vec![1, 1, 1, 1], rat_i(24) * &rs),
    ];
    Form::from_terms(4, 4, terms).expect("Ψ exponents are consistent")
}

/// The four-square certificate for `2(1−r)·Ψ(a,b,c,d; r, U(r))`, valid for
/// r ∈ [−1/3, 0] where all four weights are non-negative.
pub fn psi_certificate(r: &Rat) -> Result<Certificate, QuarticsError> {
    if r < &rat(-1, 3) || r > &Rat::zero() {
        return Err(QuarticsError::CertificateRange(r.clone()));
    }
    let u = map_u(r)?;
    let target = psi_form(r, &u)
        .scale(&(rat_i(2) * (rat_i(1) - r)))
        .to_tower();
    let quad = |cs: [i64; 4]| -> crate::forms::TForm {
        Form::from_terms(
            4,
            2,
            (0..4).map(|k| {
                let mut e = vec![0u32; 4];
                e[k] = 2;
                (e, rat_i(cs[k]))
            }),
        )
        .expect("diagonal quadratic")
        .to_tower()
    };
    let ab_cd: crate::forms::TForm = Form::from_terms(
        4,
        2,
        [(vec![1, 1, 0, 0], rat_i(1)), (vec![0, 0, 1, 1], rat_i(1))],
    )
    .expect("bilinear quadratic")
    .to_tower();
    let w = Tower::from_rat;
    let terms = vec![
        CertificateTerm {
            weight: w((rat_i(1) + r) * (rat_i(1) + rat_i(3) * r)),
            form: quad([1, 1, -1, -1]),
            exponent: 2,
        },
        CertificateTerm {
            weight: w(rat_i(-4) * r),
            form: quad([1, -1, 1, -1]),
            exponent: 2,
        },
        CertificateTerm {
            weight: w((rat_i(1) + r) * (rat_i(1) - rat_i(3) * r)),
            form: quad([1, -1, -1, 1]),
            exponent: 2,
        },
        CertificateTerm {
            weight: w(rat_i(-8) * r * (rat_i(1) + rat_i(3) * r)),
            form: ab_cd,
            exponent: 2,
        },
    ];
    Ok(Certificate::new(format!("psi-four-squares r={}", r), terms, target))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_of_the_quartic_family() {
        for l in [rat(1, 2), rat(-1, 4), rat_i(3)] {
            let inv = invariants(&flam(&l)).unwrap();
            assert_eq!(inv.i, rat_i(1) + rat_i(3) * &l * &l);
            assert_eq!(inv.j, &l - &l * &l * &l);
        }
        let x4: QForm = Form::monomial(2, &[4, 0], rat_i(1));
        let inv = invariants(&x4).unwrap();
        assert_eq!(inv.i, rat_i(0));
        assert_eq!(inv.j, rat_i(0));
    }

    #[test]
    fn invariants_are_covariant() {
        let p = flam(&rat(2, 7));
        let m = SquareMatrix::from_i64(&[&[2, 1], &[-1, 3]]);
        let det = rat_i(2 * 3 - (-1));
        let q = p.compose(&m).unwrap();
        let ip = invariants(&p).unwrap();
        let iq = invariants(&q).unwrap();
        let d4 = &det * &det * &det * &det;
        assert_eq!(iq.i, &d4 * &ip.i);
        assert_eq!(iq.j, &d4 * &det * &det * &ip.j);
    }

    #[test]
    fn fractional_linear_involutions() {
        assert_eq!(map_t(&rat_i(0)).unwrap(), rat_i(1));
        assert_eq!(map_t(&rat(1, 3)).unwrap(), rat(1, 3));
        assert_eq!(map_t(&map_t(&rat(1, 7)).unwrap()).unwrap(), rat(1, 7));
        assert_eq!(map_u(&rat_i(0)).unwrap(), rat(-1, 3));
        assert_eq!(map_u(&map_u(&rat(-1, 5)).unwrap()).unwrap(), rat(-1, 5));
        assert!(map_t(&rat(-1, 3)).is_err());
        assert!(map_u(&rat_i(1)).is_err());
    }

    #[test]
    fn canonical_lambda_fixes_the_family() {
        for l in [rat(1, 4), rat(-1, 4), rat(1, 3), rat_i(0), rat(3, 10)] {
            assert_eq!(
                canonical_lambda(&flam(&l)).unwrap(),
                CanonicalLambda::Rational(l.clone()),
                "λ = {}",
                l
            );
        }
        // Beyond 1/3 the family folds back through T.
        for mu in [rat(1, 2), rat_i(1), rat_i(4)] {
            assert_eq!(
                canonical_lambda(&flam(&mu)).unwrap(),
                CanonicalLambda::Rational(map_t(&mu).unwrap()),
                "μ = {}",
                mu
            );
        }
        // (x²+y²)² is equivalent to f_{1/3}.
        let circle = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(2), rat_i(0), rat_i(1)]);
        assert_eq!(canonical_lambda(&circle).unwrap(), CanonicalLambda::Rational(rat(1, 3)));
        // Not pd: error.
        assert_eq!(
            canonical_lambda(&flam(&rat(-1, 3))),
            Err(QuarticsError::NotPositiveDefinite)
        );
    }

    #[test]
    fn canonical_lambda_is_similarity_invariant() {
        let p = flam(&rat(1, 5));
        let m = SquareMatrix::from_i64(&[&[3, -2], &[1, 4]]);
        let q = p.compose(&m).unwrap();
        assert_eq!(canonical_lambda(&q).unwrap(), CanonicalLambda::Rational(rat(1, 5)));
    }

    #[test]
    fn canonical_lambda_algebraic_case() {
        // A generic pd quartic whose canonical parameter is irrational.
        let p: QForm = Form::binary_from_raw(&[rat_i(2), rat_i(1), rat_i(1), rat_i(-1), rat_i(3)]);
        assert!(matches!(binary_psd_status(&p).unwrap(), PsdStatus::PositiveDefinite));
        match canonical_lambda(&p).unwrap() {
            CanonicalLambda::Rational(r) => panic!("expected algebraic, got {}", r),
            CanonicalLambda::Algebraic { poly, lo, hi, sign } => {
                assert_eq!(poly.count_real_roots_in(&lo, &hi), 1);
                let inv = invariants(&p).unwrap();
                assert_eq!(sign, crate::rat::rat_sign(&inv.j));
                assert!(lo >= rat(-1, 3) && hi <= rat(1, 3));
            }
        }
    }

    #[test]
    fn btau_membership_of_the_family() {
        let tau = rat(-1, 4);
        // Boundary at λ = τ and λ = T(τ); interior strictly between.
        assert_eq!(btau_membership(&flam(&tau), &tau).unwrap(), MembershipVerdict::Boundary);
        let t_tau = map_t(&tau).unwrap();
        assert_eq!(btau_membership(&flam(&t_tau), &tau).unwrap(), MembershipVerdict::Boundary);
        assert_eq!(btau_membership(&flam(&rat_i(0)), &tau).unwrap(), MembershipVerdict::Interior);
        assert_eq!(btau_membership(&flam(&rat(1, 3)), &tau).unwrap(), MembershipVerdict::Interior);
        assert_eq!(
            btau_membership(&flam(&rat(-3, 10)), &tau).unwrap(),
            MembershipVerdict::Outside
        );
        assert_eq!(btau_membership(&flam(&rat_i(6)), &tau).unwrap(), MembershipVerdict::Outside);
    }

    #[test]
    fn btau_membership_degenerate_forms() {
        // x²y² is psd-with-zeros: member only of the full psd cone.
        let p: QForm = Form::monomial(2, &[2, 2], rat_i(1));
        assert_eq!(btau_membership(&p, &rat(-1, 3)).unwrap(), MembershipVerdict::Boundary);
        assert_eq!(btau_membership(&p, &rat(-1, 4)).unwrap(), MembershipVerdict::Outside);
        assert_eq!(btau_membership(&p, &rat_i(0)).unwrap(), MembershipVerdict::Outside);
        // Fourth powers belong to every B_τ.
        let x4 = crate::forms::power_form(&[rat_i(1), rat(1, 2)], 4);
        for tau in [rat(-1, 3), rat(-1, 4), rat_i(0)] {
            assert_eq!(btau_membership(&x4, &tau).unwrap(), MembershipVerdict::Boundary);
        }
        // The zero form is a member of every cone.
        assert_eq!(
            btau_membership(&Form::zero(2, 4), &rat_i(0)).unwrap(),
            MembershipVerdict::Boundary
        );
        assert!(btau_membership(&x4, &rat(1, 10)).is_err());
    }

    #[test]
    fn duality_parameters() {
        assert_eq!(dual_tau(&rat_i(0)).unwrap(), rat(-1, 3));
        assert_eq!(dual_tau(&rat(-1, 3)).unwrap(), rat_i(0));
        let tau = rat(-1, 5);
        assert_eq!(dual_tau(&dual_tau(&tau).unwrap()).unwrap(), tau);
        assert!(nu0_is_self_dual());
    }

    #[test]
    fn phi_duality_identity() {
        // φ²(λ) + φ²(U(λ)) = 1/27 exactly.
        for k in -9..9 {
            let l = rat(k, 30);
            let u = map_u(&l).unwrap();
            assert_eq!(phi_squared(&l) + phi_squared(&u), rat(1, 27), "λ = {}", l);
        }
    }

    #[test]
    fn psi_values_and_certificate() {
        // Ψ(1,1,1,−1; r, U(r)) = 0.
        for r in [rat(-1, 4), rat(-1, 3), rat(-1, 10)] {
            let u = map_u(&r).unwrap();
            let v = psi_value(&rat_i(1), &rat_i(1), &rat_i(1), &rat_i(-1), &r, &u);
            assert_eq!(v, rat_i(0), "r = {}", r);
        }
        // Ψ(1,0,0,0; r,s) = 1.
        assert_eq!(
            psi_value(&rat_i(1), &rat_i(0), &rat_i(0), &rat_i(0), &rat(-1, 7), &rat(2, 3)),
            rat_i(1)
        );
        // The expansion is the inner product [f_r, f_s∘M].
        let (r, s) = (rat(-1, 5), rat(1, 6));
        let m = SquareMatrix::from_i64(&[&[2, -3], &[1, 4]]);
        let composed = flam(&s).compose(&m).unwrap();
        let ip = flam(&r).inner_product(&composed).unwrap();
        assert_eq!(psi_value(&rat_i(2), &rat_i(-3), &rat_i(1), &rat_i(4), &r, &s), ip);
        // The four-square certificate verifies exactly on a grid of r.
        for r in [rat_i(0), rat(-1, 8), rat(-1, 4), rat(-1, 3)] {
            psi_certificate(&r).unwrap().verify().unwrap();
        }
        assert!(psi_certificate(&rat(1, 10)).is_err());
    }

    #[test]
    fn psi_form_matches_value() {
        let (r, s) = (rat(-2, 7), rat(1, 9));
        let f = psi_form(&r, &s);
        let pt = [rat_i(2), rat(-1, 2), rat_i(3), rat(1, 5)];
        assert_eq!(
            f.evaluate(&pt).unwrap(),
            psi_value(&pt[0], &pt[1], &pt[2], &pt[3], &r, &s)
        );
    }

    #[test]
    fn pairing_vanishes_at_the_dual_parameter() {
        // [f_λ, g_{U(λ)+τ}] = 12(1−λ)τ; in particular zero at τ = 0.
        for l in [rat(-1, 4), rat(-1, 6), rat(1, 8)] {
            let u = map_u(&l).unwrap();
            for t in [rat_i(0), rat(1, 5), rat(-1, 9)] {
                let ip = flam(&l).inner_product(&glam(&(&u + &t))).unwrap();
                assert_eq!(ip, rat_i(12) * (rat_i(1) - &l) * &t);
            }
        }
    }
}
