//! Membership and boundary analysis for the cones of convex binary forms.
//!
//! The deciding criterion is exact: a psd binary form `p` of degree `2r`
//! is convex iff the degree `4r−4` form `Θ_p` (the Hessian determinant up
//! to the factor `(2r)²(2r−1)²`) is psd, on the boundary iff `Θ_p` is psd
//! with zeros.  On top of the kernel sit the ring-trinomial family with
//! its sharp `a + 1/a ≤ 8r + 18 + 8/r` bound, the extremal sextic family
//! `q_λ`, the trinomial boundary families, the `(A,B)` section geometry of
//! the even sextics, and the convexification search `(x²+y²)^N·p`.

use crate::forms::{Form, QForm, SquareMatrix, TForm};
use crate::rat::{binomial, rat, rat_i, rat_sign, Rat};
use crate::realroots::{binary_psd_status, q_membership, PsdStatus, ZeroPoint};
use crate::scalar::Scalar;
use crate::tower::Tower;
use crate::verdict::MembershipVerdict;
use num::Zero;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConvexityError {
    #[error("operation needs a binary form, got {0} variables")]
    NotBinary(usize),
    #[error("operation needs even degree ≥ 2, got {0}")]
    BadDegree(u32),
    #[error("form is not positive semidefinite")]
    NotPsd,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("no convexifying exponent found up to N = {0}; the search cap is a bug guard")]
    CapExceeded(u32),
}

/// The coefficients `b_m` of `Θ_p`, from the normalised `a_j` of `p`:
/// `b_m = Σ_j (C(d−2,j)·C(d−2,m−j) − C(d−2,j−1)·C(d−2,m−j+1))·a_j·a_{m+2−j}`.
pub fn theta<K: Scalar>(p: &Form<K>) -> Result<Form<K>, ConvexityError> {
    if p.nvars() != 2 {
        return Err(ConvexityError::NotBinary(p.nvars()));
    }
    let d = p.degree();
    if d < 2 {
        return Err(ConvexityError::BadDegree(d));
    }
    let a: Vec<K> = p.binary_a_coeffs();
    let a_at = |i: i64| -> K {
        if i < 0 || i > d as i64 {
            K::zero()
        } else {
            a[i as usize].clone()
        }
    };
    let dd = d as i64;
    let out_deg = 2 * dd - 4;
    let mut raw = vec![K::zero(); (out_deg + 1) as usize];
    for m in 0..=out_deg {
        let mut bm = K::zero();
        for j in 0..dd {
            let c = binomial(dd - 2, j) * binomial(dd - 2, m - j)
                - binomial(dd - 2, j - 1) * binomial(dd - 2, m - j + 1);
            if c == 0.into() {
                continue;
            }
            let c = K::from_rat(&Rat::from_integer(c));
            bm = bm.add_ref(&c.mul_ref(&a_at(j)).mul_ref(&a_at(m + 2 - j)));
        }
        raw[m as usize] = bm;
    }
    Ok(Form::binary_from_raw(&raw))
}

/// Membership in the cone of convex binary forms of the form's degree:
/// `Outside` if `p` is not psd or `Θ_p` is indefinite, `Boundary` if
/// `Θ_p` is psd with zeros (or vanishes), `Interior` if `Θ_p` is pd.
pub fn convex_status<K: Scalar>(p: &Form<K>) -> Result<MembershipVerdict, ConvexityError> {
    if p.nvars() != 2 {
        return Err(ConvexityError::NotBinary(p.nvars()));
    }
    if p.is_zero() {
        return Ok(MembershipVerdict::Boundary);
    }
    if let PsdStatus::Indefinite = binary_psd_status(p).expect("nonzero binary form") {
        return Ok(MembershipVerdict::Outside);
    }
    if p.degree() < 2 {
        // Positive constants are trivially convex.
        return Ok(MembershipVerdict::Interior);
    }
    let th = theta(p)?;
    if th.is_zero() {
        return Ok(MembershipVerdict::Boundary);
    }
    Ok(match binary_psd_status(&th).expect("nonzero theta") {
        PsdStatus::PositiveDefinite => MembershipVerdict::Interior,
        PsdStatus::PsdWithZeros(_) => MembershipVerdict::Boundary,
        PsdStatus::Indefinite => MembershipVerdict::Outside,
    })
}

/// `(x²+y²)^r · (x² + a·y²)` with exact rational `a`.
pub fn ring_trinomial(r: u32, a: &Rat) -> QForm {
    let circle: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(1)]);
    let quad: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), a.clone()]);
    circle.pow(r).mul(&quad).expect("binary product")
}

/// Convexity of `(x²+y²)^r(x²+a·y²)` decided by the exact inequality
/// `a + 1/a ≤ 8r + 18 + 8/r`; strict means interior, equality boundary.
pub fn ring_trinomial_status(r: u32, a: &Rat) -> Result<MembershipVerdict, ConvexityError> {
    if r < 1 {
        return Err(ConvexityError::BadParameter("r must be ≥ 1".into()));
    }
    if a.sign() <= 0 {
        return Err(ConvexityError::BadParameter(format!("a = {} must be positive", a)));
    }
    let lhs = a + rat_i(1) / a;
    let rhs = rat_i(8 * r as i64) + rat_i(18) + rat(8, r as i64);
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => MembershipVerdict::Interior,
        std::cmp::Ordering::Equal => MembershipVerdict::Boundary,
        std::cmp::Ordering::Greater => MembershipVerdict::Outside,
    })
}

/// The two positive roots of `a + 1/a = 8r + 18 + 8/r`, in the quadratic
/// tower: the exact endpoints of the convexity window of the family.
pub fn trinomial_bound(r: u32) -> (Tower, Tower) {
    assert!(r >= 1);
    let s = rat_i(8 * r as i64) + rat_i(18) + rat(8, r as i64);
    // Roots of a² − s·a + 1 = 0.
    let disc = &s * &s - rat_i(4);
    let root = Tower::from_rat(disc).sqrt().expect("discriminant is positive for r ≥ 1");
    let half = Tower::from_rat(rat(1, 2));
    let s_t = Tower::from_rat(s);
    let lo = s_t.sub_ref(&root).mul_ref(&half);
    let hi = s_t.add_ref(&root).mul_ref(&half);
    (lo, hi)
}

/// General trinomial `a·x^(2r) + b·x^(2r−k)y^k + c·y^(2r)`.
pub fn trinomial_form(r: u32, k: u32, a: &Rat, b: &Rat, c: &Rat) -> Result<QForm, ConvexityError> {
    if k == 0 || k >= 2 * r {
        return Err(ConvexityError::BadParameter(format!("need 0 < k < 2r, got k={} r={}", k, r)));
    }
    let d = 2 * r;
    Form::from_terms(
        2,
        d,
        [
            (vec![d, 0], a.clone()),
            (vec![d - k, k], b.clone()),
            (vec![0, d], c.clone()),
        ],
    )
    .map_err(|e| ConvexityError::BadParameter(e.to_string()))
}

pub fn trinomial_status(
    r: u32,
    k: u32,
    a: &Rat,
    b: &Rat,
    c: &Rat,
) -> Result<MembershipVerdict, ConvexityError> {
    convex_status(&trinomial_form(r, k, a, b, c)?)
}

/// The boundary trinomial family
/// `h_{r,k} = (r−k)(2(r−k)−1)²·x^(2r) + r(2r−1)(2k−1)(2r−2k−1)·x^(2r−2k)y^(2k) + k(2k−1)²·y^(2r)`.
pub fn hrk_family(r: u32, k: u32) -> Result<QForm, ConvexityError> {
    if k < 1 || k + 1 > r {
        return Err(ConvexityError::BadParameter(format!("need 1 ≤ k ≤ r−1, got r={} k={}", r, k)));
    }
    let (ri, ki) = (r as i64, k as i64);
    let c0 = rat_i((ri - ki) * (2 * (ri - ki) - 1) * (2 * (ri - ki) - 1));
    let cm = rat_i(ri * (2 * ri - 1) * (2 * ki - 1) * (2 * ri - 2 * ki - 1));
    let c1 = rat_i(ki * (2 * ki - 1) * (2 * ki - 1));
    trinomial_form(r, 2 * k, &c0, &cm, &c1)
}

/// Checks the structural factorisation
/// `Θ(h_{r,k}) = x^(2r−2−2k) · y^(2k−2) · (x²−y²)² · g` with `g` a sum of
/// even-exponent terms with positive coefficients (hence psd).
pub fn hrk_theta_factorisation(r: u32, k: u32) -> Result<bool, ConvexityError> {
    let h = hrk_family(r, k)?;
    let th = theta(&h)?;
    let mono: QForm = Form::monomial(2, &[2 * r - 2 - 2 * k, 2 * k - 2], rat_i(1));
    let Some(rest) = th.binary_div_exact(&mono) else {
        return Ok(false);
    };
    let split: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(-1)]);
    let split2 = split.pow(2);
    let Some(g) = rest.binary_div_exact(&split2) else {
        return Ok(false);
    };
    let even_positive = g.terms().all(|(e, c)| e.0[0] % 2 == 0 && e.0[1] % 2 == 0 && c.sign() > 0);
    Ok(even_positive)
}

/// The extremal convex sextic family
/// `q_λ = x⁶ + 6λx⁵y + 15λ²x⁴y² + 20λ³x³y³ + 15λ²x²y⁴ + 6λxy⁵ + y⁶`.
pub fn qlam(l: &Rat) -> QForm {
    let l2 = l * l;
    let l3 = &l2 * l;
    Form::binary_from_a(&[rat_i(1), l.clone(), l2.clone(), l3, l2, l.clone(), rat_i(1)])
}

pub fn q_lambda_status(l: &Rat) -> MembershipVerdict {
    convex_status(&qlam(l)).expect("q_λ is a binary sextic")
}

/// `C_λ`: the cofactor in `Θ(q_λ) = (1−λ²)·x²y²·C_λ(x,y)`.
pub fn c_lambda(l: &Rat) -> QForm {
    let l2 = l * l;
    let c40 = rat_i(6) * &l2;
    let c31 = rat_i(4) * l + rat_i(20) * &l2 * l;
    let c22 = rat_i(1) + rat_i(15) * &l2 + rat_i(20) * &l2 * &l2;
    Form::binary_from_raw(&[c40.clone(), c31.clone(), c22, c31, c40])
}

/// `D_λ = C_λ(x+y, x−y)`, the rotated even quartic whose psd range gives
/// the `|λ| ≤ 1/2` window.
pub fn d_lambda(l: &Rat) -> QForm {
    c_lambda(l)
        .compose(&SquareMatrix::from_i64(&[&[1, 1], &[1, -1]]))
        .expect("binary substitution")
}

/// Discriminant of `E_λ(X, Y)` where `D_λ(x,y) = E_λ(x², y²)`:
/// `128·λ²(1−λ²)(1−10λ²)`.
pub fn e_lambda_discriminant(l: &Rat) -> Rat {
    let l2 = l * l;
    rat_i(128) * &l2 * (rat_i(1) - &l2) * (rat_i(1) - rat_i(10) * &l2)
}

/// Result of matching a psd binary sextic against the extremal family.
#[derive(Clone, PartialEq, Debug)]
pub enum ExtremalMatch {
    /// Equivalent to `q_λ` for the returned rational λ with 0 < λ ≤ 1/2.
    Extremal(Rat),
    /// A sixth power of a linear form (Θ vanishes identically).
    PerfectPower,
    NotExtremal,
    /// The deciding zeros (or the recovered parameter) are irrational; the
    /// normalisation needs exact coordinates, so no claim is made.
    Unknown,
}

/// Attempts the boundary normalisation for extremal convex sextics: locate
/// two rational projective zeros of `Θ_p`, move them to `(1,0)` and `(0,1)`,
/// read off the geometric-progression coefficients, and recover
/// `λ = √(r·s)` when it is an exact rational in `(0, 1/2]`.
pub fn match_extremal_k26(p: &QForm) -> Result<ExtremalMatch, ConvexityError> {
    if p.nvars() != 2 {
        return Err(ConvexityError::NotBinary(p.nvars()));
    }
    if p.degree() != 6 {
        return Err(ConvexityError::BadDegree(p.degree()));
    }
    if binary_psd_status(p).map_err(|_| ConvexityError::NotPsd)? == PsdStatus::Indefinite {
        return Err(ConvexityError::NotPsd);
    }
    let th = theta(p)?;
    if th.is_zero() {
        return Ok(ExtremalMatch::PerfectPower);
    }
    let zeros = match binary_psd_status(&th).expect("nonzero theta") {
        PsdStatus::PositiveDefinite => return Ok(ExtremalMatch::NotExtremal),
        PsdStatus::Indefinite => return Ok(ExtremalMatch::NotExtremal),
        PsdStatus::PsdWithZeros(zs) => zs,
    };
    let mut rational_zeros: Vec<(Rat, Rat)> = Vec::new();
    let mut irrational = false;
    for z in &zeros {
        match &z.point {
            ZeroPoint::Rational(x, y) => rational_zeros.push((x.clone(), y.clone())),
            ZeroPoint::Isolated { .. } => irrational = true,
        }
    }
    if rational_zeros.len() < 2 {
        return Ok(if irrational { ExtremalMatch::Unknown } else { ExtremalMatch::NotExtremal });
    }
    let mut saw_irrational_parameter = irrational;
    for i in 0..rational_zeros.len() {
        for j in 0..rational_zeros.len() {
            if i == j {
                continue;
            }
            let (x1, y1) = rational_zeros[i].clone();
            let (x2, y2) = rational_zeros[j].clone();
            let m = SquareMatrix::from_rows(vec![vec![x1, x2], vec![y1, y2]]);
            if m.det().is_zero() {
                continue;
            }
            let moved = p.compose(&m).expect("binary substitution");
            let a = moved.binary_a_coeffs();
            if a[0].is_zero() || a[6].is_zero() {
                continue;
            }
            let r = &a[1] / &a[0];
            if a[2] != &r * &r * &a[0] || a[3] != &r * &r * &r * &a[0] {
                continue;
            }
            let s = &a[5] / &a[6];
            if a[4] != &s * &s * &a[6] || a[3] != &s * &s * &s * &a[6] {
                continue;
            }
            if r.is_zero() || s.is_zero() {
                return Ok(ExtremalMatch::NotExtremal);
            }
            let rs = &r * &s;
            if rat_sign(&rs) <= 0 {
                continue;
            }
            match crate::rat::rat_sqrt_exact(&rs) {
                Some(lam) => {
                    if lam > Rat::zero() && lam <= rat(1, 2) {
                        return Ok(ExtremalMatch::Extremal(lam));
                    }
                    return Ok(ExtremalMatch::NotExtremal);
                }
                None => {
                    // Matches the family shape at an irrational parameter.
                    saw_irrational_parameter = true;
                }
            }
        }
    }
    Ok(if saw_irrational_parameter { ExtremalMatch::Unknown } else { ExtremalMatch::NotExtremal })
}

/// A convexification result: the least certified `N` with `(x²+y²)^N·p`
/// convex, its Θ certificate, and the sampled `(T² + U)/2` upper-bound
/// estimate for comparison.
#[derive(Clone, Debug)]
pub struct Convexification {
    pub exponent: u32,
    pub theta_certificate: QForm,
    pub estimate: f64,
}

/// Searches `N = 0, 1, 2, …` for the least exponent making
/// `(x²+y²)^N·p` convex, certifying each verdict through Θ exactly.
/// Requires a pd input (existence is then guaranteed); the cap only
/// guards against bugs.
pub fn convexify(p: &QForm, n_max: u32) -> Result<Convexification, ConvexityError> {
    if p.nvars() != 2 {
        return Err(ConvexityError::NotBinary(p.nvars()));
    }
    match binary_psd_status(p) {
        Ok(PsdStatus::PositiveDefinite) => {}
        _ => return Err(ConvexityError::NotPositiveDefinite),
    }
    let circle: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(1)]);
    let estimate = crate::numeric::convexify_estimate(p);
    let mut q = p.clone();
    for n in 0..=n_max {
        if convex_status(&q)? != MembershipVerdict::Outside {
            return Ok(Convexification {
                exponent: n,
                theta_certificate: theta(&q)?,
                estimate,
            });
        }
        q = q.mul(&circle).expect("binary product");
    }
    Err(ConvexityError::CapExceeded(n_max))
}

/// The even sextic section family `g_{A,B} = x⁶ + 15A·x⁴y² + 15B·x²y⁴ + y⁶`.
pub fn g_ab(a: &Rat, b: &Rat) -> QForm {
    Form::binary_from_raw(&[
        rat_i(1),
        rat_i(0),
        rat_i(15) * a,
        rat_i(0),
        rat_i(15) * b,
        rat_i(0),
        rat_i(1),
    ])
}

/// Verdicts of `g_{A,B}` against the psd cone, the sums of sixth powers,
/// and the convex cone.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SectionVerdicts {
    pub in_p: MembershipVerdict,
    pub in_q: MembershipVerdict,
    pub in_k: MembershipVerdict,
}

pub fn sextic_section(a: &Rat, b: &Rat) -> SectionVerdicts {
    let g = g_ab(a, b);
    let in_p = match binary_psd_status(&g).expect("g_{A,B} is nonzero") {
        PsdStatus::PositiveDefinite => MembershipVerdict::Interior,
        PsdStatus::PsdWithZeros(_) => MembershipVerdict::Boundary,
        PsdStatus::Indefinite => MembershipVerdict::Outside,
    };
    let in_q = q_membership(&g).expect("even sextic");
    let in_k = convex_status(&g).expect("binary sextic");
    SectionVerdicts { in_p, in_q, in_k }
}

/// Membership of the axis point `g_{A,0}` in the convex cone reduces to a
/// rational sign: member iff `A ≥ 0` and `12A³ ≤ 1` (the irrational
/// intercept at `A = 12^(−1/3)` needs no cube roots this way).  Axis
/// members always sit on the boundary.
pub fn k_axis_intercept_status(a: &Rat) -> MembershipVerdict {
    if a.sign() < 0 {
        return MembershipVerdict::Outside;
    }
    let cube_sign = rat_sign(&(rat_i(12) * a * a * a - rat_i(1)));
    if cube_sign <= 0 {
        MembershipVerdict::Boundary
    } else {
        MembershipVerdict::Outside
    }
}

/// One row of the region scan.
#[derive(Clone, Debug)]
pub struct SectionRow {
    pub a: Rat,
    pub b: Rat,
    pub verdicts: SectionVerdicts,
}

/// Scans `[a_min, a_max] × [b_min, b_max]` on the exact rational grid with
/// the given step; rows come back in deterministic row-major order
/// regardless of the parallel schedule.
pub fn region_scan(
    a_min: &Rat,
    a_max: &Rat,
    b_min: &Rat,
    b_max: &Rat,
    step: &Rat,
) -> Vec<SectionRow> {
    assert!(step.sign() > 0, "step must be positive");
    let mut cells = Vec::new();
    let mut a = a_min.clone();
    while &a <= a_max {
        let mut b = b_min.clone();
        while &b <= b_max {
            cells.push((a.clone(), b.clone()));
            b = &b + step;
        }
        a = &a + step;
    }
    cells
        .into_par_iter()
        .map(|(a, b)| {
            let verdicts = sextic_section(&a, &b);
            SectionRow { a, b, verdicts }
        })
        .collect()
}

/// The distinguished extremal octic `(x²+y²)⁴ + (8/√7)·xy(x²−y²)(x²+y²)²`
/// together with its Θ form, which collapses to the rational product
/// `3072·x²y²(x²−y²)²(x²+y²)²`.
pub fn k28_fixture() -> (TForm, TForm) {
    let circle: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(1)]);
    let xy: QForm = Form::monomial(2, &[1, 1], rat_i(1));
    let split: QForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(-1)]);
    let base = circle.pow(4).to_tower();
    let coeff = Tower::from_rat(rat(8, 7)).mul_ref(&Tower::from_rat(rat_i(7)).sqrt().expect("7 > 0"));
    let odd = xy
        .mul(&split)
        .and_then(|f| f.mul(&circle.pow(2)))
        .expect("binary products")
        .to_tower()
        .scale(&coeff);
    let p = base.add(&odd).expect("same degree");
    let th = theta(&p).expect("binary octic");
    (p, th)
}
