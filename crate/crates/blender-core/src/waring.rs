//! Sums of fourth powers of binary forms: the dual ternary quartic `H_q`,
//! the shape-restricted boundary test for the dual cone, even symmetric
//! octics with their exact membership trichotomy, and the constructive
//! decomposition of every member into (at most) two squares of psd
//! quartics, with nested radicals housed in the quadratic tower.

use crate::cert::{Certificate, CertificateTerm};
use crate::forms::{index_set, Form, QForm, TForm};
use crate::rat::{factorial, rat, rat_i, rat_sign, Rat};
use crate::realroots::binary_psd_status;
use crate::scalar::Scalar;
use crate::tower::Tower;
use crate::verdict::MembershipVerdict;
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WaringError {
    #[error("dual octic must have d₃ = d₄ = d₅ = 0, got {0}")]
    ShapeViolation(String),
    #[error("form has degree {0}, expected {1}")]
    DegreeMismatch(u32, u32),
    #[error("input is outside the cone: {0}")]
    OutsideInput(String),
    #[error("λ = {0} outside [0, 1]")]
    LambdaOutOfRange(Rat),
    #[error("parameter below -2: {0}")]
    BelowMinusTwo(Rat),
    #[error("tower arithmetic failure: {0}")]
    Tower(String),
}

fn zeros9() -> [Rat; 9] {
    std::array::from_fn(|_| Rat::zero())
}

/// A binary octic in the dual normalisation `q = Σ C(8,k)·d_k·x^(8−k)y^k`.
#[derive(Clone, PartialEq, Debug)]
pub struct OcticDual {
    pub d: [Rat; 9],
}

impl OcticDual {
    pub fn new(d: [Rat; 9]) -> OcticDual {
        OcticDual { d }
    }

    pub fn from_form(q: &QForm) -> Result<OcticDual, WaringError> {
        if q.degree() != 8 || q.nvars() != 2 {
            return Err(WaringError::DegreeMismatch(q.degree(), 8));
        }
        let a = q.binary_a_coeffs();
        Ok(OcticDual { d: a.try_into().expect("nine octic coefficients") })
    }

    pub fn to_form(&self) -> QForm {
        Form::binary_from_a(&self.d)
    }

    /// The even symmetric dual element `((d₀, 28d₂, 70d₄))`.
    pub fn even_symmetric(d0: Rat, d2: Rat, d4: Rat) -> OcticDual {
        let mut d = zeros9();
        d[0] = d0.clone();
        d[2] = d2.clone();
        d[4] = d4;
        d[6] = d2;
        d[8] = d0;
        OcticDual { d }
    }
}

/// The extremal dual family `ω_α = x⁸ + 28x²y⁶ + 24αxy⁷ + 3(1+2α²)y⁸`.
pub fn omega_octic(alpha: &Rat) -> OcticDual {
    let mut d = zeros9();
    d[0] = rat_i(1);
    d[6] = rat_i(1);
    d[7] = rat_i(3) * alpha;
    d[8] = rat_i(3) * (rat_i(1) + rat_i(2) * alpha * alpha);
    OcticDual { d }
}

/// The dual pairing quartic `H_q(u,v,w) = [q, (u·x² + v·xy + w·y²)⁴]`,
/// built by exact expansion: the monomial `u^i v^j w^k` (i+j+k = 4)
/// carries the coefficient `(4!/(i!j!k!))·d_(j+2k)`.
pub fn hq_ternary(q: &OcticDual) -> QForm {
    let mut terms = Vec::new();
    for e in index_set(3, 4) {
        let (i, j, k) = (e.0[0], e.0[1], e.0[2]);
        let c = Rat::from_integer(factorial(4) / (factorial(i) * factorial(j) * factorial(k)));
        let coeff = c * &q.d[(j + 2 * k) as usize];
        terms.push((e.0, coeff));
    }
    Form::from_terms(3, 4, terms).expect("ternary quartic exponents")
}

/// The general dual form of the Waring cone of sums of 2v-th powers of
/// degree-u forms: for `p` of degree `2uv` in `n` variables, a form of
/// degree `2v` in the `N(n,u)` variables `t(ℓ)`, with normalised
/// coefficient `a(H; e) = a(p; Σ_j e_j·ℓ_j)`.
///
/// Degenerate cases: `u = 1` reproduces `p` in renamed variables, and
/// `v = 1` is the quadratic whose Gram matrix is the catalecticant.
pub fn hp_form(p: &QForm, u: u32, v: u32) -> Result<QForm, WaringError> {
    if p.degree() != 2 * u * v {
        return Err(WaringError::DegreeMismatch(p.degree(), 2 * u * v));
    }
    let ells = index_set(p.nvars(), u);
    let nt = ells.len();
    let mut terms = Vec::new();
    for e in index_set(nt, 2 * v) {
        let mut total = vec![0u32; p.nvars()];
        for (j, &mult) in e.0.iter().enumerate() {
            for (t, &le) in total.iter_mut().zip(&ells[j].0) {
                *t += mult * le;
            }
        }
        let a = p.coeff_a(&total);
        if a.is_zero() {
            continue;
        }
        let c = Rat::from_integer(crate::rat::multinomial(&e.0));
        terms.push((e.0, c * a));
    }
    Form::from_terms(nt, 2 * v, terms).map_err(|e| WaringError::ShapeViolation(e.to_string()))
}

/// Boundary test for the dual of the fourth-power cone, restricted to the
/// normal shape `d₃ = d₄ = d₅ = 0` (where every member is a boundary
/// point, since `H_q(0,1,0) = 0`).  Membership is the simultaneous
/// psd-ness of the quadratic-in-v data of `H_q`:
/// `A = 6d₂u² + 6d₆w²`, `C = d₀u⁴ + 4d₂u³w + 4d₆uw³ + d₈w⁴` and
/// `A·C − B²` with `B = 2d₁u³ + 2d₇w³`.
pub fn wdual_boundary_test(q: &OcticDual) -> Result<MembershipVerdict, WaringError> {
    for k in [3, 4, 5] {
        if !q.d[k].is_zero() {
            return Err(WaringError::ShapeViolation(format!("d_{} = {}", k, q.d[k])));
        }
    }
    if q.d.iter().all(|c| c.is_zero()) {
        return Ok(MembershipVerdict::Boundary);
    }
    if rat_sign(&q.d[2]) < 0 || rat_sign(&q.d[6]) < 0 {
        return Ok(MembershipVerdict::Outside);
    }
    let c_form: QForm = Form::binary_from_raw(&[
        q.d[0].clone(),
        rat_i(4) * &q.d[2],
        rat_i(0),
        rat_i(4) * &q.d[6],
        q.d[8].clone(),
    ]);
    if !c_form.is_zero() && !binary_psd_status(&c_form).expect("nonzero quartic").is_psd() {
        return Ok(MembershipVerdict::Outside);
    }
    let a_form: QForm =
        Form::binary_from_raw(&[rat_i(6) * &q.d[2], rat_i(0), rat_i(6) * &q.d[6]]);
    let b_form: QForm = Form::binary_from_raw(&[
        rat_i(2) * &q.d[1],
        rat_i(0),
        rat_i(0),
        rat_i(2) * &q.d[7],
    ]);
    let disc = a_form
        .mul(&c_form)
        .unwrap()
        .sub(&b_form.mul(&b_form).unwrap())
        .expect("degree six either way");
    if disc.is_zero() || binary_psd_status(&disc).expect("nonzero discriminant").is_psd() {
        Ok(MembershipVerdict::Boundary)
    } else {
        Ok(MembershipVerdict::Outside)
    }
}

/// An even symmetric octic `((A,B,C)) = A·x⁸ + B·x⁶y² + C·x⁴y⁴ + B·x²y⁶ + A·y⁸`.
#[derive(Clone, PartialEq, Debug)]
pub struct EvenSymmetricOctic {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl EvenSymmetricOctic {
    pub fn new(a: Rat, b: Rat, c: Rat) -> EvenSymmetricOctic {
        EvenSymmetricOctic { a, b, c }
    }

    pub fn expand(&self) -> QForm {
        Form::binary_from_raw(&[
            self.a.clone(),
            rat_i(0),
            self.b.clone(),
            rat_i(0),
            self.c.clone(),
            rat_i(0),
            self.b.clone(),
            rat_i(0),
            self.a.clone(),
        ])
    }
}

/// The restricted inner product on even symmetric octics:
/// `[p₁, p₂] = 2A₁A₂ + B₁B₂/14 + C₁C₂/70`.
pub fn eso_inner(p1: &EvenSymmetricOctic, p2: &EvenSymmetricOctic) -> Rat {
    rat_i(2) * &p1.a * &p2.a + &p1.b * &p2.b / rat_i(14) + &p1.c * &p2.c / rat_i(70)
}

/// The extremal member family `ψ_λ = ((1, 6λ²−4, λ⁴−12λ²+6))`, i.e.
/// `(1/2)·((x²+λxy−y²)⁴ + (x²−λxy−y²)⁴)`.
pub fn psi_octic(l: &Rat) -> EvenSymmetricOctic {
    let l2 = l * l;
    EvenSymmetricOctic::new(
        rat_i(1),
        rat_i(6) * &l2 - rat_i(4),
        &l2 * &l2 - rat_i(12) * &l2 + rat_i(6),
    )
}

/// The even symmetric octic `f_λ·f_μ = ((1, 6(λ+μ), 2+36λμ))`.
pub fn flam_product_eso(l: &Rat, mu: &Rat) -> EvenSymmetricOctic {
    EvenSymmetricOctic::new(rat_i(1), rat_i(6) * (l + mu), rat_i(2) + rat_i(36) * l * mu)
}

/// Exact membership of an even symmetric octic in the cone of sums of
/// fourth powers of quadratics:
/// member iff `A = B = 0, C ≥ 0` or `A > 0, B ≥ −4A, 36AC ≥ B² − 64AB − 56A²`;
/// interior iff the defining inequalities are strict, boundary when one
/// is tight (the faces are intersected: the region is closed and convex).
pub fn wtilde_membership(p: &EvenSymmetricOctic) -> MembershipVerdict {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    if rat_sign(a) < 0 {
        return MembershipVerdict::Outside;
    }
    if a.is_zero() {
        if b.is_zero() && rat_sign(c) >= 0 {
            return MembershipVerdict::Boundary;
        }
        return MembershipVerdict::Outside;
    }
    let edge = b + rat_i(4) * a;
    let parabola = rat_i(36) * a * c - (b * b - rat_i(64) * a * b - rat_i(56) * a * a);
    if rat_sign(&edge) < 0 || rat_sign(&parabola) < 0 {
        return MembershipVerdict::Outside;
    }
    if rat_sign(&edge) > 0 && rat_sign(&parabola) > 0 {
        MembershipVerdict::Interior
    } else {
        MembershipVerdict::Boundary
    }
}

/// Which constructive branch produced a two-square decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecompositionBranch {
    /// `A = 0`: a single square on the `x⁴y⁴` ray.
    AxisRay,
    /// `T ≥ 8α⁴`: a rational-core quartic plus a monomial square.
    RationalCore,
    /// `0 ≤ T < 8α⁴`: the nested-radical pair.
    NestedRadical,
}

/// A verified decomposition `p = scale · (q₁² + q₂²)/2` with psd quartics.
///
/// The scale is the leading coefficient `A`; folding `√A` into the
/// quartics would need a third radical in the nested branch, so it stays
/// a rational weight (the certificate view carries `A/2` per square).
#[derive(Clone, Debug)]
pub struct TwoSquares {
    pub scale: Rat,
    pub q1: TForm,
    pub q2: TForm,
    pub branch: DecompositionBranch,
}

impl TwoSquares {
    /// Exact reconstruction check: `scale·(q₁² + q₂²)/2` equals the target
    /// and both factors pass the tower psd kernel.
    pub fn verify(&self, target: &EvenSymmetricOctic) -> Result<(), WaringError> {
        let half_scale = Tower::from_rat(rat(1, 2) * &self.scale);
        let sum = self
            .q1
            .pow(2)
            .add(&self.q2.pow(2))
            .map_err(|e| WaringError::Tower(e.to_string()))?
            .scale(&half_scale);
        if sum != target.expand().to_tower() {
            return Err(WaringError::Tower("reconstruction mismatch".into()));
        }
        for q in [&self.q1, &self.q2] {
            if q.is_zero() {
                continue;
            }
            if !binary_psd_status(q).expect("nonzero quartic").is_psd() {
                return Err(WaringError::Tower("factor is not psd".into()));
            }
        }
        Ok(())
    }

    pub fn to_certificate(&self, target: &EvenSymmetricOctic) -> Certificate {
        let w = Tower::from_rat(rat(1, 2) * &self.scale);
        let mut terms =
            vec![CertificateTerm { weight: w.clone(), form: self.q1.clone(), exponent: 2 }];
        if !self.q2.is_zero() {
            terms.push(CertificateTerm { weight: w, form: self.q2.clone(), exponent: 2 });
        }
        Certificate::new("two-square decomposition", terms, target.expand().to_tower())
    }
}

/// Constructive decomposition of a member `((A,B,C))` into two squares of
/// psd quartics.  With `α² = (B+4A)/(6A)` and `T = C/A − (α⁴−12α²+6) ≥ 0`:
/// for `T ≥ 8α⁴` the pair is rational-core
/// `(√2·(x⁴+(3α²−2)x²y²+y⁴), √(2(T−8α⁴))·x²y²)`; for `0 ≤ T < 8α⁴` it is
/// `(x² ∓ √λ·xy − y²)² + μ·x²y²` with `λ = (3α² − √(α⁴+T))/2` and
/// `μ = 3(√(α⁴+T) − α²)/2` living in the tower.
pub fn two_square_decomposition(p: &EvenSymmetricOctic) -> Result<TwoSquares, WaringError> {
    if wtilde_membership(p) == MembershipVerdict::Outside {
        return Err(WaringError::OutsideInput(format!("(({}, {}, {}))", p.a, p.b, p.c)));
    }
    let two = Tower::from_int(2);
    if p.a.is_zero() {
        // ((0,0,C)) = (1/2)·(√(2C)·x²y²)².
        let coeff = Tower::from_rat(rat_i(2) * &p.c)
            .sqrt()
            .map_err(|e| WaringError::Tower(e.to_string()))?;
        let q1: TForm = Form::monomial(2, &[2, 2], coeff);
        return Ok(TwoSquares {
            scale: rat_i(1),
            q1,
            q2: Form::zero(2, 4),
            branch: DecompositionBranch::AxisRay,
        });
    }
    let bh = &p.b / &p.a;
    let ch = &p.c / &p.a;
    let alpha2 = (bh + rat_i(4)) / rat_i(6);
    let alpha4 = &alpha2 * &alpha2;
    let t = &ch - (&alpha4 - rat_i(12) * &alpha2 + rat_i(6));
    debug_assert!(rat_sign(&t) >= 0, "membership guarantees T ≥ 0");
    if t.clone() >= rat_i(8) * &alpha4 {
        // (1/2)·(√2·core)² + (1/2)·(√(2(T−8α⁴))·x²y²)².
        let core: TForm = Form::binary_from_raw(&[
            rat_i(1),
            rat_i(0),
            rat_i(3) * &alpha2 - rat_i(2),
            rat_i(0),
            rat_i(1),
        ])
        .to_tower();
        let q1 = core.scale(&two.sqrt().expect("2 > 0"));
        let rest = rat_i(2) * (&t - rat_i(8) * &alpha4);
        let coeff = Tower::from_rat(rest)
            .sqrt()
            .map_err(|e| WaringError::Tower(e.to_string()))?;
        let q2: TForm = Form::monomial(2, &[2, 2], coeff);
        return Ok(TwoSquares {
            scale: p.a.clone(),
            q1,
            q2,
            branch: DecompositionBranch::RationalCore,
        });
    }
    // Nested branch: λ, μ from the square system, √λ one level deeper.
    let s = &alpha4 + &t;
    let root_s = Tower::from_rat(s).sqrt().map_err(|e| WaringError::Tower(e.to_string()))?;
    let half = Tower::from_rat(rat(1, 2));
    let lam = Tower::from_rat(rat_i(3) * &alpha2).sub_ref(&root_s).mul_ref(&half);
    let mu = root_s.sub_ref(&Tower::from_rat(alpha2.clone())).mul_ref(&Tower::from_rat(rat(3, 2)));
    debug_assert!(lam.sign() >= 0 && mu.sign() >= 0);
    let sqrt_lam = lam.sqrt().map_err(|e| WaringError::Tower(e.to_string()))?;
    let two_sqrt_lam = sqrt_lam.mul_ref(&two);
    let mid = lam.sub_ref(&two).add_ref(&mu);
    let quartic = |sign: i64| -> Result<TForm, WaringError> {
        let sgn = Tower::from_int(sign);
        Form::from_terms(
            2,
            4,
            [
                (vec![4, 0], Tower::from_int(1)),
                (vec![3, 1], two_sqrt_lam.mul_ref(&sgn).neg_ref()),
                (vec![2, 2], mid.clone()),
                (vec![1, 3], two_sqrt_lam.mul_ref(&sgn)),
                (vec![0, 4], Tower::from_int(1)),
            ],
        )
        .map_err(|e| WaringError::Tower(e.to_string()))
    };
    Ok(TwoSquares {
        scale: p.a.clone(),
        q1: quartic(1)?,
        q2: quartic(-1)?,
        branch: DecompositionBranch::NestedRadical,
    })
}

/// Two psd quadratics with `f_λ = f² + g²`, for λ ∈ [0, 1]:
/// `(x² + 3λy², √(1−9λ²)·y²)` on [0, 1/3], and the rotated pull-back
/// through `(x,y) ↦ (x+y, x−y)` scaled by `(2+6T(λ))^(−1/2)` on (1/3, 1].
pub fn quartic_decomposition(l: &Rat) -> Result<(TForm, TForm), WaringError> {
    if l < &Rat::zero() || l > &rat_i(1) {
        return Err(WaringError::LambdaOutOfRange(l.clone()));
    }
    if l <= &rat(1, 3) {
        let f: TForm = Form::binary_from_raw(&[rat_i(1), rat_i(0), rat_i(3) * l]).to_tower();
        let gc = Tower::from_rat(rat_i(1) - rat_i(9) * l * l)
            .sqrt()
            .expect("1 − 9λ² ≥ 0 on [0, 1/3]");
        let g: TForm = Form::monomial(2, &[0, 2], gc);
        return Ok((f, g));
    }
    let mu = crate::quartics::map_t(l).expect("no pole above 1/3");
    // f = (2+6μ)^(-1/2)·((x+y)² + 3μ(x−y)²); g = √((1−3μ)/2)·(x−y)², the
    // product of radicals collapsing to a single radicand.
    let inv = Tower::from_rat(rat_i(1) / (rat_i(2) + rat_i(6) * &mu))
        .sqrt()
        .expect("2+6μ > 0");
    let fcore: TForm = Form::binary_from_raw(&[
        rat_i(1) + rat_i(3) * &mu,
        rat_i(2) - rat_i(6) * &mu,
        rat_i(1) + rat_i(3) * &mu,
    ])
    .to_tower();
    let f = fcore.scale(&inv);
    let gc = Tower::from_rat((rat_i(1) - rat_i(3) * &mu) / rat_i(2))
        .sqrt()
        .expect("μ < 1/3");
    let g: TForm = Form::binary_from_raw(&[rat_i(1), rat_i(-2), rat_i(1)])
        .to_tower()
        .scale(&gc);
    Ok((f, g))
}

/// Membership of `f_λ·f_μ` in the fourth-power cone, by the exact
/// tower-sign comparison
/// `(17−12√2)·(1+3λ) ≤ 1+3μ ≤ (17+12√2)·(1+3λ)` (both factors psd).
///
/// Equivalent to the even-symmetric-octic trichotomy of the product.
pub fn flam_product_membership(l: &Rat, mu: &Rat) -> Result<MembershipVerdict, WaringError> {
    for z in [l, mu] {
        if z < &rat_i(-2) {
            return Err(WaringError::BelowMinusTwo(z.clone()));
        }
    }
    let x = rat_i(1) + rat_i(3) * l;
    let y = rat_i(1) + rat_i(3) * mu;
    if rat_sign(&x) < 0 || rat_sign(&y) < 0 {
        return Ok(MembershipVerdict::Outside);
    }
    if x.is_zero() || y.is_zero() {
        return Ok(if x.is_zero() && y.is_zero() {
            MembershipVerdict::Boundary
        } else {
            MembershipVerdict::Outside
        });
    }
    let root = Tower::from_rat(rat_i(288)).sqrt().expect("288 > 0"); // 12√2
    let seventeen = Tower::from_int(17);
    let xs = Tower::from_rat(x);
    let ys = Tower::from_rat(y);
    let lo = seventeen.sub_ref(&root).mul_ref(&xs);
    let hi = seventeen.add_ref(&root).mul_ref(&xs);
    let above = ys.sub_ref(&lo).sign();
    let below = hi.sub_ref(&ys).sign();
    Ok(if above < 0 || below < 0 {
        MembershipVerdict::Outside
    } else if above == 0 || below == 0 {
        MembershipVerdict::Boundary
    } else {
        MembershipVerdict::Interior
    })
}

/// The identity suite: every sum-of-powers display verified by exact
/// expansion.  Each certificate's target is built independently of its
/// terms (products, powers and dual pairings computed by the form
/// calculus), so verification is a genuine cross-check.
pub fn certificate_suite() -> Vec<Certificate> {
    let mut out = Vec::new();
    let q = |raw: &[i64]| -> TForm {
        Form::binary_from_raw(&raw.iter().map(|&c| rat_i(c)).collect::<Vec<_>>()).to_tower()
    };
    let circle = q(&[1, 0, 1]);
    let root3 = Tower::from_rat(rat_i(3)).sqrt().expect("3 > 0");
    let lin = |a: &Tower, b: &Tower| -> TForm {
        Form::from_terms(2, 1, [(vec![1, 0], a.clone()), (vec![0, 1], b.clone())])
            .expect("linear form")
    };

    // (x²+y²)² = (x²−y²)² + (2xy)².
    out.push(Certificate::new(
        "circle-quartic-two-squares",
        vec![
            CertificateTerm { weight: Tower::from_int(1), form: q(&[1, 0, -1]), exponent: 2 },
            CertificateTerm { weight: Tower::from_int(1), form: q(&[0, 2, 0]), exponent: 2 },
        ],
        circle.pow(2),
    ));

    // 18·(x²+y²)² = (√3x+y)⁴ + (√3x−y)⁴ + 16y⁴.
    out.push(Certificate::new(
        "circle-quartic-fourth-powers",
        vec![
            CertificateTerm {
                weight: Tower::from_rat(rat(1, 18)),
                form: lin(&root3, &Tower::from_int(1)),
                exponent: 4,
            },
            CertificateTerm {
                weight: Tower::from_rat(rat(1, 18)),
                form: lin(&root3, &Tower::from_int(-1)),
                exponent: 4,
            },
            CertificateTerm {
                weight: Tower::from_rat(rat(16, 18)),
                form: lin(&Tower::from_int(0), &Tower::from_int(1)),
                exponent: 4,
            },
        ],
        circle.pow(2),
    ));

    // 420·(x²+y²)⁴ = 256(x⁸+y⁸) + Σ_± (x±√3y)⁸ + (√3x±y)⁸.
    out.push(Certificate::new(
        "circle-octic-eighth-powers",
        vec![
            CertificateTerm {
                weight: Tower::from_int(256),
                form: lin(&Tower::from_int(1), &Tower::from_int(0)),
                exponent: 8,
            },
            CertificateTerm {
                weight: Tower::from_int(256),
                form: lin(&Tower::from_int(0), &Tower::from_int(1)),
                exponent: 8,
            },
            CertificateTerm {
                weight: Tower::from_int(1),
                form: lin(&Tower::from_int(1), &root3),
                exponent: 8,
            },
            CertificateTerm {
                weight: Tower::from_int(1),
                form: lin(&Tower::from_int(1), &root3.neg_ref()),
                exponent: 8,
            },
            CertificateTerm {
                weight: Tower::from_int(1),
                form: lin(&root3, &Tower::from_int(1)),
                exponent: 8,
            },
            CertificateTerm {
                weight: Tower::from_int(1),
                form: lin(&root3, &Tower::from_int(-1)),
                exponent: 8,
            },
        ],
        circle.pow(4).scale(&Tower::from_int(420)),
    ));

    // 3(3x⁴−4x²y²+3y⁴)(x²+y²)⁴ as a sum of fourth powers of cubics.
    let cubic = |raw: &[i64]| -> TForm {
        Form::binary_from_raw(&raw.iter().map(|&c| rat_i(c)).collect::<Vec<_>>()).to_tower()
    };
    let target = q(&[3, 0, -4, 0, 3])
        .mul(&circle.pow(4))
        .expect("degree 12")
        .scale(&Tower::from_int(3));
    out.push(Certificate::new(
        "lifted-quartic-fourth-powers",
        vec![
            CertificateTerm { weight: Tower::from_int(2), form: cubic(&[1, -1, 0, 0]), exponent: 4 },
            CertificateTerm { weight: Tower::from_int(2), form: cubic(&[1, 1, 0, 0]), exponent: 4 },
            CertificateTerm { weight: Tower::from_int(2), form: cubic(&[0, 0, 1, -1]), exponent: 4 },
            CertificateTerm { weight: Tower::from_int(2), form: cubic(&[0, 0, 1, 1]), exponent: 4 },
            CertificateTerm { weight: Tower::from_int(5), form: cubic(&[1, 0, 0, 0]), exponent: 4 },
            CertificateTerm { weight: Tower::from_int(11), form: cubic(&[0, 1, 0, 0]), exponent: 4 },
            CertificateTerm { weight: Tower::from_int(11), form: cubic(&[0, 0, 1, 0]), exponent: 4 },
            CertificateTerm { weight: Tower::from_int(5), form: cubic(&[0, 0, 0, 1]), exponent: 4 },
        ],
        target,
    ));

    // Dual certificates: H_q psd for the even-symmetric dual rays.
    let tern = |entries: &[(&[u32], i64)]| -> TForm {
        Form::from_terms(3, 2, entries.iter().map(|&(e, c)| (e.to_vec(), Tower::from_int(c))))
            .expect("ternary quadratic")
    };
    // ((1,0,0)): H = u⁴ + w⁴.
    out.push(Certificate::new(
        "octic-dual-ray",
        vec![
            CertificateTerm {
                weight: Tower::from_int(1),
                form: Form::monomial(3, &[1, 0, 0], Tower::from_int(1)),
                exponent: 4,
            },
            CertificateTerm {
                weight: Tower::from_int(1),
                form: Form::monomial(3, &[0, 0, 1], Tower::from_int(1)),
                exponent: 4,
            },
        ],
        hq_ternary(&OcticDual::even_symmetric(rat_i(1), rat_i(0), rat_i(0))).to_tower(),
    ));
    // ((4,28,0)): H = 4(u+w)²(u²−uw+w²) + 6(u²+w²)v², regrouped as
    // 4[(u+w)(u−w/2)]² + 3[(u+w)w]² + 6(uv)² + 6(wv)².
    let uw_mix: TForm = Form::from_terms(
        3,
        2,
        [
            (vec![2, 0, 0], Tower::from_int(1)),
            (vec![1, 0, 1], Tower::from_rat(rat(1, 2))),
            (vec![0, 0, 2], Tower::from_rat(rat(-1, 2))),
        ],
    )
    .expect("(u+w)(u−w/2)");
    out.push(Certificate::new(
        "octic-dual-edge",
        vec![
            CertificateTerm { weight: Tower::from_int(4), form: uw_mix, exponent: 2 },
            CertificateTerm {
                weight: Tower::from_int(3),
                form: tern(&[(&[1, 0, 1], 1), (&[0, 0, 2], 1)]),
                exponent: 2,
            },
            CertificateTerm {
                weight: Tower::from_int(6),
                form: tern(&[(&[1, 1, 0], 1)]),
                exponent: 2,
            },
            CertificateTerm {
                weight: Tower::from_int(6),
                form: tern(&[(&[0, 1, 1], 1)]),
                exponent: 2,
            },
        ],
        hq_ternary(&OcticDual::even_symmetric(rat_i(4), rat_i(1), rat_i(0))).to_tower(),
    ));
    // ((6−4λ²+3λ⁴, 28(6−λ²), 420)): 2H_q = 48[(u+w)v]² + 4λ²(u+w)⁴
    //   + 3λ⁴(u²−w²)² + 3(2v² + 2(u+w)² − λ²(u²+w²))².
    for l in [rat_i(0), rat(1, 2), rat_i(1), rat(3, 2)] {
        let l2 = &l * &l;
        let l4 = &l2 * &l2;
        let d0 = rat_i(6) - rat_i(4) * &l2 + rat_i(3) * &l4;
        let d2 = rat_i(6) - &l2;
        let big: TForm = Form::from_terms(
            3,
            2,
            [
                (vec![0, 2, 0], Tower::from_int(2)),
                (vec![2, 0, 0], Tower::from_rat(rat_i(2) - &l2)),
                (vec![1, 0, 1], Tower::from_int(4)),
                (vec![0, 0, 2], Tower::from_rat(rat_i(2) - &l2)),
            ],
        )
        .expect("ternary quadratic");
        let u_plus_w: TForm = Form::from_terms(
            3,
            1,
            [(vec![1, 0, 0], Tower::from_int(1)), (vec![0, 0, 1], Tower::from_int(1))],
        )
        .expect("linear");
        out.push(Certificate::new(
            format!("octic-dual-family λ={}", l),
            vec![
                CertificateTerm {
                    weight: Tower::from_int(48),
                    form: tern(&[(&[1, 1, 0], 1), (&[0, 1, 1], 1)]),
                    exponent: 2,
                },
                CertificateTerm {
                    weight: Tower::from_rat(rat_i(4) * &l2),
                    form: u_plus_w,
                    exponent: 4,
                },
                CertificateTerm {
                    weight: Tower::from_rat(rat_i(3) * &l4),
                    form: tern(&[(&[2, 0, 0], 1), (&[0, 0, 2], -1)]),
                    exponent: 2,
                },
                CertificateTerm { weight: Tower::from_int(3), form: big, exponent: 2 },
            ],
            hq_ternary(&OcticDual::even_symmetric(d0, d2, rat_i(6)))
                .to_tower()
                .scale(&Tower::from_int(2)),
        ));
    }
    // ω_α duals: H = 6(vw+αw²)² + (u²−w²)² + 2[(u+w)w]².
    for alpha in [rat_i(0), rat(1, 2), rat_i(-1), rat_i(2)] {
        let vw_mix: TForm = Form::from_terms(
            3,
            2,
            [
                (vec![0, 1, 1], Tower::from_int(1)),
                (vec![0, 0, 2], Tower::from_rat(alpha.clone())),
            ],
        )
        .expect("vw + αw²");
        out.push(Certificate::new(
            format!("omega-dual α={}", alpha),
            vec![
                CertificateTerm { weight: Tower::from_int(6), form: vw_mix, exponent: 2 },
                CertificateTerm {
                    weight: Tower::from_int(1),
                    form: tern(&[(&[2, 0, 0], 1), (&[0, 0, 2], -1)]),
                    exponent: 2,
                },
                CertificateTerm {
                    weight: Tower::from_int(2),
                    form: tern(&[(&[1, 0, 1], 1), (&[0, 0, 2], 1)]),
                    exponent: 2,
                },
            ],
            hq_ternary(&omega_octic(&alpha)).to_tower(),
        ));
    }
    // The four-square kernel certificates from the quartic pairing.
    for r in [rat_i(0), rat(-1, 6), rat(-1, 3)] {
        out.push(crate::quartics::psi_certificate(&r).expect("r in range"));
    }
    out
}
