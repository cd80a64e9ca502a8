//! A two-level quadratic extension tower over the rationals.
//!
//! Values have the shape `(a + b√s) + (c + d√s)·√t` where `s` is a positive
//! non-square rational and `t = t0 + t1√s` is a positive element of the
//! first level that is not a square there.  This is enough to house every
//! irrational scalar the boundary certificates need (√2, √3, √7, √10,
//! nested radicals of the two-square decomposition), with exactly decidable
//! signs throughout.

use crate::rat::{extract_square_part, rat_sign, rat_sqrt_exact, rat_to_f64, Rat};
use crate::scalar::Scalar;
use num::{BigInt, One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("values live in incompatible radical extensions")]
    IncompatibleRadicands,
    #[error("square root of a negative element")]
    NegativeRadicand,
    #[error("tower depth limited to two nested square roots")]
    DepthExceeded,
    #[error("division by zero")]
    DivisionByZero,
}

/// An element of the quadratic tower.  See the module docs for the shape.
#[derive(Clone, PartialEq)]
pub struct Tower {
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
    s: Option<Rat>,
    t: Option<(Rat, Rat)>,
}

impl Tower {
    fn make(a: Rat, b: Rat, c: Rat, d: Rat, s: Option<Rat>, t: Option<(Rat, Rat)>) -> Tower {
        let mut v = Tower { a, b, c, d, s, t };
        // Drop an unused second radical.
        if v.c.is_zero() && v.d.is_zero() {
            v.t = None;
        }
        if v.t.is_none() {
            v.c = Rat::zero();
            v.d = Rat::zero();
        }
        // A second radical over a rational radicand with no √s admixture is
        // really a first-level value.
        if let Some((t0, t1)) = v.t.clone() {
            if t1.is_zero() && v.b.is_zero() && v.d.is_zero() {
                if let Some(r) = rat_sqrt_exact(&t0) {
                    v = Tower::make(&v.a + &v.c * r, Rat::zero(), Rat::zero(), Rat::zero(), None, None);
                } else {
                    v = Tower {
                        a: v.a,
                        b: v.c,
                        c: Rat::zero(),
                        d: Rat::zero(),
                        s: Some(t0),
                        t: None,
                    };
                }
            }
        }
        // Drop an unused first radical.
        if v.t.is_none() && v.b.is_zero() {
            v.s = None;
        }
        if v.s.is_none() && v.t.is_none() {
            v.b = Rat::zero();
        }
        v
    }

    pub fn from_rat(q: Rat) -> Tower {
        Tower::make(q, Rat::zero(), Rat::zero(), Rat::zero(), None, None)
    }

    pub fn from_int(n: i64) -> Tower {
        Tower::from_rat(crate::rat::rat_i(n))
    }

    /// `a + b√s`; `s` must be a positive rational.  The radicand is
    /// canonicalised so that e.g. √8 and 2√2 meet in the same extension.
    pub fn quadratic(a: Rat, b: Rat, s: Rat) -> Result<Tower, TowerError> {
        if !s.is_positive() {
            return Err(TowerError::NegativeRadicand);
        }
        let root = Tower::sqrt_rational(&s);
        Ok(Tower::from_rat(a).try_add(&root.try_mul(&Tower::from_rat(b))?)?)
    }

    /// √q for a non-negative rational, canonicalised to a squarefree
    /// integer radicand.
    fn sqrt_rational(q: &Rat) -> Tower {
        if let Some(r) = rat_sqrt_exact(q) {
            return Tower::from_rat(r);
        }
        // √(p/q) = √(pq)/q with pq = m²·f, f squarefree.
        let pq: BigInt = q.numer() * q.denom();
        let (m, f) = extract_square_part(&pq);
        let coeff = Rat::new(m, q.denom().clone());
        Tower::make(
            Rat::zero(),
            coeff,
            Rat::zero(),
            Rat::zero(),
            Some(Rat::from_integer(f)),
            None,
        )
    }

    pub fn level(&self) -> u8 {
        match (&self.s, &self.t) {
            (None, _) => 0,
            (Some(_), None) => 1,
            (Some(_), Some(_)) => 2,
        }
    }

    fn unify(&self, rhs: &Tower) -> Result<(Option<Rat>, Option<(Rat, Rat)>), TowerError> {
        let s = match (&self.s, &rhs.s) {
            (None, s) | (s, None) => s.clone(),
            (Some(x), Some(y)) if x == y => Some(x.clone()),
            _ => return Err(TowerError::IncompatibleRadicands),
        };
        let t = match (&self.t, &rhs.t) {
            (None, t) | (t, None) => t.clone(),
            (Some(x), Some(y)) if x == y => Some(x.clone()),
            _ => return Err(TowerError::IncompatibleRadicands),
        };
        Ok((s, t))
    }

    pub fn try_add(&self, rhs: &Tower) -> Result<Tower, TowerError> {
        let (s, t) = self.unify(rhs)?;
        Ok(Tower::make(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.d + &rhs.d,
            s,
            t,
        ))
    }

    pub fn try_sub(&self, rhs: &Tower) -> Result<Tower, TowerError> {
        self.try_add(&rhs.neg())
    }

    pub fn neg(&self) -> Tower {
        Tower {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
            s: self.s.clone(),
            t: self.t.clone(),
        }
    }

    pub fn try_mul(&self, rhs: &Tower) -> Result<Tower, TowerError> {
        let (s, t) = self.unify(rhs)?;
        let sv = s.clone().unwrap_or_else(Rat::zero);
        let x = (self.a.clone(), self.b.clone());
        let xc = (self.c.clone(), self.d.clone());
        let y = (rhs.a.clone(), rhs.b.clone());
        let yc = (rhs.c.clone(), rhs.d.clone());
        // (A + C√t)(A' + C'√t) = AA' + CC'·t + (AC' + CA')√t over Q(√s).
        let mut lo = q1_mul(&x, &y, &sv);
        if let Some(tv) = &t {
            let cc = q1_mul(&xc, &yc, &sv);
            lo = q1_add(&lo, &q1_mul(&cc, tv, &sv));
        }
        let hi = q1_add(&q1_mul(&x, &yc, &sv), &q1_mul(&xc, &y, &sv));
        Ok(Tower::make(lo.0, lo.1, hi.0, hi.1, s, t))
    }

    pub fn try_div(&self, rhs: &Tower) -> Result<Tower, TowerError> {
        if rhs.is_zero() {
            return Err(TowerError::DivisionByZero);
        }
        let (s, t) = self.unify(rhs)?;
        let sv = s.clone().unwrap_or_else(Rat::zero);
        let ra = (rhs.a.clone(), rhs.b.clone());
        let rc = (rhs.c.clone(), rhs.d.clone());
        // 1/(A + C√t) = (A - C√t)/(A² - C²t).
        let (conj, denom) = if let Some(tv) = &t {
            let a2 = q1_mul(&ra, &ra, &sv);
            let c2t = q1_mul(&q1_mul(&rc, &rc, &sv), tv, &sv);
            (
                Tower {
                    a: ra.0.clone(),
                    b: ra.1.clone(),
                    c: -rc.0.clone(),
                    d: -rc.1.clone(),
                    s: s.clone(),
                    t: t.clone(),
                },
                q1_sub(&a2, &c2t),
            )
        } else {
            let conj_pair = (ra.0.clone(), -ra.1.clone());
            let denom = q1_mul(&ra, &conj_pair, &sv);
            (
                Tower {
                    a: conj_pair.0,
                    b: conj_pair.1,
                    c: Rat::zero(),
                    d: Rat::zero(),
                    s: s.clone(),
                    t: t.clone(),
                },
                denom,
            )
        };
        // Now divide (self * conj) by the Q(√s) denominator.
        let num = self.try_mul(&conj)?;
        let inv = q1_inv(&denom, &sv).ok_or(TowerError::DivisionByZero)?;
        let lo = q1_mul(&(num.a, num.b), &inv, &sv);
        let hi = q1_mul(&(num.c, num.d), &inv, &sv);
        Ok(Tower::make(lo.0, lo.1, hi.0, hi.1, s, t))
    }

    /// Exact sign by iterated sign-aware squaring.
    pub fn sign(&self) -> i32 {
        let sv = self.s.clone().unwrap_or_else(Rat::zero);
        match &self.t {
            None => q1_sign(&(self.a.clone(), self.b.clone()), &sv),
            Some(tv) => {
                let a = (self.a.clone(), self.b.clone());
                let c = (self.c.clone(), self.d.clone());
                let sa = q1_sign(&a, &sv);
                let sc = q1_sign(&c, &sv);
                if sc == 0 {
                    return sa;
                }
                if sa == 0 {
                    return sc;
                }
                if sa == sc {
                    return sa;
                }
                // sign(A + C√t) = sign(A)·sign(A² - C²t) when A, C differ.
                let a2 = q1_mul(&a, &a, &sv);
                let c2t = q1_mul(&q1_mul(&c, &c, &sv), tv, &sv);
                sa * q1_sign(&q1_sub(&a2, &c2t), &sv)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.level() == 0 {
            Some(self.a.clone())
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let s = self.s.as_ref().map(|q| rat_to_f64(q).sqrt()).unwrap_or(0.0);
        let lo = rat_to_f64(&self.a) + rat_to_f64(&self.b) * s;
        match &self.t {
            None => lo,
            Some((t0, t1)) => {
                let t = (rat_to_f64(t0) + rat_to_f64(t1) * s).sqrt();
                lo + (rat_to_f64(&self.c) + rat_to_f64(&self.d) * s) * t
            }
        }
    }

    /// √x for a non-negative tower element.  Simplifies to the shallowest
    /// level that can represent the root exactly; adjoining a root to a
    /// second-level value is an error.
    pub fn sqrt(&self) -> Result<Tower, TowerError> {
        match self.sign() {
            -1 => return Err(TowerError::NegativeRadicand),
            0 => return Ok(Tower::from_rat(Rat::zero())),
            _ => {}
        }
        match self.level() {
            0 => Ok(Tower::sqrt_rational(&self.a)),
            1 => {
                let s = self.s.clone().unwrap();
                // Try (u + v√s)² = a + b√s exactly first.
                if let Some(root) = sqrt_in_level1(&self.a, &self.b, &s) {
                    let cand = Tower::make(root.0, root.1, Rat::zero(), Rat::zero(), Some(s.clone()), None);
                    return Ok(if cand.sign() >= 0 { cand } else { cand.neg() });
                }
                Ok(Tower::make(
                    Rat::zero(),
                    Rat::zero(),
                    Rat::one(),
                    Rat::zero(),
                    Some(s),
                    Some((self.a.clone(), self.b.clone())),
                ))
            }
            _ => Err(TowerError::DepthExceeded),
        }
    }

    /// The four rational components and radicands, for serialization.
    pub fn parts(&self) -> (&Rat, &Rat, &Rat, &Rat, Option<&Rat>, Option<&(Rat, Rat)>) {
        (&self.a, &self.b, &self.c, &self.d, self.s.as_ref(), self.t.as_ref())
    }
}

type Q1 = (Rat, Rat);

fn q1_add(x: &Q1, y: &Q1) -> Q1 {
    (&x.0 + &y.0, &x.1 + &y.1)
}

fn q1_sub(x: &Q1, y: &Q1) -> Q1 {
    (&x.0 - &y.0, &x.1 - &y.1)
}

fn q1_mul(x: &Q1, y: &Q1, s: &Rat) -> Q1 {
    (&x.0 * &y.0 + &x.1 * &y.1 * s, &x.0 * &y.1 + &x.1 * &y.0)
}

fn q1_inv(x: &Q1, s: &Rat) -> Option<Q1> {
    let norm = &x.0 * &x.0 - &x.1 * &x.1 * s;
    if norm.is_zero() {
        return None;
    }
    Some((&x.0 / &norm, -&x.1 / &norm))
}

fn q1_sign(x: &Q1, s: &Rat) -> i32 {
    let (a, b) = x;
    let sa = rat_sign(a);
    let sb = rat_sign(b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    sa * rat_sign(&(a * a - b * b * s))
}

/// Solves (u + v√s)² = a + b√s over the rationals, if possible.
fn sqrt_in_level1(a: &Rat, b: &Rat, s: &Rat) -> Option<Q1> {
    if b.is_zero() {
        if let Some(u) = rat_sqrt_exact(a) {
            return Some((u, Rat::zero()));
        }
        // a = v²s is also expressible at this level.
        if let Some(v) = rat_sqrt_exact(&(a / s)) {
            return Some((Rat::zero(), v));
        }
        return None;
    }
    let disc = a * a - b * b * s;
    let delta = rat_sqrt_exact(&disc)?;
    for u2 in [(a + &delta) / crate::rat::rat_i(2), (a - &delta) / crate::rat::rat_i(2)] {
        if let Some(u) = rat_sqrt_exact(&u2) {
            if !u.is_zero() {
                let v = b / (crate::rat::rat_i(2) * &u);
                return Some((u, v));
            }
        }
    }
    None
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c, d, s, t) = self.parts();
        write!(f, "{}", a)?;
        if let Some(s) = s {
            if !b.is_zero() {
                write!(f, " + ({})√{}", b, s)?;
            }
            if let Some((t0, t1)) = t {
                if !c.is_zero() || !d.is_zero() {
                    write!(f, " + ({} + ({})√{})·√({} + ({})√{})", c, d, s, t0, t1, s)?;
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for Tower {
    type Output = Tower;
    fn add(self, rhs: Tower) -> Tower {
        self.try_add(&rhs).expect("tower add: incompatible radicands")
    }
}

impl std::ops::Sub for Tower {
    type Output = Tower;
    fn sub(self, rhs: Tower) -> Tower {
        self.try_sub(&rhs).expect("tower sub: incompatible radicands")
    }
}

impl std::ops::Mul for Tower {
    type Output = Tower;
    fn mul(self, rhs: Tower) -> Tower {
        self.try_mul(&rhs).expect("tower mul: incompatible radicands")
    }
}

impl std::ops::Neg for Tower {
    type Output = Tower;
    fn neg(self) -> Tower {
        Tower::neg(&self)
    }
}

impl Zero for Tower {
    fn zero() -> Self {
        Tower::from_rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        Tower::is_zero(self)
    }
}

impl One for Tower {
    fn one() -> Self {
        Tower::from_rat(Rat::one())
    }
}

impl Scalar for Tower {
    fn from_rat(q: &Rat) -> Self {
        Tower::from_rat(q.clone())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("tower add: incompatible radicands")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("tower sub: incompatible radicands")
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("tower mul: incompatible radicands")
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self.try_div(rhs).expect("tower div failed")
    }
    fn neg_ref(&self) -> Self {
        Tower::neg(self)
    }
    fn sign(&self) -> i32 {
        Tower::sign(self)
    }
    fn to_f64(&self) -> f64 {
        Tower::to_f64(self)
    }
    fn as_rat(&self) -> Option<Rat> {
        Tower::as_rat(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    fn sqrt_of(n: i64, d: i64) -> Tower {
        Tower::from_rat(rat(n, d)).sqrt().unwrap()
    }

    #[test]
    fn signs_of_level_one_values() {
        // 17 - 12√2 > 0 because 17² = 289 > 288 = 144·2.
        let x = Tower::from_int(17).try_sub(&sqrt_of(2, 1).try_mul(&Tower::from_int(12)).unwrap()).unwrap();
        assert_eq!(x.sign(), 1);
        // 1 - √(4/3) < 0 because 1 < 4/3.
        let y = Tower::from_int(1).try_sub(&sqrt_of(4, 3)).unwrap();
        assert_eq!(y.sign(), -1);
        let z = Tower::quadratic(rat_i(0), rat_i(0), rat_i(5)).unwrap();
        assert_eq!(z.sign(), 0);
        assert!(z.is_zero());
    }

    #[test]
    fn conjugate_product_is_rational() {
        let a = rat(3, 2);
        let b = rat(-5, 7);
        let s = rat_i(10);
        let x = Tower::quadratic(a.clone(), b.clone(), s.clone()).unwrap();
        let y = Tower::quadratic(a.clone(), -b.clone(), s.clone()).unwrap();
        let prod = x.try_mul(&y).unwrap();
        assert_eq!(prod.as_rat(), Some(&a * &a - &b * &b * &s));
    }

    #[test]
    fn radicand_canonicalisation() {
        // √8 = 2√2 and √(4/3) = (2/3)√3 meet in canonical extensions.
        let r8 = sqrt_of(8, 1);
        let r2 = sqrt_of(2, 1);
        assert_eq!(r8, r2.try_mul(&Tower::from_int(2)).unwrap());
        let r43 = sqrt_of(4, 3);
        let r3 = sqrt_of(3, 1);
        assert_eq!(r43, r3.try_mul(&Tower::from_rat(rat(2, 3))).unwrap());
    }

    #[test]
    fn nested_sqrt_denests_when_possible() {
        // √(17 - 12√2) = 3 - 2√2 exactly.
        let x = Tower::quadratic(rat_i(17), rat_i(-12), rat_i(2)).unwrap();
        let r = x.sqrt().unwrap();
        assert_eq!(r.level(), 1);
        assert_eq!(r, Tower::quadratic(rat_i(3), rat_i(-2), rat_i(2)).unwrap());
        assert_eq!(r.try_mul(&r).unwrap(), x);
    }

    #[test]
    fn nested_sqrt_round_trip() {
        // λ = 1 - (1/6)√13 is positive with no exact root; √λ sits at level 2.
        let lam = Tower::quadratic(rat_i(1), rat(-1, 6), rat_i(13)).unwrap();
        assert_eq!(lam.sign(), 1);
        let r = lam.sqrt().unwrap();
        assert_eq!(r.level(), 2);
        assert_eq!(r.try_mul(&r).unwrap(), lam);
        assert_eq!(r.sqrt(), Err(TowerError::DepthExceeded));
    }

    #[test]
    fn level_one_division() {
        // (-4 + 2√3) / (2√3) = 1 - (2/3)√3.
        let num = Tower::quadratic(rat_i(-4), rat_i(2), rat_i(3)).unwrap();
        let den = Tower::quadratic(rat_i(0), rat_i(2), rat_i(3)).unwrap();
        let q = num.try_div(&den).unwrap();
        assert_eq!(q, Tower::quadratic(rat_i(1), rat(-2, 3), rat_i(3)).unwrap());
        assert_eq!(q.try_mul(&den).unwrap(), num);
    }

    #[test]
    fn division_round_trip() {
        let lam = Tower::quadratic(rat_i(2), rat(1, 3), rat_i(7)).unwrap();
        let mu = lam.sqrt().unwrap().try_add(&Tower::from_int(1)).unwrap();
        let q = lam.try_div(&mu).unwrap();
        assert_eq!(q.try_mul(&mu).unwrap(), lam);
        assert_eq!(
            Tower::from_int(1).try_div(&Tower::from_int(0)),
            Err(TowerError::DivisionByZero)
        );
    }

    #[test]
    fn squares_are_never_negative() {
        for (a, b, s) in [(-3, 2, 5), (1, -1, 2), (0, 7, 3), (4, 4, 11)] {
            let x = Tower::quadratic(rat_i(a), rat_i(b), rat_i(s)).unwrap();
            assert!(x.try_mul(&x).unwrap().sign() >= 0);
        }
    }

    #[test]
    fn incompatible_radicands_are_rejected() {
        let r2 = sqrt_of(2, 1);
        let r3 = sqrt_of(3, 1);
        assert_eq!(r2.try_add(&r3), Err(TowerError::IncompatibleRadicands));
    }
}
