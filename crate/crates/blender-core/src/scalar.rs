//! The coefficient abstraction shared by the exact kernels.
//!
//! Every deciding computation runs over a field with exactly decidable
//! signs: either the rationals or a quadratic-extension tower over them.

use crate::rat::{rat_sign, rat_to_f64, Rat};
use num::{One, Zero};
use std::fmt::{Debug, Display};

/// An exact field with decidable sign, rich enough for Sturm chains.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Send + Sync + 'static + Zero + One
{
    fn from_rat(q: &Rat) -> Self;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Exact division; panics on a zero divisor.
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Exact sign: -1, 0 or +1.
    fn sign(&self) -> i32;
    /// Floating approximation, for sampling and plotting only.
    fn to_f64(&self) -> f64;
    /// Exact rational view, when the value lies in the base field.
    fn as_rat(&self) -> Option<Rat>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(&crate::rat::rat_i(n))
    }
}

impl Scalar for Rat {
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn sign(&self) -> i32 {
        rat_sign(self)
    }
    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}
