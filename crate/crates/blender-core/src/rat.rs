//! Exact rational scalars and small combinatorial helpers.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// The exact rational scalar used everywhere on the deciding path.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses an exact rational from a decimal-free string such as `"-3/4"` or `"17"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Renders a rational in the canonical `num/den` (or bare integer) format.
pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

pub fn rat_sign(q: &Rat) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    let num = q.numer();
    let den = q.denom();
    // Exact conversion is impossible in general; split into quotient and
    // remainder so huge numerators do not overflow the mantissa path.
    let (quot, rem) = num::Integer::div_rem(num, den);
    let q_f = bigint_to_f64(&quot);
    let rem_f = bigint_to_f64(&rem) / bigint_to_f64(den);
    q_f + rem_f
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    use num::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k` is out of range.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Multinomial coefficient `d! / (i_1! ... i_n!)` for the exponent tuple `i`.
pub fn multinomial(exps: &[u32]) -> BigInt {
    let d: u32 = exps.iter().sum();
    let mut acc = factorial(d);
    for &e in exps {
        acc /= factorial(e);
    }
    acc
}

/// Exact square root of a non-negative rational, when one exists.
pub fn rat_sqrt_exact(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Writes `q = m^2 * f` with `f` squarefree, returning `(m, f)`.
///
/// Factors by trial division; any residual cofactor beyond the trial bound
/// is left inside `f`, which keeps the result correct (if not minimal).
pub fn extract_square_part(n: &BigInt) -> (BigInt, BigInt) {
    use num::Integer;
    let mut m = BigInt::one();
    let mut f = n.clone();
    if f.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(1_000_000u64);
    while &(&p * &p) <= &f && p <= bound {
        loop {
            let p2 = &p * &p;
            if f.is_multiple_of(&p2) {
                f /= &p2;
                m *= &p;
            } else {
                break;
            }
        }
        p += 1u32;
    }
    // Residual may itself be a perfect square (e.g. a large prime squared).
    let r = f.sqrt();
    if &(&r * &r) == &f {
        m *= &r;
        f = BigInt::one();
    }
    (m, f)
}
