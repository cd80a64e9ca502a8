//! Dense univariate polynomials over an exact field, with the real-root
//! machinery the positivity kernels are built on: euclidean division,
//! gcds, Yun's squarefree decomposition, Sturm chains and root isolation.

use crate::rat::Rat;
use crate::scalar::Scalar;
use num::{BigInt, Integer, One, Signed, Zero};

/// Coefficients in ascending degree order; no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Scalar> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Poly<K> {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<K> {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: K) -> Poly<K> {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn leading(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> K {
        self.eval(&K::from_rat(x))
    }

    /// Exact sign of `f(t)` at a rational point.  Rational-coefficient
    /// polynomials go through a homogenised integer Horner evaluation
    /// (`sign Σ c_i·p^i·q^(d−i)` for `t = p/q`), which avoids the gcd
    /// reduction cost of rational arithmetic entirely.
    pub fn sign_at(&self, t: &Rat) -> i32 {
        if let Some(ints) = to_int_coeffs(self) {
            if ints.is_empty() {
                return 0;
            }
            let p = t.numer();
            let q = t.denom();
            let d = ints.len() - 1;
            let mut acc = BigInt::zero();
            let mut qpow = BigInt::one();
            let mut ppows = Vec::with_capacity(d + 1);
            let mut pp = BigInt::one();
            for _ in 0..=d {
                ppows.push(pp.clone());
                pp *= p;
            }
            for (i, c) in ints.iter().enumerate().rev() {
                acc += c * &ppows[i] * &qpow;
                qpow *= q;
            }
            return if acc.is_zero() {
                0
            } else if acc.is_negative() {
                -1
            } else {
                1
            };
        }
        self.eval_rat(t).sign()
    }

    pub fn derivative(&self) -> Poly<K> {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_ref(&K::from_int(k as i64)))
            .collect();
        Poly::new(coeffs)
    }

    pub fn add(&self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add_ref(&rhs.coeff(k))).collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub_ref(&rhs.coeff(k))).collect();
        Poly::new(coeffs)
    }

    pub fn neg(&self) -> Poly<K> {
        Poly::new(self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }

    pub fn mul(&self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &K) -> Poly<K> {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Poly<K>) -> (Poly<K>, Poly<K>) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dr = rhs.coeffs.len() - 1;
        if rem.len() <= dr {
            return (Poly::zero(), self.clone());
        }
        let lead = rhs.coeffs.last().unwrap();
        let mut quot = vec![K::zero(); rem.len() - dr];
        for k in (dr..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].div_ref(lead);
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k - dr + j] = rem[k - dr + j].sub_ref(&q.mul_ref(b));
            }
            quot[k - dr] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn div_exact(&self, rhs: &Poly<K>) -> Option<Poly<K>> {
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Poly<K> {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = K::one().div_ref(&self.leading());
        self.scale(&inv)
    }

    /// Monic gcd; rational inputs go through the integer remainder
    /// sequence, everything else through the euclidean algorithm.
    pub fn gcd(&self, rhs: &Poly<K>) -> Poly<K> {
        if let (Some(mut a), Some(mut b)) = (to_int_coeffs(self), to_int_coeffs(rhs)) {
            if b.is_empty() {
                return self.monic();
            }
            if a.is_empty() {
                return rhs.monic();
            }
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            let prs = int_remainder_sequence(a, b);
            let last = prs.iter().rev().find(|v| !v.is_empty()).expect("inputs nonzero");
            return Poly::new(
                last.iter().map(|c| K::from_rat(&Rat::from_integer(c.clone()))).collect(),
            )
            .monic();
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.reduced();
        }
        a.monic()
    }

    /// Divides out a positive scalar to keep chain coefficients small;
    /// the sign pattern is untouched.  A no-op for tower coefficients.
    fn reduced(&self) -> Poly<K> {
        if self.is_zero() {
            return Poly::zero();
        }
        let rats: Option<Vec<Rat>> = self.coeffs.iter().map(|c| c.as_rat()).collect();
        let Some(rats) = rats else {
            return self.clone();
        };
        let mut den = BigInt::one();
        for r in &rats {
            den = den.lcm(r.denom());
        }
        let mut num = BigInt::zero();
        for r in &rats {
            num = num.gcd(&(r.numer() * (&den / r.denom())));
        }
        if num.is_zero() {
            return self.clone();
        }
        let factor = Rat::new(den, num.abs());
        let factor = K::from_rat(&factor);
        Poly::new(self.coeffs.iter().map(|c| c.mul_ref(&factor)).collect())
    }

    /// Yun's squarefree decomposition: returns monic squarefree pairwise
    /// coprime `g_i` with `self = lc · Π g_i^i` (factors of multiplicity
    /// `i`, omitting trivial ones).
    pub fn squarefree_decomposition(&self) -> Vec<(Poly<K>, usize)> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.degree() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides derivative");
        let mut i = 1;
        loop {
            let d = c.sub(&b.derivative());
            let g = b.gcd(&d);
            if g.degree() > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_exact(&g).expect("squarefree step divides");
            if b.degree() == 0 {
                break;
            }
            c = d.div_exact(&g).expect("squarefree step divides");
            i += 1;
        }
        out
    }

    /// The radical `Π g_i` and the odd part `Π_{i odd} g_i`.
    pub fn radical_and_odd_part(&self) -> (Poly<K>, Poly<K>) {
        let mut radical = Poly::constant(K::one());
        let mut odd = Poly::constant(K::one());
        for (g, i) in self.squarefree_decomposition() {
            radical = radical.mul(&g);
            if i % 2 == 1 {
                odd = odd.mul(&g);
            }
        }
        (radical, odd)
    }

    /// Sturm chain of a squarefree polynomial.  Rational inputs take an
    /// integer pseudo-remainder path (the chain members agree up to
    /// positive factors, which is all sign counting needs).
    pub fn sturm_chain(&self) -> Vec<Poly<K>> {
        if let Some(chain) = self.sturm_chain_integer() {
            return chain;
        }
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == 0 {
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            chain.push(r.neg().reduced());
        }
        chain
    }

    /// Integer-arithmetic Sturm chain via sign-controlled pseudo-remainders
    /// with content stripping; `None` when a coefficient is irrational.
    fn sturm_chain_integer(&self) -> Option<Vec<Poly<K>>> {
        let f0 = to_int_coeffs(self)?;
        if f0.is_empty() {
            return Some(vec![Poly::zero()]);
        }
        let mut f1 = int_derivative(&f0);
        int_strip_content(&mut f1);
        let ints = int_remainder_sequence(f0, f1);
        Some(
            ints.into_iter()
                .map(|v| {
                    Poly::new(
                        v.into_iter()
                            .map(|c| K::from_rat(&Rat::from_integer(c)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    fn sign_variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    fn variations_at(chain: &[Poly<K>], x: &Rat) -> usize {
        Self::sign_variations(chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_neg_inf(chain: &[Poly<K>]) -> usize {
        Self::sign_variations(chain.iter().map(|p| {
            let s = p.leading().sign();
            if p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    fn variations_at_pos_inf(chain: &[Poly<K>]) -> usize {
        Self::sign_variations(chain.iter().map(|p| p.leading().sign()))
    }

    /// Number of distinct real roots of a squarefree polynomial.
    pub fn count_real_roots(&self) -> usize {
        if self.degree() == 0 || self.is_zero() {
            return 0;
        }
        let chain = self.sturm_chain();
        Self::variations_at_neg_inf(&chain) - Self::variations_at_pos_inf(&chain)
    }

    /// Number of distinct real roots of a squarefree polynomial in `(lo, hi]`.
    pub fn count_real_roots_in(&self, lo: &Rat, hi: &Rat) -> usize {
        if self.degree() == 0 || self.is_zero() {
            return 0;
        }
        let chain = self.sturm_chain();
        Self::variations_at(&chain, lo) - Self::variations_at(&chain, hi)
    }

    /// A bound `M` with every real root in `(-M, M)`.
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading();
        let mut max = Rat::zero();
        for c in &self.coeffs {
            let ratio = c.div_ref(&lead);
            let approx = ratio.to_f64().abs();
            // An exact bound needs |c/lead|; take a rational over-estimate.
            let est = Rat::from_integer(BigInt::from(approx.ceil() as i64 + 1));
            if est > max {
                max = est;
            }
        }
        max + Rat::one()
    }

    /// Isolating intervals `(lo, hi]` for the distinct real roots of a
    /// squarefree polynomial, in increasing order.
    pub fn isolate_real_roots(&self) -> Vec<(Rat, Rat)> {
        if self.degree() == 0 || self.is_zero() {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let bound = self.root_bound_exact();
        let lo = -bound.clone();
        let hi = bound;
        let total = Self::variations_at(&chain, &lo) - Self::variations_at(&chain, &hi);
        let mut out = Vec::new();
        if total == 0 {
            return out;
        }
        let mut stack = vec![(lo, hi)];
        while let Some((a, b)) = stack.pop() {
            let n = Self::variations_at(&chain, &a) - Self::variations_at(&chain, &b);
            match n {
                0 => {}
                1 => out.push((a, b)),
                _ => {
                    let mid = (&a + &b) / crate::rat::rat_i(2);
                    stack.push((mid.clone(), b));
                    stack.push((a, mid));
                }
            }
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Exact Cauchy-style root bound: 1 + max |c_k / lead|.
    fn root_bound_exact(&self) -> Rat {
        let lead = self.leading();
        let mut max = Rat::zero();
        for c in &self.coeffs {
            if let (Some(cr), Some(lr)) = (c.as_rat(), lead.as_rat()) {
                let v = (cr / lr).abs();
                if v > max {
                    max = v;
                }
            } else {
                // Tower coefficients: bound |c/lead| by a rational via the
                // float estimate, then verify by exact sign tests.
                let ratio = c.div_ref(&lead);
                let mut est = Rat::from_integer(BigInt::from(ratio.to_f64().abs().ceil() as i64 + 1));
                // Grow until est - |ratio| >= 0 exactly.
                loop {
                    let diff_pos = K::from_rat(&est).sub_ref(&ratio).sign() >= 0;
                    let diff_neg = K::from_rat(&est).add_ref(&ratio).sign() >= 0;
                    if diff_pos && diff_neg {
                        break;
                    }
                    est = est * crate::rat::rat_i(2);
                }
                if est > max {
                    max = est;
                }
            }
        }
        max + Rat::one()
    }

    /// Shrinks an isolating interval of a squarefree polynomial below `width`.
    pub fn refine_interval(&self, mut lo: Rat, mut hi: Rat, width: &Rat) -> (Rat, Rat) {
        let chain = self.sturm_chain();
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / crate::rat::rat_i(2);
            let n_left = Self::variations_at(&chain, &lo) - Self::variations_at(&chain, &mid);
            if n_left == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (lo, hi)
    }

    /// Attempts to recognise the unique root in an isolating interval as an
    /// exact rational, via continued-fraction convergents of the refined
    /// midpoint.  Roots with denominators beyond ~10^12 are left algebraic.
    pub fn rational_root_in(&self, lo: &Rat, hi: &Rat) -> Option<Rat> {
        // Quick exact checks at simple candidates first.
        let (mut lo, mut hi) = (lo.clone(), hi.clone());
        for _ in 0..4 {
            if self.eval_rat(&hi).is_zero() {
                return Some(hi);
            }
            let width = &hi - &lo;
            let target = width / crate::rat::rat_i(1 << 16);
            let refined = self.refine_interval(lo.clone(), hi.clone(), &target);
            lo = refined.0;
            hi = refined.1;
            let mid = (&lo + &hi) / crate::rat::rat_i(2);
            for cand in convergents(&mid, 40) {
                if &cand > &lo && &cand <= &hi && self.eval_rat(&cand).is_zero() {
                    return Some(cand);
                }
            }
            if (&hi - &lo) < Rat::new(BigInt::one(), BigInt::from(10u8).pow(30)) {
                break;
            }
        }
        None
    }
}

/// Integer coefficient view of a rational-coefficient polynomial, with
/// denominators cleared, content stripped and trailing zeros trimmed;
/// `None` when some coefficient is irrational.
fn to_int_coeffs<K: Scalar>(p: &Poly<K>) -> Option<Vec<BigInt>> {
    let rats: Option<Vec<Rat>> = p.coeffs.iter().map(|c| c.as_rat()).collect();
    let rats = rats?;
    let mut den = BigInt::one();
    for r in &rats {
        den = den.lcm(r.denom());
    }
    let mut v: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&den / r.denom())).collect();
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    int_strip_content(&mut v);
    v.shrink_to_fit();
    Some(v)
}

fn int_strip_content(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in v.iter() {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

fn int_derivative(v: &[BigInt]) -> Vec<BigInt> {
    if v.len() <= 1 {
        return Vec::new();
    }
    v.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()
}

/// The signed remainder sequence starting from `(a, b)`, each member equal
/// to `-rem(prev2, prev1)` up to a positive factor (the Sturm convention),
/// computed with integer pseudo-remainders and per-step content stripping.
fn int_remainder_sequence(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let mut ints: Vec<Vec<BigInt>> = vec![a, b];
    loop {
        let n = ints.len();
        if ints[n - 1].is_empty() {
            ints.pop();
            break;
        }
        if ints[n - 1].len() == 1 {
            break;
        }
        // rem(lc^(δ+1)·a, b) stays integral; the multiplier's sign decides
        // whether the pseudo-remainder already carries the wanted -rem sign.
        let (a, b) = (&ints[n - 2], &ints[n - 1]);
        debug_assert!(a.len() >= b.len(), "callers order the sequence by degree");
        let db = b.len() - 1;
        let delta = (a.len() - b.len()) as u32;
        let lc = b.last().unwrap().clone();
        let mult_negative = lc.is_negative() && (delta + 1) % 2 == 1;
        let factor = num::pow::pow(lc.clone(), (delta + 1) as usize);
        let mut rem: Vec<BigInt> = a.iter().map(|c| c * &factor).collect();
        for k in (db..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lc;
            for (j, bc) in b.iter().enumerate() {
                let sub = &q * bc;
                rem[k - db + j] = &rem[k - db + j] - sub;
            }
        }
        rem.truncate(db);
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
        int_strip_content(&mut rem);
        if !mult_negative {
            for c in rem.iter_mut() {
                *c = -c.clone();
            }
        }
        ints.push(rem);
    }
    ints
}

/// Continued-fraction convergents of a rational, smallest denominators first.
fn convergents(x: &Rat, max_terms: usize) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    for _ in 0..max_terms {
        if den.is_zero() {
            break;
        }
        let a = num.div_floor(&den);
        let rem = &num - &a * &den;
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        out.push(Rat::new(h2.clone(), k2.clone()));
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        num = den;
        den = rem;
        if k1 > BigInt::from(10u64).pow(13) {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    fn ipoly(cs: &[i64]) -> Poly<Rat> {
        Poly::new(cs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let f = ipoly(&[-2, 0, 1]); // x² - 2
        let g = ipoly(&[1, 1]); // x + 1
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, ipoly(&[-1, 1]));
        assert_eq!(r, ipoly(&[-1]));
        let h = f.mul(&g);
        assert_eq!(h.gcd(&f), f.monic());
        assert_eq!(h.div_exact(&g), Some(f));
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (x-1)²(x+2)³ · x
        let f = ipoly(&[-1, 1]);
        let g = ipoly(&[2, 1]);
        let x = ipoly(&[0, 1]);
        let p = f.mul(&f).mul(&g).mul(&g).mul(&g).mul(&x);
        let dec = p.squarefree_decomposition();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], (x.monic(), 1));
        assert_eq!(dec[1], (f.monic(), 2));
        assert_eq!(dec[2], (g.monic(), 3));
    }

    #[test]
    fn sturm_counts_roots() {
        // x³ - x has roots -1, 0, 1.
        let p = ipoly(&[0, -1, 0, 1]);
        assert_eq!(p.count_real_roots(), 3);
        // 1 + 45t⁴ + 18t⁶ has none.
        let q = Poly::new(vec![rat_i(1), rat_i(0), rat_i(0), rat_i(0), rat_i(45), rat_i(0), rat_i(18)]);
        assert_eq!(q.count_real_roots(), 0);
        assert_eq!(p.count_real_roots_in(&rat(-1, 2), &rat_i(2)), 2);
    }

    #[test]
    fn isolation_and_rational_recovery() {
        // (x - 1/3)(x + 7)(x² - 2)
        let p = ipoly(&[-1, 3]).mul(&ipoly(&[7, 1])).mul(&ipoly(&[-2, 0, 1]));
        let roots = p.isolate_real_roots();
        assert_eq!(roots.len(), 4);
        let rationals: Vec<Option<Rat>> = roots
            .iter()
            .map(|(lo, hi)| p.rational_root_in(lo, hi))
            .collect();
        assert_eq!(rationals[0], Some(rat_i(-7)));
        assert_eq!(rationals[1], None); // -√2
        assert_eq!(rationals[2], Some(rat(1, 3)));
        assert_eq!(rationals[3], None); // √2
    }
}
