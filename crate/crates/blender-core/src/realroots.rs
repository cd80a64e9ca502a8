//! Exact positivity kernels: psd/pd classification of binary forms via
//! squarefree decomposition and Sturm chains, psd tests for symmetric
//! rational matrices by characteristic-polynomial sign alternation, and
//! the Hankel (catalecticant) construction for binary forms.
//!
//! Nothing here is floating point.  The deciding path works for rational
//! coefficients and for quadratic-tower coefficients alike; zero witnesses
//! are reported as exact rational points or as isolating intervals with a
//! squarefree defining polynomial.

use crate::forms::{Form, QForm};
use crate::rat::Rat;
use crate::scalar::Scalar;
use crate::unipoly::Poly;
use crate::verdict::MembershipVerdict;
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("the zero form has no positivity class")]
    ZeroForm,
    #[error("binary kernel needs exactly two variables, got {0}")]
    NotBinary(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("operation needs even degree, got {0}")]
    OddDegree(u32),
}

/// A projective real zero of a binary form.
#[derive(Clone, PartialEq, Debug)]
pub enum ZeroPoint<K = Rat> {
    /// An exact rational projective point `(x : y)`.
    Rational(Rat, Rat),
    /// A real algebraic zero `(1 : t)` described by a squarefree defining
    /// polynomial for `t` together with an isolating interval `(lo, hi]`.
    Isolated { poly: Poly<K>, lo: Rat, hi: Rat },
}

#[derive(Clone, PartialEq, Debug)]
pub struct ProjectiveZero<K = Rat> {
    pub point: ZeroPoint<K>,
    pub multiplicity: usize,
}

/// Exact positivity trichotomy of a form.
#[derive(Clone, PartialEq, Debug)]
pub enum PsdStatus<K = Rat> {
    PositiveDefinite,
    PsdWithZeros(Vec<ProjectiveZero<K>>),
    /// Not psd (includes forms that are everywhere ≤ 0).
    Indefinite,
}

impl<K> PsdStatus<K> {
    pub fn is_psd(&self) -> bool {
        !matches!(self, PsdStatus::Indefinite)
    }

    pub fn is_pd(&self) -> bool {
        matches!(self, PsdStatus::PositiveDefinite)
    }
}

/// Exact psd/pd classification of a nonzero binary form.
///
/// Monomial factors `x^a y^b` are split off first: odd `a` or `b` forces a
/// sign change.  The cofactor is dehomogenised and run through Yun's
/// squarefree decomposition; the form is psd iff every real root has even
/// multiplicity and the squarefree odd part never vanishes with positive
/// leading behaviour, decided by a Sturm chain over the whole line.
pub fn binary_psd_status<K: Scalar>(p: &Form<K>) -> Result<PsdStatus<K>, KernelError> {
    if p.nvars() != 2 {
        return Err(KernelError::NotBinary(p.nvars()));
    }
    if p.is_zero() {
        return Err(KernelError::ZeroForm);
    }
    if p.degree() == 0 {
        return Ok(match p.raw_coeff(&[0, 0]).sign() {
            1 => PsdStatus::PositiveDefinite,
            _ => PsdStatus::Indefinite,
        });
    }
    if p.degree() % 2 == 1 {
        return Ok(PsdStatus::Indefinite);
    }
    let d = p.degree();
    let j_min = p.terms().map(|(e, _)| e.0[1]).min().unwrap();
    let j_max = p.terms().map(|(e, _)| e.0[1]).max().unwrap();
    let b = j_min; // power of y dividing p
    let a = d - j_max; // power of x dividing p
    if a % 2 == 1 || b % 2 == 1 {
        return Ok(PsdStatus::Indefinite);
    }
    // Dehomogenised cofactor f(t) = q(1, t) with q = p/(x^a y^b);
    // f(0) ≠ 0 and deg f = deg q.
    let full = p.binary_dehomogenise();
    let shifted: Vec<K> = (j_min..=j_max).map(|j| full.coeff(j as usize)).collect();
    let f = Poly::new(shifted);

    let mut zeros: Vec<ProjectiveZero<K>> = Vec::new();
    if a > 0 {
        zeros.push(ProjectiveZero {
            point: ZeroPoint::Rational(Rat::zero(), Rat::from_integer(1.into())),
            multiplicity: a as usize,
        });
    }
    if b > 0 {
        zeros.push(ProjectiveZero {
            point: ZeroPoint::Rational(Rat::from_integer(1.into()), Rat::zero()),
            multiplicity: b as usize,
        });
    }

    if f.degree() == 0 {
        if f.leading().sign() < 0 {
            return Ok(PsdStatus::Indefinite);
        }
        return Ok(if zeros.is_empty() {
            PsdStatus::PositiveDefinite
        } else {
            PsdStatus::PsdWithZeros(zeros)
        });
    }

    if f.leading().sign() < 0 {
        // Negative at +∞; never psd.
        return Ok(PsdStatus::Indefinite);
    }
    // Cheap exact pre-filters before the root machinery.
    if zeros.is_empty()
        && f.coeffs().iter().enumerate().all(|(k, c)| {
            if k % 2 == 0 {
                c.sign() > 0 || (c.is_zero() && k != 0 && k != f.degree())
            } else {
                c.is_zero()
            }
        })
    {
        // Even powers of t with positive ends: strictly positive.
        return Ok(PsdStatus::PositiveDefinite);
    }
    for probe in [-2i64, -1, 1, 2] {
        let num = crate::rat::rat_i(probe);
        let den = crate::rat::rat_i(2);
        for t in [Rat::from_integer(probe.into()), num / den] {
            if f.sign_at(&t) < 0 {
                return Ok(PsdStatus::Indefinite);
            }
        }
    }
    // Even cofactors factor through z = t², halving every degree: decide
    // on the half-line and only fall back for zero-witness extraction.
    if f.coeffs().iter().enumerate().all(|(k, c)| k % 2 == 0 || c.is_zero()) {
        let half = Poly::new(f.coeffs().iter().step_by(2).cloned().collect());
        if half.sign_at(&Rat::zero()) < 0 {
            return Ok(PsdStatus::Indefinite);
        }
        let (radical, odd) = half.radical_and_odd_part();
        let bound = half.root_bound();
        if odd.degree() > 0 && odd.count_real_roots_in(&Rat::zero(), &bound) > 0 {
            return Ok(PsdStatus::Indefinite);
        }
        let boundary_zeros =
            radical.degree() > 0 && radical.count_real_roots_in(&Rat::zero(), &bound) > 0;
        if !boundary_zeros {
            return Ok(if zeros.is_empty() {
                PsdStatus::PositiveDefinite
            } else {
                PsdStatus::PsdWithZeros(zeros)
            });
        }
        // Fall through to the full machinery to report the zeros.
    }
    let decomposition = f.squarefree_decomposition();
    let mut odd = Poly::constant(K::one());
    for (g, i) in &decomposition {
        if i % 2 == 1 {
            odd = odd.mul(g);
        }
    }
    if odd.degree() > 0 && odd.count_real_roots() > 0 {
        return Ok(PsdStatus::Indefinite);
    }
    // All real roots now come from even-multiplicity squarefree factors.
    for (g, i) in &decomposition {
        if i % 2 == 1 {
            continue;
        }
        for (lo, hi) in g.isolate_real_roots() {
            let point = match g.rational_root_in(&lo, &hi) {
                Some(t) => ZeroPoint::Rational(Rat::from_integer(1.into()), t),
                None => ZeroPoint::Isolated { poly: g.clone(), lo, hi },
            };
            zeros.push(ProjectiveZero { point, multiplicity: *i });
        }
    }
    Ok(if zeros.is_empty() {
        PsdStatus::PositiveDefinite
    } else {
        PsdStatus::PsdWithZeros(zeros)
    })
}

/// An exact symmetric rational matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct SymMatrix {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl SymMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<SymMatrix, KernelError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(KernelError::NotSymmetric);
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(KernelError::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    /// Coefficients of det(xI − M) = x^n + c₁x^(n−1) + … + c_n, returned as
    /// `[1, c₁, …, c_n]`, by the Faddeev–LeVerrier recursion.
    ///
    /// Denominators are cleared first: the recursion then stays in the
    /// integers (the characteristic polynomial of an integer matrix is
    /// integral), and the positive scaling `M → d·M` multiplies `c_k` by
    /// `d^k`, which leaves every sign test unchanged and is divided back
    /// out at the end.
    pub fn char_poly(&self) -> Vec<Rat> {
        use num::bigint::BigInt;
        use num::Integer;
        let n = self.n;
        let mut den = BigInt::from(1);
        for row in &self.rows {
            for e in row {
                den = den.lcm(e.denom());
            }
        }
        let a: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| e.numer() * (&den / e.denom())).collect())
            .collect();
        let mut coeffs_int = vec![BigInt::from(1)];
        let mut m = vec![vec![BigInt::from(0); n]; n]; // M_0 = 0
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{k-1}·I ; c_k = -tr(A·M_k)/k, exactly.
            let mut am = vec![vec![BigInt::from(0); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigInt::from(0);
                    for l in 0..n {
                        acc += &a[i][l] * &m[l][j];
                    }
                    if i == j {
                        acc += coeffs_int.last().unwrap();
                    }
                    am[i][j] = acc;
                }
            }
            let mut tr = BigInt::from(0);
            for i in 0..n {
                for l in 0..n {
                    tr += &a[i][l] * &am[l][i];
                }
            }
            coeffs_int.push(-tr / BigInt::from(k as i64));
            m = am;
        }
        let mut scale = Rat::from_integer(1.into());
        let den_rat = Rat::from_integer(den);
        coeffs_int
            .into_iter()
            .map(|c| {
                let out = Rat::from_integer(c) / &scale;
                scale *= &den_rat;
                out
            })
            .collect()
    }

    /// An exact basis of the kernel, by Gaussian elimination.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let n = self.n;
        let mut m = self.rows.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = Rat::from_integer(1.into()) / &m[row][col];
            for c in 0..n {
                m[row][c] = &m[row][c] * &inv;
            }
            for r in 0..n {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..n {
                        let sub = &f * &m[row][c];
                        m[r][c] = &m[r][c] - &sub;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::from_integer(1.into());
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Exact psd trichotomy for a symmetric rational matrix.
#[derive(Clone, PartialEq, Debug)]
pub enum SymPsdStatus {
    PositiveDefinite,
    /// Positive semidefinite with the given exact kernel basis.
    PsdWithKernel(Vec<Vec<Rat>>),
    Indefinite,
}

impl SymPsdStatus {
    pub fn is_psd(&self) -> bool {
        !matches!(self, SymPsdStatus::Indefinite)
    }
}

/// Decides psd/pd by sign alternation of the characteristic polynomial:
/// with det(xI − M) = Σ c_k x^(n−k), all eigenvalues are ≥ 0 iff
/// (−1)^k c_k ≥ 0 for every k, and > 0 iff the alternation is strict.
pub fn sym_psd_status(m: &SymMatrix) -> SymPsdStatus {
    let coeffs = m.char_poly();
    let mut weak = true;
    let mut strict = true;
    for (k, c) in coeffs.iter().enumerate() {
        let signed = if k % 2 == 0 { c.clone() } else { -c.clone() };
        if signed < Rat::zero() {
            weak = false;
        }
        if signed <= Rat::zero() && k > 0 {
            strict = false;
        }
    }
    if !weak {
        return SymPsdStatus::Indefinite;
    }
    if strict {
        return SymPsdStatus::PositiveDefinite;
    }
    SymPsdStatus::PsdWithKernel(m.kernel_basis())
}

/// The (r+1)×(r+1) Hankel (catalecticant) matrix of a binary form of
/// degree 2r, with entries `a(p; i+j)`.
pub fn catalecticant(p: &QForm) -> Result<SymMatrix, KernelError> {
    if p.nvars() != 2 {
        return Err(KernelError::NotBinary(p.nvars()));
    }
    if p.degree() % 2 == 1 {
        return Err(KernelError::OddDegree(p.degree()));
    }
    let r = (p.degree() / 2) as usize;
    let a = p.binary_a_coeffs();
    let rows = (0..=r)
        .map(|i| (0..=r).map(|j| a[i + j].clone()).collect())
        .collect();
    SymMatrix::from_rows(rows)
}

/// Membership of a binary form of even degree in the cone of sums of
/// 2r-th powers of linear forms, via the Hankel matrix: interior iff pd,
/// boundary iff psd with kernel, outside iff indefinite.
pub fn q_membership(p: &QForm) -> Result<MembershipVerdict, KernelError> {
    if p.is_zero() {
        return Ok(MembershipVerdict::Boundary);
    }
    match sym_psd_status(&catalecticant(p)?) {
        SymPsdStatus::PositiveDefinite => Ok(MembershipVerdict::Interior),
        SymPsdStatus::PsdWithKernel(_) => Ok(MembershipVerdict::Boundary),
        SymPsdStatus::Indefinite => Ok(MembershipVerdict::Outside),
    }
}
