//! Homogeneous forms with exact coefficients and their calculus: arithmetic,
//! evaluation, linear substitution, the apolarity inner product, differential
//! operators, Hessian biforms and the Biermann dual basis.
//!
//! A form of degree `d` in `n` variables is stored sparsely as the map
//! `i -> r(i)` of raw monomial coefficients, so `p = Σ r(i)·x^i` and the
//! normalised coefficient is `a(p;i) = r(i)/c(i)` with `c(i)` the
//! multinomial coefficient.  Substitution and multiplication are then plain
//! polynomial algebra; `a(p;i)` is computed on demand by the inner product.

pub mod json;

use crate::rat::{multinomial, Rat};
use crate::scalar::Scalar;
use crate::tower::Tower;
use crate::unipoly::Poly;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("forms live in different variable counts ({0} vs {1})")]
    NvarsMismatch(usize, usize),
    #[error("forms have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("exponent {0:?} does not sum to the declared degree {1}")]
    BadExponent(Vec<u32>, usize),
    #[error("operator degree {0} exceeds operand degree {1}")]
    OperatorDegree(usize, usize),
    #[error("matrix dimension {0} does not match variable count {1}")]
    MatrixDimension(usize, usize),
    #[error("point has {0} coordinates, form has {1} variables")]
    PointDimension(usize, usize),
}

/// A monomial exponent tuple.  Ordered reverse-lexicographically, so that
/// natural map iteration lists `(d,0,…)` first; this order is fixed across
/// serialization and matrix indexing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(pub Vec<u32>);

impl Exponent {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent tuples of `I(n, d)` in reverse-lexicographic order.
pub fn index_set(nvars: usize, degree: u32) -> Vec<Exponent> {
    assert!(nvars >= 1, "index_set needs at least one variable");
    fn rec(nvars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if nvars == 1 {
            prefix.push(degree);
            out.push(Exponent(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=degree).rev() {
            prefix.push(first);
            rec(nvars - 1, degree - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// A sparse homogeneous form.
#[derive(Clone, PartialEq, Debug)]
pub struct Form<K = Rat> {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Exponent, K>,
}

pub type QForm = Form<Rat>;
pub type TForm = Form<Tower>;

impl<K: Scalar> Form<K> {
    pub fn zero(nvars: usize, degree: u32) -> Form<K> {
        Form { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn from_terms<I, E>(nvars: usize, degree: u32, terms: I) -> Result<Form<K>, FormError>
    where
        I: IntoIterator<Item = (E, K)>,
        E: Into<Vec<u32>>,
    {
        let mut map: BTreeMap<Exponent, K> = BTreeMap::new();
        for (exp, coeff) in terms {
            let exp: Vec<u32> = exp.into();
            if exp.len() != nvars || exp.iter().sum::<u32>() != degree {
                return Err(FormError::BadExponent(exp, degree as usize));
            }
            let e = Exponent(exp);
            let cur = map.remove(&e).unwrap_or_else(K::zero);
            let next = cur.add_ref(&coeff);
            if !next.is_zero() {
                map.insert(e, next);
            }
        }
        Ok(Form { nvars, degree, terms: map })
    }

    pub fn monomial(nvars: usize, exp: &[u32], coeff: K) -> Form<K> {
        Form::from_terms(nvars, exp.iter().sum(), [(exp.to_vec(), coeff)])
            .expect("monomial exponent is consistent by construction")
    }

    /// A binary form from raw coefficients `r_j` of `x^(d-j) y^j`, `j = 0..=d`.
    pub fn binary_from_raw(coeffs: &[K]) -> Form<K> {
        let d = (coeffs.len() - 1) as u32;
        Form::from_terms(
            2,
            d,
            coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (vec![d - j as u32, j as u32], c.clone())),
        )
        .expect("binary exponents are consistent by construction")
    }

    /// A binary form from normalised coefficients: `p = Σ C(d,j)·a_j·x^(d-j) y^j`.
    pub fn binary_from_a(coeffs: &[K]) -> Form<K> {
        let d = (coeffs.len() - 1) as i64;
        let raw: Vec<K> = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c.mul_ref(&K::from_rat(&Rat::from_integer(crate::rat::binomial(d, j as i64)))))
            .collect();
        Form::binary_from_raw(&raw)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Raw monomial coefficient `r(i)`.
    pub fn raw_coeff(&self, exp: &[u32]) -> K {
        self.terms
            .get(&Exponent(exp.to_vec()))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    /// Normalised coefficient `a(p;i) = r(i)/c(i)`.
    pub fn coeff_a(&self, exp: &[u32]) -> K {
        let c = K::from_rat(&Rat::from_integer(multinomial(exp)));
        self.raw_coeff(exp).div_ref(&c)
    }

    /// Normalised coefficients `a_j` of a binary form, `j = 0..=d`.
    pub fn binary_a_coeffs(&self) -> Vec<K> {
        assert_eq!(self.nvars, 2, "binary coefficient view needs two variables");
        (0..=self.degree)
            .map(|j| self.coeff_a(&[self.degree - j, j]))
            .collect()
    }

    fn insert_term(terms: &mut BTreeMap<Exponent, K>, exp: Exponent, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let next = o.get().add_ref(&coeff);
                if next.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = next;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Form<K>) -> Result<Form<K>, FormError> {
        if self.nvars != rhs.nvars {
            return Err(FormError::NvarsMismatch(self.nvars, rhs.nvars));
        }
        if self.degree != rhs.degree {
            return Err(FormError::DegreeMismatch(self.degree as usize, rhs.degree as usize));
        }
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Ok(Form { nvars: self.nvars, degree: self.degree, terms })
    }

    pub fn sub(&self, rhs: &Form<K>) -> Result<Form<K>, FormError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Form<K> {
        Form {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Form<K> {
        if c.is_zero() {
            return Form::zero(self.nvars, self.degree);
        }
        Form {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k.mul_ref(c))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Form<K>) -> Result<Form<K>, FormError> {
        if self.nvars != rhs.nvars {
            return Err(FormError::NvarsMismatch(self.nvars, rhs.nvars));
        }
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exp: Vec<u32> = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                Self::insert_term(&mut terms, Exponent(exp), c1.mul_ref(c2));
            }
        }
        Ok(Form {
            nvars: self.nvars,
            degree: self.degree + rhs.degree,
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Form<K> {
        let mut acc = Form::monomial(self.nvars, &vec![0; self.nvars], K::one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same variable count");
        }
        acc
    }

    pub fn evaluate(&self, point: &[K]) -> Result<K, FormError> {
        if point.len() != self.nvars {
            return Err(FormError::PointDimension(point.len(), self.nvars));
        }
        let mut acc = K::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                for _ in 0..k {
                    term = term.mul_ref(x);
                }
            }
            acc = acc.add_ref(&term);
        }
        Ok(acc)
    }

    pub fn evaluate_rat(&self, point: &[Rat]) -> Result<K, FormError> {
        let pt: Vec<K> = point.iter().map(|q| K::from_rat(q)).collect();
        self.evaluate(&pt)
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut term = c.to_f64();
            for (x, &k) in point.iter().zip(&e.0) {
                term *= x.powi(k as i32);
            }
            acc += term;
        }
        acc
    }

    /// The substitution `(p ∘ M)(x) = p(Mx)`, allowing singular `M`.
    pub fn compose(&self, m: &SquareMatrix<K>) -> Result<Form<K>, FormError> {
        if m.n() != self.nvars {
            return Err(FormError::MatrixDimension(m.n(), self.nvars));
        }
        // Substitute x_j -> ℓ_j = Σ_k m[j][k]·x_k, caching powers of each ℓ_j.
        let lines: Vec<Form<K>> = (0..self.nvars)
            .map(|j| {
                Form::from_terms(
                    self.nvars,
                    1,
                    (0..self.nvars).map(|k| {
                        let mut e = vec![0u32; self.nvars];
                        e[k] = 1;
                        (e, m.entry(j, k).clone())
                    }),
                )
                .expect("linear form exponents are consistent")
            })
            .collect();
        let mut powers: Vec<Vec<Form<K>>> = vec![Vec::new(); self.nvars];
        let mut out = Form::zero(self.nvars, self.degree);
        for (e, c) in &self.terms {
            let mut term = Form::monomial(self.nvars, &vec![0; self.nvars], c.clone());
            for (j, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[j].len() < k as usize {
                    let next = match powers[j].last() {
                        None => lines[j].clone(),
                        Some(prev) => prev.mul(&lines[j]).expect("same variable count"),
                    };
                    powers[j].push(next);
                }
                term = term.mul(&powers[j][k as usize - 1]).expect("same variable count");
            }
            out = out.add(&term.pad_degree(self.degree)).expect("degrees agree");
        }
        Ok(out)
    }

    // compose() builds degree bottom-up; constants need their nominal degree
    // fixed before the final sum.
    fn pad_degree(mut self, degree: u32) -> Form<K> {
        debug_assert!(self.is_zero() || self.degree == degree);
        self.degree = degree;
        self
    }

    pub fn derivative(&self, var: usize) -> Form<K> {
        assert!(var < self.nvars);
        if self.degree == 0 {
            return Form::zero(self.nvars, 0);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut exp = e.0.clone();
            exp[var] -= 1;
            Self::insert_term(&mut terms, Exponent(exp), c.mul_ref(&K::from_int(k as i64)));
        }
        Form { nvars: self.nvars, degree: self.degree - 1, terms }
    }

    /// Re-houses the form in `new_nvars` variables, shifting indices by `offset`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> Form<K> {
        assert!(offset + self.nvars <= new_nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut exp = vec![0u32; new_nvars];
                exp[offset..offset + self.nvars].copy_from_slice(&e.0);
                (Exponent(exp), c.clone())
            })
            .collect();
        Form { nvars: new_nvars, degree: self.degree, terms }
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Form<L> {
        Form {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect(),
        }
    }

    /// Dehomogenisation of a binary form: the coefficient of `y^j` becomes
    /// the degree-`j` coefficient of `f(t) = p(1, t)`.
    pub fn binary_dehomogenise(&self) -> Poly<K> {
        assert_eq!(self.nvars, 2);
        let mut coeffs = vec![K::zero(); self.degree as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e.0[1] as usize] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Exact division of binary forms; `None` when it does not divide.
    pub fn binary_div_exact(&self, rhs: &Form<K>) -> Option<Form<K>> {
        assert_eq!(self.nvars, 2);
        assert_eq!(rhs.nvars, 2);
        if rhs.is_zero() || self.degree < rhs.degree {
            return None;
        }
        // x-adic valuations must be compatible; the rest is univariate.
        let val_x = |p: &Form<K>| p.degree - p.terms.keys().map(|e| e.0[1]).max().unwrap_or(0);
        if !self.is_zero() && val_x(self) < val_x(rhs) {
            return None;
        }
        let q = self.binary_dehomogenise().div_exact(&rhs.binary_dehomogenise())?;
        let d = self.degree - rhs.degree;
        let coeffs: Vec<K> = (0..=d as usize).map(|j| q.coeff(j)).collect();
        Some(Form::binary_from_raw(&coeffs))
    }

    /// The apolarity inner product `[p,q] = Σ c(i)·a(p;i)·a(q;i)`.
    pub fn inner_product(&self, rhs: &Form<K>) -> Result<K, FormError> {
        if self.nvars != rhs.nvars {
            return Err(FormError::NvarsMismatch(self.nvars, rhs.nvars));
        }
        if self.degree != rhs.degree {
            return Err(FormError::DegreeMismatch(self.degree as usize, rhs.degree as usize));
        }
        let mut acc = K::zero();
        for (e, c1) in &self.terms {
            if let Some(c2) = rhs.terms.get(e) {
                // c(i)·a·a' = r·r'/c(i).
                let c = K::from_rat(&Rat::from_integer(multinomial(&e.0)));
                acc = acc.add_ref(&c1.mul_ref(c2).div_ref(&c));
            }
        }
        Ok(acc)
    }

    /// Applies the differential operator `f(D)` to `p`; degree drops by `deg f`.
    pub fn diff_apply(op: &Form<K>, p: &Form<K>) -> Result<Form<K>, FormError> {
        if op.nvars != p.nvars {
            return Err(FormError::NvarsMismatch(op.nvars, p.nvars));
        }
        if op.degree > p.degree {
            return Err(FormError::OperatorDegree(op.degree as usize, p.degree as usize));
        }
        let out_deg = p.degree - op.degree;
        let mut terms = BTreeMap::new();
        for (ei, ci) in &op.terms {
            for (ej, cj) in &p.terms {
                if ei.0.iter().zip(&ej.0).any(|(a, b)| a > b) {
                    continue;
                }
                let exp: Vec<u32> = ej.0.iter().zip(&ei.0).map(|(b, a)| b - a).collect();
                // D^i x^j = (Π_k j_k!/(j_k - i_k)!) x^(j-i).
                let mut fall = Rat::from_integer(1.into());
                for (&jk, &ik) in ej.0.iter().zip(&ei.0) {
                    for step in 0..ik {
                        fall = fall * Rat::from_integer((jk - step).into());
                    }
                }
                let coeff = ci.mul_ref(cj).mul_ref(&K::from_rat(&fall));
                Self::insert_term(&mut terms, Exponent(exp), coeff);
            }
        }
        Ok(Form { nvars: p.nvars, degree: out_deg, terms })
    }
}

impl Form<Rat> {
    pub fn to_tower(&self) -> Form<Tower> {
        self.map_coeffs(|c| Tower::from_rat(c.clone()))
    }
}

impl Form<Tower> {
    /// Exact rational demotion when every coefficient is rational.
    pub fn try_to_rational(&self) -> Option<Form<Rat>> {
        let mut terms = Vec::new();
        for (e, c) in &self.terms {
            terms.push((e.0.clone(), c.as_rat()?));
        }
        Some(Form::from_terms(self.nvars, self.degree, terms).expect("exponents already validated"))
    }
}

/// The d-th power of a linear form: `(α·)^d (x) = (Σ α_k x_k)^d`.
pub fn power_form<K: Scalar>(alpha: &[K], degree: u32) -> Form<K> {
    let n = alpha.len();
    let mut terms = Vec::new();
    for e in index_set(n, degree) {
        let mut coeff = K::from_rat(&Rat::from_integer(multinomial(&e.0)));
        for (a, &k) in alpha.iter().zip(&e.0) {
            for _ in 0..k {
                coeff = coeff.mul_ref(a);
            }
        }
        terms.push((e.0, coeff));
    }
    Form::from_terms(n, degree, terms).expect("exponents enumerate I(n,d)")
}

/// The Biermann basis element `g_j`: a product of `d` linear factors
/// `d·x_k − ℓ·(x_1 + … + x_n)` that vanishes at every `i ∈ I(n,d)` except `j`.
pub fn biermann(j: &Exponent, nvars: usize, degree: u32) -> QForm {
    assert_eq!(j.0.len(), nvars);
    assert_eq!(j.degree(), degree);
    let mut acc: QForm = Form::monomial(nvars, &vec![0; nvars], Rat::from_integer(1.into()));
    let d = Rat::from_integer(i64::from(degree).into());
    for (k, &jk) in j.0.iter().enumerate() {
        for l in 0..jk {
            let line = Form::from_terms(
                nvars,
                1,
                (0..nvars).map(|m| {
                    let mut e = vec![0u32; nvars];
                    e[m] = 1;
                    let mut c = -Rat::from_integer(i64::from(l).into());
                    if m == k {
                        c = c + &d;
                    }
                    (e, c)
                }),
            )
            .expect("linear factor exponents are consistent");
            acc = acc.mul(&line).expect("same variable count");
        }
    }
    acc
}

/// An exact square matrix acting on variables by substitution.
#[derive(Clone, PartialEq, Debug)]
pub struct SquareMatrix<K = Rat> {
    n: usize,
    rows: Vec<Vec<K>>,
}

impl<K: Scalar> SquareMatrix<K> {
    pub fn from_rows(rows: Vec<Vec<K>>) -> SquareMatrix<K> {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        SquareMatrix { n, rows }
    }

    pub fn identity(n: usize) -> SquareMatrix<K> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { K::one() } else { K::zero() }).collect())
            .collect();
        SquareMatrix { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &K {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> SquareMatrix<K> {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.rows[j][i].clone()).collect())
            .collect();
        SquareMatrix { n: self.n, rows }
    }

    pub fn scale(&self, c: &K) -> SquareMatrix<K> {
        SquareMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x.mul_ref(c)).collect())
                .collect(),
        }
    }

    pub fn matmul(&self, rhs: &SquareMatrix<K>) -> SquareMatrix<K> {
        assert_eq!(self.n, rhs.n);
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let mut acc = K::zero();
                        for k in 0..self.n {
                            acc = acc.add_ref(&self.rows[i][k].mul_ref(&rhs.rows[k][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        SquareMatrix { n: self.n, rows }
    }

    /// Determinant by fraction-free elimination over the field.
    pub fn det(&self) -> K {
        let mut m = self.rows.clone();
        let mut det = K::one();
        for col in 0..self.n {
            let pivot = (col..self.n).find(|&r| !m[r][col].is_zero());
            let Some(pivot) = pivot else {
                return K::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = det.neg_ref();
            }
            let p = m[col][col].clone();
            det = det.mul_ref(&p);
            for r in col + 1..self.n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].div_ref(&p);
                for c in col..self.n {
                    let sub = factor.mul_ref(&m[col][c]);
                    m[r][c] = m[r][c].sub_ref(&sub);
                }
            }
        }
        det
    }
}

impl SquareMatrix<Rat> {
    pub fn from_i64(rows: &[&[i64]]) -> SquareMatrix<Rat> {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rat::rat_i(x)).collect())
                .collect(),
        )
    }
}

/// The Hessian biform `Hes(p; u, v) = Σ_{i,j} ∂²p/∂x_i∂x_j(u) · v_i v_j`,
/// stored as a form in `2n` variables `(u_1..u_n, v_1..v_n)` of bidegree
/// `(deg p − 2, 2)`.
#[derive(Clone, PartialEq, Debug)]
pub struct BiForm<K = Rat> {
    n: usize,
    inner: Form<K>,
}

impl<K: Scalar> BiForm<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_form(&self) -> &Form<K> {
        &self.inner
    }

    pub fn evaluate(&self, u: &[K], v: &[K]) -> Result<K, FormError> {
        let mut pt = u.to_vec();
        pt.extend_from_slice(v);
        self.inner.evaluate(&pt)
    }

    pub fn evaluate_f64(&self, u: &[f64], v: &[f64]) -> f64 {
        let mut pt = u.to_vec();
        pt.extend_from_slice(v);
        self.inner.evaluate_f64(&pt)
    }

    /// Substitutes `v := u`, returning a form in the `u` block only.
    pub fn diagonal(&self) -> Form<K> {
        let n = self.n;
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..2 * n {
            let mut row = vec![K::zero(); 2 * n];
            row[i % n] = K::one();
            rows.push(row);
        }
        let diag = self
            .inner
            .compose(&SquareMatrix::from_rows(rows))
            .expect("dimension matches by construction");
        // Every monomial now lives in the u block.
        let terms: Vec<(Vec<u32>, K)> = diag
            .terms()
            .map(|(e, c)| (e.0[..n].to_vec(), c.clone()))
            .collect();
        Form::from_terms(n, diag.degree(), terms).expect("diagonal restriction is homogeneous")
    }
}

/// The exact Hessian biform of a form of degree ≥ 2.
pub fn hessian_biform<K: Scalar>(p: &Form<K>) -> BiForm<K> {
    assert!(p.degree() >= 2, "Hessian biform needs degree at least 2");
    let n = p.nvars();
    let mut acc = Form::zero(2 * n, p.degree());
    for i in 0..n {
        let pi = p.derivative(i);
        for j in 0..n {
            let pij = pi.derivative(j).embed(2 * n, 0);
            let mut e = vec![0u32; 2 * n];
            e[n + i] += 1;
            e[n + j] += 1;
            let vv = Form::monomial(2 * n, &e, K::one());
            acc = acc
                .add(&pij.mul(&vv).expect("same variable count"))
                .expect("degrees agree");
        }
    }
    BiForm { n, inner: acc }
}

impl<K: Scalar> fmt::Display for Form<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: Vec<String> = match self.nvars {
            1 => vec!["x".into()],
            2 => vec!["x".into(), "y".into()],
            3 => vec!["u".into(), "v".into(), "w".into()],
            n => (1..=n).map(|k| format!("x{}", k)).collect(),
        };
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for (k, &p) in e.0.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "·{}", names[k])?,
                    _ => write!(f, "·{}^{}", names[k], p)?,
                }
            }
        }
        Ok(())
    }
}
