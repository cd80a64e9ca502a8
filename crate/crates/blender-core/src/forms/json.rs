//! JSON wire format for forms.
//!
//! A form serialises as
//! `{"nvars": n, "degree": d, "terms": [{"exp": [i…], "coeff": …}, …]}`
//! with coefficients as exact decimal-free strings (`"num/den"`).  Tower
//! coefficients serialise as `{"a": …, "b": …, "root": …}` meaning
//! `a + b·√root`, nested at most one level for the second radical.

use crate::forms::{Form, QForm, TForm};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::tower::Tower;
use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("malformed rational literal {0:?}")]
    BadRational(String),
    #[error("malformed coefficient: {0}")]
    BadCoefficient(String),
    #[error("inconsistent form data: {0}")]
    BadForm(String),
    #[error("coefficient is irrational in a rational-only context")]
    IrrationalCoefficient,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FormJson {
    pub nvars: usize,
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: CoeffJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum CoeffJson {
    Str(String),
    Quad {
        a: Box<CoeffJson>,
        b: Box<CoeffJson>,
        root: Box<CoeffJson>,
    },
}

impl CoeffJson {
    pub fn from_rat(q: &Rat) -> CoeffJson {
        CoeffJson::Str(format_rat(q))
    }

    pub fn to_rat(&self) -> Result<Rat, JsonError> {
        match self {
            CoeffJson::Str(s) => parse_rat(s).ok_or_else(|| JsonError::BadRational(s.clone())),
            CoeffJson::Quad { .. } => Err(JsonError::IrrationalCoefficient),
        }
    }

    pub fn from_tower(x: &Tower) -> CoeffJson {
        let (a, b, c, d, s, t) = x.parts();
        let Some(s) = s else {
            return CoeffJson::from_rat(a);
        };
        let level1 = |p: &Rat, q: &Rat| -> CoeffJson {
            if q.is_zero() {
                CoeffJson::from_rat(p)
            } else {
                CoeffJson::Quad {
                    a: Box::new(CoeffJson::from_rat(p)),
                    b: Box::new(CoeffJson::from_rat(q)),
                    root: Box::new(CoeffJson::from_rat(s)),
                }
            }
        };
        match t {
            None => level1(a, b),
            Some((t0, t1)) => CoeffJson::Quad {
                a: Box::new(level1(a, b)),
                b: Box::new(level1(c, d)),
                root: Box::new(level1(t0, t1)),
            },
        }
    }

    pub fn to_tower(&self) -> Result<Tower, JsonError> {
        match self {
            CoeffJson::Str(s) => {
                let q = parse_rat(s).ok_or_else(|| JsonError::BadRational(s.clone()))?;
                Ok(Tower::from_rat(q))
            }
            CoeffJson::Quad { a, b, root } => {
                let a = a.to_tower()?;
                let b = b.to_tower()?;
                let root = root.to_tower()?;
                let sqrt = root
                    .sqrt()
                    .map_err(|e| JsonError::BadCoefficient(e.to_string()))?;
                a.try_add(&b.try_mul(&sqrt).map_err(|e| JsonError::BadCoefficient(e.to_string()))?)
                    .map_err(|e| JsonError::BadCoefficient(e.to_string()))
            }
        }
    }
}

impl FormJson {
    pub fn from_rational(p: &QForm) -> FormJson {
        FormJson {
            nvars: p.nvars(),
            degree: p.degree(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson { exp: e.0.clone(), coeff: CoeffJson::from_rat(c) })
                .collect(),
        }
    }

    pub fn from_tower(p: &TForm) -> FormJson {
        FormJson {
            nvars: p.nvars(),
            degree: p.degree(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson { exp: e.0.clone(), coeff: CoeffJson::from_tower(c) })
                .collect(),
        }
    }

    pub fn to_rational(&self) -> Result<QForm, JsonError> {
        let mut terms = Vec::new();
        for t in &self.terms {
            terms.push((t.exp.clone(), t.coeff.to_rat()?));
        }
        Form::from_terms(self.nvars, self.degree, terms)
            .map_err(|e| JsonError::BadForm(e.to_string()))
    }

    pub fn to_tower(&self) -> Result<TForm, JsonError> {
        let mut terms = Vec::new();
        for t in &self.terms {
            terms.push((t.exp.clone(), t.coeff.to_tower()?));
        }
        Form::from_terms(self.nvars, self.degree, terms)
            .map_err(|e| JsonError::BadForm(e.to_string()))
    }
}

pub fn form_to_json(p: &QForm) -> String {
    serde_json::to_string(&FormJson::from_rational(p)).expect("form serialization is infallible")
}

pub fn tower_form_to_json(p: &TForm) -> String {
    serde_json::to_string(&FormJson::from_tower(p)).expect("form serialization is infallible")
}

pub fn form_from_json(s: &str) -> Result<QForm, JsonError> {
    let dto: FormJson = serde_json::from_str(s)?;
    dto.to_rational()
}

pub fn tower_form_from_json(s: &str) -> Result<TForm, JsonError> {
    let dto: FormJson = serde_json::from_str(s)?;
    dto.to_tower()
}
