//! Machine-checkable certificates: weighted sums of powers of forms that
//! reproduce a target form exactly.

use crate::forms::{Form, TForm};

use crate::tower::Tower;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertificateError {
    #[error("certificate `{0}`: weight {1} is negative")]
    NegativeWeight(String, usize),
    #[error("certificate `{0}`: exponent {1} is not a positive even integer")]
    BadExponent(String, u32),
    #[error("certificate `{0}`: expansion does not reproduce the target")]
    Mismatch(String),
    #[error("certificate `{0}`: arithmetic failure: {1}")]
    Arithmetic(String, String),
}

/// One summand `weight · form^exponent`.
#[derive(Clone, Debug)]
pub struct CertificateTerm {
    pub weight: Tower,
    pub form: TForm,
    pub exponent: u32,
}

/// A verified-by-expansion identity `target = Σ weight_k · form_k^exp_k`
/// with non-negative weights and even exponents.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub name: String,
    pub terms: Vec<CertificateTerm>,
    pub target: TForm,
}

impl Certificate {
    pub fn new(name: impl Into<String>, terms: Vec<CertificateTerm>, target: TForm) -> Certificate {
        Certificate { name: name.into(), terms, target }
    }

    /// Exact verification: weights non-negative, exponents even, and the
    /// weighted power sum reproduces the target coefficient by coefficient.
    pub fn verify(&self) -> Result<(), CertificateError> {
        let mut acc = Form::zero(self.target.nvars(), self.target.degree());
        for (k, term) in self.terms.iter().enumerate() {
            if term.weight.sign() < 0 {
                return Err(CertificateError::NegativeWeight(self.name.clone(), k));
            }
            if term.exponent == 0 || term.exponent % 2 != 0 {
                return Err(CertificateError::BadExponent(self.name.clone(), term.exponent));
            }
            let powered = term.form.pow(term.exponent).scale(&term.weight);
            acc = acc
                .add(&powered)
                .map_err(|e| CertificateError::Arithmetic(self.name.clone(), e.to_string()))?;
        }
        if acc == self.target {
            Ok(())
        } else {
            Err(CertificateError::Mismatch(self.name.clone()))
        }
    }

    /// Human-readable expansion transcript.
    pub fn transcript(&self) -> String {
        let mut out = format!("certificate {}\n  target = {}\n", self.name, self.target);
        for t in &self.terms {
            out.push_str(&format!("  + ({}) · ({})^{}\n", t.weight, t.form, t.exponent));
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct TermDto {
            weight: crate::forms::json::CoeffJson,
            form: crate::forms::json::FormJson,
            exponent: u32,
        }
        #[derive(Serialize)]
        struct CertDto {
            name: String,
            terms: Vec<TermDto>,
            target: crate::forms::json::FormJson,
        }
        let dto = CertDto {
            name: self.name.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| TermDto {
                    weight: crate::forms::json::CoeffJson::from_tower(&t.weight),
                    form: crate::forms::json::FormJson::from_tower(&t.form),
                    exponent: t.exponent,
                })
                .collect(),
            target: crate::forms::json::FormJson::from_tower(&self.target),
        };
        serde_json::to_string_pretty(&dto).expect("certificate serialization is infallible")
    }
}
