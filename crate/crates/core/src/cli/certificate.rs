use std::fmt;

use serde::{Deserialize, Serialize};

use super::expr::{parse_term, Expr};
use crate::exact_math::{CoefficientField, MathError, Polynomial, RationalFunction};
use crate::summation::{
    join_last, split_last, verify_gosper, verify_zeilberger, BivariateHyperTerm, GosperCertificate, Inhomogeneous,
    TelescopedRecurrence,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Gosper,
    Zeilberger,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordVerdict {
    Verified,
    Rejected,
}

impl fmt::Display for RecordVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecordVerdict::Verified => "verified",
            RecordVerdict::Rejected => "rejected",
        })
    }
}

/// A certificate document. Rational functions are written as canonical
/// fractions of expanded polynomials over all symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub identity: String,
    pub kind: CertificateKind,
    pub expression: String,
    pub variable: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recurrence_variable: Option<String>,
    pub parameters: Vec<String>,
    pub certificate: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coefficients: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inhomogeneous: Option<String>,
    pub verdict: RecordVerdict,
}

#[derive(Debug, thiserror::Error)]
pub enum RecordError {
    #[error("malformed certificate document: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("certificate document field `{field}`: {msg}")]
    Field { field: &'static str, msg: String },
}

fn field_err(field: &'static str) -> impl Fn(String) -> RecordError {
    move |msg| RecordError::Field { field, msg }
}

/// `p/q` with both sides expanded over `[params..., var]`.
pub fn canonical_fraction(r: &RationalFunction) -> String {
    let mut names = r.field().params().to_vec();
    names.push(r.var().to_string());
    let fe = join_last(r.numer()).div(&join_last(r.denom()));
    fe.display(&names).to_string()
}

/// Inverse of [`canonical_fraction`]; accepts any rational expression.
pub fn parse_fraction(src: &str, var: &str, field: &CoefficientField) -> Result<RationalFunction, String> {
    let mut names = field.params().to_vec();
    names.push(var.to_string());
    let fe = Expr::parse(src).map_err(|e| e.to_string())?.to_field_elem(&names).map_err(|e| e.to_string())?;
    Ok(split_last(&fe, var, field))
}

fn parse_polynomial(src: &str, var: &str, field: &CoefficientField) -> Result<Polynomial, String> {
    let r = parse_fraction(src, var, field)?;
    if !r.is_polynomial() {
        return Err(format!("`{src}` is not a polynomial in {var}"));
    }
    Ok(r.numer().scale(&r.denom().leading_coeff().inv()))
}

impl CertificateRecord {
    pub fn gosper(identity: &str, term: &super::expr::TermExpression, cert: &GosperCertificate) -> Self {
        CertificateRecord {
            identity: identity.to_string(),
            kind: CertificateKind::Gosper,
            expression: term.to_string(),
            variable: term.variable().to_string(),
            recurrence_variable: None,
            parameters: term.parameters().to_vec(),
            certificate: canonical_fraction(&cert.r),
            coefficients: Vec::new(),
            inhomogeneous: None,
            verdict: RecordVerdict::Verified,
        }
    }

    /// `term` is parsed with the recurrence variable as its last parameter.
    pub fn zeilberger(
        identity: &str,
        term: &super::expr::TermExpression,
        recvar: &str,
        rec: &TelescopedRecurrence,
    ) -> Self {
        let params: Vec<String> = term.parameters().iter().filter(|p| *p != recvar).cloned().collect();
        CertificateRecord {
            identity: identity.to_string(),
            kind: CertificateKind::Zeilberger,
            expression: term.to_string(),
            variable: term.variable().to_string(),
            recurrence_variable: Some(recvar.to_string()),
            parameters: params,
            certificate: canonical_fraction(&rec.certificate),
            coefficients: rec.coefficients.iter().map(|p| canonical_fraction(&RationalFunction::from_polynomial(p.clone()))).collect(),
            inhomogeneous: Some(rec.inhomogeneous.to_string()),
            verdict: RecordVerdict::Verified,
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("record serializes")
    }

    /// Read a document and recompute its verdict; the stored verdict is
    /// returned alongside but never used.
    pub fn load(text: &str) -> Result<(CertificateRecord, RecordVerdict), RecordError> {
        let mut record: CertificateRecord = toml::from_str(text)?;
        let stored = record.verdict;
        record.verdict = if record.recheck()? { RecordVerdict::Verified } else { RecordVerdict::Rejected };
        Ok((record, stored))
    }

    /// Whether the certificate proves what it claims for its expression.
    pub fn recheck(&self) -> Result<bool, RecordError> {
        let math = |e: MathError| e.to_string();
        match self.kind {
            CertificateKind::Gosper => {
                let term = parse_term(&self.expression, &self.variable, &self.parameters)
                    .map_err(|e| e.to_string())
                    .map_err(field_err("expression"))?;
                let hyper = term.hyper_term().map_err(math).map_err(field_err("expression"))?;
                let r = parse_fraction(&self.certificate, &self.variable, hyper.field())
                    .map_err(field_err("certificate"))?;
                Ok(verify_gosper(&hyper, &GosperCertificate { r }))
            }
            CertificateKind::Zeilberger => {
                let recvar = self
                    .recurrence_variable
                    .as_deref()
                    .ok_or_else(|| field_err("recurrence_variable")("missing".into()))?;
                let mut all = self.parameters.clone();
                all.push(recvar.to_string());
                let term = parse_term(&self.expression, &self.variable, &all)
                    .map_err(|e| e.to_string())
                    .map_err(field_err("expression"))?;
                let form = term.product_form().map_err(math).map_err(field_err("expression"))?;
                let hyper = BivariateHyperTerm::from_product(&form, recvar, &self.variable, &self.parameters)
                    .map_err(math)
                    .map_err(field_err("expression"))?;
                let certificate = parse_fraction(&self.certificate, &self.variable, hyper.field())
                    .map_err(field_err("certificate"))?;
                let pfield = CoefficientField::new(&self.parameters).map_err(math).map_err(field_err("parameters"))?;
                let coefficients = self
                    .coefficients
                    .iter()
                    .map(|c| parse_polynomial(c, recvar, &pfield))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(field_err("coefficients"))?;
                let inhomogeneous = match self.inhomogeneous.as_deref().map(str::trim) {
                    None | Some("(not polynomial)") => Inhomogeneous::NotPolynomial,
                    Some(src) => {
                        let p = parse_polynomial(src, recvar, &CoefficientField::rationals())
                            .map_err(field_err("inhomogeneous"))?;
                        if p.is_zero() {
                            Inhomogeneous::Zero
                        } else {
                            Inhomogeneous::Polynomial(p)
                        }
                    }
                };
                let rec = TelescopedRecurrence { coefficients, certificate, inhomogeneous };
                Ok(verify_zeilberger(&hyper, &rec))
            }
        }
    }
}
