use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::factored::{factored_normal_form, FactoredRatio};
use super::term::ProductForm;
use crate::exact_math::{
    solve_degree_bounded, CoefficientField, Integer, MathError, Polynomial, Rational, RationalFunction,
};

/// A hypergeometric term in one variable: its shift quotient, and when
/// available a product form for evaluation at integer points.
#[derive(Clone, Debug)]
pub struct HyperTerm {
    var: String,
    field: CoefficientField,
    ratio: RationalFunction,
    factored: FactoredRatio,
    direct: Option<ProductForm>,
}

impl HyperTerm {
    /// Build from a product form whose symbols are the parameters in field
    /// order followed by any others; `var` is the summation variable.
    pub fn from_product(form: &ProductForm, var: &str, params: &[String]) -> Result<Self, MathError> {
        if params.iter().any(|p| p == var) {
            return Err(MathError::Usage(format!("`{var}` is both the variable and a parameter")));
        }
        let mut symbols = params.to_vec();
        symbols.push(var.to_string());
        let form = form.with_symbols(&symbols)?;
        let field = CoefficientField::new(params)?;
        let factored = FactoredRatio::from_shift_factors(&form.shift_factors(symbols.len() - 1)?, var, &field);
        let ratio = factored.to_ratfunc();
        Ok(HyperTerm { var: var.to_string(), field, ratio, factored, direct: Some(form) })
    }

    /// A term known only through its shift quotient.
    pub fn from_ratio(ratio: RationalFunction) -> Result<Self, MathError> {
        if ratio.is_zero() {
            return Err(MathError::Domain("zero shift quotient".into()));
        }
        let factored = FactoredRatio::from_ratfunc(&ratio);
        Ok(HyperTerm { var: ratio.var().to_string(), field: ratio.field().clone(), ratio, factored, direct: None })
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn ratio(&self) -> &RationalFunction {
        &self.ratio
    }

    pub fn direct(&self) -> Option<&ProductForm> {
        self.direct.as_ref()
    }

    /// `t(k)` at integer parameters; `None` when undefined or when the term
    /// has no product form.
    pub fn eval(&self, params: &[Integer], k: &Integer) -> Option<Rational> {
        let form = self.direct.as_ref()?;
        let mut values = params.to_vec();
        values.push(k.clone());
        form.eval(&values)
    }
}

/// `R(k)` with `z(k) = R(k) t(k)` an antidifference of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperCertificate {
    pub r: RationalFunction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GosperStage {
    /// The normal-form computation failed.
    NormalForm,
    /// The degree bound for the key equation is negative.
    DegreeBound,
    /// The key equation has no polynomial solution within the bound.
    KeyEquation,
    /// A certificate was produced but did not verify.
    Verification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotGosperSummable {
    pub stage: GosperStage,
    pub degree_bound: Option<i64>,
    pub detail: String,
}

impl fmt::Display for NotGosperSummable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not Gosper-summable ({:?} stage", self.stage)?;
        if let Some(d) = self.degree_bound {
            write!(f, ", degree bound {d}")?;
        }
        write!(f, "): {}", self.detail)
    }
}

impl std::error::Error for NotGosperSummable {}

/// Upper bound for the degree of a polynomial solution `x` of
/// `A x(k+1) - B x(k) = C` where `C` has degree `deg_c`.
pub(crate) fn degree_bound(big_a: &Polynomial, big_b: &Polynomial, deg_c: usize) -> i64 {
    let deg = |p: &Polynomial| p.degree().map_or(-1, |d| d as i64);
    let sum = big_a + big_b;
    let diff = big_a - big_b;
    let (ds, dd) = (deg(&sum), deg(&diff));
    let deg_c = deg_c as i64;
    if dd >= ds {
        return deg_c - dd;
    }
    let mut d = deg_c - ds + 1;
    // x of degree d0 can cancel the leading terms when
    // d0 = -2 * [k^(ds-1)](A - B) / lc(A + B) is a nonnegative integer.
    if ds >= 1 {
        let m = diff.coeff(ds as usize - 1);
        let d0 = m.scale(&Rational::from_integer((-2).into())).div(&sum.leading_coeff());
        if let Some(q) = d0.as_rational() {
            if q.is_integer() && !q.is_negative() {
                if let Some(v) = q.to_integer().to_i64() {
                    d = d.max(v);
                }
            }
        }
    }
    d
}

pub fn gosper(term: &HyperTerm) -> Result<GosperCertificate, NotGosperSummable> {
    let fail = |stage, degree_bound, detail: String| NotGosperSummable { stage, degree_bound, detail };
    let (a, b, c) =
        factored_normal_form(&term.factored).map_err(|e| fail(GosperStage::NormalForm, None, e.to_string()))?;
    let big_b = b.shift(&Integer::from(-1));
    let deg_c = c.degree().expect("c is nonzero");
    let bound = degree_bound(&a, &big_b, deg_c);
    if bound < 0 {
        return Err(fail(GosperStage::DegreeBound, Some(bound), "no polynomial of negative degree".into()));
    }
    let x = solve_degree_bounded(&a, &big_b, &c, bound)
        .map_err(|e| fail(GosperStage::KeyEquation, Some(bound), e.to_string()))?
        .ok_or_else(|| fail(GosperStage::KeyEquation, Some(bound), "no polynomial solution".into()))?;
    let r = RationalFunction::new(&big_b * &x, c)
        .map_err(|e| fail(GosperStage::KeyEquation, Some(bound), e.to_string()))?;
    let cert = GosperCertificate { r };
    if !verify_gosper(term, &cert) {
        return Err(fail(GosperStage::Verification, Some(bound), "certificate identity fails".into()));
    }
    Ok(cert)
}

/// `R(k+1) r(k) - R(k) = 1` as rational functions.
pub fn verify_gosper(term: &HyperTerm, cert: &GosperCertificate) -> bool {
    let r = term.ratio();
    if cert.r.var() != r.var() || cert.r.field() != r.field() {
        return false;
    }
    let lhs = &(&cert.r.shift(&Integer::from(1)) * r) - &cert.r;
    lhs.is_one()
}

/// Values of a definite sum `sum_{k=lower}^{upper} t(k)` where the upper
/// limit is one of the parameters.
#[derive(Clone, Debug)]
pub struct DefiniteSum {
    term: HyperTerm,
    certificate: GosperCertificate,
    lower: Integer,
    upper_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefiniteValue {
    #[serde(serialize_with = "crate::identities::as_string")]
    pub value: Rational,
    /// The certificate was undefined at an endpoint; `value` is the direct sum.
    pub endpoint_singular: bool,
    /// Telescoped and direct values agree (trivially true when singular).
    pub agrees: bool,
}

pub fn telescope_definite(term: &HyperTerm, lower: Integer, upper: &str) -> Result<DefiniteSum, NotGosperSummable> {
    let upper_index = term.field().index_of(upper).ok_or_else(|| NotGosperSummable {
        stage: GosperStage::NormalForm,
        degree_bound: None,
        detail: format!("upper limit `{upper}` is not a parameter"),
    })?;
    let certificate = gosper(term)?;
    Ok(DefiniteSum { term: term.clone(), certificate, lower, upper_index })
}

impl DefiniteSum {
    pub fn certificate(&self) -> &GosperCertificate {
        &self.certificate
    }

    /// Direct summation with the product form; `None` if a term is undefined.
    pub fn direct(&self, params: &[Integer]) -> Option<Rational> {
        let upper = &params[self.upper_index];
        let mut acc = Rational::zero();
        let mut k = self.lower.clone();
        while &k <= upper {
            acc += self.term.eval(params, &k)?;
            k += 1;
        }
        Some(acc)
    }

    fn z(&self, params: &[Integer], k: &Integer) -> Option<Rational> {
        let t = self.term.eval(params, k)?;
        let p: Vec<Rational> = params.iter().cloned().map(Rational::from_integer).collect();
        let r = self.certificate.r.eval_rational(&p, &Rational::from_integer(k.clone()))?;
        Some(r * t)
    }

    /// `z(upper + 1) - z(lower)`, cross-checked against direct summation.
    pub fn evaluate(&self, params: &[Integer]) -> Result<DefiniteValue, MathError> {
        let direct = self
            .direct(params)
            .ok_or_else(|| MathError::Domain("summand undefined inside the range".into()))?;
        let top = &params[self.upper_index] + 1;
        match (self.z(params, &top), self.z(params, &self.lower)) {
            (Some(hi), Some(lo)) => {
                let value = hi - lo;
                Ok(DefiniteValue { agrees: value == direct, value, endpoint_singular: false })
            }
            _ => Ok(DefiniteValue { value: direct, endpoint_singular: true, agrees: true }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CoefficientField {
        CoefficientField::rationals()
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_rationals("k", &q(), num), Polynomial::from_rationals("k", &q(), den))
            .unwrap()
    }

    #[test]
    fn k_times_factorial() {
        let t = HyperTerm::from_ratio(rf(&[1, 2, 1], &[0, 1])).unwrap();
        let cert = gosper(&t).unwrap();
        assert_eq!(cert.r, rf(&[1], &[0, 1]));
        assert!(verify_gosper(&t, &cert));
        assert!(!verify_gosper(&t, &GosperCertificate { r: rf(&[1], &[1, 1]) }));
        assert!(!verify_gosper(&t, &GosperCertificate { r: rf(&[], &[1]) }));
    }

    #[test]
    fn harmonic_is_not_summable() {
        let t = HyperTerm::from_ratio(rf(&[0, 1], &[1, 1])).unwrap();
        let err = gosper(&t).unwrap_err();
        assert!(matches!(err.stage, GosperStage::KeyEquation | GosperStage::DegreeBound));
    }

    #[test]
    fn normal_form_condition() {
        // r = (k+1)^2 (k+3) / (k (k+5))
        let num = &Polynomial::from_rationals("k", &q(), &[1, 2, 1]) * &Polynomial::from_rationals("k", &q(), &[3, 1]);
        let den = Polynomial::from_rationals("k", &q(), &[0, 5, 1]);
        let r = RationalFunction::new(num, den).unwrap();
        let (a, b, c) = factored_normal_form(&FactoredRatio::from_ratfunc(&r)).unwrap();
        assert!(crate::exact_math::dispersion_set(&a, &b).unwrap().is_empty());
        let back = &RationalFunction::new(a, b).unwrap()
            * &RationalFunction::new(c.shift(&Integer::from(1)), c.clone()).unwrap();
        assert_eq!(back, r);
    }
}
