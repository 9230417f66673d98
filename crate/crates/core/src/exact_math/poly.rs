use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{CoefficientField, FieldElem};
use super::{Integer, MathError, Rational};

/// Univariate polynomial over a [`CoefficientField`]. Only nonzero
/// coefficients are stored; the zero polynomial has degree `None`, standing
/// in for minus infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var: Arc<str>,
    field: CoefficientField,
    coeffs: BTreeMap<usize, FieldElem>,
}

impl Polynomial {
    pub fn zero(var: &str, field: &CoefficientField) -> Self {
        Polynomial { var: Arc::from(var), field: field.clone(), coeffs: BTreeMap::new() }
    }

    pub fn one(var: &str, field: &CoefficientField) -> Self {
        Self::constant(var, field, field.one())
    }

    pub fn constant(var: &str, field: &CoefficientField, c: FieldElem) -> Self {
        Self::monomial(var, field, c, 0)
    }

    /// The polynomial `var` itself.
    pub fn variable(var: &str, field: &CoefficientField) -> Self {
        Self::monomial(var, field, field.one(), 1)
    }

    pub fn monomial(var: &str, field: &CoefficientField, c: FieldElem, degree: usize) -> Self {
        let mut p = Self::zero(var, field);
        if !c.is_zero() {
            p.coeffs.insert(degree, c);
        }
        p
    }

    /// From dense coefficients, constant term first.
    pub fn from_coeffs(var: &str, field: &CoefficientField, coeffs: Vec<FieldElem>) -> Self {
        let mut p = Self::zero(var, field);
        for (d, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                p.coeffs.insert(d, c);
            }
        }
        p
    }

    /// Rational coefficients, constant term first.
    pub fn from_rationals(var: &str, field: &CoefficientField, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.integer(c)).collect();
        Self::from_coeffs(var, field, cs)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn coeff(&self, d: usize) -> FieldElem {
        self.coeffs.get(&d).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> impl DoubleEndedIterator<Item = (usize, &FieldElem)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn leading_coeff(&self) -> FieldElem {
        self.coeffs.values().next_back().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn check_compatible(&self, other: &Polynomial) -> Result<(), MathError> {
        if self.var != other.var {
            return Err(MathError::Usage(format!(
                "polynomials in different variables `{}` and `{}`",
                self.var, other.var
            )));
        }
        if self.field != other.field {
            return Err(MathError::Usage(format!(
                "polynomials over different fields {:?} and {:?}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    fn assert_compatible(&self, other: &Polynomial) {
        if let Err(e) = self.check_compatible(other) {
            panic!("{e}");
        }
    }

    fn insert_add(&mut self, d: usize, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&d) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, sum);
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        let mut out = Self::zero(&self.var, &self.field);
        if c.is_zero() {
            return out;
        }
        for (&d, x) in &self.coeffs {
            out.coeffs.insert(d, x.mul(c));
        }
        out
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.inv())
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        self.assert_compatible(divisor);
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading_coeff().inv();
        let mut quot = Self::zero(&self.var, &self.field);
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let q = rem.leading_coeff().mul(&lc_inv);
            for (&d, c) in &divisor.coeffs {
                rem.insert_add(d + dr - dd, c.mul(&q).neg());
            }
            debug_assert!(!rem.coeffs.contains_key(&dr));
            quot.coeffs.insert(dr - dd, q);
        }
        (quot, rem)
    }

    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd; see [`poly_gcd`](super::poly_gcd).
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, MathError> {
        self.check_compatible(other)?;
        let mut a = self.monic();
        let mut b = other.monic();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        Ok(a)
    }

    pub fn lcm(&self, other: &Polynomial) -> Result<Polynomial, MathError> {
        let g = self.gcd(other)?;
        if g.is_zero() {
            return Ok(g);
        }
        Ok((self * other).exact_div(&g).expect("gcd divides").monic())
    }

    /// `p(var + by)` for a field element `by`.
    pub fn shift_by(&self, by: &FieldElem) -> Polynomial {
        if by.is_zero() || self.is_constant() {
            return self.clone();
        }
        let lin = &Self::variable(&self.var, &self.field) + &Self::constant(&self.var, &self.field, by.clone());
        // Horner
        let mut acc = Self::zero(&self.var, &self.field);
        let top = self.degree().unwrap();
        for d in (0..=top).rev() {
            acc = &acc * &lin;
            acc.insert_add(0, self.coeff(d));
        }
        acc
    }

    /// `p(var + j)`.
    pub fn shift(&self, j: &Integer) -> Polynomial {
        self.shift_by(&self.field.rational(Rational::from_integer(j.clone())))
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = self.field.zero();
        if let Some(top) = self.degree() {
            for d in (0..=top).rev() {
                acc = acc.mul(x).add(&self.coeff(d));
            }
        }
        acc
    }

    /// Evaluate with every parameter and the variable set to rationals;
    /// `None` where a coefficient denominator vanishes.
    pub fn eval_rational(&self, params: &[Rational], x: &Rational) -> Option<Rational> {
        let mut acc = Rational::from_integer(0.into());
        if let Some(top) = self.degree() {
            for d in (0..=top).rev() {
                acc = acc * x + self.coeff(d).eval(params)?;
            }
        }
        Some(acc)
    }

    /// Apply a map to each coefficient, moving to another field.
    pub fn map_coeffs(&self, field: &CoefficientField, f: impl Fn(&FieldElem) -> FieldElem) -> Polynomial {
        let mut out = Self::zero(&self.var, field);
        for (&d, c) in &self.coeffs {
            let v = f(c);
            if !v.is_zero() {
                out.coeffs.insert(d, v);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Self::one(&self.var, &self.field);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.insert_add(d, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.insert_add(d, c.neg());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.map_coeffs(&self.field, FieldElem::neg)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_compatible(rhs);
        let mut out = Polynomial::zero(&self.var, &self.field);
        for (&da, ca) in &self.coeffs {
            for (&db, cb) in &rhs.coeffs {
                out.insert_add(da + db, ca.mul(cb));
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Descending powers, e.g. `k^2 + (s + 1)*k - 3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.field.params();
        for (i, (&d, c)) in self.coeffs.iter().rev().enumerate() {
            let text = c.display(names).to_string();
            let simple = c.as_rational().is_some();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, text),
            };
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let power = match d {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{d}", self.var),
            };
            if d == 0 {
                if simple {
                    write!(f, "{body}")?;
                } else {
                    write!(f, "({body})")?;
                }
            } else if body == "1" {
                write!(f, "{power}")?;
            } else if simple {
                write!(f, "{body}*{power}")?;
            } else {
                write!(f, "({body})*{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> CoefficientField {
        CoefficientField::rationals()
    }

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_rationals("k", &q(), c)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!((&a * &a).to_string(), "k^2 + 2*k + 1");
        assert_eq!(p(&[-3, 0, -2]).to_string(), "-2*k^2 - 3");
        assert_eq!(Polynomial::zero("k", &q()).degree(), None);
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 1]);
        let (quo, rem) = a.div_rem(&p(&[1, 1]));
        assert_eq!(quo, p(&[-1, 1]));
        assert!(rem.is_zero());
        let (_, rem) = p(&[1, 0, 1]).div_rem(&p(&[3, 1]));
        assert_eq!(rem, p(&[10]));
    }

    #[test]
    fn mismatched_variables_rejected() {
        let a = p(&[0, 1]);
        let b = Polynomial::from_rationals("n", &q(), &[0, 1]);
        assert!(matches!(a.gcd(&b), Err(MathError::Usage(_))));
        let f = CoefficientField::new(&["s"]).unwrap();
        let c = Polynomial::from_rationals("k", &f, &[0, 1]);
        assert!(a.gcd(&c).is_err());
    }

    #[test]
    fn display_with_parameters() {
        let f = CoefficientField::new(&["s"]).unwrap();
        let s = f.param("s").unwrap();
        let poly = Polynomial::from_coeffs("k", &f, vec![s.neg(), s.add(&f.one()), f.one()]);
        assert_eq!(poly.to_string(), "k^2 + (s + 1)*k + (-s)");
    }
}
