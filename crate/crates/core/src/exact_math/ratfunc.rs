use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::field::{CoefficientField, FieldElem};
use super::poly::Polynomial;
use super::{Integer, MathError, Rational};

/// Quotient of univariate polynomials in lowest terms, with a monic
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, MathError> {
        num.check_compatible(&den)?;
        if den.is_zero() {
            return Err(MathError::Domain("rational function with zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            let one = Polynomial::one(num.var(), num.field());
            return RationalFunction { num, den: one };
        }
        let g = num.gcd(&den).expect("compatible");
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.inv();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Skip the gcd computation when numerator and denominator are known to
    /// be coprime; only the denominator is made monic.
    pub fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(num.gcd(&den).map_or(false, |g| g.is_constant()), "factors are not coprime");
        let inv = den.leading_coeff().inv();
        if inv.is_one() {
            return RationalFunction { num, den };
        }
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let one = Polynomial::one(p.var(), p.field());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(var: &str, field: &CoefficientField) -> Self {
        Self::from_polynomial(Polynomial::zero(var, field))
    }

    pub fn one(var: &str, field: &CoefficientField) -> Self {
        Self::from_polynomial(Polynomial::one(var, field))
    }

    pub fn constant(var: &str, field: &CoefficientField, c: FieldElem) -> Self {
        Self::from_polynomial(Polynomial::constant(var, field, c))
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn var(&self) -> &str {
        self.num.var()
    }

    pub fn field(&self) -> &CoefficientField {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.is_constant() && self.num.coeff(0).is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn inv(&self) -> Result<Self, MathError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Self, MathError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        Ok(RationalFunction { num: base.num.pow(n), den: base.den.pow(n) })
    }

    /// `r(var + j)`.
    pub fn shift(&self, j: &Integer) -> Self {
        RationalFunction { num: self.num.shift(j), den: self.den.shift(j) }
    }

    pub fn shift_by(&self, by: &FieldElem) -> Self {
        Self::reduce(self.num.shift_by(by), self.den.shift_by(by))
    }

    /// Value at a field element; `None` at a pole.
    pub fn eval(&self, x: &FieldElem) -> Option<FieldElem> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).div(&d))
    }

    /// Value with parameters and variable set to rationals; `None` where the
    /// reduced denominator vanishes.
    pub fn eval_rational(&self, params: &[Rational], x: &Rational) -> Option<Rational> {
        let d = self.den.eval_rational(params, x)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(params, x)? / d)
    }

    /// Apply a coefficient map (e.g. a parameter shift) to numerator and
    /// denominator and re-reduce.
    pub fn map_coeffs(&self, field: &CoefficientField, f: impl Fn(&FieldElem) -> FieldElem) -> Self {
        Self::reduce(self.num.map_coeffs(field, &f), self.den.map_coeffs(field, &f))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.var(), self.field());
        }
        let g1 = self.num.gcd(&rhs.den).expect("compatible");
        let g2 = rhs.num.gcd(&self.den).expect("compatible");
        let a = self.num.exact_div(&g1).unwrap();
        let d = rhs.den.exact_div(&g1).unwrap();
        let c = rhs.num.exact_div(&g2).unwrap();
        let b = self.den.exact_div(&g2).unwrap();
        let num = &a * &c;
        let den = &b * &d;
        let inv = den.leading_coeff().inv();
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_rationals("k", &CoefficientField::rationals(), c)
    }

    #[test]
    fn reduces_common_factors() {
        // (k^2 - 1)/(2k - 2) = (k + 1)/2 ; denominator made monic
        let r = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.denom(), &p(&[1]));
        assert_eq!(r.to_string(), "1/2*k + 1/2");
    }

    #[test]
    fn zero_denominator_is_domain_error() {
        assert!(matches!(
            RationalFunction::new(p(&[1]), p(&[])),
            Err(MathError::Domain(_))
        ));
    }

    #[test]
    fn field_operations() {
        let x = RationalFunction::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        let y = &(&x + &x) - &x;
        assert_eq!(y, x);
        let one = &x / &x;
        assert!(one.is_one());
        let f = CoefficientField::rationals();
        assert_eq!(x.eval(&f.integer(1)), Some(f.rational(Rational::new(1.into(), 2.into()))));
        assert_eq!(x.eval(&f.integer(-1)), None);
    }
}
