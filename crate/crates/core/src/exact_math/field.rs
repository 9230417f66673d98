//! Coefficient fields `Q(p_1, ..., p_r)` of rational functions in symbolic
//! parameters. With no parameters the field is just `Q`.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::{Integer, MathError, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoefficientField {
    params: Arc<[String]>,
}

impl fmt::Debug for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({})", self.params.join(", "))
    }
}

impl CoefficientField {
    pub fn rationals() -> Self {
        CoefficientField { params: Arc::from(Vec::<String>::new()) }
    }

    pub fn new<S: AsRef<str>>(params: &[S]) -> Result<Self, MathError> {
        let params: Vec<String> = params.iter().map(|p| p.as_ref().to_string()).collect();
        for (i, p) in params.iter().enumerate() {
            if params[..i].contains(p) {
                return Err(MathError::Usage(format!("duplicate parameter symbol `{p}`")));
            }
        }
        Ok(CoefficientField { params: params.into() })
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn nvars(&self) -> usize {
        self.params.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p == name)
    }

    /// The field with one more parameter appended.
    pub fn extend(&self, name: &str) -> Result<Self, MathError> {
        let mut params = self.params.to_vec();
        params.push(name.to_string());
        Self::new(&params)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::zero(self.nvars())
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::one(self.nvars())
    }

    pub fn rational(&self, q: Rational) -> FieldElem {
        FieldElem::from_rational(self.nvars(), q)
    }

    pub fn integer(&self, n: impl Into<Integer>) -> FieldElem {
        self.rational(Rational::from_integer(n.into()))
    }

    pub fn param(&self, name: &str) -> Option<FieldElem> {
        self.index_of(name).map(|i| FieldElem::from_poly(MPoly::var(self.nvars(), i)))
    }
}

/// A reduced fraction of multivariate polynomials. The denominator has
/// leading coefficient 1 and is coprime to the numerator; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    num: MPoly,
    den: MPoly,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

impl FieldElem {
    pub fn zero(nvars: usize) -> Self {
        FieldElem { num: MPoly::zero(nvars), den: MPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        FieldElem { num: MPoly::one(nvars), den: MPoly::one(nvars) }
    }

    pub fn from_rational(nvars: usize, q: Rational) -> Self {
        FieldElem { num: MPoly::constant(nvars, q), den: MPoly::one(nvars) }
    }

    pub fn from_poly(p: MPoly) -> Self {
        let n = p.nvars();
        FieldElem { num: p, den: MPoly::one(n) }
    }

    /// Build `num/den` in lowest terms.
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in field element");
        let n = num.nvars();
        if num.is_zero() {
            return FieldElem::zero(n);
        }
        if let Some(c) = den.as_constant() {
            return FieldElem { num: num.scale(&c.recip()), den: MPoly::one(n) };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            FieldElem { num, den }
        } else {
            let inv = lc.recip();
            FieldElem { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a plain rational if it involves no parameter.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Size estimate used for pivot selection.
    pub fn weight(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return FieldElem::from_poly(self.num.add(&other.num));
            }
            return FieldElem::new(self.num.add(&other.num), self.den.clone());
        }
        FieldElem::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        if self.is_zero() || other.is_zero() {
            return FieldElem::zero(self.nvars());
        }
        if let Some(c) = self.as_rational() {
            return FieldElem { num: other.num.scale(&c), den: other.den.clone() };
        }
        if let Some(c) = other.as_rational() {
            return FieldElem { num: self.num.scale(&c), den: self.den.clone() };
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = self.num.exact_div(&g1).unwrap();
        let d = other.den.exact_div(&g1).unwrap();
        let c = other.num.exact_div(&g2).unwrap();
        let b = self.den.exact_div(&g2).unwrap();
        let num = a.mul(&c);
        let den = b.mul(&d);
        let lc = den.leading_coeff();
        let inv = lc.recip();
        FieldElem { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn inv(&self) -> FieldElem {
        assert!(!self.is_zero(), "inverse of zero");
        let lc = self.num.leading_coeff().recip();
        FieldElem { num: self.den.scale(&lc), den: self.num.scale(&lc) }
    }

    pub fn div(&self, other: &FieldElem) -> FieldElem {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> FieldElem {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        FieldElem { num: base.num.pow(n), den: base.den.pow(n) }
    }

    pub fn scale(&self, c: &Rational) -> FieldElem {
        if c.is_zero() {
            return FieldElem::zero(self.nvars());
        }
        FieldElem { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitute parameter `v -> v + by`.
    pub fn shift_param(&self, v: usize, by: &Rational) -> FieldElem {
        FieldElem::new(self.num.shift_var(v, by), self.den.shift_var(v, by))
    }

    /// Substitute parameter `v -> poly` (a polynomial in the same parameters).
    pub fn substitute_poly(&self, v: usize, poly: &MPoly) -> FieldElem {
        FieldElem::new(self.num.substitute_poly(v, poly), self.den.substitute_poly(v, poly))
    }

    /// Evaluate at concrete parameter values; `None` where the denominator
    /// vanishes.
    pub fn eval(&self, values: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(values);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(values) / d)
        }
    }

    /// Embed into a field with more parameters via a variable map.
    pub fn remap(&self, map: &[usize], nvars: usize) -> FieldElem {
        FieldElem::new(self.num.remap(map, nvars), self.den.remap(map, nvars))
    }

    pub fn drop_var(&self, v: usize) -> FieldElem {
        FieldElem { num: self.num.drop_var(v), den: self.den.drop_var(v) }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> FieldElemDisplay<'a> {
        FieldElemDisplay { elem: self, names }
    }

    /// Write as `n/d` over the integers with no common integer factor and
    /// the leading coefficient of `d` positive.
    pub fn integer_fraction(&self) -> (MPoly, MPoly) {
        let lcm = self.num.denominator_lcm().lcm(&self.den.denominator_lcm());
        let l = Rational::from_integer(lcm);
        let (num, den) = (self.num.scale(&l), self.den.scale(&l));
        let g = num.numerator_gcd().gcd(&den.numerator_gcd());
        let g = Rational::from_integer(g).recip();
        let (num, den) = (num.scale(&g), den.scale(&g));
        if den.leading_is_negative() {
            (num.neg(), den.neg())
        } else {
            (num, den)
        }
    }
}

pub struct FieldElemDisplay<'a> {
    elem: &'a FieldElem,
    names: &'a [String],
}

impl fmt::Display for FieldElemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.elem.as_rational() {
            return write!(f, "{q}");
        }
        let (num, den) = self.elem.integer_fraction();
        if den.is_one() {
            write!(f, "{}", num.display(self.names))
        } else {
            write!(f, "({})/({})", num.display(self.names), den.display(self.names))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let f = CoefficientField::new(&["s"]).unwrap();
        let s = f.param("s").unwrap();
        let one = f.one();
        // (s^2 - 1)/(2s - 2) = (s + 1)/2
        let num = s.mul(&s).sub(&one);
        let den = s.scale(&Rational::from_integer(2.into())).sub(&f.integer(2));
        let q = num.div(&den);
        let expect = s.add(&one).scale(&Rational::new(1.into(), 2.into()));
        assert_eq!(q, expect);
        assert!(q.denom().is_one());
    }

    #[test]
    fn duplicate_params_rejected() {
        assert!(CoefficientField::new(&["l", "l"]).is_err());
    }

    #[test]
    fn integer_fraction_is_primitive() {
        let f = CoefficientField::new(&["s"]).unwrap();
        let s = f.param("s").unwrap();
        let x = s.scale(&Rational::new(2.into(), 3.into())).div(&s.add(&f.one()));
        let names = vec!["s".to_string()];
        assert_eq!(x.display(&names).to_string(), "(2*s)/(3*s + 3)");
    }
}
