use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact_math::mpoly::rational_pow;
use crate::exact_math::{CoefficientField, FieldElem, Integer, MPoly, MathError, Polynomial, Rational, RationalFunction};
use crate::identities::{binomial_gen, catalan, factorial};

/// `c_0 + sum_i c_i x_i` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Integer>,
    constant: Integer,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Integer>, constant: Integer) -> Self {
        LinearForm { coeffs, constant }
    }

    pub fn constant(nvars: usize, c: impl Into<Integer>) -> Self {
        LinearForm { coeffs: vec![Integer::zero(); nvars], constant: c.into() }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut f = Self::constant(nvars, 0);
        f.coeffs[v] = Integer::one();
        f
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, v: usize) -> &Integer {
        &self.coeffs[v]
    }

    pub fn constant_term(&self) -> &Integer {
        &self.constant
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, values: &[Integer]) -> Integer {
        self.coeffs.iter().zip(values).fold(self.constant.clone(), |acc, (c, x)| acc + c * x)
    }

    pub fn to_mpoly(&self) -> MPoly {
        let n = self.coeffs.len();
        let mut p = MPoly::from_integer(n, self.constant.clone());
        for (v, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p = p.add(&MPoly::var(n, v).scale(&Rational::from_integer(c.clone())));
            }
        }
        p
    }

    pub fn remap(&self, map: &[usize], nvars: usize) -> LinearForm {
        let mut coeffs = vec![Integer::zero(); nvars];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[map[i]] += c;
        }
        LinearForm { coeffs, constant: self.constant.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Poly(MPoly),
    Binomial(LinearForm, LinearForm),
    Factorial(LinearForm),
    Catalan(LinearForm),
    /// `base^exponent`.
    Power { base: Rational, exponent: LinearForm },
}

impl Factor {
    fn eval(&self, values: &[Integer]) -> Option<Rational> {
        let v = match self {
            Factor::Poly(p) => {
                let vals: Vec<Rational> = values.iter().cloned().map(Rational::from_integer).collect();
                return Some(p.eval(&vals));
            }
            Factor::Binomial(a, b) => binomial_gen(a.eval(values).to_i64()?, b.eval(values).to_i64()?),
            Factor::Factorial(a) => {
                let a = a.eval(values);
                if a.is_negative() {
                    return None;
                }
                factorial(a.to_u64()?)
            }
            Factor::Catalan(a) => catalan(a.eval(values).to_i64()?).ok()?,
            Factor::Power { base, exponent } => {
                let e = exponent.eval(values).to_i64()?;
                if e < 0 {
                    if base.is_zero() {
                        return None;
                    }
                    return Some(rational_pow(&base.recip(), e.unsigned_abs() as u32));
                }
                return Some(rational_pow(base, e as u32));
            }
        };
        Some(Rational::from_integer(v))
    }

    /// `factor(x_v + 1) / factor(x_v)` as a constant times powers of
    /// polynomials in all symbols.
    fn shift_factors(&self, v: usize, out: &mut ShiftFactors) -> Result<(), MathError> {
        let degenerate = || MathError::Domain("factor vanishes identically".into());
        match self {
            Factor::Poly(p) => {
                if p.is_zero() {
                    return Err(degenerate());
                }
                out.push(p.shift_var(v, &Rational::one()), 1);
                out.push(p.clone(), -1);
            }
            Factor::Binomial(a, b) => {
                let (alpha, gamma) = (step(a, v)?, step(b, v)?);
                let (pa, pb) = (a.to_mpoly(), b.to_mpoly());
                out.rising(&pa, alpha, 1);
                out.rising(&pb, gamma, -1);
                out.rising(&pa.sub(&pb), alpha - gamma, -1);
            }
            Factor::Factorial(a) => out.rising(&a.to_mpoly(), step(a, v)?, 1),
            Factor::Catalan(a) => {
                // C_x = (2x)! / (x! (x+1)!)
                let alpha = step(a, v)?;
                let pa = a.to_mpoly();
                let one = MPoly::one(pa.nvars());
                out.rising(&pa.scale(&Rational::from_integer(2.into())), 2 * alpha, 1);
                out.rising(&pa, alpha, -1);
                out.rising(&pa.add(&one), alpha, -1);
            }
            Factor::Power { base, exponent } => {
                let alpha = step(exponent, v)?;
                if alpha != 0 {
                    if base.is_zero() {
                        return Err(degenerate());
                    }
                    let b = if alpha < 0 { base.recip() } else { base.clone() };
                    out.constant *= rational_pow(&b, alpha.unsigned_abs() as u32);
                }
            }
        }
        Ok(())
    }

    fn remap(&self, map: &[usize], nvars: usize) -> Factor {
        match self {
            Factor::Poly(p) => Factor::Poly(p.remap(map, nvars)),
            Factor::Binomial(a, b) => Factor::Binomial(a.remap(map, nvars), b.remap(map, nvars)),
            Factor::Factorial(a) => Factor::Factorial(a.remap(map, nvars)),
            Factor::Catalan(a) => Factor::Catalan(a.remap(map, nvars)),
            Factor::Power { base, exponent } => {
                Factor::Power { base: base.clone(), exponent: exponent.remap(map, nvars) }
            }
        }
    }
}

fn step(f: &LinearForm, v: usize) -> Result<i64, MathError> {
    f.coeff(v).to_i64().ok_or_else(|| MathError::Usage("argument coefficient out of range".into()))
}

/// A shift quotient as `constant * prod p_i^e_i`.
#[derive(Clone, Debug)]
pub struct ShiftFactors {
    pub constant: Rational,
    pub factors: Vec<(MPoly, i64)>,
}

impl ShiftFactors {
    fn push(&mut self, p: MPoly, e: i64) {
        if let Some(c) = p.as_constant() {
            let c = if e < 0 { c.recip() } else { c };
            self.constant *= rational_pow(&c, e.unsigned_abs() as u32);
        } else {
            self.factors.push((p, e));
        }
    }

    /// Multiply by `((a + alpha)! / a!)^sign`.
    fn rising(&mut self, a: &MPoly, alpha: i64, sign: i64) {
        let n = a.nvars();
        if alpha >= 0 {
            for i in 1..=alpha {
                self.push(a.add(&MPoly::from_integer(n, i)), sign);
            }
        } else {
            for i in 0..-alpha {
                self.push(a.add(&MPoly::from_integer(n, -i)), -sign);
            }
        }
    }

    fn pow(mut self, e: i64) -> ShiftFactors {
        let c = if e < 0 { self.constant.recip() } else { self.constant };
        self.constant = rational_pow(&c, e.unsigned_abs() as u32);
        for f in &mut self.factors {
            f.1 *= e;
        }
        self
    }

    pub fn to_field_elem(&self, nvars: usize) -> FieldElem {
        let mut acc = FieldElem::from_rational(nvars, self.constant.clone());
        for (p, e) in &self.factors {
            acc = acc.mul(&FieldElem::from_poly(p.clone()).pow(*e));
        }
        acc
    }
}

/// A term written as a rational constant times a product of integer powers
/// of factors. This form is evaluated directly at integer points and also
/// yields the shift quotients in each symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductForm {
    symbols: Arc<[String]>,
    constant: Rational,
    factors: Vec<(Factor, i64)>,
}

impl ProductForm {
    pub fn new<S: AsRef<str>>(symbols: &[S]) -> Self {
        ProductForm {
            symbols: symbols.iter().map(|s| s.as_ref().to_string()).collect(),
            constant: Rational::one(),
            factors: Vec::new(),
        }
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn nvars(&self) -> usize {
        self.symbols.len()
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn factors(&self) -> &[(Factor, i64)] {
        &self.factors
    }

    pub fn scaled(mut self, c: &Rational) -> Self {
        self.constant *= c;
        self
    }

    pub fn times(mut self, f: Factor, exponent: i64) -> Self {
        if exponent != 0 {
            self.factors.push((f, exponent));
        }
        self
    }

    pub fn mul(&self, other: &ProductForm) -> ProductForm {
        assert_eq!(self.symbols, other.symbols, "product of terms over different symbols");
        let mut out = self.clone();
        out.constant *= &other.constant;
        out.factors.extend(other.factors.iter().cloned());
        out
    }

    pub fn pow(&self, e: i64) -> Result<ProductForm, MathError> {
        let base = if e < 0 {
            if self.constant.is_zero() {
                return Err(MathError::Domain("negative power of zero".into()));
            }
            self.constant.recip()
        } else {
            self.constant.clone()
        };
        Ok(ProductForm {
            symbols: self.symbols.clone(),
            constant: rational_pow(&base, e.unsigned_abs() as u32),
            factors: self.factors.iter().map(|(f, x)| (f.clone(), x * e)).collect(),
        })
    }

    /// Value at an integer point; `None` where a factor is undefined or a
    /// vanishing factor sits in the denominator.
    pub fn eval(&self, values: &[Integer]) -> Option<Rational> {
        assert_eq!(values.len(), self.nvars(), "one value per symbol");
        let mut num = self.constant.clone();
        let mut den = Rational::one();
        for (f, e) in &self.factors {
            let v = f.eval(values)?;
            let p = rational_pow(&v, e.unsigned_abs() as u32);
            if *e > 0 {
                num *= p;
            } else {
                den *= p;
            }
        }
        if den.is_zero() {
            None
        } else {
            Some(num / den)
        }
    }

    /// `t(x_v + 1) / t(x_v)` in factored form.
    pub fn shift_factors(&self, v: usize) -> Result<ShiftFactors, MathError> {
        if self.constant.is_zero() {
            return Err(MathError::Domain("the zero term has no shift quotient".into()));
        }
        let mut acc = ShiftFactors { constant: Rational::one(), factors: Vec::new() };
        for (f, e) in &self.factors {
            let mut one = ShiftFactors { constant: Rational::one(), factors: Vec::new() };
            f.shift_factors(v, &mut one)?;
            let one = one.pow(*e);
            acc.constant *= one.constant;
            acc.factors.extend(one.factors);
        }
        Ok(acc)
    }

    /// `t(x_v + 1) / t(x_v)` over `Q(symbols)`.
    pub fn shift_ratio(&self, v: usize) -> Result<FieldElem, MathError> {
        Ok(self.shift_factors(v)?.to_field_elem(self.nvars()))
    }

    /// Reorder the symbols; every current symbol must appear in `symbols`.
    pub fn with_symbols<S: AsRef<str>>(&self, symbols: &[S]) -> Result<ProductForm, MathError> {
        let target: Vec<String> = symbols.iter().map(|s| s.as_ref().to_string()).collect();
        let map = self
            .symbols
            .iter()
            .map(|s| {
                target
                    .iter()
                    .position(|t| t == s)
                    .ok_or_else(|| MathError::Usage(format!("symbol `{s}` is not declared")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let nvars = target.len();
        Ok(ProductForm {
            symbols: target.into(),
            constant: self.constant.clone(),
            factors: self.factors.iter().map(|(f, e)| (f.remap(&map, nvars), *e)).collect(),
        })
    }
}

impl fmt::Display for ProductForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (factor, e) in &self.factors {
            write!(f, " * [{factor:?}]^{e}")?;
        }
        Ok(())
    }
}

/// Split an element of `Q(p_1..p_r, x)` into a rational function of `x`
/// over `Q(p_1..p_r)`; `x` is the last symbol.
pub fn split_last(fe: &FieldElem, var: &str, field: &CoefficientField) -> RationalFunction {
    let last = fe.nvars() - 1;
    let to_poly = |m: &MPoly| {
        let coeffs = m.coeffs_in(last).iter().map(|c| FieldElem::from_poly(c.drop_var(last))).collect();
        Polynomial::from_coeffs(var, field, coeffs)
    };
    RationalFunction::new(to_poly(fe.numer()), to_poly(fe.denom())).expect("nonzero denominator")
}

/// Inverse of [`split_last`] for polynomials.
pub fn join_last(p: &Polynomial) -> FieldElem {
    let n = p.field().nvars();
    let map: Vec<usize> = (0..n).collect();
    let x = FieldElem::from_poly(MPoly::var(n + 1, n));
    let mut acc = FieldElem::zero(n + 1);
    for (d, c) in p.coeffs() {
        acc = acc.add(&c.remap(&map, n + 1).mul(&x.pow(d as i64)));
    }
    acc
}
