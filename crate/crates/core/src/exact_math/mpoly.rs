//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are keyed by exponent vectors of a fixed length and ordered
//! lexicographically, variable 0 being the most significant. The leading
//! term is the lexicographically greatest exponent vector.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};

pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MPoly { nvars, terms }
    }

    pub fn from_integer(nvars: usize, c: impl Into<Integer>) -> Self {
        Self::constant(nvars, Rational::from_integer(c.into()))
    }

    /// The polynomial `x_v`.
    pub fn var(nvars: usize, v: usize) -> Self {
        assert!(v < nvars, "variable index {v} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Exponents, c: Rational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().iter().all(|&e| e == 0),
            _ => false,
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Lexicographically leading term.
    pub fn leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.check(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.nvars);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    fn mul_monomial(&self, m: &[u32], c: &Rational) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn check(&self, other: &MPoly) {
        assert_eq!(self.nvars, other.nvars, "polynomials over different variable sets");
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        self.check(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = divisor.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((e, c)) = rem.leading() {
            if e.iter().zip(&lm).any(|(a, b)| a < b) {
                return None;
            }
            let m: Exponents = e.iter().zip(&lm).map(|(a, b)| a - b).collect();
            let q = c / &lc;
            rem = rem.sub(&divisor.mul_monomial(&m, &q));
            quot.add_term(m, q);
        }
        Some(quot)
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Coefficient of `x_v^d`, as a polynomial with the `x_v` exponent zeroed.
    pub fn coeff_in(&self, v: usize, d: u32) -> MPoly {
        let terms = self.terms.iter().filter(|(e, _)| e[v] == d).map(|(e, c)| {
            let mut e = e.clone();
            e[v] = 0;
            (e, c.clone())
        });
        MPoly { nvars: self.nvars, terms: terms.collect() }
    }

    /// Coefficients with respect to `x_v`, indexed by degree.
    pub fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MPoly::zero(self.nvars); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            out[e[v] as usize].terms.insert(e2, c.clone());
        }
        out
    }

    /// Gcd of the coefficients with respect to `x_v`.
    pub fn content_in(&self, v: usize) -> MPoly {
        let mut g = MPoly::zero(self.nvars);
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(&c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part_in(&self, v: usize) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(v);
        self.exact_div(&c).expect("content divides").monic()
    }

    fn pseudo_rem(&self, divisor: &MPoly, v: usize) -> MPoly {
        let db = divisor.degree_in(v);
        let lcb = divisor.coeff_in(v, db);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lcr = r.coeff_in(v, dr);
            let mut m = vec![0; self.nvars];
            m[v] = dr - db;
            let shifted = divisor.mul(&lcr).mul_monomial(&m, &Rational::one());
            r = r.mul(&lcb).sub(&shifted);
            // keep rational coefficients from growing
            r = r.monic();
        }
        r
    }

    /// Monic greatest common divisor, computed by recursive primitive
    /// remainder sequences.
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        self.check(other);
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return MPoly::one(self.nvars);
        }
        let v = (0..self.nvars)
            .find(|&v| self.degree_in(v) > 0 || other.degree_in(v) > 0)
            .expect("non-constant polynomial has a variable");
        let (da, db) = (self.degree_in(v), other.degree_in(v));
        if da == 0 {
            return self.gcd(&other.content_in(v));
        }
        if db == 0 {
            return other.gcd(&self.content_in(v));
        }
        let ca = self.content_in(v);
        let cb = other.content_in(v);
        let mut a = self.exact_div(&ca).unwrap().monic();
        let mut b = other.exact_div(&cb).unwrap().monic();
        if da < db {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                b = MPoly::one(self.nvars);
                break;
            }
            a = b;
            b = r.primitive_part_in(v);
        }
        b.primitive_part_in(v).mul(&ca.gcd(&cb)).monic()
    }

    /// Substitute `x_v -> x_v + by`.
    pub fn shift_var(&self, v: usize, by: &Rational) -> MPoly {
        if by.is_zero() {
            return self.clone();
        }
        let xv = MPoly::var(self.nvars, v).add(&MPoly::constant(self.nvars, by.clone()));
        let mut powers: Vec<MPoly> = vec![MPoly::one(self.nvars)];
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let d = e[v] as usize;
            while powers.len() <= d {
                let next = powers.last().unwrap().mul(&xv);
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[v] = 0;
            out = out.add(&powers[d].mul_monomial(&rest, c));
        }
        out
    }

    /// Substitute `x_v -> value`, leaving the variable count unchanged.
    pub fn substitute(&self, v: usize, value: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let d = e2[v];
            e2[v] = 0;
            out.add_term(e2, c * rational_pow(value, d));
        }
        out
    }

    /// Substitute `x_v -> poly`.
    pub fn substitute_poly(&self, v: usize, poly: &MPoly) -> MPoly {
        self.check(poly);
        let mut out = MPoly::zero(self.nvars);
        for (d, c) in self.coeffs_in(v).into_iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&c.mul(&poly.pow(d as u32)));
            }
        }
        out
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &d) in values.iter().zip(e) {
                if d > 0 {
                    t *= rational_pow(x, d);
                }
            }
            acc += t;
        }
        acc
    }

    /// Remove variable `v`; it must not occur.
    pub fn drop_var(&self, v: usize) -> MPoly {
        assert_eq!(self.degree_in(v), 0, "dropping a variable that occurs");
        MPoly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.remove(v);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Insert a fresh variable at position `v`.
    pub fn insert_var(&self, v: usize) -> MPoly {
        MPoly {
            nvars: self.nvars + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.insert(v, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Rename variables: variable `i` of `self` becomes variable `map[i]` of
    /// a polynomial in `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> MPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = MPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &d) in e.iter().enumerate() {
                e2[map[i]] += d;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn denominator_lcm(&self) -> Integer {
        self.terms.values().fold(Integer::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the coefficient numerators (zero for the zero polynomial).
    pub fn numerator_gcd(&self) -> Integer {
        self.terms.values().fold(Integer::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// The multiplier turning `self` into a primitive integer polynomial.
    pub fn integer_normalizer(&self) -> Rational {
        let g = self.numerator_gcd();
        if g.is_zero() {
            return Rational::one();
        }
        Rational::new(self.denominator_lcm(), g)
    }

    /// Sign of the leading coefficient.
    pub fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }

    /// Render with the given variable names. Monomials are listed by
    /// descending total degree, ties broken lexicographically.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MPolyDisplay<'a> {
        MPolyDisplay { poly: self, names }
    }

    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        terms
    }
}

pub fn rational_pow(x: &Rational, d: u32) -> Rational {
    num_traits::pow(x.clone(), d as usize)
}

pub struct MPolyDisplay<'a> {
    poly: &'a MPoly,
    names: &'a [String],
}

impl fmt::Display for MPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.poly.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (name, &d) in self.names.iter().zip(e.iter()) {
                match d {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{d}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    if a.is_integer() {
                        write!(f, "{a}*")?;
                    } else {
                        write!(f, "({a})*")?;
                    }
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
