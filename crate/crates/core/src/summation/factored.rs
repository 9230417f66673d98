use crate::exact_math::{
    dispersion_set, CoefficientField, FieldElem, Integer, MPoly, MathError, Polynomial, Rational, RationalFunction,
};

use super::term::ShiftFactors;

/// `constant * prod num_i / prod den_i` with every factor a monic
/// non-constant polynomial in the variable. Repeated factors are listed
/// repeatedly.
#[derive(Clone, Debug)]
pub(crate) struct FactoredRatio {
    pub var: String,
    pub field: CoefficientField,
    pub constant: FieldElem,
    pub num: Vec<Polynomial>,
    pub den: Vec<Polynomial>,
}

/// Split a polynomial in `[params..., var]` into a polynomial in the last
/// variable over `Q(params)`.
fn to_poly(m: &MPoly, var: &str, field: &CoefficientField) -> Polynomial {
    let last = m.nvars() - 1;
    let coeffs = m.coeffs_in(last).iter().map(|c| FieldElem::from_poly(c.drop_var(last))).collect();
    Polynomial::from_coeffs(var, field, coeffs)
}

impl FactoredRatio {
    pub fn one(var: &str, field: &CoefficientField) -> Self {
        FactoredRatio { var: var.into(), field: field.clone(), constant: field.one(), num: Vec::new(), den: Vec::new() }
    }

    /// From factors over `[params..., var]`.
    pub fn from_shift_factors(sf: &ShiftFactors, var: &str, field: &CoefficientField) -> Self {
        let mut out = Self::one(var, field);
        out.constant = field.rational(sf.constant.clone());
        for (m, e) in &sf.factors {
            out.push(to_poly(m, var, field), *e);
        }
        out.cancel();
        out
    }

    pub fn from_ratfunc(r: &RationalFunction) -> Self {
        let mut out = Self::one(r.var(), r.field());
        out.push(r.numer().clone(), 1);
        out.push(r.denom().clone(), -1);
        out
    }

    fn push(&mut self, p: Polynomial, e: i64) {
        let lc = p.leading_coeff();
        self.constant = self.constant.mul(&lc.pow(e));
        if p.is_constant() {
            return;
        }
        let p = p.monic();
        let list = if e > 0 { &mut self.num } else { &mut self.den };
        for _ in 0..e.unsigned_abs() {
            list.push(p.clone());
        }
    }

    /// Remove factors common to numerator and denominator.
    fn cancel(&mut self) {
        let mut i = 0;
        while i < self.num.len() {
            if let Some(j) = self.den.iter().position(|d| d == &self.num[i]) {
                self.den.swap_remove(j);
                self.num.swap_remove(i);
            } else {
                i += 1;
            }
        }
    }

    pub fn mul(&self, other: &FactoredRatio) -> FactoredRatio {
        let mut out = self.clone();
        out.constant = out.constant.mul(&other.constant);
        out.num.extend(other.num.iter().cloned());
        out.den.extend(other.den.iter().cloned());
        out.cancel();
        out
    }

    /// Apply a coefficient map that keeps leading coefficients equal to 1
    /// (such as a parameter shift).
    pub fn map_coeffs(&self, f: impl Fn(&FieldElem) -> FieldElem) -> FactoredRatio {
        let g = |p: &Polynomial| p.map_coeffs(&self.field, &f);
        FactoredRatio {
            var: self.var.clone(),
            field: self.field.clone(),
            constant: f(&self.constant),
            num: self.num.iter().map(g).collect(),
            den: self.den.iter().map(g).collect(),
        }
    }

    pub fn numer_poly(&self) -> Polynomial {
        product(&self.num, &self.var, &self.field).scale(&self.constant)
    }

    pub fn denom_poly(&self) -> Polynomial {
        product(&self.den, &self.var, &self.field)
    }

    /// Expanded and reduced. Distinct monic linear factors are coprime, so
    /// the gcd step is skipped when every factor is linear.
    pub fn to_ratfunc(&self) -> RationalFunction {
        let (n, d) = (self.numer_poly(), self.denom_poly());
        if self.num.iter().chain(&self.den).all(|p| p.degree() == Some(1)) {
            RationalFunction::from_coprime(n, d)
        } else {
            RationalFunction::new(n, d).expect("nonzero denominator")
        }
    }
}

pub(crate) fn product(list: &[Polynomial], var: &str, field: &CoefficientField) -> Polynomial {
    list.iter().fold(Polynomial::one(var, field), |acc, p| &acc * p)
}

/// Shifts `j >= 0` with `gcd(p(k), q(k + j))` non-constant, for monic `p`, `q`.
fn factor_dispersion(p: &Polynomial, q: &Polynomial) -> Result<Vec<u64>, MathError> {
    if p.degree() == Some(1) && q.degree() == Some(1) {
        // k + a = (k + j) + b
        let j = p.coeff(0).sub(&q.coeff(0));
        return Ok(match j.as_rational() {
            Some(j) if j.is_integer() && j >= Rational::from_integer(0.into()) => {
                j.to_integer().try_into().map(|j: u64| vec![j]).unwrap_or_default()
            }
            _ => Vec::new(),
        });
    }
    Ok(dispersion_set(p, q)?.into_iter().collect())
}

/// Gosper normal form on factor lists: returns `(a, b, c)` with
/// `r = (a/b) c(k+1)/c(k)` and `gcd(a(k), b(k+j)) = 1` for all `j >= 0`.
pub(crate) fn factored_normal_form(r: &FactoredRatio) -> Result<(Polynomial, Polynomial, Polynomial), MathError> {
    let mut a = r.num.clone();
    let mut b = r.den.clone();
    let mut c: Vec<Polynomial> = Vec::new();
    loop {
        let mut changed = false;
        for i in 0..a.len() {
            for jx in 0..b.len() {
                if a[i].is_constant() || b[jx].is_constant() {
                    continue;
                }
                for j in factor_dispersion(&a[i], &b[jx])? {
                    let ji = Integer::from(j);
                    let g = a[i].gcd(&b[jx].shift(&ji))?;
                    if g.is_constant() {
                        continue;
                    }
                    a[i] = a[i].exact_div(&g).expect("gcd divides");
                    b[jx] = b[jx].exact_div(&g.shift(&-&ji)).expect("shifted gcd divides");
                    for t in 1..=j {
                        c.push(g.shift(&-Integer::from(t)));
                    }
                    changed = true;
                    if a[i].is_constant() || b[jx].is_constant() {
                        break;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let (var, field) = (r.var.as_str(), &r.field);
    Ok((product(&a, var, field).scale(&r.constant), product(&b, var, field), product(&c, var, field)))
}
