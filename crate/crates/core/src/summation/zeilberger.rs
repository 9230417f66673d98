use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::factored::{factored_normal_form, product, FactoredRatio};
use super::gosper::degree_bound;
use super::term::{join_last, split_last, ProductForm};
use crate::exact_math::{
    solve_linear, CoefficientField, FieldElem, Integer, MPoly, MathError, Polynomial, Rational, RationalFunction,
};

/// A term `F(n, k)` hypergeometric in both variables. Both shift quotients
/// are rational functions of `k` over `Q(params, n)`.
#[derive(Clone, Debug)]
pub struct BivariateHyperTerm {
    n: String,
    k: String,
    params: Vec<String>,
    field: CoefficientField,
    ratio_k: RationalFunction,
    ratio_n: RationalFunction,
    factored_k: FactoredRatio,
    factored_n: FactoredRatio,
    direct: ProductForm,
}

impl BivariateHyperTerm {
    pub fn from_product(form: &ProductForm, n: &str, k: &str, params: &[String]) -> Result<Self, MathError> {
        if n == k || params.iter().any(|p| p == n || p == k) {
            return Err(MathError::Usage("variables and parameters must be distinct".into()));
        }
        let mut symbols = params.to_vec();
        symbols.push(n.to_string());
        symbols.push(k.to_string());
        let form = form.with_symbols(&symbols)?;
        let field = CoefficientField::new(&symbols[..symbols.len() - 1])?;
        let (iv, ik) = (symbols.len() - 2, symbols.len() - 1);
        let factored_k = FactoredRatio::from_shift_factors(&form.shift_factors(ik)?, k, &field);
        let factored_n = FactoredRatio::from_shift_factors(&form.shift_factors(iv)?, k, &field);
        let (ratio_k, ratio_n) = (factored_k.to_ratfunc(), factored_n.to_ratfunc());
        let term = BivariateHyperTerm {
            n: n.to_string(),
            k: k.to_string(),
            params: params.to_vec(),
            field,
            ratio_k,
            ratio_n,
            factored_k,
            factored_n,
            direct: form,
        };
        if !term.is_compatible() {
            return Err(MathError::Domain("shift quotients are not compatible".into()));
        }
        Ok(term)
    }

    pub fn n(&self) -> &str {
        &self.n
    }

    pub fn k(&self) -> &str {
        &self.k
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    /// `Q(params, n)`.
    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn ratio_k(&self) -> &RationalFunction {
        &self.ratio_k
    }

    pub fn ratio_n(&self) -> &RationalFunction {
        &self.ratio_n
    }

    pub fn direct(&self) -> &ProductForm {
        &self.direct
    }

    fn n_index(&self) -> usize {
        self.params.len()
    }

    /// `r(n + j, k)` for a rational function in `k` over `Q(params, n)`.
    fn shift_n(&self, r: &RationalFunction, j: i64) -> RationalFunction {
        let by = Rational::from_integer(j.into());
        r.map_coeffs(&self.field, |c| c.shift_param(self.n_index(), &by))
    }

    /// `ratio_n(n, k+1) ratio_k(n, k) = ratio_k(n+1, k) ratio_n(n, k)`.
    pub fn is_compatible(&self) -> bool {
        let lhs = &self.ratio_n.shift(&Integer::one()) * &self.ratio_k;
        let rhs = &self.shift_n(&self.ratio_k, 1) * &self.ratio_n;
        lhs == rhs
    }

    pub fn eval(&self, params: &[Integer], n: &Integer, k: &Integer) -> Option<Rational> {
        let mut values = params.to_vec();
        values.push(n.clone());
        values.push(k.clone());
        self.direct.eval(&values)
    }

    /// `f(n) = sum_{k=0}^{n} F(n, k)`.
    pub fn definite_sum(&self, params: &[Integer], n: &Integer) -> Option<Rational> {
        let mut acc = Rational::zero();
        let mut k = Integer::zero();
        while &k <= n {
            acc += self.eval(params, n, &k)?;
            k += 1;
        }
        Some(acc)
    }

    /// `F(n+j, k) / F(n, k)` for `j = 0..=order`.
    fn shift_quotients(&self, order: usize) -> Vec<FactoredRatio> {
        let mut out = vec![FactoredRatio::one(&self.k, &self.field)];
        for j in 1..order + 1 {
            let by = Rational::from_integer((j as i64 - 1).into());
            let step = self.factored_n.map_coeffs(|c| c.shift_param(self.n_index(), &by));
            let next = out[j - 1].mul(&step);
            out.push(next);
        }
        out
    }
}

/// Right side of the recurrence after summing over `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inhomogeneous {
    Zero,
    /// A polynomial in `n` with rational coefficients.
    Polynomial(Polynomial),
    /// The boundary terms do not fit a polynomial in `n` alone.
    NotPolynomial,
}

impl fmt::Display for Inhomogeneous {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inhomogeneous::Zero => write!(f, "0"),
            Inhomogeneous::Polynomial(p) => write!(f, "{p}"),
            Inhomogeneous::NotPolynomial => write!(f, "(not polynomial)"),
        }
    }
}

/// `sum_j a_j(n) F(n+j, k) = G(n, k+1) - G(n, k)` with `G = R F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelescopedRecurrence {
    /// `a_0 .. a_J` as polynomials in `n` over `Q(params)`.
    pub coefficients: Vec<Polynomial>,
    /// `R(n, k)` as a rational function of `k` over `Q(params, n)`.
    pub certificate: RationalFunction,
    pub inhomogeneous: Inhomogeneous,
}

impl TelescopedRecurrence {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeilbergerError {
    NoRecurrenceFound { max_order: usize },
    Math(MathError),
}

impl fmt::Display for ZeilbergerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeilbergerError::NoRecurrenceFound { max_order } => {
                write!(f, "no recurrence found up to order {max_order}")
            }
            ZeilbergerError::Math(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ZeilbergerError {}

impl From<MathError> for ZeilbergerError {
    fn from(e: MathError) -> Self {
        ZeilbergerError::Math(e)
    }
}

pub fn zeilberger(term: &BivariateHyperTerm, max_order: usize) -> Result<TelescopedRecurrence, ZeilbergerError> {
    if max_order == 0 {
        return Err(MathError::Usage("max_order must be at least 1".into()).into());
    }
    for order in 1..=max_order {
        if let Some((coeffs, cert)) = try_order(term, order)? {
            let (coefficients, certificate) = normalize(term, coeffs, cert);
            let mut rec = TelescopedRecurrence { coefficients, certificate, inhomogeneous: Inhomogeneous::Zero };
            rec.inhomogeneous = fit_inhomogeneous(term, &rec);
            if verify_zeilberger(term, &rec) {
                return Ok(rec);
            }
        }
    }
    Err(ZeilbergerError::NoRecurrenceFound { max_order })
}

/// Parameterized Gosper step with `a_J = 1`.
fn try_order(
    term: &BivariateHyperTerm,
    order: usize,
) -> Result<Option<(Vec<FieldElem>, RationalFunction)>, MathError> {
    let (k, field) = (term.k.as_str(), &term.field);
    let quotients = term.shift_quotients(order);
    // common denominator, as a multiset of monic factors
    let mut dlist: Vec<Polynomial> = Vec::new();
    for q in &quotients {
        let mut avail = dlist.clone();
        for f in &q.den {
            match avail.iter().position(|x| x == f) {
                Some(i) => {
                    avail.swap_remove(i);
                }
                None => dlist.push(f.clone()),
            }
        }
    }
    let p: Vec<Polynomial> = quotients
        .iter()
        .map(|q| {
            let mut rest = dlist.clone();
            for f in &q.den {
                let i = rest.iter().position(|x| x == f).expect("denominator divides the common one");
                rest.swap_remove(i);
            }
            &q.numer_poly() * &product(&rest, k, field)
        })
        .collect();
    let den = product(&dlist, k, field);
    // u(k) = F(n,k) / D(k) is hypergeometric in k
    let shift_d = FactoredRatio {
        var: k.to_string(),
        field: field.clone(),
        constant: field.one(),
        num: dlist.clone(),
        den: dlist.iter().map(|f| f.shift(&Integer::one())).collect(),
    };
    let r_u = term.factored_k.mul(&shift_d);
    let (nf_a, nf_b, nf_c) = factored_normal_form(&r_u)?;
    let big_b = nf_b.shift(&Integer::from(-1));
    let deg_pc = p.iter().filter_map(Polynomial::degree).max().unwrap_or(0) + nf_c.degree().unwrap_or(0);
    let bound = degree_bound(&nf_a, &big_b, deg_pc).max(-1);
    let nx = (bound + 1) as usize;

    // columns: a_0 .. a_{J-1}, x_0 .. x_{nx-1}; a_J = 1 moves to the right side
    let mut columns: Vec<Polynomial> = p[..order].iter().map(|pj| -&(pj * &nf_c)).collect();
    let kk = Polynomial::variable(k, field);
    let k1 = &kk + &Polynomial::one(k, field);
    let (mut pk, mut pk1) = (Polynomial::one(k, field), Polynomial::one(k, field));
    for _ in 0..nx {
        columns.push(&(&nf_a * &pk1) - &(&big_b * &pk));
        pk = &pk * &kk;
        pk1 = &pk1 * &k1;
    }
    let rhs_poly = &p[order] * &nf_c;
    let rows = columns.iter().filter_map(Polynomial::degree).chain(rhs_poly.degree()).max().map_or(0, |m| m + 1);
    let matrix: Vec<Vec<FieldElem>> = (0..rows).map(|r| columns.iter().map(|c| c.coeff(r)).collect()).collect();
    let rhs: Vec<FieldElem> = (0..rows).map(|r| rhs_poly.coeff(r)).collect();
    let sol = solve_linear(&matrix, &rhs, field.nvars());
    let Some(sol) = sol else {
        return Ok(None);
    };
    let mut a: Vec<FieldElem> = sol[..order].to_vec();
    a.push(field.one());
    let x = Polynomial::from_coeffs(k, field, sol[order..].to_vec());
    let cert = RationalFunction::new(&big_b * &x, &nf_c * &den)?;
    Ok(Some((a, cert)))
}

/// Clear denominators and common factors; make the leading coefficient of
/// `a_J` positive. The certificate is scaled by the same factor.
fn normalize(
    term: &BivariateHyperTerm,
    a: Vec<FieldElem>,
    cert: RationalFunction,
) -> (Vec<Polynomial>, RationalFunction) {
    let nv = term.field.nvars();
    let mut den = MPoly::one(nv);
    for c in &a {
        let g = den.gcd(c.denom());
        den = den.mul(&c.denom().exact_div(&g).expect("gcd divides"));
    }
    let nums: Vec<MPoly> = a
        .iter()
        .map(|c| c.numer().mul(&den.exact_div(c.denom()).expect("lcm is a multiple")))
        .collect();
    let g = nums.iter().fold(MPoly::zero(nv), |acc, n| acc.gcd(n));
    let nums: Vec<MPoly> = nums.iter().map(|n| n.exact_div(&g).expect("gcd divides")).collect();
    let lcm = nums.iter().fold(Integer::one(), |acc, n| acc.lcm(&n.denominator_lcm()));
    let gcd = nums.iter().fold(Integer::zero(), |acc, n| acc.gcd(&n.numerator_gcd()));
    let mut s = Rational::new(lcm, gcd);
    if nums.last().unwrap().leading_is_negative() {
        s = -s;
    }
    let params_field = CoefficientField::new(&term.params).expect("distinct parameters");
    let coeffs = nums
        .iter()
        .map(|n| split_last(&FieldElem::from_poly(n.scale(&s)), &term.n, &params_field).numer().clone())
        .collect();
    let factor = FieldElem::new(den, g).scale(&s);
    let factor = RationalFunction::constant(&term.k, &term.field, factor);
    (coeffs, &cert * &factor)
}

fn sample_params(term: &BivariateHyperTerm, salt: i64) -> Vec<Integer> {
    (0..term.params.len() as i64).map(|i| Integer::from(3 * REPLAY_N + 13 + 7 * i + salt)).collect()
}

const REPLAY_N: i64 = 8;

fn eval_coeff(p: &Polynomial, params: &[Integer], n: &Integer) -> Option<Rational> {
    let pv: Vec<Rational> = params.iter().cloned().map(Rational::from_integer).collect();
    p.eval_rational(&pv, &Rational::from_integer(n.clone()))
}

/// `sum_j a_j(n) F(n+j, k)`.
fn operator_value(term: &BivariateHyperTerm, rec: &TelescopedRecurrence, params: &[Integer], n: &Integer, k: &Integer) -> Option<Rational> {
    let mut acc = Rational::zero();
    for (j, a) in rec.coefficients.iter().enumerate() {
        let nj = n + j;
        acc += eval_coeff(a, params, n)? * term.eval(params, &nj, k)?;
    }
    Some(acc)
}

/// `G(n, k) = R(n, k) F(n, k)`, stepping from a nearby regular point when
/// the certificate has a pole at `k`.
fn g_value(term: &BivariateHyperTerm, rec: &TelescopedRecurrence, params: &[Integer], n: &Integer, k: &Integer) -> Option<Rational> {
    let direct = |k: &Integer| {
        let mut pv: Vec<Rational> = params.iter().cloned().map(Rational::from_integer).collect();
        pv.push(Rational::from_integer(n.clone()));
        let r = rec.certificate.eval_rational(&pv, &Rational::from_integer(k.clone()))?;
        Some(r * term.eval(params, n, k)?)
    };
    if let Some(v) = direct(k) {
        return Some(v);
    }
    const REACH: i64 = 32;
    for d in 1..=REACH {
        // G(k) = G(k + d) - sum_{i<d} T(k + i)
        let above = k + d;
        if let Some(mut v) = direct(&above) {
            let mut ok = true;
            for i in 0..d {
                match operator_value(term, rec, params, n, &(k + i)) {
                    Some(t) => v -= t,
                    None => ok = false,
                }
            }
            if ok {
                return Some(v);
            }
        }
        let below = k - d;
        if let Some(mut v) = direct(&below) {
            let mut ok = true;
            for i in 0..d {
                match operator_value(term, rec, params, n, &(&below + i)) {
                    Some(t) => v += t,
                    None => ok = false,
                }
            }
            if ok {
                return Some(v);
            }
        }
    }
    None
}

/// `G(n, n+1) - G(n, 0) + sum_{j>=1} a_j(n) sum_{i=1}^{j} F(n+j, n+i)`.
fn boundary_value(term: &BivariateHyperTerm, rec: &TelescopedRecurrence, params: &[Integer], n: &Integer) -> Option<Rational> {
    let mut acc = g_value(term, rec, params, n, &(n + 1))? - g_value(term, rec, params, n, &Integer::zero())?;
    for (j, a) in rec.coefficients.iter().enumerate().skip(1) {
        let aj = eval_coeff(a, params, n)?;
        for i in 1..=j {
            acc += &aj * term.eval(params, &(n + j), &(n + i))?;
        }
    }
    Some(acc)
}

/// Interpolate boundary values at `n = 0..=REPLAY_N` and keep the result
/// when it reproduces every sample for two parameter choices.
fn fit_inhomogeneous(term: &BivariateHyperTerm, rec: &TelescopedRecurrence) -> Inhomogeneous {
    let sample = |salt| -> Vec<(Rational, Rational)> {
        let params = sample_params(term, salt);
        (0..=REPLAY_N)
            .filter_map(|n| {
                let n = Integer::from(n);
                boundary_value(term, rec, &params, &n).map(|v| (Rational::from_integer(n), v))
            })
            .collect()
    };
    let first = sample(0);
    if first.len() < 3 {
        return Inhomogeneous::NotPolynomial;
    }
    if first.iter().all(|(_, v)| v.is_zero()) {
        return Inhomogeneous::Zero;
    }
    let q = CoefficientField::rationals();
    // smallest degree whose interpolant fits all samples
    for deg in 0..first.len() - 2 {
        let p = interpolate(&first[..=deg], &term.n, &q);
        let fits = |pts: &[(Rational, Rational)]| {
            pts.iter().all(|(x, y)| p.eval_rational(&[], x).as_ref() == Some(y))
        };
        if fits(&first) {
            let second = sample(5);
            return if fits(&second) { Inhomogeneous::Polynomial(p) } else { Inhomogeneous::NotPolynomial };
        }
    }
    Inhomogeneous::NotPolynomial
}

/// Lagrange interpolation over `Q`.
fn interpolate(points: &[(Rational, Rational)], var: &str, q: &CoefficientField) -> Polynomial {
    let x = Polynomial::variable(var, q);
    let mut acc = Polynomial::zero(var, q);
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Polynomial::constant(var, q, q.rational(yi.clone()));
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let lin = &x - &Polynomial::constant(var, q, q.rational(xj.clone()));
                basis = (&basis * &lin).scale(&q.rational((xi - xj).recip()));
            }
        }
        acc = &acc + &basis;
    }
    acc
}

/// Algebraic check of the telescoping identity through the shift
/// quotients, then a numeric replay of the summed recurrence.
pub fn verify_zeilberger(term: &BivariateHyperTerm, rec: &TelescopedRecurrence) -> bool {
    if rec.coefficients.len() < 2 || rec.coefficients.iter().all(Polynomial::is_zero) {
        return false;
    }
    let r = &rec.certificate;
    if r.var() != term.k || r.field() != &term.field {
        return false;
    }
    let lift = |p: &Polynomial| -> Option<FieldElem> {
        if p.field().params() != term.params.as_slice() || p.var() != term.n {
            return None;
        }
        Some(join_last(p))
    };
    let mut lhs = RationalFunction::zero(&term.k, &term.field);
    for (a, q) in rec.coefficients.iter().zip(term.shift_quotients(rec.order())) {
        let Some(a) = lift(a) else { return false };
        lhs = &lhs + &(&q.to_ratfunc() * &RationalFunction::constant(&term.k, &term.field, a));
    }
    let rhs = &(&r.shift(&Integer::one()) * term.ratio_k()) - r;
    if lhs != rhs {
        return false;
    }
    let mut checked = 0;
    for salt in [0, 5] {
        let params = sample_params(term, salt);
        for n in 0..=REPLAY_N {
            let n = Integer::from(n);
            let Some(boundary) = boundary_value(term, rec, &params, &n) else { continue };
            let mut sum = Rational::zero();
            let mut defined = true;
            for (j, a) in rec.coefficients.iter().enumerate() {
                match (eval_coeff(a, &params, &n), term.definite_sum(&params, &(&n + j))) {
                    (Some(a), Some(f)) => sum += a * f,
                    _ => defined = false,
                }
            }
            if !defined {
                continue;
            }
            if sum != boundary {
                return false;
            }
            let expected = match &rec.inhomogeneous {
                Inhomogeneous::Zero => Some(Rational::zero()),
                Inhomogeneous::Polynomial(p) => p.eval_rational(&[], &Rational::from_integer(n.clone())),
                Inhomogeneous::NotPolynomial => None,
            };
            if let Some(e) = expected {
                if e != sum {
                    return false;
                }
            }
            checked += 1;
        }
    }
    checked > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::summation::{Factor, LinearForm};

    fn lin(c: &[i64], k: i64) -> LinearForm {
        LinearForm::new(c.iter().map(|&x| Integer::from(x)).collect(), Integer::from(k))
    }

    fn coeff_strings(rec: &TelescopedRecurrence) -> Vec<String> {
        rec.coefficients.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn binomial_row_sum() {
        let f = ProductForm::new(&["n", "k"]).times(Factor::Binomial(lin(&[1, 0], 0), lin(&[0, 1], 0)), 1);
        let term = BivariateHyperTerm::from_product(&f, "n", "k", &[]).unwrap();
        let rec = zeilberger(&term, 2).unwrap();
        assert_eq!(coeff_strings(&rec), ["-2", "1"]);
        assert_eq!(rec.inhomogeneous, Inhomogeneous::Zero);
        assert!(verify_zeilberger(&term, &rec));
    }

    #[test]
    fn constant_term() {
        let f = ProductForm::new(&["n", "k"]);
        let term = BivariateHyperTerm::from_product(&f, "n", "k", &[]).unwrap();
        let rec = zeilberger(&term, 1).unwrap();
        assert_eq!(coeff_strings(&rec), ["-1", "1"]);
        assert!(verify_zeilberger(&term, &rec));
        let q = CoefficientField::rationals();
        assert_eq!(rec.inhomogeneous, Inhomogeneous::Polynomial(Polynomial::one("n", &q)));
    }

    #[test]
    fn perturbed_recurrence_fails() {
        let f = ProductForm::new(&["n", "k"]).times(Factor::Binomial(lin(&[1, 0], 0), lin(&[0, 1], 0)), 1);
        let term = BivariateHyperTerm::from_product(&f, "n", "k", &[]).unwrap();
        let rec = zeilberger(&term, 1).unwrap();
        let mut bad = rec.clone();
        bad.coefficients[0] = &bad.coefficients[0] + &Polynomial::one("n", &CoefficientField::rationals());
        assert!(!verify_zeilberger(&term, &bad));
        let mut bad = rec;
        bad.certificate = RationalFunction::zero("k", term.field());
        assert!(!verify_zeilberger(&term, &bad));
    }

    #[test]
    fn normalized_catalan_recurrence() {
        // symbols l, m, k
        let f = ProductForm::new(&["l", "m", "k"])
            .times(Factor::Power { base: Rational::from_integer((-1).into()), exponent: lin(&[0, 0, 1], 0) }, 1)
            .times(Factor::Catalan(lin(&[0, 0, 1], 0)), 1)
            .times(Factor::Binomial(lin(&[1, -1, 1], 0), lin(&[0, 1, -1], 0)), 1)
            .times(Factor::Binomial(lin(&[1, -1, 0], -1), lin(&[0, 1, 0], 0)), -1);
        let term = BivariateHyperTerm::from_product(&f, "m", "k", &["l".to_string()]).unwrap();
        let rec = zeilberger(&term, 1).unwrap();
        assert_eq!(coeff_strings(&rec), ["-m - 1", "m + 2"]);
        let q = CoefficientField::rationals();
        assert_eq!(rec.inhomogeneous, Inhomogeneous::Polynomial(Polynomial::one("m", &q)));
    }
}

