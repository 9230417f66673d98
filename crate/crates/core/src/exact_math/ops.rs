//! Polynomial subroutines used by Gosper's algorithm.

use std::collections::BTreeSet;

use num_bigint::Sign;
use num_integer::{Integer as _, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{CoefficientField, FieldElem};
use super::linalg::solve_linear;
use super::poly::Polynomial;
use super::{Integer, MathError, Rational};

/// Monic greatest common divisor; `gcd(p, 0)` is `p` made monic.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, MathError> {
    p.gcd(q)
}

/// `p(k + j)` expanded in `k`.
pub fn poly_shift(p: &Polynomial, j: &Integer) -> Polynomial {
    p.shift(j)
}

/// Resultant of two polynomials over their coefficient field, by the
/// Euclidean remainder sequence.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Result<FieldElem, MathError> {
    a.check_compatible(b)?;
    let field = a.field().clone();
    if a.is_zero() || b.is_zero() {
        return Ok(field.zero());
    }
    let mut acc = field.one();
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return Ok(acc.mul(&b.leading_coeff().pow(m as i64)));
        }
        let r = a.div_rem(&b).1;
        let Some(p) = r.degree() else {
            return Ok(field.zero());
        };
        if (m * n) % 2 == 1 {
            acc = acc.neg();
        }
        acc = acc.mul(&b.leading_coeff().pow((m - p) as i64));
        a = b;
        b = r;
    }
}

const SHIFT_SYMBOL: &str = "$shift";

/// All `j >= 0` such that `gcd(p(k), q(k + j))` is non-constant.
///
/// Candidates are the nonnegative integer roots of `Res_k(p(k), q(k + j))`
/// as a polynomial in `j` that vanish identically in the parameters; each
/// candidate is then confirmed by a direct gcd computation.
pub fn dispersion_set(p: &Polynomial, q: &Polynomial) -> Result<BTreeSet<u64>, MathError> {
    p.check_compatible(q)?;
    if p.is_zero() || q.is_zero() {
        return Err(MathError::Usage("dispersion of the zero polynomial".into()));
    }
    let mut out = BTreeSet::new();
    if p.is_constant() || q.is_constant() {
        return Ok(out);
    }
    let field = p.field();
    let nparams = field.nvars();
    let lifted_field = field.extend(SHIFT_SYMBOL)?;
    let map: Vec<usize> = (0..nparams).collect();
    let lift = |x: &Polynomial| x.map_coeffs(&lifted_field, |c| c.remap(&map, nparams + 1));
    let shift = lifted_field.param(SHIFT_SYMBOL).unwrap();
    let res = resultant(&lift(p), &lift(q).shift_by(&shift))?;

    // Group the numerator by parameter monomial; a shift that works for
    // generic parameters is a common root of every group.
    let num = res.numer();
    let mut groups: std::collections::BTreeMap<Vec<u32>, Vec<(usize, Rational)>> = Default::default();
    for (e, c) in num.terms() {
        groups.entry(e[..nparams].to_vec()).or_default().push((e[nparams] as usize, c.clone()));
    }
    let q_field = CoefficientField::rationals();
    let mut g = Polynomial::zero(SHIFT_SYMBOL, &q_field);
    for terms in groups.values() {
        let mut coeffs = vec![q_field.zero(); terms.iter().map(|t| t.0).max().unwrap_or(0) + 1];
        for (d, c) in terms {
            coeffs[*d] = q_field.rational(c.clone());
        }
        let gp = Polynomial::from_coeffs(SHIFT_SYMBOL, &q_field, coeffs);
        g = g.gcd(&gp)?;
        if g.is_constant() {
            return Ok(out);
        }
    }
    for j in nonnegative_integer_roots(&g) {
        let shifted = q.shift(&Integer::from(j));
        if p.gcd(&shifted)?.degree().unwrap_or(0) > 0 {
            out.insert(j);
        }
    }
    Ok(out)
}

/// Nonnegative integer roots of a polynomial with rational coefficients.
fn nonnegative_integer_roots(g: &Polynomial) -> Vec<u64> {
    let Some(deg) = g.degree() else { return Vec::new() };
    let mut coeffs: Vec<Rational> = (0..=deg).map(|d| g.coeff(d).as_rational().expect("rational polynomial")).collect();
    let lcm = coeffs.iter().fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Integer> = coeffs.iter_mut().map(|c| (c.clone() * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(0);
    }
    let ints = &ints[low..];
    if ints.len() == 1 {
        return roots;
    }
    // Fujiwara bound on root magnitudes
    let n = ints.len() - 1;
    let lead = ints[n].abs();
    let mut bound = Integer::zero();
    for i in 1..=n {
        let c = ints[n - i].abs();
        if c.is_zero() {
            continue;
        }
        let ratio = c.div_ceil(&lead);
        let mut r: Integer = Roots::nth_root(&ratio, i as u32);
        if num_traits::pow(r.clone(), i) < ratio {
            r += 1;
        }
        if r > bound {
            bound = r;
        }
    }
    let bound = (bound * Integer::from(2)).to_u64().expect("root bound fits in u64");
    let trailing = &ints[0];
    for j in 1..=bound {
        let jj = Integer::from(j);
        if !(trailing % &jj).is_zero() {
            continue;
        }
        let mut acc = Integer::zero();
        for c in ints.iter().rev() {
            acc = acc * &jj + c;
        }
        if acc.sign() == Sign::NoSign {
            roots.push(j);
        }
    }
    roots
}

/// Find `x` with `deg x <= dmax` and `a*x(k+1) - b*x(k) = c`.
///
/// Free coordinates of an underdetermined system are set to zero. Returns
/// `Ok(None)` when no such polynomial exists (including `dmax < 0` with
/// `c != 0`).
pub fn solve_degree_bounded(
    a: &Polynomial,
    b: &Polynomial,
    c: &Polynomial,
    dmax: i64,
) -> Result<Option<Polynomial>, MathError> {
    a.check_compatible(b)?;
    a.check_compatible(c)?;
    let (var, field) = (a.var(), a.field());
    if dmax < 0 {
        return Ok(c.is_zero().then(|| Polynomial::zero(var, field)));
    }
    let d = dmax as usize;
    let k = Polynomial::variable(var, field);
    let k1 = &k + &Polynomial::one(var, field);
    let mut columns = Vec::with_capacity(d + 1);
    let (mut pk, mut pk1) = (Polynomial::one(var, field), Polynomial::one(var, field));
    for _ in 0..=d {
        columns.push(&(a * &pk1) - &(b * &pk));
        pk = &pk * &k;
        pk1 = &pk1 * &k1;
    }
    let rows = columns
        .iter()
        .filter_map(Polynomial::degree)
        .chain(c.degree())
        .max()
        .map_or(0, |m| m + 1);
    let matrix: Vec<Vec<FieldElem>> = (0..rows).map(|r| columns.iter().map(|col| col.coeff(r)).collect()).collect();
    let rhs: Vec<FieldElem> = (0..rows).map(|r| c.coeff(r)).collect();
    if rows == 0 {
        return Ok(Some(Polynomial::zero(var, field)));
    }
    Ok(solve_linear(&matrix, &rhs, field.nvars()).map(|x| Polynomial::from_coeffs(var, field, x)))
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
    fn gcd_examples() {
        // (k-1)(k+1), (k-1)^2
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[4, 2]), &p(&[])).unwrap(), p(&[2, 1]));
        assert_eq!(poly_gcd(&p(&[1, 0, 1]), &p(&[3, 1])).unwrap(), p(&[1]));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(poly_shift(&p(&[0, 0, 1]), &1.into()), p(&[1, 2, 1]));
        let x = p(&[3, -1, 4]);
        assert_eq!(poly_shift(&x, &0.into()), x);
        assert_eq!(poly_shift(&p(&[0, 1, 1]), &1.into()), p(&[2, 3, 1]));
    }

    #[test]
    fn dispersion_examples() {
        let set = |a: &[i64], b: &[i64]| dispersion_set(&p(a), &p(b)).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(set(&[0, 1], &[-3, 1]), vec![3]);
        assert_eq!(set(&[0, 1], &[1, 1]), Vec::<u64>::new());
        assert_eq!(set(&[0, 1], &[0, 1]), vec![0]);
        assert!(matches!(dispersion_set(&p(&[0, 1]), &p(&[])), Err(MathError::Usage(_))));
    }

    #[test]
    fn dispersion_with_parameter() {
        let f = CoefficientField::new(&["s"]).unwrap();
        let s = f.param("s").unwrap();
        let k = Polynomial::variable("k", &f);
        let lin = |c: FieldElem| &k + &Polynomial::constant("k", &f, c);
        // p = (k - s)(k + 2), q = (k - s - 5)(k - s + 1)
        let pp = &lin(s.neg()) * &lin(f.integer(2));
        let qq = &lin(s.neg().sub(&f.integer(5))) * &lin(s.neg().add(&f.integer(1)));
        let got: Vec<u64> = dispersion_set(&pp, &qq).unwrap().into_iter().collect();
        assert_eq!(got, vec![5]);
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(k - 2, k^2 + 1) = 5
        let r = resultant(&p(&[-2, 1]), &p(&[1, 0, 1])).unwrap();
        assert_eq!(r, q().integer(5));
    }

    #[test]
    fn degree_bounded_examples() {
        let one = p(&[1]);
        let x = solve_degree_bounded(&one, &one, &one, 1).unwrap().unwrap();
        assert_eq!(x, p(&[0, 1]));
        let x = solve_degree_bounded(&one, &one, &p(&[]), 0).unwrap().unwrap();
        assert!(x.is_zero());
        assert!(solve_degree_bounded(&p(&[1, 1]), &p(&[0, 1]), &p(&[0, 1]), 0).unwrap().is_none());
        assert!(solve_degree_bounded(&one, &one, &one, -1).unwrap().is_none());
    }
}
