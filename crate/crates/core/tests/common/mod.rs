//! Independent oracles and the fixture corpus shared by the integration
//! tests. Nothing here calls the library's own combinatorial functions.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `n (n-1) ... (n-k+1) / k!` for any integer `n`; zero for `k < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= big(n - i);
        den *= big(i + 1);
    }
    num / den
}

/// Catalan numbers by the convolution `C_{n+1} = sum C_i C_{n-i}`.
pub fn catalans(upto: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for n in 0..upto {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

pub fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn fact(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * big(i))
}

/// A summand known to have a hypergeometric antidifference.
pub struct Summable {
    pub expr: &'static str,
    pub var: &'static str,
    pub params: &'static [&'static str],
}

pub const SUMMABLE: &[Summable] = &[
    Summable { expr: "k*factorial(k)", var: "k", params: &[] },
    Summable { expr: "2^k", var: "k", params: &[] },
    Summable { expr: "k*2^k", var: "k", params: &[] },
    Summable { expr: "k", var: "k", params: &[] },
    Summable { expr: "k^3", var: "k", params: &[] },
    Summable { expr: "1/(k*(k + 1))", var: "k", params: &[] },
    Summable { expr: "(-1)^k*binomial(n, k)", var: "k", params: &["n"] },
    Summable { expr: "(n - 2*k)*binomial(n, k)", var: "k", params: &["n"] },
    Summable { expr: "(4*k + 1)*factorial(k)/factorial(2*k + 1)", var: "k", params: &[] },
    Summable { expr: "(-1)**i*binomial(2*i,i)/(i+1)*binomial(i+1,s-i)", var: "i", params: &["s"] },
    Summable { expr: "binomial(k, 3)", var: "k", params: &[] },
    Summable { expr: "(1/3)^k*(2*k + 1)", var: "k", params: &[] },
    Summable { expr: "binomial(a + k, k)", var: "k", params: &["a"] },
];

/// Summands without a hypergeometric antidifference.
pub const NOT_SUMMABLE: &[(&str, &str, &[&str])] = &[
    ("1/k", "k", &[]),
    ("factorial(k)", "k", &[]),
    ("binomial(n, k)", "k", &["n"]),
    ("binomial(2*k, k)", "k", &[]),
    ("1/(k^2 + 1)", "k", &[]),
];

/// A definite sum over `k = 0..=n` with an independently known value.
pub struct ZeilbergerFixture {
    pub expr: &'static str,
    pub recvar: &'static str,
    pub params: &'static [&'static str],
    /// Value of the sum at integer parameters followed by `n`.
    pub sum: fn(&[i64]) -> Option<BigRational>,
    /// Parameter values to test at.
    pub param_values: &'static [i64],
}

fn row_sum(v: &[i64]) -> Option<BigRational> {
    Some(BigRational::from_integer(BigInt::from(2).pow(v[0] as u32)))
}

fn central(v: &[i64]) -> Option<BigRational> {
    Some(BigRational::from_integer(binom(2 * v[0], v[0])))
}

fn weighted_row(v: &[i64]) -> Option<BigRational> {
    let n = v[0];
    if n == 0 {
        return Some(q(0));
    }
    Some(BigRational::from_integer(big(n) * BigInt::from(2).pow((n - 1) as u32)))
}

fn vandermonde(v: &[i64]) -> Option<BigRational> {
    let (a, n) = (v[0], v[1]);
    Some(BigRational::from_integer(binom(a + n, n)))
}

/// The normalized sum in `k` with parameters `l`, `m`: identically 1 where
/// the normalizing binomial is nonzero.
fn normalized_catalan(v: &[i64]) -> Option<BigRational> {
    let (l, m) = (v[0], v[1]);
    let d = binom(l - m - 1, m);
    if d.is_zero() {
        return None;
    }
    let c = catalans(m.max(0) as usize + 1);
    let s: BigInt = (0..=m).map(|k| sign(k) * &c[k as usize] * binom(l - m + k, m - k)).sum();
    Some(BigRational::new(s, d))
}

pub const ZEILBERGER: &[ZeilbergerFixture] = &[
    ZeilbergerFixture { expr: "binomial(n, k)", recvar: "n", params: &[], sum: row_sum, param_values: &[] },
    ZeilbergerFixture { expr: "binomial(n, k)^2", recvar: "n", params: &[], sum: central, param_values: &[] },
    ZeilbergerFixture { expr: "k*binomial(n, k)", recvar: "n", params: &[], sum: weighted_row, param_values: &[] },
    ZeilbergerFixture {
        expr: "binomial(a, k)*binomial(n, n - k)",
        recvar: "n",
        params: &["a"],
        sum: vandermonde,
        param_values: &[7],
    },
    ZeilbergerFixture {
        expr: "(-1)**k*binomial(2*k,k)/(k+1)*binomial(l-m+k,m-k)/binomial(l-m-1,m)",
        recvar: "m",
        params: &["l"],
        sum: normalized_catalan,
        param_values: &[40],
    },
];

pub fn strings(s: &[&str]) -> Vec<String> {
    s.iter().map(|x| x.to_string()).collect()
}
