//! Exact evaluation of the Catalan sums, the composition sums, and the
//! recurrence connecting them.
//!
//! Binomial coefficients follow the falling-factorial convention
//! `binomial(n, k) = n (n-1) ... (n-k+1) / k!` for every integer `n` and
//! `k >= 0`, and vanish for `k < 0`. With this convention the Catalan
//! sum identity holds on the boundary `l = m`, where the upper index of
//! its right side is `-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact_math::{Integer, MathError, Rational};

/// Rows of Pascal's triangle kept in memory.
const PASCAL_ROWS: usize = 1024;

fn pascal() -> &'static RwLock<Vec<Vec<Integer>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<Integer>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![Integer::one()]]))
}

fn pascal_entry(n: usize, k: usize) -> Integer {
    debug_assert!(k <= n && n < PASCAL_ROWS);
    {
        let rows = pascal().read().unwrap();
        if n < rows.len() {
            return rows[n][k].clone();
        }
    }
    let mut rows = pascal().write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(Integer::one());
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(Integer::one());
        rows.push(next);
    }
    rows[n][k].clone()
}

/// Generalized binomial coefficient (falling-factorial convention).
pub fn binomial_gen(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    if n < 0 {
        // binomial(-a, k) = (-1)^k binomial(a + k - 1, k)
        let b = binomial_gen(-n + k - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    if (n as usize) < PASCAL_ROWS {
        return pascal_entry(n as usize, k as usize);
    }
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

fn catalan_table() -> &'static RwLock<Vec<Integer>> {
    static TABLE: OnceLock<RwLock<Vec<Integer>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Integer::one()]))
}

/// `C_n = binomial(2n, n) / (n + 1)`.
pub fn catalan(n: i64) -> Result<Integer, MathError> {
    if n < 0 {
        return Err(MathError::Usage(format!("catalan({n}): index must be nonnegative")));
    }
    let n = n as usize;
    {
        let table = catalan_table().read().unwrap();
        if n < table.len() {
            return Ok(table[n].clone());
        }
    }
    let mut table = catalan_table().write().unwrap();
    while table.len() <= n {
        let i = table.len() - 1;
        // C_{i+1} = C_i * 2(2i+1) / (i+2)
        let next = &table[i] * Integer::from(2 * (2 * i + 1)) / Integer::from(i + 2);
        table.push(next);
    }
    Ok(table[n].clone())
}

fn sign(k: i64) -> Integer {
    if k % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// `sum_{i=0..s} (-1)^i C_i binomial(i+1, s-i)`; zero for every `s >= 1`.
pub fn lhs_identity1(s: i64) -> Result<Integer, MathError> {
    if s < 0 {
        return Err(MathError::Usage(format!("identity1: s = {s} must be nonnegative")));
    }
    let mut acc = Integer::zero();
    for i in 0..=s {
        let b = binomial_gen(i + 1, s - i);
        if b.is_zero() {
            continue;
        }
        acc += sign(i) * catalan(i)? * b;
    }
    Ok(acc)
}

/// An ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, MathError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(MathError::Usage(format!("invalid composition {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lazy lexicographic enumeration of the compositions of `m`.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        if current.len() > 1 {
            // drop the last part, bump the one before it, refill with ones
            let mut succ = current.clone();
            let last = succ.pop().unwrap();
            *succ.last_mut().unwrap() += 1;
            succ.extend(std::iter::repeat_n(1, (last - 1) as usize));
            self.next = Some(succ);
        }
        Some(Composition { parts: current })
    }
}

pub fn compositions(m: i64) -> Result<Compositions, MathError> {
    if m < 1 {
        return Err(MathError::Usage(format!("compositions of m = {m}: need m >= 1")));
    }
    Ok(Compositions { next: Some(vec![1; m as usize]) })
}

fn check_lm(l: i64, m: i64) -> Result<(), MathError> {
    if m < 1 || m > l {
        return Err(MathError::Usage(format!("need 1 <= m <= l, got l = {l}, m = {m}")));
    }
    Ok(())
}

/// Composition sum `A(l, m)`:
/// `sum (-1)^t binomial(l-m_1, m_1-1) prod_{j>=2} binomial(l-m_j, m_j)`.
pub fn lhs_identity2prime(l: i64, m: i64) -> Result<Integer, MathError> {
    check_lm(l, m)?;
    let first: Vec<Integer> = (0..=m).map(|j| binomial_gen(l - j, j - 1)).collect();
    let rest: Vec<Integer> = (0..=m).map(|j| binomial_gen(l - j, j)).collect();
    let mut acc = Integer::zero();
    for comp in compositions(m)? {
        let parts = comp.parts();
        let mut term = first[parts[0] as usize].clone();
        for &p in &parts[1..] {
            if term.is_zero() {
                break;
            }
            term *= &rest[p as usize];
        }
        if parts.len() % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// `(-1)^m C_{m-1}`, the closed form of the composition sum.
pub fn rhs_identity2prime(m: i64) -> Result<Integer, MathError> {
    Ok(sign(m) * catalan(m - 1)?)
}

/// One step of the recurrence
/// `A(l,m) = -binomial(l-m, m-1) - sum_{k=1..m-1} binomial(l-k, k) A(l, m-k)`,
/// with `prior` holding `A(l, j)` for `j = 1..m-1`.
pub fn a_recurrence_eval(l: i64, m: i64, prior: &BTreeMap<i64, Integer>) -> Result<Integer, MathError> {
    let mut acc = -binomial_gen(l - m, m - 1);
    for k in 1..m {
        let a = prior
            .get(&(m - k))
            .ok_or_else(|| MathError::Usage(format!("recurrence needs A({l}, {}) first", m - k)))?;
        acc -= binomial_gen(l - k, k) * a;
    }
    Ok(acc)
}

/// `A(l, 1..=mmax)` filled by the recurrence.
pub fn a_table_by_recurrence(l: i64, mmax: i64) -> Result<BTreeMap<i64, Integer>, MathError> {
    let mut table = BTreeMap::new();
    for m in 1..=mmax {
        let v = a_recurrence_eval(l, m, &table)?;
        table.insert(m, v);
    }
    Ok(table)
}

/// `sum_{k=0..m} (-1)^k binomial(l-m+k, m-k) C_k`.
pub fn lhs_identity3(l: i64, m: i64) -> Result<Integer, MathError> {
    if m < 0 || m > l {
        return Err(MathError::Usage(format!("identity3 needs 0 <= m <= l, got l = {l}, m = {m}")));
    }
    let mut acc = Integer::zero();
    for k in 0..=m {
        let b = binomial_gen(l - m + k, m - k);
        if !b.is_zero() {
            acc += sign(k) * b * catalan(k)?;
        }
    }
    Ok(acc)
}

/// `binomial(l-m-1, m)`.
pub fn rhs_identity3(l: i64, m: i64) -> Integer {
    binomial_gen(l - m - 1, m)
}

/// `lhs_identity3 / rhs_identity3` as an exact rational.
pub fn f_value(l: i64, m: i64) -> Result<Rational, MathError> {
    let rhs = rhs_identity3(l, m);
    if rhs.is_zero() {
        return Err(MathError::Domain(format!(
            "f({m}) with l = {l}: binomial({}, {m}) vanishes",
            l - m - 1
        )));
    }
    Ok(Rational::new(lhs_identity3(l, m)?, rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    Identity1,
    Identity2Prime,
    RecurrenceA,
    Identity3,
    FInduction,
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdentityId::Identity1 => "identity1",
            IdentityId::Identity2Prime => "identity2prime",
            IdentityId::RecurrenceA => "recurrenceA",
            IdentityId::Identity3 => "identity3",
            IdentityId::FInduction => "f-induction",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Unequal,
}

pub(crate) fn as_string<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Outcome of evaluating both sides of an identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Vec<(String, i64)>,
    #[serde(serialize_with = "as_string")]
    pub lhs: Integer,
    #[serde(serialize_with = "as_string")]
    pub rhs: Integer,
    pub verdict: Verdict,
}

impl IdentityReport {
    pub fn new(id: IdentityId, params: &[(&str, i64)], lhs: Integer, rhs: Integer) -> Self {
        let verdict = if lhs == rhs { Verdict::Equal } else { Verdict::Unequal };
        IdentityReport {
            id,
            params: params.iter().map(|(n, v)| (n.to_string(), *v)).collect(),
            lhs,
            rhs,
            verdict,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    /// The first identity fails at `s = 0` (the sum is 1); this is the
    /// only known exception and is reported separately.
    pub fn is_documented_exception(&self) -> bool {
        self.id == IdentityId::Identity1 && self.params == [("s".to_string(), 0)]
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(n, v)| format!("{n}={v}")).collect();
        let rel = if self.holds() { "==" } else { "!=" };
        write!(f, "{} [{}] {} {} {}", self.id, params.join(" "), self.lhs, rel, self.rhs)
    }
}

pub fn check_identity1(s: i64) -> Result<IdentityReport, MathError> {
    Ok(IdentityReport::new(IdentityId::Identity1, &[("s", s)], lhs_identity1(s)?, Integer::zero()))
}

pub fn check_identity2prime(l: i64, m: i64) -> Result<IdentityReport, MathError> {
    Ok(IdentityReport::new(
        IdentityId::Identity2Prime,
        &[("l", l), ("m", m)],
        lhs_identity2prime(l, m)?,
        rhs_identity2prime(m)?,
    ))
}

pub fn check_identity3(l: i64, m: i64) -> Result<IdentityReport, MathError> {
    Ok(IdentityReport::new(
        IdentityId::Identity3,
        &[("l", l), ("m", m)],
        lhs_identity3(l, m)?,
        rhs_identity3(l, m),
    ))
}

/// Compare the recurrence-filled row `A(l, 1..=l)` with brute force.
pub fn check_recurrence_row(l: i64) -> Result<Vec<IdentityReport>, MathError> {
    let table = a_table_by_recurrence(l, l)?;
    table
        .iter()
        .map(|(&m, a)| {
            Ok(IdentityReport::new(
                IdentityId::RecurrenceA,
                &[("l", l), ("m", m)],
                a.clone(),
                lhs_identity2prime(l, m)?,
            ))
        })
        .collect()
}

/// Whether `binomial(n, k)` with the falling-factorial convention is
/// nonzero; used to decide where `f` is defined.
pub fn f_defined(l: i64, m: i64) -> bool {
    !rhs_identity3(l, m).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0).unwrap(), i(1));
        assert_eq!(catalan(3).unwrap(), i(5));
        assert_eq!(catalan(5).unwrap(), i(42));
        assert!(matches!(catalan(-1), Err(MathError::Usage(_))));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_gen(5, 2), i(10));
        assert_eq!(binomial_gen(-1, 2), i(1));
        assert_eq!(binomial_gen(1, 2), i(0));
        assert_eq!(binomial_gen(7, -1), i(0));
        assert_eq!(binomial_gen(-1, 3), i(-1));
        assert_eq!(binomial_gen(2000, 3), i(2000 * 1999 * 1998 / 6));
    }

    #[test]
    fn identity1_examples() {
        assert_eq!(lhs_identity1(1).unwrap(), i(0));
        assert_eq!(lhs_identity1(2).unwrap(), i(0));
        assert_eq!(lhs_identity1(0).unwrap(), i(1));
        assert!(check_identity1(0).unwrap().is_documented_exception());
    }

    #[test]
    fn composition_examples() {
        let c: Vec<String> = compositions(1).unwrap().map(|c| c.to_string()).collect();
        assert_eq!(c, ["(1)"]);
        let c: Vec<String> = compositions(3).unwrap().map(|c| c.to_string()).collect();
        assert_eq!(c, ["(1,1,1)", "(1,2)", "(2,1)", "(3)"]);
        assert_eq!(compositions(5).unwrap().count(), 16);
        assert!(compositions(0).is_err());
    }

    #[test]
    fn identity2prime_examples() {
        assert_eq!(lhs_identity2prime(3, 3).unwrap(), i(-2));
        assert_eq!(lhs_identity2prime(1, 1).unwrap(), i(-1));
        assert_eq!(lhs_identity2prime(5, 2).unwrap(), i(1));
        assert!(lhs_identity2prime(2, 3).is_err());
        assert!(lhs_identity2prime(2, 0).is_err());
    }

    #[test]
    fn recurrence_examples() {
        let mut prior = BTreeMap::new();
        assert_eq!(a_recurrence_eval(3, 1, &prior).unwrap(), i(-1));
        prior.insert(1, i(-1));
        assert_eq!(a_recurrence_eval(3, 2, &prior).unwrap(), i(1));
        prior.insert(2, i(1));
        assert_eq!(a_recurrence_eval(3, 3, &prior).unwrap(), i(-2));
        let missing = BTreeMap::new();
        assert!(matches!(a_recurrence_eval(3, 3, &missing), Err(MathError::Usage(_))));
    }

    #[test]
    fn identity3_examples() {
        assert_eq!(lhs_identity3(3, 1).unwrap(), i(1));
        assert_eq!(lhs_identity3(2, 2).unwrap(), i(1));
        assert_eq!(lhs_identity3(7, 0).unwrap(), i(1));
        assert_eq!(rhs_identity3(3, 1), i(1));
        assert_eq!(rhs_identity3(4, 4), i(1));
        assert_eq!(rhs_identity3(5, 5), i(-1));
        assert_eq!(rhs_identity3(7, 2), i(6));
    }

    #[test]
    fn f_value_examples() {
        assert_eq!(f_value(3, 1).unwrap(), Rational::one());
        assert_eq!(f_value(9, 3).unwrap(), Rational::one());
        assert_eq!(lhs_identity3(9, 3).unwrap(), i(10));
        assert!(matches!(f_value(4, 3), Err(MathError::Domain(_))));
    }

    #[test]
    fn catalan_recurrence() {
        for n in 0..=30 {
            let conv: Integer = (0..=n).map(|i| catalan(i).unwrap() * catalan(n - i).unwrap()).sum();
            assert_eq!(catalan(n + 1).unwrap(), conv);
        }
    }

    #[test]
    fn pascal_rule() {
        for n in -20..=20 {
            for k in 0..=20 {
                assert_eq!(binomial_gen(n, k), binomial_gen(n - 1, k - 1) + binomial_gen(n - 1, k), "n={n} k={k}");
            }
        }
    }
}
