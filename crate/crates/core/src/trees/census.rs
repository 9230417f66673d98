use rayon::prelude::*;
use serde::Serialize;

use super::involution::{involution1, involution3, Outcome};
use super::{check_pair_params, enumerate_creatures1, enumerate_creatures3, TreeError};
use crate::exact_math::Integer;
use crate::identities::rhs_identity3;

/// Census of the creatures of weight `s + 1` under the involution.
#[derive(Clone, Debug, Serialize)]
pub struct Census1 {
    pub s: i64,
    pub total: u64,
    pub even_leaves: u64,
    pub odd_leaves: u64,
    pub fixed_points: Vec<String>,
    /// Creatures whose image fails to map back, keeps weight, or flips parity.
    pub violations: Vec<String>,
}

impl Census1 {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    total: u64,
    even: u64,
    odd: u64,
    fixed: Vec<String>,
    violations: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.even += other.even;
        self.odd += other.odd;
        self.fixed.extend(other.fixed);
        self.violations.extend(other.violations);
        self
    }
}

pub fn census1(s: i64) -> Result<Census1, TreeError> {
    let creatures = enumerate_creatures1(s)?;
    let tally = creatures
        .par_iter()
        .map(|c| {
            let mut t = Tally { total: 1, ..Default::default() };
            if c.leaf_count() % 2 == 0 {
                t.even = 1;
            } else {
                t.odd = 1;
            }
            match involution1(c) {
                Outcome::Fixed => t.fixed.push(c.to_string()),
                Outcome::Image(image, _) => {
                    let back = involution1(&image).image();
                    let ok = back.as_ref() == Some(c)
                        && image.weight() == c.weight()
                        && image.leaf_count().abs_diff(c.leaf_count()) == 1;
                    if !ok {
                        t.violations.push(c.to_string());
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(Census1 {
        s,
        total: tally.total,
        even_leaves: tally.even,
        odd_leaves: tally.odd,
        fixed_points: tally.fixed,
        violations: tally.violations,
    })
}

/// Census of the tree-word pairs for `(l, m)` under the involution.
#[derive(Clone, Debug, Serialize)]
pub struct Census3 {
    pub l: i64,
    pub m: i64,
    pub total: u64,
    pub even_leaves: u64,
    pub odd_leaves: u64,
    pub survivors: Vec<String>,
    /// Fixed points that are not of survivor form, and pairs on which the
    /// map fails to be a parity-flipping involution.
    pub violations: Vec<String>,
    /// `odd_leaves - even_leaves`.
    #[serde(serialize_with = "crate::identities::as_string")]
    pub signed_count: Integer,
    #[serde(serialize_with = "crate::identities::as_string")]
    pub expected: Integer,
}

impl Census3 {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
            && self.signed_count == self.expected
            && Integer::from(self.survivors.len()) == self.expected
    }
}

pub fn census3(l: i64, m: i64) -> Result<Census3, TreeError> {
    let pairs = enumerate_creatures3(l, m)?;
    let tally = pairs
        .par_iter()
        .map(|p| {
            let mut t = Tally { total: 1, ..Default::default() };
            if p.leaf_count() % 2 == 0 {
                t.even = 1;
            } else {
                t.odd = 1;
            }
            match involution3(p) {
                Outcome::Fixed => {
                    if p.is_survivor_form() {
                        t.fixed.push(p.to_string());
                    } else {
                        t.violations.push(p.to_string());
                    }
                }
                Outcome::Image(image, _) => {
                    let back = involution3(&image).image();
                    let ok = back.as_ref() == Some(p)
                        && !p.is_survivor_form()
                        && image.leaf_count().abs_diff(p.leaf_count()) == 1;
                    if !ok {
                        t.violations.push(p.to_string());
                    }
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    Ok(Census3 {
        l,
        m,
        total: tally.total,
        even_leaves: tally.even,
        odd_leaves: tally.odd,
        survivors: tally.fixed,
        violations: tally.violations,
        signed_count: Integer::from(tally.odd) - Integer::from(tally.even),
        expected: rhs_identity3(l, m),
    })
}

/// Number of `{1,2}` words of length `l - m - 1` with letter sum `l - 1`,
/// counted by a length/sum table.
pub fn survivor_count(l: i64, m: i64) -> Result<Integer, TreeError> {
    check_pair_params(l, m)?;
    let len = (l - m - 1) as usize;
    let target = (l - 1) as usize;
    if target > 2 * len {
        return Ok(Integer::from(0));
    }
    // ways[t] = words of the current length with sum t
    let mut ways = vec![Integer::from(0); target + 1];
    ways[0] = Integer::from(1);
    for _ in 0..len {
        let mut next = vec![Integer::from(0); target + 1];
        for t in 0..=target {
            if t >= 1 {
                next[t] += &ways[t - 1];
            }
            if t >= 2 {
                next[t] += &ways[t - 2];
            }
        }
        ways = next;
    }
    Ok(ways.swap_remove(target))
}
