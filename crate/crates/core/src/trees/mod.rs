//! Complete binary trees with leaves labeled 1 or 2, and the sign-reversing
//! involution that pairs creatures with an even number of leaves against
//! those with an odd number.
//!
//! Text forms: a labeled tree is written with nested parentheses and the
//! labels at the leaves, e.g. `((1,1),2)`; a bare shape uses `·` for each
//! leaf, e.g. `(·,(·,·))`. A tree-and-word pair is written as the tree
//! labeled by the word's prefix, a `|`, and the remaining letters, e.g.
//! `(1,2)|11`.

mod census;
mod involution;

pub use census::{census1, census3, survivor_count, Census1, Census3};
pub use involution::{involution1, involution3, trace1, trace3, Move, Outcome};

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exact_math::{Integer, MathError};
use crate::identities::{binomial_gen, catalan};

/// Enumerations larger than this are refused.
pub const MAX_ENUMERATION: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("size error: {what} would produce {count} objects (limit {MAX_ENUMERATION})")]
    Size { what: String, count: Integer },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl From<MathError> for TreeError {
    fn from(e: MathError) -> Self {
        TreeError::Usage(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn cherry() -> Self {
        Self::node(BinaryTree::Leaf, BinaryTree::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Shape-only text form.
    pub fn shape_string(&self) -> String {
        let mut out = String::new();
        self.write_labeled(&mut out, &mut std::iter::repeat("·"));
        out
    }

    fn write_labeled<'a>(&self, out: &mut String, labels: &mut impl Iterator<Item = &'a str>) {
        match self {
            BinaryTree::Leaf => out.push_str(labels.next().expect("one label per leaf")),
            BinaryTree::Node(l, r) => {
                out.push('(');
                l.write_labeled(out, labels);
                out.push(',');
                r.write_labeled(out, labels);
                out.push(')');
            }
        }
    }

    /// Parse a shape such as `(·,(·,·))`; `.` is accepted for `·`.
    pub fn parse_shape(src: &str) -> Result<Self, TreeError> {
        let mut p = TreeParser::new(src);
        let (tree, labels) = p.tree()?;
        p.finish()?;
        if labels.iter().any(Option::is_some) {
            return Err(TreeError::Parse { pos: 0, msg: "shape contains labels".into() });
        }
        Ok(tree)
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shape_string())
    }
}

fn check_size(what: impl Into<String>, count: Integer) -> Result<(), TreeError> {
    if count > Integer::from(MAX_ENUMERATION) {
        return Err(TreeError::Size { what: what.into(), count });
    }
    Ok(())
}

/// All complete binary trees with `n_leaves` leaves, ordered by the leaf
/// count of the left subtree and then recursively by the subtrees.
pub fn enumerate_trees(n_leaves: i64) -> Result<Vec<BinaryTree>, TreeError> {
    if n_leaves < 1 {
        return Err(TreeError::Usage(format!("trees need at least one leaf, got {n_leaves}")));
    }
    check_size(format!("trees with {n_leaves} leaves"), catalan(n_leaves - 1)?)?;
    Ok(trees_up_to(n_leaves as usize).pop().unwrap())
}

/// `table[n-1]` holds the trees with `n` leaves.
fn trees_up_to(n: usize) -> Vec<Vec<BinaryTree>> {
    let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
    for size in 2..=n {
        let mut level = Vec::new();
        for left in 1..size {
            for l in &table[left - 1] {
                for r in &table[size - left - 1] {
                    level.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(level);
    }
    table
}

/// All `{1,2}` words of the given length with exactly `twos` letters equal
/// to 2, in lexicographic order.
pub fn words_with_twos(len: usize, twos: usize) -> Vec<Vec<u8>> {
    fn go(len: usize, twos: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == len {
            if twos == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let remaining = len - prefix.len();
        if twos < remaining {
            prefix.push(1);
            go(len, twos, prefix, out);
            prefix.pop();
        }
        if twos > 0 {
            prefix.push(2);
            go(len, twos - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if twos <= len {
        go(len, twos, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// A complete binary tree with one label in {1,2} per leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    shape: Arc<BinaryTree>,
    labels: Vec<u8>,
}

impl LabeledTree {
    pub fn new(shape: impl Into<Arc<BinaryTree>>, labels: Vec<u8>) -> Result<Self, TreeError> {
        let shape = shape.into();
        if labels.len() != shape.leaf_count() {
            return Err(TreeError::Usage(format!(
                "{} labels for a tree with {} leaves",
                labels.len(),
                shape.leaf_count()
            )));
        }
        if let Some(bad) = labels.iter().find(|&&x| x != 1 && x != 2) {
            return Err(TreeError::Usage(format!("leaf label {bad} is not 1 or 2")));
        }
        Ok(LabeledTree { shape, labels })
    }

    pub fn shape(&self) -> &BinaryTree {
        &self.shape
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn leaf_count(&self) -> usize {
        self.labels.len()
    }

    pub fn weight(&self) -> u64 {
        self.labels.iter().map(|&x| x as u64).sum()
    }

    pub fn parse(src: &str) -> Result<Self, TreeError> {
        let mut p = TreeParser::new(src);
        let (shape, labels) = p.tree()?;
        p.finish()?;
        let labels = labels
            .into_iter()
            .map(|l| l.ok_or(TreeError::Parse { pos: 0, msg: "unlabeled leaf".into() }))
            .collect::<Result<Vec<u8>, _>>()?;
        LabeledTree::new(shape, labels)
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.labels.iter().map(u8::to_string).collect();
        let mut out = String::new();
        self.shape.write_labeled(&mut out, &mut names.iter().map(String::as_str));
        f.write_str(&out)
    }
}

/// `sum_i C_i binomial(i+1, s-i)`: the number of creatures of weight `s+1`.
pub fn creature1_count(s: i64) -> Result<Integer, TreeError> {
    let mut total = Integer::from(0);
    for i in 0..=s {
        total += catalan(i)? * binomial_gen(i + 1, s - i);
    }
    Ok(total)
}

/// Every labeled tree of weight `s + 1`, grouped by leaf count, then shape,
/// then word.
pub fn enumerate_creatures1(s: i64) -> Result<Vec<LabeledTree>, TreeError> {
    if s < 0 {
        return Err(TreeError::Usage(format!("s = {s} must be nonnegative")));
    }
    check_size(format!("creatures of weight {}", s + 1), creature1_count(s)?)?;
    let weight = (s + 1) as usize;
    let shapes = trees_up_to(weight);
    let mut out = Vec::new();
    for n in 1..=weight {
        if weight > 2 * n {
            continue;
        }
        let words = words_with_twos(n, weight - n);
        for shape in &shapes[n - 1] {
            let shape = Arc::new(shape.clone());
            for w in &words {
                out.push(LabeledTree { shape: shape.clone(), labels: w.clone() });
            }
        }
    }
    Ok(out)
}

/// A tree with `n` leaves together with a `{1,2}` word of length
/// `n + (l - m - 1)` and letter sum `l`; the leaves carry the first `n`
/// letters of the word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CreaturePair {
    shape: Arc<BinaryTree>,
    word: Vec<u8>,
    l: i64,
    m: i64,
}

impl CreaturePair {
    pub fn new(shape: impl Into<Arc<BinaryTree>>, word: Vec<u8>, l: i64, m: i64) -> Result<Self, TreeError> {
        check_pair_params(l, m)?;
        let shape = shape.into();
        let n = shape.leaf_count() as i64;
        if word.len() as i64 != n + l - m - 1 {
            return Err(TreeError::Usage(format!(
                "word length {} but the tree has {n} leaves and l - m - 1 = {}",
                word.len(),
                l - m - 1
            )));
        }
        if word.iter().any(|&x| x != 1 && x != 2) {
            return Err(TreeError::Usage("word letters must be 1 or 2".into()));
        }
        let sum: i64 = word.iter().map(|&x| x as i64).sum();
        if sum != l {
            return Err(TreeError::Usage(format!("word sum {sum} differs from l = {l}")));
        }
        Ok(CreaturePair { shape, word, l, m })
    }

    pub fn shape(&self) -> &BinaryTree {
        &self.shape
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn params(&self) -> (i64, i64) {
        (self.l, self.m)
    }

    pub fn leaf_count(&self) -> usize {
        self.word.len() - (self.l - self.m - 1) as usize
    }

    /// The tree with leaves labeled by the word's prefix.
    pub fn labeled_tree(&self) -> LabeledTree {
        let n = self.leaf_count();
        LabeledTree { shape: self.shape.clone(), labels: self.word[..n].to_vec() }
    }

    pub fn is_survivor_form(&self) -> bool {
        self.shape.is_leaf() && self.word.first() == Some(&1)
    }

    pub fn parse(src: &str, l: i64, m: i64) -> Result<Self, TreeError> {
        let (tree, tail) = src.split_once('|').unwrap_or((src, ""));
        let labeled = LabeledTree::parse(tree.trim())?;
        let mut word = labeled.labels.clone();
        for (i, ch) in tail.trim().chars().enumerate() {
            match ch {
                '1' => word.push(1),
                '2' => word.push(2),
                ',' | ' ' => {}
                _ => {
                    return Err(TreeError::Parse { pos: tree.len() + 1 + i, msg: format!("bad letter `{ch}`") });
                }
            }
        }
        CreaturePair::new(labeled.shape, word, l, m)
    }
}

impl fmt::Display for CreaturePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.leaf_count();
        let tail: String = self.word[n..].iter().map(u8::to_string).collect();
        write!(f, "{}|{}", self.labeled_tree(), tail)
    }
}

fn check_pair_params(l: i64, m: i64) -> Result<(), TreeError> {
    if m < 0 || l < m + 1 {
        return Err(TreeError::Usage(format!(
            "tree-word pairs need m >= 0 and l >= m + 1, got l = {l}, m = {m}"
        )));
    }
    Ok(())
}

/// `sum_k C_k binomial(l-m+k, m-k)`: the number of tree-word pairs.
pub fn creature3_count(l: i64, m: i64) -> Result<Integer, TreeError> {
    check_pair_params(l, m)?;
    let mut total = Integer::from(0);
    for k in 0..=m {
        total += catalan(k)? * binomial_gen(l - m + k, m - k);
    }
    Ok(total)
}

pub fn enumerate_creatures3(l: i64, m: i64) -> Result<Vec<CreaturePair>, TreeError> {
    check_size(format!("tree-word pairs for l = {l}, m = {m}"), creature3_count(l, m)?)?;
    let max_leaves = (m + 1) as usize;
    let shapes = trees_up_to(max_leaves);
    let extra = (l - m - 1) as usize;
    let mut out = Vec::new();
    for n in 1..=max_leaves {
        let len = n + extra;
        let twos = l as usize - len;
        if twos > len {
            continue;
        }
        let words = words_with_twos(len, twos);
        for shape in &shapes[n - 1] {
            let shape = Arc::new(shape.clone());
            for w in &words {
                out.push(CreaturePair { shape: shape.clone(), word: w.clone(), l, m });
            }
        }
    }
    Ok(out)
}

struct TreeParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> TreeParser<'a> {
    fn new(src: &'a str) -> Self {
        TreeParser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, TreeError> {
        Err(TreeError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, ch: char) -> Result<(), TreeError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(ch) {
            self.pos += ch.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected `{ch}`"))
        }
    }

    fn tree(&mut self) -> Result<(BinaryTree, Vec<Option<u8>>), TreeError> {
        self.skip_ws();
        let Some(ch) = self.src[self.pos..].chars().next() else {
            return self.err("unexpected end of input");
        };
        match ch {
            '(' => {
                self.pos += 1;
                let (l, mut labels) = self.tree()?;
                self.expect(',')?;
                let (r, rl) = self.tree()?;
                self.expect(')')?;
                labels.extend(rl);
                Ok((BinaryTree::node(l, r), labels))
            }
            '1' | '2' => {
                self.pos += 1;
                Ok((BinaryTree::Leaf, vec![Some(ch as u8 - b'0')]))
            }
            '·' | '.' => {
                self.pos += ch.len_utf8();
                Ok((BinaryTree::Leaf, vec![None]))
            }
            _ => self.err(format!("unexpected `{ch}`")),
        }
    }

    fn finish(&mut self) -> Result<(), TreeError> {
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_enumeration_examples() {
        assert_eq!(enumerate_trees(1).unwrap(), vec![BinaryTree::Leaf]);
        let three: Vec<String> = enumerate_trees(3).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(three, ["(·,(·,·))", "((·,·),·)"]);
        assert_eq!(enumerate_trees(5).unwrap().len(), 14);
        assert!(matches!(enumerate_trees(0), Err(TreeError::Usage(_))));
        assert!(matches!(enumerate_trees(20), Err(TreeError::Size { .. })));
    }

    #[test]
    fn creature1_examples() {
        let c0: Vec<String> = enumerate_creatures1(0).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c0, ["1"]);
        let c2: Vec<String> = enumerate_creatures1(2).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c2, ["(1,2)", "(2,1)", "(1,(1,1))", "((1,1),1)"]);
        assert_eq!(enumerate_creatures1(3).unwrap().len(), 12);
    }

    #[test]
    fn creature3_examples() {
        let p: Vec<String> = enumerate_creatures3(2, 0).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(p, ["1|1"]);
        let p: Vec<String> = enumerate_creatures3(3, 1).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(p, ["1|2", "2|1", "(1,1)|1"]);
        assert!(matches!(enumerate_creatures3(3, 3), Err(TreeError::Usage(_))));
    }

    #[test]
    fn parse_round_trip() {
        for src in ["((1,1),2)", "1", "(2,(1,(2,1)))"] {
            assert_eq!(LabeledTree::parse(src).unwrap().to_string(), src);
        }
        assert_eq!(BinaryTree::parse_shape("(.,(.,.))").unwrap().to_string(), "(·,(·,·))");
        assert!(LabeledTree::parse("(1,3)").is_err());
        assert!(LabeledTree::parse("(1,2").is_err());
        let pair = CreaturePair::parse("(1,2)|11", 5, 2).unwrap();
        assert_eq!(pair.to_string(), "(1,2)|11");
        assert!(CreaturePair::parse("(1,2)|1", 5, 2).is_err());
    }
}
