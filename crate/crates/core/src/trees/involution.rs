use std::sync::Arc;

use serde::Serialize;

use super::{BinaryTree, CreaturePair, LabeledTree};

/// The rewrite performed by one application of the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", content = "leaf", rename_all = "lowercase")]
pub enum Move {
    /// The leaf at this index, labeled 2, became a cherry labeled (1,1).
    Expand(usize),
    /// The leaves at this index and the next, both labeled 1, merged into a
    /// leaf labeled 2.
    Contract(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Image(T, Move),
    /// No leaf triggers either rule.
    Fixed,
}

impl<T> Outcome<T> {
    pub fn image(self) -> Option<T> {
        match self {
            Outcome::Image(t, _) => Some(t),
            Outcome::Fixed => None,
        }
    }
}

/// For each leaf in left-to-right order, the index of its sibling when the
/// sibling is itself a leaf.
fn leaf_siblings(tree: &BinaryTree) -> Vec<Option<usize>> {
    fn go(t: &BinaryTree, out: &mut Vec<Option<usize>>) {
        if let BinaryTree::Node(l, r) = t {
            if l.is_leaf() && r.is_leaf() {
                let i = out.len();
                out.push(Some(i + 1));
                out.push(Some(i));
            } else {
                go(l, out);
                go(r, out);
            }
        } else {
            out.push(None);
        }
    }
    let mut out = Vec::new();
    go(tree, &mut out);
    out
}

fn scan(shape: &BinaryTree, labels: &[u8]) -> Option<Move> {
    let siblings = leaf_siblings(shape);
    for (i, &label) in labels.iter().enumerate() {
        if label == 2 {
            return Some(Move::Expand(i));
        }
        if let Some(j) = siblings[i] {
            if labels[j] == 1 {
                return Some(Move::Contract(i.min(j)));
            }
        }
    }
    None
}

fn rewrite(shape: &BinaryTree, mv: Move) -> BinaryTree {
    fn go(t: &BinaryTree, next: &mut usize, mv: Move) -> BinaryTree {
        match t {
            BinaryTree::Leaf => {
                let i = *next;
                *next += 1;
                if mv == Move::Expand(i) {
                    BinaryTree::cherry()
                } else {
                    BinaryTree::Leaf
                }
            }
            BinaryTree::Node(l, r) => {
                if l.is_leaf() && r.is_leaf() && mv == Move::Contract(*next) {
                    *next += 2;
                    return BinaryTree::Leaf;
                }
                let l = go(l, next, mv);
                let r = go(r, next, mv);
                BinaryTree::node(l, r)
            }
        }
    }
    go(shape, &mut 0, mv)
}

fn rewrite_word(word: &[u8], mv: Move) -> Vec<u8> {
    let mut out = Vec::with_capacity(word.len() + 1);
    match mv {
        Move::Expand(i) => {
            out.extend_from_slice(&word[..i]);
            out.extend_from_slice(&[1, 1]);
            out.extend_from_slice(&word[i + 1..]);
        }
        Move::Contract(i) => {
            out.extend_from_slice(&word[..i]);
            out.push(2);
            out.extend_from_slice(&word[i + 2..]);
        }
    }
    out
}

/// Scan the leaves left to right; the first leaf labeled 2 splits into a
/// cherry labeled (1,1), and the first leaf labeled 1 whose sibling is a
/// leaf labeled 1 merges with it into a leaf labeled 2.
pub fn involution1(t: &LabeledTree) -> Outcome<LabeledTree> {
    match scan(&t.shape, &t.labels) {
        None => Outcome::Fixed,
        Some(mv) => {
            let image = LabeledTree { shape: Arc::new(rewrite(&t.shape, mv)), labels: rewrite_word(&t.labels, mv) };
            Outcome::Image(image, mv)
        }
    }
}

/// The same rule applied to the tree labeled by the word's prefix; the
/// rewrite of the prefix carries over to the word.
pub fn involution3(p: &CreaturePair) -> Outcome<CreaturePair> {
    let n = p.leaf_count();
    match scan(&p.shape, &p.word[..n]) {
        None => Outcome::Fixed,
        Some(mv) => {
            let image = CreaturePair {
                shape: Arc::new(rewrite(&p.shape, mv)),
                word: rewrite_word(&p.word, mv),
                l: p.l,
                m: p.m,
            };
            Outcome::Image(image, mv)
        }
    }
}

/// The orbit of `t`, one serialized creature per line.
pub fn trace1(t: &LabeledTree) -> Vec<String> {
    let mut lines = vec![t.to_string()];
    if let Outcome::Image(image, _) = involution1(t) {
        lines.push(image.to_string());
    }
    lines
}

pub fn trace3(p: &CreaturePair) -> Vec<String> {
    let mut lines = vec![p.to_string()];
    if let Outcome::Image(image, _) = involution3(p) {
        lines.push(image.to_string());
    }
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(s: &str) -> LabeledTree {
        LabeledTree::parse(s).unwrap()
    }

    #[test]
    fn involution1_examples() {
        assert_eq!(involution1(&lt("2")).image().unwrap(), lt("(1,1)"));
        assert_eq!(involution1(&lt("(1,2)")), Outcome::Image(lt("(1,(1,1))"), Move::Expand(1)));
        assert_eq!(involution1(&lt("1")), Outcome::Fixed);
        assert_eq!(involution1(&lt("(1,(1,1))")), Outcome::Image(lt("(1,2)"), Move::Contract(1)));
    }

    #[test]
    fn internal_sibling_never_contracts() {
        // the first leaf's sibling is internal, so the cherry on the right merges
        assert_eq!(involution1(&lt("(1,(1,1))")).image().unwrap(), lt("(1,2)"));
        assert_eq!(involution1(&lt("((1,1),1)")).image().unwrap(), lt("(2,1)"));
    }

    #[test]
    fn involution3_examples() {
        let p = CreaturePair::parse("2|11", 4, 1).unwrap();
        assert_eq!(involution3(&p).image().unwrap().to_string(), "(1,1)|11");
        let s = CreaturePair::parse("1|21", 4, 1).unwrap();
        assert!(s.is_survivor_form());
        assert_eq!(involution3(&s), Outcome::Fixed);
        let back = involution3(&involution3(&p).image().unwrap()).image().unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn trace_of_cherry() {
        assert_eq!(trace1(&lt("(1,2)")), ["(1,2)", "(1,(1,1))"]);
        assert_eq!(trace1(&lt("1")), ["1"]);
    }
}
