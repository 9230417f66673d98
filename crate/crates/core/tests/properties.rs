mod common;

use std::collections::HashSet;

use catalan_core::cli::{parse_term, Builtin, Expr};
use catalan_core::exact_math::{Integer, Rational};
use catalan_core::trees::{
    enumerate_creatures1, enumerate_creatures3, involution1, involution3, BinaryTree, CreaturePair, LabeledTree,
    Outcome,
};
use common::*;
use proptest::prelude::*;

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..50).prop_map(|n| Expr::Int(n.into())),
        prop::sample::select(vec!["k", "n", "s"]).prop_map(|s| Expr::Sym(s.into())),
    ];
    leaf.prop_recursive(5, 40, 3, |inner| {
        let bin = (inner.clone(), inner.clone());
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(a.into())),
            bin.clone().prop_map(|(a, b)| Expr::Add(a.into(), b.into())),
            bin.clone().prop_map(|(a, b)| Expr::Sub(a.into(), b.into())),
            bin.clone().prop_map(|(a, b)| Expr::Mul(a.into(), b.into())),
            bin.clone().prop_map(|(a, b)| Expr::Div(a.into(), b.into())),
            bin.clone().prop_map(|(a, b)| Expr::Pow(a.into(), b.into())),
            bin.prop_map(|(a, b)| Expr::Call(Builtin::Binomial, vec![a, b])),
            inner.clone().prop_map(|a| Expr::Call(Builtin::Factorial, vec![a])),
            inner.prop_map(|a| Expr::Call(Builtin::Catalan, vec![a])),
        ]
    })
}

/// `a*k + b` written out as source text.
fn linear(a: i64, b: i64) -> String {
    match (a, b) {
        (0, b) => format!("{b}"),
        (a, 0) => format!("{a}*k"),
        (a, b) => format!("{a}*k + {b}"),
    }
}

fn arb_factor() -> impl Strategy<Value = String> {
    prop_oneof![
        // upper minus lower argument stays nonnegative for k >= 0
        (0i64..3, 0i64..4, 0i64..3, 0i64..4).prop_map(|(a, b, c, d)| {
            let (c, d) = (c.min(a), d.min(b));
            format!("binomial({}, {})", linear(a, b), linear(c, d))
        }),
        (1i64..3, 0i64..3).prop_map(|(a, b)| format!("factorial({})", linear(a, b))),
        (0i64..3).prop_map(|b| format!("catalan({})", linear(1, b))),
        prop::sample::select(vec![-3i64, -2, -1, 2, 3]).prop_map(|b| format!("({b})^k")),
        (1i64..3, 1i64..4).prop_map(|(a, b)| format!("({})", linear(a, b))),
        Just("binomial(n, k)".to_string()),
        Just("binomial(n + k, 2*k)".to_string()),
    ]
}

fn arb_term() -> impl Strategy<Value = String> {
    prop::collection::vec((arb_factor(), prop::bool::ANY), 1..4).prop_map(|fs| {
        let mut src = String::from("1");
        for (f, div) in fs {
            src.push(if div { '/' } else { '*' });
            src.push_str(&f);
        }
        src
    })
}

fn arb_shape(max_leaves: usize) -> impl Strategy<Value = BinaryTree> {
    Just(BinaryTree::Leaf).prop_recursive(max_leaves as u32, max_leaves as u32, 2, |inner| {
        prop_oneof![
            1 => Just(BinaryTree::Leaf),
            2 => (inner.clone(), inner).prop_map(|(l, r)| BinaryTree::node(l, r)),
        ]
    })
}

fn arb_labeled() -> impl Strategy<Value = LabeledTree> {
    arb_shape(7).prop_flat_map(|shape| {
        let n = shape.leaf_count();
        prop::collection::vec(1u8..=2, n).prop_map(move |labels| LabeledTree::new(shape.clone(), labels).unwrap())
    })
}

fn arb_pair() -> impl Strategy<Value = CreaturePair> {
    (arb_shape(6), 0usize..5).prop_flat_map(|(shape, extra)| {
        let n = shape.leaf_count();
        prop::collection::vec(1u8..=2, n + extra).prop_map(move |word| {
            let l: i64 = word.iter().map(|&x| x as i64).sum();
            let m = l - extra as i64 - 1;
            CreaturePair::new(shape.clone(), word, l, m).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(e in arb_expr()) {
        let text = e.to_string();
        prop_assert_eq!(Expr::parse(&text).unwrap(), e, "{}", text);
    }

    /// Every generated term is nonzero and defined for `0 <= k <= n`.
    #[test]
    fn ratio_agrees_with_direct_evaluation(src in arb_term(), n in 25i64..40) {
        let term = parse_term(&src, "k", &strings(&["n"])).unwrap();
        let ratio = term.ratio_of("k").unwrap();
        let hyper = term.hyper_term().unwrap();
        let params = [Integer::from(n)];
        let mut checked = 0;
        for k in 0..60i64 {
            let (Some(t0), Some(t1)) = (hyper.eval(&params, &k.into()), hyper.eval(&params, &(k + 1).into())) else {
                continue;
            };
            if t0 == Rational::from_integer(0.into()) {
                continue;
            }
            let r = ratio.eval_rational(&[q(n)], &q(k));
            prop_assert_eq!(r, Some(&t1 / &t0), "{} at k = {}", src, k);
            checked += 1;
            if checked == 20 {
                break;
            }
        }
        prop_assert_eq!(checked, 20, "{}", src);
    }

    #[test]
    fn involution1_is_a_parity_flipping_involution(t in arb_labeled()) {
        prop_assert_eq!(LabeledTree::parse(&t.to_string()).unwrap(), t.clone());
        match involution1(&t) {
            Outcome::Fixed => prop_assert_eq!(t.to_string(), "1"),
            Outcome::Image(image, _) => {
                prop_assert_eq!(image.weight(), t.weight());
                prop_assert_eq!(image.leaf_count().abs_diff(t.leaf_count()), 1);
                prop_assert_eq!(involution1(&image).image(), Some(t));
            }
        }
    }

    #[test]
    fn involution3_fixes_exactly_the_survivors(p in arb_pair()) {
        let (l, m) = p.params();
        prop_assert_eq!(CreaturePair::parse(&p.to_string(), l, m).unwrap(), p.clone());
        match involution3(&p) {
            Outcome::Fixed => prop_assert!(p.is_survivor_form(), "{}", p),
            Outcome::Image(image, _) => {
                prop_assert!(!p.is_survivor_form());
                prop_assert_eq!(image.params(), (l, m));
                prop_assert_eq!(image.leaf_count().abs_diff(p.leaf_count()), 1);
                prop_assert_eq!(involution3(&image).image(), Some(p));
            }
        }
    }
}

#[test]
fn enumeration_counts_match_oracle() {
    let c = catalans(12);
    for s in 0..=8i64 {
        let all = enumerate_creatures1(s).unwrap();
        let expect: Integer = (0..=s).map(|i| &c[i as usize] * binom(i + 1, s - i)).sum();
        assert_eq!(Integer::from(all.len()), expect, "s = {s}");
        assert!(all.iter().all(|t| t.weight() as i64 == s + 1));
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
    }
    for m in 0..=4i64 {
        for l in m + 1..=m + 5 {
            let all = enumerate_creatures3(l, m).unwrap();
            let expect: Integer = (0..=m).map(|k| &c[k as usize] * binom(l - m + k, m - k)).sum();
            assert_eq!(Integer::from(all.len()), expect, "l = {l}, m = {m}");
            assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
        }
    }
}
