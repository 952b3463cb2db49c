//! Property tests over randomly generated games: the winner-definition
//! recursion, equivalence between independent solving routes, and the
//! instrumentation identities.

use proptest::collection::vec;
use proptest::prelude::*;

use ptfn::{
    grundy_table, labels_from_grundy, mex, minimax_label_grid, ptfn_misere, ptfn_normal,
    ptfn_normal_counting, ptfn_two_pile, sum_label_xor, GridRule, Label, PlayConvention,
    PositionTable, SubtractionSet,
};

fn arb_set() -> impl Strategy<Value = SubtractionSet> {
    vec(1i64..=20, 1..=6).prop_map(|raw| SubtractionSet::new(&raw).unwrap())
}

/// Checks the winner-definition recursion on a one-pile table: an N-position
/// has a move to some P-position, a P-position has moves only to N-positions.
fn assert_definition_recursion(table: &PositionTable) {
    let s1 = table.set().smallest();
    for i in 0..=table.n() {
        if table.convention() == PlayConvention::Misere && i < s1 {
            assert_eq!(table.label(i), Label::N, "moveless misere position {i}");
            continue;
        }
        let has_p_follower = table
            .set()
            .moves()
            .iter()
            .any(|&s| s <= i && table.label(i - s) == Label::P);
        let expect = if has_p_follower { Label::N } else { Label::P };
        assert_eq!(table.label(i), expect, "position {i}");
    }
}

proptest! {
    #[test]
    fn mex_excludes_result_and_includes_below(values in vec(0u64..=30, 0..=40)) {
        let m = mex(&values);
        prop_assert!(!values.contains(&m));
        for v in 0..m {
            prop_assert!(values.contains(&v));
        }
    }

    #[test]
    fn validate_set_idempotent(raw in vec(1i64..=50, 1..=10)) {
        let once = SubtractionSet::new(&raw).unwrap();
        let raw_again: Vec<i64> = once.moves().iter().map(|&m| m as i64).collect();
        let twice = SubtractionSet::new(&raw_again).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn normal_sieve_satisfies_recursion(set in arb_set(), n in 0u64..=200) {
        assert_definition_recursion(&ptfn_normal(&set, n).unwrap());
    }

    #[test]
    fn misere_sieve_satisfies_recursion(set in arb_set(), n in 0u64..=200) {
        assert_definition_recursion(&ptfn_misere(&set, n).unwrap());
    }

    #[test]
    fn ptfn_equals_grundy_labels(set in arb_set(), n in 0u64..=200) {
        let sieve = ptfn_normal(&set, n).unwrap();
        let grundy = labels_from_grundy(&grundy_table(&set, n).unwrap());
        prop_assert_eq!(sieve.labels(), grundy.labels());
    }

    #[test]
    fn grundy_values_bounded(set in arb_set(), n in 0u64..=300) {
        let g = grundy_table(&set, n).unwrap();
        prop_assert!(g.values().iter().all(|&v| v as usize <= set.len()));
    }

    #[test]
    fn grundy_values_are_mex_of_followers(set in arb_set(), n in 0u64..=150) {
        let g = grundy_table(&set, n).unwrap();
        for i in 0..=n {
            let followers: Vec<u64> = set
                .moves()
                .iter()
                .filter(|&&s| s <= i)
                .map(|&s| g.value(i - s) as u64)
                .collect();
            prop_assert_eq!(g.value(i) as u64, mex(&followers));
        }
    }

    #[test]
    fn mark_count_identity(set in arb_set(), n in 0u64..=300) {
        let (table, marks) = ptfn_normal_counting(&set, n).unwrap();
        let expected: u64 = (0..=n)
            .filter(|&i| table.label(i) == Label::P)
            .map(|i| set.moves().iter().filter(|&&s| i + s <= n).count() as u64)
            .sum();
        prop_assert_eq!(marks, expected);
    }

    #[test]
    fn two_pile_satisfies_grid_recursion(
        set_a in arb_set(),
        set_b in arb_set(),
        n_a in 0u64..=40,
        n_b in 0u64..=40,
    ) {
        let grid = ptfn_two_pile(&set_a, n_a, &set_b, n_b).unwrap();
        for a in 0..=n_a {
            for b in 0..=n_b {
                let has_p_follower = set_a
                    .moves()
                    .iter()
                    .any(|&s| s <= a && grid.label(a - s, b) == Label::P)
                    || set_b
                        .moves()
                        .iter()
                        .any(|&t| t <= b && grid.label(a, b - t) == Label::P);
                let expect = if has_p_follower { Label::N } else { Label::P };
                prop_assert_eq!(grid.label(a, b), expect, "cell ({}, {})", a, b);
            }
        }
    }

    #[test]
    fn xor_rule_matches_grid_oracle(
        set_a in arb_set(),
        set_b in arb_set(),
        a in 0u64..=60,
        b in 0u64..=60,
    ) {
        let rule = GridRule::SumOfTwo { set_a: set_a.clone(), set_b: set_b.clone() };
        let by_oracle = minimax_label_grid(&rule, a, b).unwrap();
        let by_xor = sum_label_xor(&[(set_a, a), (set_b, b)]).unwrap();
        prop_assert_eq!(by_oracle, by_xor);
    }
}

#[test]
fn wythoff_grid_satisfies_recursion() {
    let grid = ptfn::wythoff_sieve(100, 100).unwrap();
    for a in 0..=100u64 {
        for b in 0..=100u64 {
            let mut has_p_follower = (1..=a).any(|k| grid.label(a - k, b) == Label::P)
                || (1..=b).any(|k| grid.label(a, b - k) == Label::P);
            has_p_follower = has_p_follower
                || (1..=a.min(b)).any(|k| grid.label(a - k, b - k) == Label::P);
            let expect = if has_p_follower { Label::N } else { Label::P };
            assert_eq!(grid.label(a, b), expect, "cell ({a}, {b})");
        }
    }
}
