//! Brute-force ground truth. Deliberately naive top-down minimax over the
//! raw move relation; shares nothing with the sieves or the Grundy solver
//! beyond the core types.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::games::{Label, PlayConvention, SubtractionSet};
use crate::grid::GridRule;

/// Practical bound on grid oracle coordinates.
pub const GRID_ORACLE_BOUND: u64 = 200;

/// Labels a one-pile position by memoized recursion on the winner
/// definition. An explicit worklist keeps the recursion off the call stack.
pub fn minimax_label_1d(set: &SubtractionSet, i: u64, convention: PlayConvention) -> Label {
    let mut memo: Vec<Option<Label>> = vec![None; i as usize + 1];
    let mut work = vec![i];
    while let Some(&pos) = work.last() {
        if memo[pos as usize].is_some() {
            work.pop();
            continue;
        }
        let followers: Vec<u64> = set
            .moves()
            .iter()
            .filter(|&&s| s <= pos)
            .map(|&s| pos - s)
            .collect();
        if let Some(&pending) = followers.iter().find(|&&f| memo[f as usize].is_none()) {
            work.push(pending);
            continue;
        }
        let label = if followers.is_empty() {
            match convention {
                PlayConvention::Normal => Label::P,
                PlayConvention::Misere => Label::N,
            }
        } else if followers.iter().any(|&f| memo[f as usize] == Some(Label::P)) {
            Label::N
        } else {
            Label::P
        };
        memo[pos as usize] = Some(label);
        work.pop();
    }
    memo[i as usize].unwrap()
}

/// Labels a two-pile position under the rule's move relation, normal play.
pub fn minimax_label_grid(rule: &GridRule, a: u64, b: u64) -> Result<Label> {
    if a > GRID_ORACLE_BOUND || b > GRID_ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            a,
            b,
            bound: GRID_ORACLE_BOUND,
        });
    }
    let mut memo = HashMap::new();
    Ok(grid_label(rule, a, b, &mut memo))
}

/// Labels every cell of a grid with one shared memo, row-major rows out.
pub fn minimax_grid_labels(rule: &GridRule, n_a: u64, n_b: u64) -> Result<Vec<Vec<Label>>> {
    if n_a > GRID_ORACLE_BOUND || n_b > GRID_ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            a: n_a,
            b: n_b,
            bound: GRID_ORACLE_BOUND,
        });
    }
    let mut memo = HashMap::new();
    let mut rows = Vec::with_capacity(n_a as usize + 1);
    for a in 0..=n_a {
        rows.push(
            (0..=n_b)
                .map(|b| grid_label(rule, a, b, &mut memo))
                .collect(),
        );
    }
    Ok(rows)
}

fn grid_moves(rule: &GridRule, a: u64, b: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    match rule {
        GridRule::SumOfTwo { set_a, set_b } => {
            for &s in set_a.moves() {
                if s <= a {
                    out.push((a - s, b));
                }
            }
            for &t in set_b.moves() {
                if t <= b {
                    out.push((a, b - t));
                }
            }
        }
        GridRule::Wythoff => {
            for k in 1..=a {
                out.push((a - k, b));
            }
            for k in 1..=b {
                out.push((a, b - k));
            }
            for k in 1..=a.min(b) {
                out.push((a - k, b - k));
            }
        }
    }
    out
}

fn grid_label(
    rule: &GridRule,
    a: u64,
    b: u64,
    memo: &mut HashMap<(u64, u64), Label>,
) -> Label {
    if let Some(&l) = memo.get(&(a, b)) {
        return l;
    }
    let moves = grid_moves(rule, a, b);
    let label = if moves.is_empty() {
        Label::P
    } else if moves
        .into_iter()
        .any(|(x, y)| grid_label(rule, x, y, memo) == Label::P)
    {
        Label::N
    } else {
        Label::P
    };
    memo.insert((a, b), label);
    label
}
