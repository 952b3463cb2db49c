//! PTFN forward sieve for one pile: positions are scanned in ascending order,
//! every position still unmarked when visited is a P-position, and each
//! P-position marks every position one legal move above it as N.

use crate::error::Result;
use crate::games::{check_table_size, Label, PlayConvention, PositionTable, SubtractionSet};

/// Solves one pile of size `n` under normal play.
pub fn ptfn_normal(set: &SubtractionSet, n: u64) -> Result<PositionTable> {
    sieve(set, n, PlayConvention::Normal).map(|(t, _)| t)
}

/// Solves one pile of size `n` under misere play. Identical sieve, but the
/// moveless positions 0..s1 start out marked N: whoever faces them has
/// already won, the opponent moved last.
pub fn ptfn_misere(set: &SubtractionSet, n: u64) -> Result<PositionTable> {
    sieve(set, n, PlayConvention::Misere).map(|(t, _)| t)
}

/// Normal-play sieve that also reports how many marking steps executed.
/// Re-marking an already-N cell still counts as one step.
pub fn ptfn_normal_counting(set: &SubtractionSet, n: u64) -> Result<(PositionTable, u64)> {
    sieve(set, n, PlayConvention::Normal)
}

fn sieve(
    set: &SubtractionSet,
    n: u64,
    convention: PlayConvention,
) -> Result<(PositionTable, u64)> {
    let len = check_table_size(n as u128 + 1)?;
    let mut labels = vec![Label::P; len];

    if convention == PlayConvention::Misere {
        let terminal = (set.smallest() as u128).min(len as u128) as usize;
        for cell in labels.iter_mut().take(terminal) {
            *cell = Label::N;
        }
    }

    let mut marks = 0u64;
    for i in 0..len {
        if labels[i] == Label::P {
            for &s in set.moves() {
                // Algorithm as printed writes unconditionally; the bounds
                // guard is mandatory to stay inside the table.
                let target = i as u128 + s as u128;
                if target < len as u128 {
                    labels[target as usize] = Label::N;
                    marks += 1;
                }
            }
        }
    }

    Ok((PositionTable::new(labels, set.clone(), convention), marks))
}
