//! Sprague-Grundy baseline solver: per-position mex over follower values,
//! plus the XOR composition rule for sums of games.

use crate::error::{Error, Result};
use crate::games::{
    check_table_size, GrundyTable, Label, PlayConvention, PositionTable, SubtractionSet,
};

/// Computes G(i) = mex{ G(i-s) : s in set, s <= i } for i = 0..=n.
pub fn grundy_table(set: &SubtractionSet, n: u64) -> Result<GrundyTable> {
    let len = check_table_size(n as u128 + 1)?;
    let k = set.len();
    let mut values = vec![0u32; len];
    // reusable presence scratch; follower values never exceed |set|
    let mut present = vec![false; k + 1];
    for i in 0..len {
        for &s in set.moves() {
            if (s as u128) <= i as u128 {
                present[values[i - s as usize] as usize] = true;
            }
        }
        let mut g = 0u32;
        while present[g as usize] {
            g += 1;
        }
        values[i] = g;
        for &s in set.moves() {
            if (s as u128) <= i as u128 {
                present[values[i - s as usize] as usize] = false;
            }
        }
    }
    Ok(GrundyTable::new(values, set.clone()))
}

/// Normal-play labels from Grundy values: G(i) = 0 exactly at P-positions.
pub fn labels_from_grundy(g: &GrundyTable) -> PositionTable {
    let labels = g
        .values()
        .iter()
        .map(|&v| if v == 0 { Label::P } else { Label::N })
        .collect();
    PositionTable::new(labels, g.set().clone(), PlayConvention::Normal)
}

/// Label of a sum of subtraction games via the Sprague-Grundy theorem:
/// P iff the XOR of component Grundy values is zero. Each component table
/// is computed on its own; no joint grid is ever built.
pub fn sum_label_xor(components: &[(SubtractionSet, u64)]) -> Result<Label> {
    if components.is_empty() {
        return Err(Error::EmptySum);
    }
    let mut acc = 0u32;
    for (set, pile) in components {
        let table = grundy_table(set, *pile)?;
        acc ^= table.value(*pile);
    }
    Ok(if acc == 0 { Label::P } else { Label::N })
}
