//! Core domain types shared by every solver: subtraction sets, P/N labels,
//! solved tables, and the mex primitive.

use std::fmt;

use crate::error::{Error, Result};

/// Default hard cap on table entries. Override with the `PTFN_TABLE_CAP`
/// environment variable.
pub const DEFAULT_TABLE_CAP: usize = 100_000_000;

/// Current table-entry cap: `PTFN_TABLE_CAP` if set and parseable, else the default.
pub fn table_cap() -> usize {
    std::env::var("PTFN_TABLE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_TABLE_CAP)
}

/// Checks that a table of `entries` cells fits under the cap and in memory.
pub(crate) fn check_table_size(entries: u128) -> Result<usize> {
    let cap = table_cap();
    if entries > cap as u128 {
        return Err(Error::TableTooLarge {
            requested: entries,
            cap: cap as u128,
        });
    }
    Ok(entries as usize)
}

/// Outcome label for a position: P-positions lose for the player to move,
/// N-positions win.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    P,
    N,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::P => write!(f, "P"),
            Label::N => write!(f, "N"),
        }
    }
}

/// Winning convention: under `Normal` play the last player to move wins,
/// under `Misere` play the last player to move loses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayConvention {
    Normal,
    Misere,
}

impl fmt::Display for PlayConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlayConvention::Normal => write!(f, "normal"),
            PlayConvention::Misere => write!(f, "misere"),
        }
    }
}

/// A validated subtraction set: distinct positive move amounts, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtractionSet {
    moves: Vec<u64>,
}

impl SubtractionSet {
    /// Validates raw input into a subtraction set. Input may be unsorted and
    /// may contain duplicates (they collapse); entries ≤ 0 are rejected.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut moves = Vec::with_capacity(raw.len());
        for &v in raw {
            if v <= 0 {
                return Err(Error::NonPositiveEntry(v));
            }
            moves.push(v as u64);
        }
        moves.sort_unstable();
        moves.dedup();
        Ok(SubtractionSet { moves })
    }

    pub fn moves(&self) -> &[u64] {
        &self.moves
    }

    /// Smallest move s1; positions below it are terminal.
    pub fn smallest(&self) -> u64 {
        self.moves[0]
    }

    /// Largest move s_k; the dependence depth of the recurrence.
    pub fn largest(&self) -> u64 {
        *self.moves.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

impl fmt::Display for SubtractionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.moves.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Smallest non-negative integer absent from `values`.
pub fn mex(values: &[u64]) -> u64 {
    let mut present = vec![false; values.len() + 1];
    for &v in values {
        if (v as usize) < present.len() {
            present[v as usize] = true;
        }
    }
    present.iter().position(|&p| !p).unwrap() as u64
}

/// P/N labels for every pile size 0..=n of a one-pile game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionTable {
    labels: Vec<Label>,
    set: SubtractionSet,
    convention: PlayConvention,
}

impl PositionTable {
    pub(crate) fn new(labels: Vec<Label>, set: SubtractionSet, convention: PlayConvention) -> Self {
        debug_assert!(!labels.is_empty());
        PositionTable {
            labels,
            set,
            convention,
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: u64) -> Label {
        self.labels[i as usize]
    }

    /// Largest pile size in the table.
    pub fn n(&self) -> u64 {
        (self.labels.len() - 1) as u64
    }

    pub fn set(&self) -> &SubtractionSet {
        &self.set
    }

    pub fn convention(&self) -> PlayConvention {
        self.convention
    }
}

/// Grundy values for every pile size 0..=n of a one-pile game (normal play).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    values: Vec<u32>,
    set: SubtractionSet,
}

impl GrundyTable {
    pub(crate) fn new(values: Vec<u32>, set: SubtractionSet) -> Self {
        debug_assert!(!values.is_empty());
        GrundyTable { values, set }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, i: u64) -> u32 {
        self.values[i as usize]
    }

    pub fn n(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn set(&self) -> &SubtractionSet {
        &self.set
    }
}
