//! Solvers for impartial subtraction games.
//!
//! The central algorithm is a forward sieve (PTFN: P-positions To Find
//! N-positions): scan pile sizes in ascending order, declare every position
//! still unmarked a P-position, and mark each position one legal move above
//! a P-position as an N-position. Alongside it live a Sprague-Grundy
//! baseline, two-pile grids (sums of games and Wythoff's game), misere
//! variants, a brute-force minimax oracle, and analysis tools (winning-move
//! advice, Grundy periodicity, an instrumented benchmark).
//!
//! Note on the source material: the walkthrough this sieve derives from
//! opens with the set {1,3,7,9} but then enumerates moves 1, 3, 7 and 8;
//! the 9 is taken to be a typo for 8, and {1,3,7,8} is used throughout.

pub mod analysis;
pub mod cli;
mod error;
pub mod games;
pub mod grid;
pub mod grundy;
pub mod oracle;
pub mod sieve;

pub use analysis::{advise_move, bench_compare, detect_period, BenchReport, MoveAdvice, PeriodReport};
pub use error::{Error, Result};
pub use games::{mex, GrundyTable, Label, PlayConvention, PositionTable, SubtractionSet};
pub use grid::{
    grid_cross_check, ptfn_two_pile, wythoff_analytic, wythoff_sieve, BeattyPair, GridRule,
    GridTable,
};
pub use grundy::{grundy_table, labels_from_grundy, sum_label_xor};
pub use oracle::{minimax_label_1d, minimax_label_grid};
pub use sieve::{ptfn_misere, ptfn_normal, ptfn_normal_counting};
