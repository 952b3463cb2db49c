//! Two-pile games: PTFN over a grid for sums of two subtraction games,
//! Wythoff's game sieve, and the analytic golden-ratio cross-check.

use crate::error::{Error, Result};
use crate::games::{check_table_size, Label, SubtractionSet};
use crate::grundy::grundy_table;

/// Per-dimension cap for the Wythoff sieve; each P-position marks O(n)
/// cells in three directions, so the sieve is cubic in the worst case.
pub const WYTHOFF_DIM_CAP: u64 = 2000;

/// Move rule governing a two-pile grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridRule {
    /// Sum of two independent subtraction games: a move plays in exactly one pile.
    SumOfTwo {
        set_a: SubtractionSet,
        set_b: SubtractionSet,
    },
    /// Remove any positive amount from one pile, or an equal positive amount
    /// from both.
    Wythoff,
}

/// P/N labels over a (nA+1) x (nB+1) grid of two-pile positions, normal play.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTable {
    labels: Vec<Label>, // row-major, row index = pile A
    n_a: u64,
    n_b: u64,
    rule: GridRule,
}

impl GridTable {
    fn idx(&self, a: u64, b: u64) -> usize {
        a as usize * (self.n_b as usize + 1) + b as usize
    }

    pub fn label(&self, a: u64, b: u64) -> Label {
        self.labels[self.idx(a, b)]
    }

    pub fn n_a(&self) -> u64 {
        self.n_a
    }

    pub fn n_b(&self) -> u64 {
        self.n_b
    }

    pub fn rule(&self) -> &GridRule {
        &self.rule
    }

    /// Row `a` of the grid, b ascending.
    pub fn row(&self, a: u64) -> &[Label] {
        let w = self.n_b as usize + 1;
        let start = a as usize * w;
        &self.labels[start..start + w]
    }

    #[cfg(test)]
    pub(crate) fn flip(&mut self, a: u64, b: u64) {
        let i = self.idx(a, b);
        self.labels[i] = match self.labels[i] {
            Label::P => Label::N,
            Label::N => Label::P,
        };
    }
}

/// A P-position of Wythoff's game in analytic form: (⌊kφ⌋, ⌊kφ²⌋).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeattyPair {
    pub k: u64,
    pub a: u64,
    pub b: u64,
}

/// Two-pile PTFN sieve for a sum of two subtraction games. Row-major scan:
/// every predecessor of a cell is visited before the cell itself.
pub fn ptfn_two_pile(
    set_a: &SubtractionSet,
    n_a: u64,
    set_b: &SubtractionSet,
    n_b: u64,
) -> Result<GridTable> {
    let entries = (n_a as u128 + 1) * (n_b as u128 + 1);
    check_table_size(entries)?;
    let width = n_b as usize + 1;
    let mut labels = vec![Label::P; entries as usize];
    for i in 0..=n_a {
        for j in 0..=n_b {
            let cell = i as usize * width + j as usize;
            if labels[cell] == Label::P {
                for &s in set_a.moves() {
                    if i + s <= n_a {
                        labels[cell + s as usize * width] = Label::N;
                    }
                }
                for &t in set_b.moves() {
                    if j + t <= n_b {
                        labels[cell + t as usize] = Label::N;
                    }
                }
            }
        }
    }
    Ok(GridTable {
        labels,
        n_a,
        n_b,
        rule: GridRule::SumOfTwo {
            set_a: set_a.clone(),
            set_b: set_b.clone(),
        },
    })
}

/// PTFN sieve for Wythoff's game. Each P-position (i,j) marks (i+k,j),
/// (i,j+k) and (i+k,j+k) for every in-range k >= 1.
pub fn wythoff_sieve(n_a: u64, n_b: u64) -> Result<GridTable> {
    if n_a > WYTHOFF_DIM_CAP || n_b > WYTHOFF_DIM_CAP {
        return Err(Error::TableTooLarge {
            requested: (n_a as u128 + 1) * (n_b as u128 + 1),
            cap: (WYTHOFF_DIM_CAP as u128 + 1).pow(2),
        });
    }
    let entries = (n_a as u128 + 1) * (n_b as u128 + 1);
    check_table_size(entries)?;
    let width = n_b as usize + 1;
    let mut labels = vec![Label::P; entries as usize];
    for i in 0..=n_a {
        for j in 0..=n_b {
            let cell = i as usize * width + j as usize;
            if labels[cell] != Label::P {
                continue;
            }
            for k in 1..=(n_a - i) {
                labels[cell + k as usize * width] = Label::N;
            }
            for k in 1..=(n_b - j) {
                labels[cell + k as usize] = Label::N;
            }
            for k in 1..=(n_a - i).min(n_b - j) {
                labels[cell + k as usize * width + k as usize] = Label::N;
            }
        }
    }
    Ok(GridTable {
        labels,
        n_a,
        n_b,
        rule: GridRule::Wythoff,
    })
}

/// Wythoff P-positions for k = 0..=k_max in exact integer arithmetic:
/// a = ⌊(k + ⌊√(5k²)⌋) / 2⌋ and b = a + k. The floor identity ⌊kφ²⌋ =
/// ⌊kφ⌋ + k is exact because 5k² is never a perfect square for k >= 1.
pub fn wythoff_analytic(k_max: u64) -> Result<Vec<BeattyPair>> {
    // overflow is monotone in k, so the largest k settles it up front
    k_max
        .checked_mul(k_max)
        .and_then(|k2| k2.checked_mul(5))
        .ok_or(Error::Overflow { k: k_max })?;
    let mut pairs = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let a = (k + (5 * k * k).isqrt()) / 2;
        pairs.push(BeattyPair { k, a, b: a + k });
    }
    Ok(pairs)
}

/// Re-derives the grid's P-cells by an independent method and reports every
/// cell where the two disagree. SumOfTwo grids are checked against the
/// XOR-of-Grundy rule; Wythoff grids against the analytic Beatty pairs.
pub fn grid_cross_check(grid: &GridTable) -> Vec<(u64, u64)> {
    let mut mismatches = Vec::new();
    match grid.rule() {
        GridRule::SumOfTwo { set_a, set_b } => {
            let ga = grundy_table(set_a, grid.n_a()).expect("grid already fit under the cap");
            let gb = grundy_table(set_b, grid.n_b()).expect("grid already fit under the cap");
            for a in 0..=grid.n_a() {
                for b in 0..=grid.n_b() {
                    let expect = if ga.value(a) ^ gb.value(b) == 0 {
                        Label::P
                    } else {
                        Label::N
                    };
                    if grid.label(a, b) != expect {
                        mismatches.push((a, b));
                    }
                }
            }
        }
        GridRule::Wythoff => {
            let max_dim = grid.n_a().max(grid.n_b());
            // a grows by at least 1 per k, so k_max = max_dim covers the grid
            let pairs = wythoff_analytic(max_dim).expect("k_max bounded by grid dims");
            let width = grid.n_b() as usize + 1;
            let mut expected =
                vec![Label::N; (grid.n_a() as usize + 1) * (grid.n_b() as usize + 1)];
            for p in &pairs {
                if p.a <= grid.n_a() && p.b <= grid.n_b() {
                    expected[p.a as usize * width + p.b as usize] = Label::P;
                }
                if p.b <= grid.n_a() && p.a <= grid.n_b() {
                    expected[p.b as usize * width + p.a as usize] = Label::P;
                }
            }
            for a in 0..=grid.n_a() {
                for b in 0..=grid.n_b() {
                    if grid.label(a, b) != expected[a as usize * width + b as usize] {
                        mismatches.push((a, b));
                    }
                }
            }
        }
    }
    mismatches
}
