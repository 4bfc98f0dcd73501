use std::fmt;

use super::cellset::CellSet;
use super::dims::{Cell, GridDims};
use crate::error::{input, Result};

/// One of the eight two-witness contamination rules.
///
/// Each rule names two offsets relative to the threatened cell; the cell is
/// contaminated when both offset cells are in bounds and contaminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl Rule {
    /// Rules in the order `contaminable` tries them.
    pub const ALL: [Rule; 8] = [
        Rule::A,
        Rule::B,
        Rule::C,
        Rule::D,
        Rule::E,
        Rule::F,
        Rule::G,
        Rule::H,
    ];

    pub fn id(self) -> char {
        match self {
            Rule::A => 'a',
            Rule::B => 'b',
            Rule::C => 'c',
            Rule::D => 'd',
            Rule::E => 'e',
            Rule::F => 'f',
            Rule::G => 'g',
            Rule::H => 'h',
        }
    }

    /// The two witness offsets `(drow, dcol)`.
    pub fn offsets(self) -> [(isize, isize); 2] {
        match self {
            Rule::A => [(-1, -1), (1, 1)],
            Rule::B => [(1, -1), (-1, 1)],
            Rule::C => [(-1, 0), (1, 0)],
            Rule::D => [(0, -1), (0, 1)],
            Rule::E => [(0, -1), (-1, 0)],
            Rule::F => [(0, -1), (1, 0)],
            Rule::G => [(1, 0), (0, 1)],
            Rule::H => [(-1, 0), (0, 1)],
        }
    }

    /// Both witnesses of this rule for `u`, if both are inside the grid.
    pub fn witnesses(self, dims: GridDims, u: Cell) -> Option<(Cell, Cell)> {
        let [(r1, c1), (r2, c2)] = self.offsets();
        Some((dims.offset(u, r1, c1)?, dims.offset(u, r2, c2)?))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// In-bounds cells at Chebyshev distance 1 from `u`.
pub fn moore(dims: GridDims, u: Cell) -> Result<CellSet> {
    dims.check(u)?;
    let mut s = CellSet::empty(dims);
    for dr in -1..=1 {
        for dc in -1..=1 {
            if (dr, dc) != (0, 0) {
                if let Some(v) = dims.offset(u, dr, dc) {
                    s.insert(v)?;
                }
            }
        }
    }
    Ok(s)
}

/// In-bounds orthogonal neighbours of `u`.
pub fn von_neumann(dims: GridDims, u: Cell) -> Result<CellSet> {
    dims.check(u)?;
    let mut s = CellSet::empty(dims);
    for (dr, dc) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
        if let Some(v) = dims.offset(u, dr, dc) {
            s.insert(v)?;
        }
    }
    Ok(s)
}

/// First rule (in order a..h) whose two witnesses are both in `state`.
///
/// Fails if `u` is out of bounds or already contaminated.
pub fn contaminable(state: &CellSet, u: Cell) -> Result<Option<Rule>> {
    let dims = state.dims();
    dims.check(u)?;
    if state.contains(u) {
        return input(format!("cell {u} is already contaminated"));
    }
    Ok(Rule::ALL.into_iter().find(|r| {
        r.witnesses(dims, u)
            .is_some_and(|(v, w)| state.contains(v) && state.contains(w))
    }))
}
