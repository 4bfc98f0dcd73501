use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::bits::MAX_CELLS;
use crate::error::{input, Error, Result};

/// Shape of a grid: `rows` x `cols`, both at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridDims {
    rows: usize,
    cols: usize,
}

impl GridDims {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return input(format!(
                "grid dimensions must be positive, got {rows}x{cols}"
            ));
        }
        match rows.checked_mul(cols) {
            Some(c) if c <= MAX_CELLS => Ok(GridDims { rows, cols }),
            _ => input(format!(
                "{rows}x{cols} grid exceeds the {MAX_CELLS}-cell capacity"
            )),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn cell_count(&self) -> usize {
        self.rows * self.cols
    }

    pub fn transposed(&self) -> GridDims {
        GridDims {
            rows: self.cols,
            cols: self.rows,
        }
    }

    /// Orientation with `cols >= rows`.
    pub fn canonical(&self) -> GridDims {
        if self.cols >= self.rows {
            *self
        } else {
            self.transposed()
        }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.rows).contains(&cell.row) && (1..=self.cols).contains(&cell.col)
    }

    pub(crate) fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            input(format!("cell {cell} is outside the {self} grid"))
        }
    }

    /// Row-major zero-based bit index of a 1-based cell.
    #[inline]
    pub(crate) fn index(&self, cell: Cell) -> usize {
        (cell.row - 1) * self.cols + (cell.col - 1)
    }

    #[inline]
    pub(crate) fn cell_at(&self, index: usize) -> Cell {
        Cell {
            row: index / self.cols + 1,
            col: index % self.cols + 1,
        }
    }

    /// Cell at 1-based coordinates offset by `(dr, dc)`, if still in bounds.
    pub(crate) fn offset(&self, cell: Cell, dr: isize, dc: isize) -> Option<Cell> {
        let r = cell.row as isize + dr;
        let c = cell.col as isize + dc;
        if r >= 1 && c >= 1 && r as usize <= self.rows && c as usize <= self.cols {
            Some(Cell {
                row: r as usize,
                col: c as usize,
            })
        } else {
            None
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.cell_count()).map(|i| self.cell_at(i))
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// Parses the `NxM` form.
impl FromStr for GridDims {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, m) = s
            .trim()
            .split_once(['x', 'X'])
            .ok_or_else(|| Error::Input(format!("expected NxM, got {s:?}")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad row count in {s:?}")))?;
        let m = m
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad column count in {s:?}")))?;
        GridDims::new(n, m)
    }
}

/// A cell in 1-based `(row, col)` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (r, c) = s
            .trim()
            .split_once(',')
            .ok_or_else(|| Error::Input(format!("expected r,c, got {s:?}")))?;
        let row = r
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad row in {s:?}")))?;
        let col = c
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad column in {s:?}")))?;
        Ok(Cell { row, col })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_oversized_grids() {
        assert!(GridDims::new(0, 3).is_err());
        assert!(GridDims::new(3, 0).is_err());
        assert!(GridDims::new(32, 32).is_ok());
        assert!(GridDims::new(33, 32).is_err());
        assert!(GridDims::new(usize::MAX, 2).is_err());
    }

    #[test]
    fn parses_dims_and_cells() {
        let d: GridDims = "4x5".parse().unwrap();
        assert_eq!((d.rows(), d.cols()), (4, 5));
        assert!("4-5".parse::<GridDims>().is_err());
        assert!("0x5".parse::<GridDims>().is_err());
        assert_eq!("3, 7".parse::<Cell>().unwrap(), Cell::new(3, 7));
        assert!("3;7".parse::<Cell>().is_err());
    }

    #[test]
    fn index_round_trip() {
        let d = GridDims::new(3, 4).unwrap();
        for (i, c) in d.cells().enumerate() {
            assert_eq!(d.index(c), i);
        }
        assert_eq!(d.cell_at(5), Cell::new(2, 2));
    }
}
