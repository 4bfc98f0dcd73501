use std::fmt;

use super::bits::{Board, WideBits};
use super::dims::{Cell, GridDims};
use crate::error::{input, Result};

/// A subset of the cells of one grid, bit-packed row-major.
///
/// Bits outside `dims` are always zero. The canonical text form is the list
/// of `r,c` pairs in row-major order joined by `;`, e.g. `1,1;3,3;4,5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellSet {
    dims: GridDims,
    bits: WideBits,
}

impl CellSet {
    pub fn empty(dims: GridDims) -> Self {
        CellSet {
            dims,
            bits: WideBits::empty(),
        }
    }

    /// Every cell of the grid.
    pub fn full(dims: GridDims) -> Self {
        let mut s = Self::empty(dims);
        for i in 0..dims.cell_count() {
            s.bits.set(i);
        }
        s
    }

    pub fn from_cells(dims: GridDims, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut s = Self::empty(dims);
        for c in cells {
            s.insert(c)?;
        }
        Ok(s)
    }

    /// Same as [`CellSet::from_cells`] but rejects repeated cells.
    pub fn from_distinct_cells(dims: GridDims, cells: &[Cell]) -> Result<Self> {
        let mut s = Self::empty(dims);
        for &c in cells {
            if !s.insert(c)? {
                return input(format!("duplicate cell {c}"));
            }
        }
        Ok(s)
    }

    /// Parses the canonical `r,c;r,c` form. The empty string is the empty set.
    pub fn parse(dims: GridDims, text: &str) -> Result<Self> {
        let mut s = Self::empty(dims);
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            s.insert(part.parse()?)?;
        }
        Ok(s)
    }

    pub(crate) fn from_bits(dims: GridDims, bits: WideBits) -> Self {
        CellSet { dims, bits }
    }

    pub(crate) fn from_u128(dims: GridDims, bits: u128) -> Self {
        CellSet {
            dims,
            bits: WideBits::from_u128(bits),
        }
    }

    pub(crate) fn bits(&self) -> WideBits {
        self.bits
    }

    #[inline]
    pub fn dims(&self) -> GridDims {
        self.dims
    }

    /// Inserts `cell`; returns whether it was newly added.
    pub fn insert(&mut self, cell: Cell) -> Result<bool> {
        self.dims.check(cell)?;
        let i = self.dims.index(cell);
        let fresh = !self.bits.get(i);
        self.bits.set(i);
        Ok(fresh)
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        if !self.dims.contains(cell) {
            return false;
        }
        let i = self.dims.index(cell);
        let had = self.bits.get(i);
        self.bits.clear(i);
        had
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.dims.contains(cell) && self.bits.get(self.dims.index(cell))
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.bits.iter_ones().map(|i| self.dims.cell_at(i))
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        debug_assert_eq!(self.dims, other.dims);
        CellSet {
            dims: self.dims,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &CellSet) -> CellSet {
        debug_assert_eq!(self.dims, other.dims);
        CellSet {
            dims: self.dims,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        debug_assert_eq!(self.dims, other.dims);
        CellSet {
            dims: self.dims,
            bits: self.bits & !other.bits,
        }
    }

    pub fn complement(&self) -> CellSet {
        CellSet::full(self.dims).difference(self)
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.dims == other.dims && (self.bits & !other.bits).is_empty()
    }

    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        (self.bits & other.bits).is_empty()
    }

    pub fn to_canonical(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                out.push(';');
            }
            out.push_str(&c.to_string());
        }
        out
    }

    /// Cells restricted to the columns `1..=cols`, placed on an `rows x cols` grid.
    pub fn restrict_cols(&self, cols: usize) -> Result<CellSet> {
        let dims = GridDims::new(self.dims.rows(), cols)?;
        CellSet::from_cells(dims, self.iter().filter(|c| c.col <= cols))
    }

    /// The same cells placed on a grid with the same row count and `cols >= self.cols`.
    pub fn widen(&self, cols: usize) -> Result<CellSet> {
        if cols < self.dims.cols() {
            return input("widen: target grid is narrower");
        }
        CellSet::from_cells(GridDims::new(self.dims.rows(), cols)?, self.iter())
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellSet({}: {})", self.dims, self.to_canonical())
    }
}
