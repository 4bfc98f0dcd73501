//! Closed-form contamination numbers, their recurrences, and the
//! constructive seed sets that attain them.

use serde::Serialize;

use crate::error::{input, Result};
use crate::grid::{Cell, CellSet, GridDims};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaMethod {
    Theorem,
    PathFormula,
    RecurrenceCol,
    RecurrencePq,
    RecurrencePath4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GammaValue {
    pub dims: GridDims,
    pub value: usize,
    pub method: GammaMethod,
}

/// Contamination number of `dims`: `ceil(m/2)+1` for two rows and an odd
/// column count, `floor(m/2)+1` otherwise (with `m >= n` after transposing).
pub fn gamma(dims: GridDims) -> GammaValue {
    GammaValue {
        dims,
        value: gamma_value(dims),
        method: GammaMethod::Theorem,
    }
}

pub(crate) fn gamma_value(dims: GridDims) -> usize {
    let d = dims.canonical();
    let m = d.cols();
    if d.rows() == 2 && m % 2 == 1 {
        m.div_ceil(2) + 1
    } else {
        m / 2 + 1
    }
}

/// Single-row grids: `floor(m/2)+1`.
pub fn gamma_path(m: usize) -> Result<usize> {
    if m == 0 {
        return input("path length must be positive");
    }
    Ok(m / 2 + 1)
}

/// Single-row value by peeling four cells off the path at a time, down to
/// the base values 1, 1, 2, 2 for lengths 0..=3.
pub fn gamma_rec_path4(m: usize) -> Result<usize> {
    if m < 4 {
        return input(format!("path recurrence needs m >= 4, got {m}"));
    }
    fn base(m: usize) -> usize {
        match m {
            0 | 1 => 1,
            2 | 3 => 2,
            _ => base(m - 4) + 2,
        }
    }
    Ok(base(m - 4) + 2)
}

/// `gamma(n, m-1) + [m even]`, defined for `m > n >= 3`.
pub fn gamma_rec_col(dims: GridDims) -> Result<usize> {
    let (n, m) = (dims.rows(), dims.cols());
    if !(m > n && n >= 3) {
        return input(format!("column recurrence needs m > n >= 3, got {dims}"));
    }
    let prev = gamma_value(GridDims::new(n, m - 1)?);
    Ok(prev + usize::from(m % 2 == 0))
}

/// `gamma(n-p, m-q)` plus `ceil(q/2)` when `m` is even and `q` odd, else `floor(q/2)`.
pub fn gamma_rec_pq(dims: GridDims, p: usize, q: usize) -> Result<usize> {
    let (n, m) = (dims.rows(), dims.cols());
    if !(m >= n && n >= 3 && p + 3 <= n && q + 3 <= m && m - q >= n - p) {
        return input(format!(
            "p/q recurrence domain violated for {dims}, p={p}, q={q}"
        ));
    }
    let base = gamma_value(GridDims::new(n - p, m - q)?);
    let extra = if m % 2 == 0 && q % 2 == 1 {
        q.div_ceil(2)
    } else {
        q / 2
    };
    Ok(base + extra)
}

/// The conjectured value the closed form replaces.
pub fn gamma_conjectured(dims: GridDims) -> usize {
    let (n, m) = (dims.rows(), dims.cols());
    if n % 2 == m % 2 {
        (m / 2).max(n / 2) + 1
    } else {
        m.div_ceil(2).max(n.div_ceil(2)) + 1
    }
}

/// One cell per column on the reflected sawtooth starting at `(1,1)` and
/// bouncing between row 1 and row `n`.
pub fn zigzag_path(dims: GridDims) -> Result<Vec<Cell>> {
    let n = dims.rows();
    if n < 2 {
        return input("zig-zag path needs at least two rows");
    }
    let period = 2 * (n - 1);
    Ok((1..=dims.cols())
        .map(|j| {
            let t = (j - 1) % period;
            let row = if t < n { t + 1 } else { period - t + 1 };
            Cell::new(row, j)
        })
        .collect())
}

/// Every other zig-zag cell (odd columns, never the last column) plus `(n,m)`.
pub fn zigzag_seeds(dims: GridDims) -> Result<CellSet> {
    let (n, m) = (dims.rows(), dims.cols());
    if n == 1 {
        return input("zig-zag seeds need at least two rows; use path_seeds for one row");
    }
    if n == 2 && m % 2 == 1 {
        return input("two rows with odd m need one more seed; use tworow_odd_seeds");
    }
    if n >= 3 && m < n {
        return input(format!("zig-zag seeds need m >= n, got {dims}"));
    }
    let path = zigzag_path(dims)?;
    let picked = path.into_iter().filter(|c| c.col % 2 == 1 && c.col != m);
    let mut s = CellSet::from_cells(dims, picked)?;
    s.insert(Cell::new(n, m))?;
    Ok(s)
}

/// The main diagonal of the `m x m` grid.
pub fn diagonal_seeds(m: usize) -> Result<CellSet> {
    let dims = GridDims::new(m, m)?;
    CellSet::from_cells(dims, (1..=m).map(|i| Cell::new(i, i)))
}

/// Odd cells of the top row plus `(2,m)` on a `2 x m` grid, `m` odd.
pub fn tworow_odd_seeds(m: usize) -> Result<CellSet> {
    if m < 3 || m.is_multiple_of(2) {
        return input(format!("two-row construction needs odd m >= 3, got {m}"));
    }
    let dims = GridDims::new(2, m)?;
    let mut s = CellSet::from_cells(dims, (1..=m).step_by(2).map(|c| Cell::new(1, c)))?;
    s.insert(Cell::new(2, m))?;
    Ok(s)
}

/// Odd cells of a `1 x m` path, plus the last cell when `m` is even.
pub fn path_seeds(m: usize) -> Result<CellSet> {
    let dims = GridDims::new(1, m)?;
    let mut s = CellSet::from_cells(dims, (1..=m).step_by(2).map(|c| Cell::new(1, c)))?;
    s.insert(Cell::new(1, m))?;
    Ok(s)
}

/// The constructive optimal seed set for any shape, transposing back when `n > m`.
pub fn optimal_construction(dims: GridDims) -> Result<CellSet> {
    let d = dims.canonical();
    let (n, m) = (d.rows(), d.cols());
    let s = if n == 1 {
        path_seeds(m)?
    } else if n == 2 && m % 2 == 1 {
        tworow_odd_seeds(m)?
    } else {
        zigzag_seeds(d)?
    };
    Ok(if d == dims {
        s
    } else {
        crate::Symmetry::Transpose.apply(&s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::fills;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(d(4, 5)).value, 3);
        assert_eq!(gamma(d(2, 7)).value, 5);
        assert_eq!(gamma(d(15, 15)).value, 8);
        assert_eq!(gamma(d(1, 1)).value, 1);
        assert_eq!(gamma(d(7, 2)).value, 5);
    }

    #[test]
    fn path_examples() {
        assert_eq!(gamma_path(3).unwrap(), 2);
        assert_eq!(gamma_path(8).unwrap(), 5);
        assert_eq!(gamma_path(1).unwrap(), 1);
        assert_eq!(gamma_rec_path4(4).unwrap(), 3);
        assert_eq!(gamma_rec_path4(5).unwrap(), 3);
        assert_eq!(gamma_rec_path4(7).unwrap(), 4);
        assert!(gamma_rec_path4(3).is_err());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(gamma_rec_col(d(3, 4)).unwrap(), 3);
        assert_eq!(gamma_rec_col(d(3, 5)).unwrap(), 3);
        assert_eq!(gamma_rec_col(d(5, 6)).unwrap(), 4);
        assert!(gamma_rec_col(d(3, 3)).is_err());
        assert!(gamma_rec_col(d(2, 5)).is_err());

        assert_eq!(gamma_rec_pq(d(5, 9), 2, 4).unwrap(), 5);
        assert_eq!(gamma_rec_pq(d(4, 6), 1, 3).unwrap(), 4);
        assert_eq!(gamma_rec_pq(d(3, 3), 0, 0).unwrap(), 2);
        assert!(gamma_rec_pq(d(4, 6), 2, 0).is_err());
        assert!(gamma_rec_pq(d(5, 6), 0, 2).is_err());
    }

    #[test]
    fn conjectured_value_differs_at_4x5() {
        assert_eq!(gamma_conjectured(d(4, 5)), 4);
        assert_eq!(gamma(d(4, 5)).value, 3);
    }

    #[test]
    fn zigzag_path_examples() {
        let rows = |n, m| {
            zigzag_path(d(n, m))
                .unwrap()
                .iter()
                .map(|c| c.row)
                .collect::<Vec<_>>()
        };
        assert_eq!(rows(4, 5), [1, 2, 3, 4, 3]);
        assert_eq!(rows(3, 7), [1, 2, 3, 2, 1, 2, 3]);
        assert_eq!(rows(2, 4), [1, 2, 1, 2]);
        assert!(zigzag_path(d(1, 4)).is_err());
    }

    #[test]
    fn zigzag_seed_examples() {
        let z = |n, m| zigzag_seeds(d(n, m)).unwrap();
        assert_eq!(z(4, 5).to_canonical(), "1,1;3,3;4,5");
        assert_eq!(z(3, 3).to_canonical(), "1,1;3,3");
        assert_eq!(z(2, 4).to_canonical(), "1,1;1,3;2,4");
        for s in [z(4, 5), z(3, 3), z(2, 4)] {
            assert!(fills(&s));
        }
        assert!(zigzag_seeds(d(2, 5)).is_err());
        assert!(zigzag_seeds(d(1, 5)).is_err());
    }

    #[test]
    fn other_generators() {
        assert_eq!(diagonal_seeds(3).unwrap().to_canonical(), "1,1;2,2;3,3");
        assert_eq!(diagonal_seeds(1).unwrap().to_canonical(), "1,1");
        let five = diagonal_seeds(5).unwrap();
        assert_eq!(five.len(), 5);
        assert!(fills(&five));

        assert_eq!(tworow_odd_seeds(3).unwrap().to_canonical(), "1,1;1,3;2,3");
        assert_eq!(tworow_odd_seeds(7).unwrap().len(), 5);
        assert_eq!(
            tworow_odd_seeds(5).unwrap().to_canonical(),
            "1,1;1,3;1,5;2,5"
        );
        assert!(tworow_odd_seeds(4).is_err());

        assert_eq!(path_seeds(5).unwrap().to_canonical(), "1,1;1,3;1,5");
        assert_eq!(path_seeds(4).unwrap().to_canonical(), "1,1;1,3;1,4");
        assert_eq!(path_seeds(1).unwrap().to_canonical(), "1,1");
    }

    #[test]
    fn optimal_construction_covers_every_shape() {
        for n in 1..=9 {
            for m in 1..=9 {
                let s = optimal_construction(d(n, m)).unwrap();
                assert_eq!(s.dims(), d(n, m));
                assert_eq!(s.len(), gamma(d(n, m)).value, "{n}x{m}");
                assert!(fills(&s), "{n}x{m}");
            }
        }
    }
}
