//! Seed-set predicates and helper shapes used by the search prunes.

use super::cellset::CellSet;
use super::dims::{Cell, GridDims};
use crate::error::{input, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Rows,
    Cols,
}

/// The axis-aligned block `r1..=r2` x `c1..=c2`.
pub fn rect_set(dims: GridDims, r1: usize, r2: usize, c1: usize, c2: usize) -> Result<CellSet> {
    if r1 < 1 || r1 > r2 || r2 > dims.rows() || c1 < 1 || c1 > c2 || c2 > dims.cols() {
        return input(format!(
            "rectangle rows {r1}..={r2}, cols {c1}..={c2} is not inside {dims}"
        ));
    }
    CellSet::from_cells(
        dims,
        (r1..=r2).flat_map(|r| (c1..=c2).map(move |c| Cell::new(r, c))),
    )
}

/// Bitmask of occupied lines along `axis` (bit `i` = line `i + 1`).
fn occupied_lines(seeds: &CellSet, axis: Axis) -> Vec<bool> {
    let dims = seeds.dims();
    let len = match axis {
        Axis::Rows => dims.rows(),
        Axis::Cols => dims.cols(),
    };
    let mut occ = vec![false; len];
    for c in seeds.iter() {
        match axis {
            Axis::Rows => occ[c.row - 1] = true,
            Axis::Cols => occ[c.col - 1] = true,
        }
    }
    occ
}

/// Whether two consecutive rows (or columns) hold no seed.
pub fn has_adjacent_empty_lines(seeds: &CellSet, axis: Axis) -> bool {
    occupied_lines(seeds, axis)
        .windows(2)
        .any(|w| !w[0] && !w[1])
}

/// Whether the top row, bottom row, first column and last column each hold a seed.
pub fn boundary_edges_covered(seeds: &CellSet) -> bool {
    let rows = occupied_lines(seeds, Axis::Rows);
    let cols = occupied_lines(seeds, Axis::Cols);
    rows[0] && rows[rows.len() - 1] && cols[0] && cols[cols.len() - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    fn set(g: GridDims, s: &str) -> CellSet {
        CellSet::parse(g, s).unwrap()
    }

    #[test]
    fn adjacent_empty_lines_examples() {
        assert!(has_adjacent_empty_lines(
            &set(d(2, 4), "1,1;2,4"),
            Axis::Cols
        ));
        assert!(!has_adjacent_empty_lines(
            &set(d(3, 3), "1,1;3,3"),
            Axis::Cols
        ));
        assert!(!has_adjacent_empty_lines(
            &set(d(1, 5), "1,1;1,3;1,5"),
            Axis::Cols
        ));
        assert!(has_adjacent_empty_lines(
            &set(d(4, 2), "1,1;4,2"),
            Axis::Rows
        ));
    }

    #[test]
    fn boundary_examples() {
        assert!(boundary_edges_covered(&set(d(3, 3), "1,1;3,3")));
        assert!(!boundary_edges_covered(&set(d(3, 3), "2,2")));
        assert!(boundary_edges_covered(&set(d(4, 5), "1,1;3,3;4,5")));
        assert!(boundary_edges_covered(&set(d(1, 1), "1,1")));
        assert!(!boundary_edges_covered(&set(d(1, 3), "1,1")));
    }

    #[test]
    fn rect_examples() {
        let g = d(3, 4);
        assert_eq!(rect_set(g, 1, 3, 1, 4).unwrap(), CellSet::full(g));
        assert_eq!(rect_set(g, 2, 2, 2, 2).unwrap().to_canonical(), "2,2");
        assert_eq!(rect_set(g, 1, 2, 1, 2).unwrap().len(), 4);
        assert!(rect_set(g, 2, 1, 1, 1).is_err());
        assert!(rect_set(g, 1, 4, 1, 1).is_err());
        assert!(rect_set(g, 0, 1, 1, 1).is_err());
    }
}
