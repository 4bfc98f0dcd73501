//! Synchronous propagation engine.
//!
//! Every round adds all cells that some rule makes eligible against the
//! current state. The process is monotone, so the fixed point is the same
//! as adding one eligible cell at a time in any order.

use super::bits::{Board, WideBits};
use super::cellset::CellSet;
use super::dims::GridDims;

/// Precomputed masks for one grid shape.
#[derive(Clone, Copy, Debug)]
pub struct Geometry<B> {
    cols: usize,
    universe: B,
    not_first_col: B,
    not_last_col: B,
}

impl<B: Board> Geometry<B> {
    pub fn new(dims: GridDims) -> Self {
        assert!(
            dims.cell_count() <= B::CAPACITY,
            "{dims} does not fit this board width"
        );
        let (mut universe, mut not_first_col, mut not_last_col) =
            (B::empty(), B::empty(), B::empty());
        for i in 0..dims.cell_count() {
            universe.set(i);
            let c = i % dims.cols();
            if c != 0 {
                not_first_col.set(i);
            }
            if c + 1 != dims.cols() {
                not_last_col.set(i);
            }
        }
        Geometry {
            cols: dims.cols(),
            universe,
            not_first_col,
            not_last_col,
        }
    }

    #[inline]
    pub fn universe(&self) -> B {
        self.universe
    }

    /// Cells outside `x` that some rule would contaminate next.
    #[inline]
    pub fn eligible(&self, x: B) -> B {
        let m = self.cols;
        // Each board marks the cells whose neighbour in that direction is in `x`.
        let up = x.shl(m);
        let down = x.shr(m);
        let left = x.shl(1) & self.not_first_col;
        let right = x.shr(1) & self.not_last_col;
        let up_left = x.shl(m + 1) & self.not_first_col;
        let down_right = x.shr(m + 1) & self.not_last_col;
        let up_right = x.shl(m - 1) & self.not_last_col;
        let down_left = x.shr(m - 1) & self.not_first_col;

        let diag = (up_left & down_right) | (down_left & up_right);
        let vertical = up | down;
        let orth = (up & down) | (left & (right | vertical)) | (right & vertical);
        (diag | orth) & self.universe & !x
    }

    /// Fixed point reached from `seeds`.
    #[inline]
    pub fn close(&self, seeds: B) -> B {
        let mut x = seeds;
        loop {
            let new = self.eligible(x);
            if new.is_empty() {
                return x;
            }
            x |= new;
        }
    }

    #[inline]
    pub fn fills(&self, seeds: B) -> bool {
        self.close(seeds) == self.universe
    }
}

/// Round-by-round history of one closure run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub seeds: CellSet,
    /// Cells newly contaminated in each round; every entry is non-empty.
    pub rounds: Vec<CellSet>,
    pub final_state: CellSet,
    pub full: bool,
}

/// Cells not in `state` that become contaminated in the next round.
pub fn step(state: &CellSet) -> CellSet {
    let geo = Geometry::<WideBits>::new(state.dims());
    CellSet::from_bits(state.dims(), geo.eligible(state.bits()))
}

pub fn closure(seeds: &CellSet) -> ClosureTrace {
    let dims = seeds.dims();
    let geo = Geometry::<WideBits>::new(dims);
    let mut x = seeds.bits();
    let mut rounds = Vec::new();
    loop {
        let new = geo.eligible(x);
        if new.is_empty() {
            break;
        }
        rounds.push(CellSet::from_bits(dims, new));
        x |= new;
    }
    ClosureTrace {
        seeds: *seeds,
        rounds,
        final_state: CellSet::from_bits(dims, x),
        full: x == geo.universe(),
    }
}

/// Final state only, using the narrow board when the grid fits in 128 cells.
pub fn close(seeds: &CellSet) -> CellSet {
    let dims = seeds.dims();
    if dims.cell_count() <= 128 {
        let geo = Geometry::<u128>::new(dims);
        CellSet::from_u128(dims, geo.close(seeds.bits().low_u128()))
    } else {
        CellSet::from_bits(dims, Geometry::<WideBits>::new(dims).close(seeds.bits()))
    }
}

pub fn fills(seeds: &CellSet) -> bool {
    is_full(&close(seeds))
}

pub fn is_full(state: &CellSet) -> bool {
    state.len() == state.dims().cell_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::shapes::rect_set;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    fn set(g: GridDims, s: &str) -> CellSet {
        CellSet::parse(g, s).unwrap()
    }

    #[test]
    fn step_examples() {
        let g = d(3, 4);
        assert!(step(&rect_set(g, 1, 2, 1, 2).unwrap()).is_empty());
        assert_eq!(step(&set(d(3, 3), "1,1;3,3")).to_canonical(), "2,2");
        assert!(step(&CellSet::full(g)).is_empty());
    }

    #[test]
    fn closure_examples() {
        let t = closure(&set(d(3, 3), "1,1;3,3"));
        assert!(t.full);
        assert_eq!(t.rounds[0].to_canonical(), "2,2");

        assert!(closure(&set(d(4, 5), "1,1;3,3;4,5")).full);

        let empty = closure(&CellSet::empty(d(2, 3)));
        assert!(!empty.full && empty.rounds.is_empty() && empty.final_state.is_empty());
    }

    #[test]
    fn single_cell_grid() {
        let g = d(1, 1);
        assert!(!closure(&CellSet::empty(g)).full);
        assert!(closure(&set(g, "1,1")).full);
    }

    #[test]
    fn is_full_examples() {
        assert!(is_full(&CellSet::full(d(3, 4))));
        assert!(!is_full(&CellSet::empty(d(1, 1))));
        assert!(!is_full(&set(d(2, 2), "1,1;2,2")));
    }

    #[test]
    fn narrow_and_wide_boards_agree_on_large_grid() {
        // 12x12 = 144 cells forces the wide path; a diagonal fills it.
        let g = d(12, 12);
        let diag = CellSet::from_cells(g, (1..=12).map(|i| crate::Cell::new(i, i))).unwrap();
        assert!(fills(&diag));
        let g = d(8, 16);
        let s = set(g, "1,1;3,3;5,5;7,7;8,9;6,11;4,13;2,15;8,16");
        let wide = CellSet::from_bits(g, Geometry::<WideBits>::new(g).close(s.bits()));
        assert_eq!(close(&s), wide);
    }

    #[test]
    fn trace_rounds_partition_final_state() {
        let t = closure(&set(d(4, 5), "1,1;3,3;4,5"));
        let mut acc = t.seeds;
        for r in &t.rounds {
            assert!(!r.is_empty());
            assert!(r.is_disjoint(&acc));
            acc = acc.union(r);
        }
        assert_eq!(acc, t.final_state);
    }
}
