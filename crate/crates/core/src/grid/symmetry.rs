use super::cellset::CellSet;
use super::dims::{Cell, GridDims};

/// The eight symmetries of a rectangle (dihedral group of the square,
/// with the transposing ones swapping the grid shape).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Transpose,
    FlipRows,
    FlipCols,
    Rot90,
    Rot180,
    Rot270,
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Transpose,
        Symmetry::FlipRows,
        Symmetry::FlipCols,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::AntiTranspose,
    ];

    pub fn swaps_dims(self) -> bool {
        matches!(
            self,
            Symmetry::Transpose | Symmetry::Rot90 | Symmetry::Rot270 | Symmetry::AntiTranspose
        )
    }

    pub fn inverse(self) -> Symmetry {
        match self {
            Symmetry::Rot90 => Symmetry::Rot270,
            Symmetry::Rot270 => Symmetry::Rot90,
            s => s,
        }
    }

    pub fn image_dims(self, dims: GridDims) -> GridDims {
        if self.swaps_dims() {
            dims.transposed()
        } else {
            dims
        }
    }

    /// Image of one cell. Rotations are clockwise.
    pub fn apply_cell(self, dims: GridDims, c: Cell) -> Cell {
        let (n, m) = (dims.rows(), dims.cols());
        let (r, k) = (c.row, c.col);
        match self {
            Symmetry::Identity => c,
            Symmetry::Transpose => Cell::new(k, r),
            Symmetry::FlipRows => Cell::new(n + 1 - r, k),
            Symmetry::FlipCols => Cell::new(r, m + 1 - k),
            Symmetry::Rot90 => Cell::new(k, n + 1 - r),
            Symmetry::Rot180 => Cell::new(n + 1 - r, m + 1 - k),
            Symmetry::Rot270 => Cell::new(m + 1 - k, r),
            Symmetry::AntiTranspose => Cell::new(m + 1 - k, n + 1 - r),
        }
    }

    pub fn apply(self, set: &CellSet) -> CellSet {
        let dims = set.dims();
        let out = self.image_dims(dims);
        CellSet::from_cells(out, set.iter().map(|c| self.apply_cell(dims, c)))
            .expect("symmetry images stay in bounds")
    }
}

/// `(image dims, image set)` of `set` under `sym`.
pub fn symmetry_image(set: &CellSet, sym: Symmetry) -> (GridDims, CellSet) {
    let img = sym.apply(set);
    (img.dims(), img)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    #[test]
    fn examples() {
        let s = CellSet::parse(d(2, 3), "1,2").unwrap();
        let (g, img) = symmetry_image(&s, Symmetry::Transpose);
        assert_eq!(g, d(3, 2));
        assert_eq!(img.to_canonical(), "2,1");

        let corner = CellSet::parse(d(4, 7), "1,1").unwrap();
        assert_eq!(Symmetry::Rot180.apply(&corner).to_canonical(), "4,7");

        let s = CellSet::parse(d(3, 3), "1,1;3,3").unwrap();
        assert_eq!(Symmetry::FlipRows.apply(&s).to_canonical(), "1,3;3,1");
    }

    #[test]
    fn inverse_round_trips() {
        let s = CellSet::parse(d(3, 5), "1,2;3,5;2,1").unwrap();
        for sym in Symmetry::ALL {
            assert_eq!(sym.inverse().apply(&sym.apply(&s)), s, "{sym:?}");
        }
    }
}
