use std::path::Path;

use anyhow::{bail, Context, Result};
use contagrid::{Cell, CellSet, GridDims};
use serde::{Deserialize, Serialize};

/// A grid and its seed cells, as read from flags or a JSON file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub n: usize,
    pub m: usize,
    pub seeds: Vec<[usize; 2]>,
}

impl Scenario {
    pub fn from_flags(dims: GridDims, seeds: &str) -> Result<Self> {
        let set = CellSet::parse(dims, seeds)?;
        let cells: Vec<Cell> = if seeds.trim().is_empty() {
            Vec::new()
        } else {
            seeds
                .split(';')
                .map(|c| c.parse())
                .collect::<contagrid::Result<_>>()?
        };
        if cells.len() != set.len() {
            bail!("seed list {seeds:?} repeats a cell");
        }
        Ok(Scenario {
            n: dims.rows(),
            m: dims.cols(),
            seeds: cells.iter().map(|c| [c.row, c.col]).collect(),
        })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let s: Scenario =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        s.seed_set()?;
        Ok(s)
    }

    pub fn dims(&self) -> Result<GridDims> {
        Ok(GridDims::new(self.n, self.m)?)
    }

    /// Validated seed set: every cell in bounds and listed once.
    pub fn seed_set(&self) -> Result<CellSet> {
        let cells: Vec<Cell> = self.seeds.iter().map(|&[r, c]| Cell::new(r, c)).collect();
        Ok(CellSet::from_distinct_cells(self.dims()?, &cells)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_keep_the_given_order() {
        let d = GridDims::new(4, 5).unwrap();
        let s = Scenario::from_flags(d, "3,3;1,1;4,5").unwrap();
        assert_eq!(s.seeds, [[3, 3], [1, 1], [4, 5]]);
        assert!(Scenario::from_flags(d, "1,1;1,1").is_err());
        assert!(Scenario::from_flags(d, "1,1;9,9").is_err());
        assert!(Scenario::from_flags(d, "").unwrap().seeds.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let s = Scenario {
            n: 3,
            m: 3,
            seeds: vec![[1, 1], [3, 3]],
        };
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"n":3,"m":3,"seeds":[[1,1],[3,3]]}"#);
        assert_eq!(serde_json::from_str::<Scenario>(&text).unwrap(), s);
        let bad = Scenario {
            n: 3,
            m: 3,
            seeds: vec![[1, 1], [1, 1]],
        };
        assert!(bad.seed_set().is_err());
    }
}
