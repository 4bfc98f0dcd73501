use super::{run_space, EnumerationResult, Parallelism, PruneConfig, SearchBudget, Space};
use crate::error::{input, Error, Result};
use crate::grid::GridDims;

/// Full-closure subsets of a `1 x m` path.
///
/// On a single row only the two-sided rule applies, so a set fills the path
/// iff it holds both end cells and leaves no two consecutive cells out.
pub fn path_feasible_count(m: usize) -> Result<u128> {
    if m == 0 {
        return input("path length must be positive");
    }
    if m == 1 {
        return Ok(1);
    }
    // Runs over the m - 2 interior cells: (last cell present, last cell absent).
    let (mut present, mut absent): (u128, u128) = (1, 0);
    for _ in 0..m - 2 {
        let p = present.checked_add(absent);
        let a = present;
        match p {
            Some(p) => (present, absent) = (p, a),
            None => return input(format!("feasible count for 1x{m} overflows 128 bits")),
        }
    }
    // The last end cell is present, so the interior may end either way.
    present.checked_add(absent).map_or_else(
        || input(format!("feasible count for 1x{m} overflows 128 bits")),
        Ok,
    )
}

/// Every subset of the grid, closure-tested one by one.
pub fn count_feasible_raw(
    dims: GridDims,
    budget: SearchBudget,
    prune: PruneConfig,
    materialize: bool,
    par: Parallelism,
) -> Result<EnumerationResult> {
    if prune.odd_columns {
        return Err(Error::Incompatible(
            "the odd-column restriction only applies to optimal sets".into(),
        ));
    }
    let space = Space::Subsets {
        cells: dims.cell_count(),
    };
    let generated = space.size();
    budget.check(generated)?;
    if dims.cell_count() >= 128 {
        return input(format!("{dims} has too many subsets to enumerate"));
    }
    let (count, examined, witnesses) = run_space(dims, space, prune, materialize, par);
    Ok(EnumerationResult {
        dims,
        k: None,
        count,
        witnesses,
        prune,
        candidates_examined: examined,
        candidates_generated: generated,
    })
}

/// Number of seed sets of any size whose closure is the whole grid.
///
/// Single-row (or single-column) grids use the path characterization unless
/// witnesses are wanted; everything else is raw enumeration of all
/// `2^(n*m)` subsets.
pub fn count_feasible(
    dims: GridDims,
    budget: SearchBudget,
    prune: PruneConfig,
    materialize: bool,
    par: Parallelism,
) -> Result<EnumerationResult> {
    let canon = dims.canonical();
    if canon.rows() == 1 && !materialize && !prune.odd_columns {
        return Ok(EnumerationResult {
            dims,
            k: None,
            count: path_feasible_count(canon.cols())?,
            witnesses: None,
            prune: PruneConfig::none(),
            candidates_examined: 0,
            candidates_generated: 0,
        });
    }
    count_feasible_raw(dims, budget, prune, materialize, par)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    fn raw(n: usize, m: usize) -> u128 {
        count_feasible_raw(
            d(n, m),
            SearchBudget::default(),
            PruneConfig::none(),
            false,
            Parallelism::default(),
        )
        .unwrap()
        .count
    }

    #[test]
    fn path_characterization_matches_raw_enumeration() {
        for m in 1..=16 {
            assert_eq!(path_feasible_count(m).unwrap(), raw(1, m), "1x{m}");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(raw(1, 2), 1);
        assert_eq!(raw(1, 4), 3);
        // {1,2,4,5} fills the 5-path as well as the four supersets of {1,3,5}.
        assert_eq!(raw(1, 5), 5);
        assert_eq!(raw(2, 2), 7);
        let p = count_feasible(
            d(5, 1),
            SearchBudget::default(),
            PruneConfig::none(),
            false,
            Parallelism::default(),
        );
        assert_eq!(p.unwrap().count, 5);
    }

    #[test]
    fn proven_prunes_keep_every_feasible_set() {
        for (n, m) in [(2, 2), (2, 5), (3, 3), (3, 4), (1, 9)] {
            let all = count_feasible_raw(
                d(n, m),
                SearchBudget::default(),
                PruneConfig::none(),
                true,
                Parallelism::default(),
            );
            let safe = count_feasible_raw(
                d(n, m),
                SearchBudget::default(),
                PruneConfig::safe(),
                true,
                Parallelism::default(),
            );
            let (all, safe) = (all.unwrap(), safe.unwrap());
            assert_eq!(all.count, safe.count);
            assert_eq!(all.witnesses, safe.witnesses);
            assert!(safe.candidates_examined < all.candidates_examined);
        }
        let w = count_feasible(
            d(1, 5),
            SearchBudget::default(),
            PruneConfig::none(),
            true,
            Parallelism::default(),
        );
        let text: Vec<String> = w
            .unwrap()
            .witnesses
            .unwrap()
            .iter()
            .map(|s| s.to_canonical())
            .collect();
        assert_eq!(
            text,
            [
                "1,1;1,2;1,3;1,4;1,5",
                "1,1;1,2;1,3;1,5",
                "1,1;1,2;1,4;1,5",
                "1,1;1,3;1,4;1,5",
                "1,1;1,3;1,5"
            ]
        );
    }

    #[test]
    fn overflow_is_an_error() {
        assert!(path_feasible_count(180).is_ok());
        assert!(path_feasible_count(300).is_err());
    }
}
