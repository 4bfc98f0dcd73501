use std::collections::BTreeSet;

use serde::Serialize;

use super::{enumerate_optimal, Parallelism, PruneConfig, SearchBudget};
use crate::closed_forms::gamma_value;
use crate::error::{input, Result};
use crate::grid::{fills, Cell, CellSet, GridDims};

#[derive(Clone, Debug, Serialize)]
pub struct LiftReport {
    pub dims: GridDims,
    pub alpha_narrow: u128,
    pub alpha_wide: u128,
    /// Distinct sets obtained by extending every narrow solution with one
    /// cell of the last column.
    pub lifted_distinct: usize,
    /// `rows * alpha_narrow`.
    pub lifted_expected: u128,
    /// Every lifted set is an optimal solution of the wide grid.
    pub all_lifted_optimal: bool,
    /// A wide solution whose first `m - 2` columns do not fill the narrow grid.
    #[serde(serialize_with = "serialize_opt_set")]
    pub non_restricting_witness: Option<CellSet>,
}

fn serialize_opt_set<S: serde::Serializer>(
    s: &Option<CellSet>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match s {
        Some(set) => ser.serialize_some(&set.to_canonical()),
        None => ser.serialize_none(),
    }
}

/// Relates the optimal solutions of `n x (m-2)` and `n x m` for odd `m`.
pub fn lift_solutions(
    dims: GridDims,
    budget: SearchBudget,
    par: Parallelism,
) -> Result<LiftReport> {
    let (n, m) = (dims.rows(), dims.cols());
    if !(n >= 3 && m >= n + 2 && m % 2 == 1) {
        return input(format!(
            "lifting needs m - 2 >= n >= 3 with m odd, got {dims}"
        ));
    }
    let narrow_dims = GridDims::new(n, m - 2)?;
    let narrow = enumerate_optimal(narrow_dims, budget, PruneConfig::safe(), true, par)?;
    let wide = enumerate_optimal(dims, budget, PruneConfig::safe(), true, par)?;
    let wide_set: BTreeSet<String> = wide
        .witnesses
        .iter()
        .flatten()
        .map(CellSet::to_canonical)
        .collect();
    let k = gamma_value(dims);

    let mut lifted = BTreeSet::new();
    let mut all_optimal = true;
    for s in narrow.witnesses.iter().flatten() {
        for r in 1..=n {
            let mut big = s.widen(m)?;
            big.insert(Cell::new(r, m))?;
            all_optimal &= big.len() == k && fills(&big) && wide_set.contains(&big.to_canonical());
            lifted.insert(big.to_canonical());
        }
    }

    let mut non_restricting = None;
    for s in wide.witnesses.iter().flatten() {
        if !fills(&s.restrict_cols(m - 2)?) {
            non_restricting = Some(*s);
            break;
        }
    }

    Ok(LiftReport {
        dims,
        alpha_narrow: narrow.count,
        alpha_wide: wide.count,
        lifted_distinct: lifted.len(),
        lifted_expected: n as u128 * narrow.count,
        all_lifted_optimal: all_optimal,
        non_restricting_witness: non_restricting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    #[test]
    fn three_by_five() {
        let r = lift_solutions(d(3, 5), SearchBudget::default(), Parallelism::default()).unwrap();
        assert_eq!((r.alpha_narrow, r.alpha_wide), (2, 10));
        assert_eq!(r.lifted_distinct, 6);
        assert_eq!(r.lifted_expected, 6);
        assert!(r.all_lifted_optimal);
        let w = r.non_restricting_witness.unwrap();
        assert!(!fills(&w.restrict_cols(3).unwrap()));
    }

    #[test]
    fn three_by_seven() {
        let r = lift_solutions(d(3, 7), SearchBudget::default(), Parallelism::default()).unwrap();
        assert_eq!((r.alpha_narrow, r.alpha_wide), (10, 40));
        assert_eq!(r.lifted_distinct, 30);
        assert!(r.all_lifted_optimal);
        assert!(r.non_restricting_witness.is_some());
    }

    #[test]
    fn domain() {
        for (n, m) in [(3, 4), (3, 3), (2, 5), (5, 5)] {
            assert!(
                lift_solutions(d(n, m), SearchBudget::default(), Parallelism::default()).is_err()
            );
        }
    }
}
