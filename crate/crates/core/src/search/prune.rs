use serde::Serialize;

use super::{enumerate_size, EnumerationResult, Parallelism, SearchBudget, Space};
use crate::closed_forms::gamma_value;
use crate::error::{Error, Result};
use crate::grid::bits::Board;
use crate::grid::GridDims;

/// Candidate filters applied before closure evaluation.
///
/// `boundary` drops seed sets missing a grid edge; `empty_pair` drops sets
/// with two consecutive seed-free rows or columns. Both follow from proven
/// impossibility results. `odd_columns` replaces the candidate space by one
/// seed per odd column; it is only an accelerator and every use should be
/// checked against an unpruned run at a smaller size.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PruneConfig {
    pub boundary: bool,
    pub empty_pair: bool,
    pub odd_columns: bool,
}

impl PruneConfig {
    pub fn none() -> Self {
        PruneConfig::default()
    }

    /// The two proven prunes.
    pub fn safe() -> Self {
        PruneConfig {
            boundary: true,
            empty_pair: true,
            odd_columns: false,
        }
    }

    pub fn all() -> Self {
        PruneConfig {
            boundary: true,
            empty_pair: true,
            odd_columns: true,
        }
    }

    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.boundary {
            out.push("boundary");
        }
        if self.empty_pair {
            out.push("empty-pair");
        }
        if self.odd_columns {
            out.push("odd-columns");
        }
        out
    }

    pub fn odd_columns_compatible(dims: GridDims, k: usize) -> bool {
        dims.cols() % 2 == 1 && k == dims.cols().div_ceil(2)
    }

    pub(crate) fn space(&self, dims: GridDims, k: usize) -> Result<Space> {
        if self.odd_columns {
            if !Self::odd_columns_compatible(dims, k) {
                return Err(Error::Incompatible(format!(
                    "odd-column restriction needs an odd column count and one seed per odd column; {dims} with k={k}"
                )));
            }
            Ok(Space::OddColumns {
                rows: dims.rows(),
                cols: dims.cols(),
            })
        } else {
            Ok(Space::Combinations {
                cells: dims.cell_count(),
                k,
            })
        }
    }
}

/// Board masks implementing the boundary and empty-pair filters.
pub(crate) struct Filter<B> {
    edges: Vec<B>,
    line_pairs: Vec<B>,
}

impl<B: Board> Filter<B> {
    pub(crate) fn new(dims: GridDims, prune: PruneConfig) -> Self {
        let (n, m) = (dims.rows(), dims.cols());
        let row = |r: usize| {
            let mut b = B::empty();
            for c in 0..m {
                b.set(r * m + c);
            }
            b
        };
        let col = |c: usize| {
            let mut b = B::empty();
            for r in 0..n {
                b.set(r * m + c);
            }
            b
        };
        let mut edges = Vec::new();
        if prune.boundary {
            edges = vec![row(0), row(n - 1), col(0), col(m - 1)];
        }
        let mut line_pairs = Vec::new();
        if prune.empty_pair {
            line_pairs.extend((0..n.saturating_sub(1)).map(|r| row(r) | row(r + 1)));
            line_pairs.extend((0..m.saturating_sub(1)).map(|c| col(c) | col(c + 1)));
        }
        Filter { edges, line_pairs }
    }

    #[inline]
    pub(crate) fn admits(&self, seeds: B) -> bool {
        self.edges.iter().all(|&e| !(e & seeds).is_empty())
            && self.line_pairs.iter().all(|&p| !(p & seeds).is_empty())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PruneVariant {
    pub prune: PruneConfig,
    pub count: u128,
    pub candidates: u128,
    pub same_witnesses: bool,
}

/// Unpruned baseline against each applicable prune alone and all together.
#[derive(Clone, Debug, Serialize)]
pub struct PruneEquivalenceReport {
    pub dims: GridDims,
    pub baseline_count: u128,
    pub baseline_candidates: u128,
    pub variants: Vec<PruneVariant>,
    /// Prunes that could not be applied to these dimensions.
    pub skipped: Vec<&'static str>,
    pub equivalent: bool,
}

pub fn verify_prune_equivalence(
    dims: GridDims,
    budget: SearchBudget,
    par: Parallelism,
) -> Result<PruneEquivalenceReport> {
    let k = gamma_value(dims);
    let baseline = enumerate_size(dims, k, budget, PruneConfig::none(), true, par)?;
    let odd_ok = PruneConfig::odd_columns_compatible(dims, k);

    let mut configs = vec![
        PruneConfig {
            boundary: true,
            ..PruneConfig::none()
        },
        PruneConfig {
            empty_pair: true,
            ..PruneConfig::none()
        },
    ];
    let mut skipped = Vec::new();
    if odd_ok {
        configs.push(PruneConfig {
            odd_columns: true,
            ..PruneConfig::none()
        });
        configs.push(PruneConfig::all());
    } else {
        skipped.push("odd-columns");
        configs.push(PruneConfig::safe());
    }

    let variants = configs
        .into_iter()
        .map(|prune| {
            let r: EnumerationResult = enumerate_size(dims, k, budget, prune, true, par)?;
            Ok(PruneVariant {
                prune,
                count: r.count,
                candidates: r.candidates_examined,
                same_witnesses: r.witnesses == baseline.witnesses,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let equivalent = variants
        .iter()
        .all(|v| v.count == baseline.count && v.same_witnesses);
    Ok(PruneEquivalenceReport {
        dims,
        baseline_count: baseline.count,
        baseline_candidates: baseline.candidates_examined,
        variants,
        skipped,
        equivalent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    fn report(n: usize, m: usize) -> PruneEquivalenceReport {
        verify_prune_equivalence(d(n, m), SearchBudget::default(), Parallelism::default()).unwrap()
    }

    #[test]
    fn examples() {
        let r = report(3, 5);
        assert!(r.equivalent);
        assert_eq!(r.baseline_count, 10);
        assert!(r.variants.iter().all(|v| v.count == 10));

        let r = report(2, 4);
        assert!(r.equivalent);
        assert_eq!(r.baseline_count, 8);
        assert_eq!(r.skipped, ["odd-columns"]);

        let r = report(3, 3);
        assert!(r.equivalent);
        let odd = r
            .variants
            .iter()
            .find(|v| v.prune.odd_columns && !v.prune.boundary)
            .unwrap();
        assert_eq!(odd.count, 2);
        assert_eq!(odd.candidates, 9);
    }

    #[test]
    fn prunes_reduce_work() {
        let r = report(4, 5);
        assert!(r.equivalent);
        assert!(r
            .variants
            .iter()
            .all(|v| v.candidates < r.baseline_candidates));
    }

    #[test]
    fn odd_columns_incompatible_with_two_rows_odd() {
        // gamma(2,5) = 4 seeds but there are only 3 odd columns.
        let err = enumerate_size(
            d(2, 5),
            4,
            SearchBudget::default(),
            PruneConfig::all(),
            false,
            Parallelism::default(),
        );
        assert!(matches!(err, Err(Error::Incompatible(_))));
        assert_eq!(report(2, 5).skipped, ["odd-columns"]);
    }
}
