//! Exhaustive searches over seed sets.
//!
//! Every search walks a fixed, ranked candidate space (colex-ordered
//! k-subsets, one-seed-per-odd-column placements, or all subsets) split into
//! fixed-size rank ranges. Ranges are evaluated in parallel and merged in
//! rank order, so results do not depend on the worker count.

pub mod combin;
mod feasible;
mod lift;
mod prune;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::closed_forms::gamma_value;
use crate::error::{Error, Result};
use crate::grid::bits::{Board, WideBits};
use crate::grid::engine::Geometry;
use crate::grid::{CellSet, GridDims};

pub use feasible::{count_feasible, count_feasible_raw, path_feasible_count};
pub use lift::{lift_solutions, LiftReport};
pub use prune::{verify_prune_equivalence, PruneConfig, PruneEquivalenceReport, PruneVariant};

/// Cap on the number of candidate subsets a search may enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_candidates: u128,
    pub force: bool,
}

impl SearchBudget {
    pub const DEFAULT_MAX: u128 = 200_000_000;

    pub fn new(max_candidates: u128) -> Self {
        SearchBudget {
            max_candidates,
            force: false,
        }
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            max_candidates: u128::MAX,
            force: true,
        }
    }

    pub fn check(&self, candidates: u128) -> Result<()> {
        if candidates > self.max_candidates && !self.force {
            Err(Error::Budget {
                candidates,
                limit: self.max_candidates,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_MAX)
    }
}

/// Worker settings for a search. `jobs == 0` uses every available core.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Parallelism {
    pub jobs: usize,
}

impl Parallelism {
    pub fn jobs(jobs: usize) -> Self {
        Parallelism { jobs }
    }
}

/// Outcome of counting full-closure seed sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub dims: GridDims,
    /// Subset size, or `None` when every size was counted.
    pub k: Option<usize>,
    pub count: u128,
    /// Sorted by canonical text form when materialized.
    pub witnesses: Option<Vec<CellSet>>,
    pub prune: PruneConfig,
    /// Candidates whose closure was actually evaluated.
    pub candidates_examined: u128,
    /// Candidates in the search space before pruning.
    pub candidates_generated: u128,
}

impl Serialize for EnumerationResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Dims {
            n: usize,
            m: usize,
        }
        let mut st = s.serialize_struct("EnumerationResult", 6)?;
        st.serialize_field(
            "dims",
            &Dims {
                n: self.dims.rows(),
                m: self.dims.cols(),
            },
        )?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("count", &self.count)?;
        st.serialize_field("prunes", &self.prune.labels())?;
        st.serialize_field("candidates", &self.candidates_examined)?;
        match &self.witnesses {
            Some(w) => {
                let text: Vec<String> = w.iter().map(CellSet::to_canonical).collect();
                st.serialize_field("witnesses", &text)?;
            }
            None => st.skip_field("witnesses")?,
        }
        st.end()
    }
}

/// Number of ranks handled by one work unit.
const CHUNK: u128 = 1 << 13;

/// A ranked candidate space.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Space {
    /// k-subsets of all cells, colex order.
    Combinations { cells: usize, k: usize },
    /// One seed in each odd column; rank digits (base `rows`, least
    /// significant = column 1) give the seed rows.
    OddColumns { rows: usize, cols: usize },
    /// Every subset; the rank is the bitmask.
    Subsets { cells: usize },
}

impl Space {
    pub(crate) fn size(&self) -> u128 {
        match *self {
            Space::Combinations { cells, k } => combin::binomial(cells, k),
            Space::OddColumns { rows, cols } => (rows as u128)
                .checked_pow(cols.div_ceil(2) as u32)
                .unwrap_or(u128::MAX),
            Space::Subsets { cells } => 1u128.checked_shl(cells as u32).unwrap_or(u128::MAX),
        }
    }

    /// Calls `f` on every candidate with rank in `start..start + len`.
    fn for_range<B: Board>(&self, start: u128, len: u128, mut f: impl FnMut(B)) {
        match *self {
            Space::Combinations { cells, k } => {
                let mut combo = combin::unrank(start, k);
                for i in 0..len {
                    let mut b = B::empty();
                    for &c in &combo {
                        b.set(c);
                    }
                    f(b);
                    if i + 1 < len && !combin::next(&mut combo, cells) {
                        break;
                    }
                }
            }
            Space::OddColumns { rows, cols } => {
                for r in start..start + len {
                    let mut b = B::empty();
                    let mut rest = r;
                    for col in (0..cols).step_by(2) {
                        let row = (rest % rows as u128) as usize;
                        rest /= rows as u128;
                        b.set(row * cols + col);
                    }
                    f(b);
                }
            }
            Space::Subsets { .. } => {
                for r in start..start + len {
                    f(B::from_wide(WideBits::from_u128(r)));
                }
            }
        }
    }
}

#[derive(Default)]
struct Tally<B> {
    count: u128,
    examined: u128,
    witnesses: Vec<B>,
}

/// Evaluates every candidate of `space` and counts those with full closure.
pub(crate) fn run_space(
    dims: GridDims,
    space: Space,
    prune: PruneConfig,
    materialize: bool,
    par: Parallelism,
) -> (u128, u128, Option<Vec<CellSet>>) {
    if dims.cell_count() <= 128 {
        run_board::<u128>(dims, space, prune, materialize, par)
    } else {
        run_board::<WideBits>(dims, space, prune, materialize, par)
    }
}

fn run_board<B: Board + Send + Sync>(
    dims: GridDims,
    space: Space,
    prune: PruneConfig,
    materialize: bool,
    par: Parallelism,
) -> (u128, u128, Option<Vec<CellSet>>) {
    let geo = Geometry::<B>::new(dims);
    let filter = prune::Filter::<B>::new(dims, prune);
    let total = space.size();
    let chunks =
        u64::try_from(total.div_ceil(CHUNK)).expect("candidate space too large to enumerate");

    let work = |chunk: u64| {
        let start = chunk as u128 * CHUNK;
        let len = CHUNK.min(total - start);
        let mut t = Tally {
            count: 0,
            examined: 0,
            witnesses: Vec::new(),
        };
        space.for_range::<B>(start, len, |b| {
            if !filter.admits(b) {
                return;
            }
            t.examined += 1;
            if geo.fills(b) {
                t.count += 1;
                if materialize {
                    t.witnesses.push(b);
                }
            }
        });
        t
    };

    let tallies: Vec<Tally<B>> = if par.jobs == 1 || chunks <= 1 {
        (0..chunks).map(work).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(par.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| (0..chunks).into_par_iter().map(work).collect())
    };

    let mut count = 0;
    let mut examined = 0;
    let mut witnesses = Vec::new();
    for t in tallies {
        count += t.count;
        examined += t.examined;
        witnesses.extend(
            t.witnesses
                .into_iter()
                .map(|b| CellSet::from_bits(dims, b.to_wide())),
        );
    }
    let witnesses = materialize.then(|| sort_canonical(witnesses));
    (count, examined, witnesses)
}

pub(crate) fn sort_canonical(sets: Vec<CellSet>) -> Vec<CellSet> {
    let mut keyed: Vec<(String, CellSet)> =
        sets.into_iter().map(|s| (s.to_canonical(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, s)| s).collect()
}

/// Counts (and optionally lists) all seed sets of size `k` with full closure.
pub fn enumerate_size(
    dims: GridDims,
    k: usize,
    budget: SearchBudget,
    prune: PruneConfig,
    materialize: bool,
    par: Parallelism,
) -> Result<EnumerationResult> {
    let space = prune.space(dims, k)?;
    let generated = space.size();
    budget.check(generated)?;
    let (count, examined, witnesses) = run_space(dims, space, prune, materialize, par);
    Ok(EnumerationResult {
        dims,
        k: Some(k),
        count,
        witnesses,
        prune,
        candidates_examined: examined,
        candidates_generated: generated,
    })
}

/// All optimal seed sets, i.e. full-closure sets of size `gamma(dims)`.
pub fn enumerate_optimal(
    dims: GridDims,
    budget: SearchBudget,
    prune: PruneConfig,
    materialize: bool,
    par: Parallelism,
) -> Result<EnumerationResult> {
    enumerate_size(dims, gamma_value(dims), budget, prune, materialize, par)
}

/// Smallest seed-set size with full closure, found by exhaustive search,
/// together with the least witness in canonical text order.
pub fn brute_gamma(
    dims: GridDims,
    budget: SearchBudget,
    prune: PruneConfig,
    par: Parallelism,
) -> Result<(usize, CellSet)> {
    if prune.odd_columns {
        return Err(Error::Incompatible(
            "the odd-column restriction only applies at the optimal size; brute_gamma scans every size".into(),
        ));
    }
    let n = dims.cell_count();
    // The answer is unknown up front, so the budget is charged per size as
    // the scan proceeds.
    let mut spent: u128 = 0;
    for k in 1..=n {
        spent = spent.saturating_add(combin::binomial(n, k));
        budget.check(spent)?;
        let r = enumerate_size(dims, k, SearchBudget::unlimited(), prune, true, par)?;
        if let Some(first) = r.witnesses.and_then(|w| w.into_iter().next()) {
            return Ok((k, first));
        }
    }
    unreachable!("the full grid always has full closure")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::gamma;

    fn d(n: usize, m: usize) -> GridDims {
        GridDims::new(n, m).unwrap()
    }

    fn alpha(n: usize, m: usize) -> u128 {
        enumerate_optimal(
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
    fn brute_gamma_examples() {
        let none = PruneConfig::none();
        let p = Parallelism::jobs(1);
        let (g, w) = brute_gamma(d(4, 5), SearchBudget::default(), none, p).unwrap();
        assert_eq!(g, 3);
        assert!(crate::grid::fills(&w) && w.len() == 3);

        let (g, w) = brute_gamma(d(1, 3), SearchBudget::default(), none, p).unwrap();
        assert_eq!((g, w.to_canonical().as_str()), (2, "1,1;1,3"));

        let (g, w) = brute_gamma(d(3, 3), SearchBudget::default(), none, p).unwrap();
        assert_eq!((g, w.to_canonical().as_str()), (2, "1,1;3,3"));
        assert_eq!(alpha(3, 3), 2);
    }

    #[test]
    fn brute_gamma_rejects_odd_column_prune() {
        let r = brute_gamma(
            d(3, 3),
            SearchBudget::default(),
            PruneConfig::all(),
            Parallelism::default(),
        );
        assert!(matches!(r, Err(Error::Incompatible(_))));
    }

    #[test]
    fn enumerate_optimal_examples() {
        assert_eq!(alpha(2, 3), 10);
        assert_eq!(alpha(4, 4), 12);
        assert_eq!(alpha(1, 7), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let tight = SearchBudget::new(100);
        let err = enumerate_optimal(
            d(4, 5),
            tight,
            PruneConfig::none(),
            false,
            Parallelism::default(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::Budget {
                candidates: 1140,
                limit: 100
            }
        );
        let forced = SearchBudget {
            force: true,
            ..tight
        };
        assert!(enumerate_optimal(
            d(4, 5),
            forced,
            PruneConfig::none(),
            false,
            Parallelism::default()
        )
        .is_ok());
    }

    #[test]
    fn witnesses_are_sorted_full_and_sized() {
        let r = enumerate_optimal(
            d(3, 4),
            SearchBudget::default(),
            PruneConfig::none(),
            true,
            Parallelism::default(),
        )
        .unwrap();
        let w = r.witnesses.as_ref().unwrap();
        assert_eq!(r.count, w.len() as u128);
        assert_eq!(r.count, 20);
        let text: Vec<_> = w.iter().map(CellSet::to_canonical).collect();
        assert!(text.windows(2).all(|p| p[0] < p[1]));
        for s in w {
            assert_eq!(s.len(), gamma(d(3, 4)).value);
            assert!(crate::grid::fills(s));
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let run = |jobs| {
            enumerate_optimal(
                d(4, 6),
                SearchBudget::default(),
                PruneConfig::none(),
                true,
                Parallelism::jobs(jobs),
            )
            .unwrap()
        };
        let one = run(1);
        assert_eq!(one, run(2));
        assert_eq!(one, run(8));
    }

    #[test]
    fn json_shape() {
        let r = enumerate_optimal(
            d(3, 3),
            SearchBudget::default(),
            PruneConfig::none(),
            true,
            Parallelism::default(),
        )
        .unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["dims"]["n"], 3);
        assert_eq!(v["k"], 2);
        assert_eq!(v["count"], 2);
        assert_eq!(v["candidates"], 36);
        assert_eq!(v["witnesses"][0], "1,1;3,3");
        assert!(v["prunes"].as_array().unwrap().is_empty());
        let bare = enumerate_optimal(
            d(3, 3),
            SearchBudget::default(),
            PruneConfig::none(),
            false,
            Parallelism::default(),
        )
        .unwrap();
        assert!(serde_json::to_value(&bare)
            .unwrap()
            .get("witnesses")
            .is_none());
    }
}
