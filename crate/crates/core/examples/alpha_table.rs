//! Prints the triangle of optimal-solution counts with timings.
//!
//! `cargo run --release -p contagrid --example alpha_table -- 9`

use std::time::Instant;

use contagrid::search::{enumerate_optimal, Parallelism, PruneConfig, SearchBudget};
use contagrid::GridDims;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let all = Instant::now();
    for n in 1..=max {
        for m in n..=max {
            let t = Instant::now();
            let dims = GridDims::new(n, m).unwrap();
            let r = enumerate_optimal(
                dims,
                SearchBudget::unlimited(),
                PruneConfig::safe(),
                false,
                Parallelism::default(),
            )
            .unwrap();
            println!("{n}x{m}\t{}\t{:.2?}", r.count, t.elapsed());
        }
    }
    println!("total {:.2?}", all.elapsed());
}
