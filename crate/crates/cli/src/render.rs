use contagrid::{CellSet, ClosureTrace};

/// One character per cell: `S` seed, `#` contaminated later, `.` clean.
pub fn frame(seeds: &CellSet, state: &CellSet) -> String {
    let dims = seeds.dims();
    let mut out = String::with_capacity(dims.cell_count() + dims.rows());
    for c in dims.cells() {
        out.push(if seeds.contains(c) {
            'S'
        } else if state.contains(c) {
            '#'
        } else {
            '.'
        });
        if c.col == dims.cols() {
            out.push('\n');
        }
    }
    out
}

/// Every round of a closure, starting from the seeds alone.
pub fn trace(t: &ClosureTrace) -> String {
    let mut state = t.seeds;
    let mut out = format!("round 0\n{}", frame(&t.seeds, &state));
    for (i, round) in t.rounds.iter().enumerate() {
        state = state.union(round);
        out.push_str(&format!("round {}\n{}", i + 1, frame(&t.seeds, &state)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use contagrid::grid::closure;
    use contagrid::GridDims;

    #[test]
    fn three_by_three_frames() {
        let d = GridDims::new(3, 3).unwrap();
        let t = closure(&CellSet::parse(d, "1,1;3,3").unwrap());
        assert_eq!(t.rounds.len(), 3);
        let expected = "round 0\nS..\n...\n..S\nround 1\nS..\n.#.\n..S\nround 2\nS#.\n###\n.#S\nround 3\nS##\n###\n##S\n";
        assert_eq!(trace(&t), expected);
    }
}
