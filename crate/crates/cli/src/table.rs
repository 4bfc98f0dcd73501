use anyhow::Result;
use contagrid::closed_forms::gamma;
use contagrid::search::{enumerate_optimal, Parallelism, PruneConfig, SearchBudget};
use contagrid::GridDims;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Gamma,
    Alpha,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub n: usize,
    pub m: usize,
    pub value: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub quantity: Quantity,
    pub entries: Vec<Entry>,
}

/// Upper triangle `n <= m` for `n <= max_n`, `m <= max_m`. A zero bound
/// gives the empty-grid line, whose entries are all 0.
pub fn build(
    quantity: Quantity,
    max_n: usize,
    max_m: usize,
    budget: SearchBudget,
    prune: PruneConfig,
    par: Parallelism,
) -> Result<Table> {
    let mut entries = Vec::new();
    if max_n == 0 || max_m == 0 {
        let n_range = if max_n == 0 { 0..=0 } else { 0..=max_n };
        for n in n_range {
            let m_range = if max_n == 0 { 0..=max_m } else { 0..=0 };
            entries.extend(m_range.map(|m| Entry { n, m, value: 0 }));
        }
        return Ok(Table { quantity, entries });
    }
    for n in 1..=max_n {
        for m in n..=max_m {
            let dims = GridDims::new(n, m)?;
            let value = match quantity {
                Quantity::Gamma => gamma(dims).value as u128,
                Quantity::Alpha => enumerate_optimal(dims, budget, prune, false, par)?.count,
            };
            entries.push(Entry { n, m, value });
        }
    }
    Ok(Table { quantity, entries })
}

pub fn render(table: &Table, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(table)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "n",
                "m",
                match table.quantity {
                    Quantity::Gamma => "gamma",
                    Quantity::Alpha => "alpha",
                },
            ])?;
            for e in &table.entries {
                w.write_record([e.n.to_string(), e.m.to_string(), e.value.to_string()])?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma_table(max_n: usize, max_m: usize) -> Table {
        build(
            Quantity::Gamma,
            max_n,
            max_m,
            SearchBudget::default(),
            PruneConfig::safe(),
            Parallelism::default(),
        )
        .unwrap()
    }

    #[test]
    fn gamma_csv() {
        let csv = render(&gamma_table(2, 3), Format::Csv).unwrap();
        assert_eq!(csv, "n,m,gamma\n1,1,1\n1,2,2\n1,3,2\n2,2,2\n2,3,3\n");
    }

    #[test]
    fn zero_bounds_give_zero_entries() {
        let t = gamma_table(0, 3);
        assert_eq!(t.entries.len(), 4);
        assert!(t.entries.iter().all(|e| e.value == 0 && e.n == 0));
        let t = gamma_table(2, 0);
        assert_eq!(t.entries.len(), 3);
        assert!(t.entries.iter().all(|e| e.value == 0 && e.m == 0));
    }

    #[test]
    fn json_shape() {
        let json = render(&gamma_table(1, 1), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["quantity"], "gamma");
        assert_eq!(
            v["entries"][0],
            serde_json::json!({"n": 1, "m": 1, "value": 1})
        );
    }
}
