mod render;
mod scenario;
mod table;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use contagrid::closed_forms::gamma;
use contagrid::grid::closure;
use contagrid::search::{
    brute_gamma, count_feasible, enumerate_optimal, Parallelism, PruneConfig, SearchBudget,
};
use contagrid::GridDims;
use serde_json::json;

use scenario::Scenario;

const EXIT_FAIL: u8 = 1;
const EXIT_STUCK: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Power contamination on rectangular grids.
#[derive(Parser)]
#[command(name = "contagrid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the contamination process from a seed set.
    Simulate(SimulateArgs),
    /// Contamination number of a grid.
    Gamma(GammaArgs),
    /// Count optimal seed sets.
    Alpha(CountArgs),
    /// Count seed sets of any size that fill the grid.
    Beta(CountArgs),
    /// Emit a triangle of gamma or alpha values.
    Table(TableArgs),
    /// Check stated results against computation.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SimulateArgs {
    /// Grid size as NxM.
    #[arg(long, conflicts_with = "scenario", requires = "seeds")]
    dims: Option<GridDims>,
    /// Seeds as "r,c;r,c;...".
    #[arg(long, requires = "dims")]
    seeds: Option<String>,
    /// JSON file {"n":..,"m":..,"seeds":[[r,c],...]}.
    #[arg(long)]
    scenario: Option<PathBuf>,
    /// Print every round.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GammaMethod {
    Formula,
    Brute,
    All,
}

#[derive(Args)]
struct GammaArgs {
    #[arg(long)]
    dims: GridDims,
    #[arg(long, value_enum, default_value = "formula")]
    method: GammaMethod,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct SearchArgs {
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Ignore the candidate budget.
    #[arg(long)]
    force: bool,
}

impl SearchArgs {
    fn budget(&self) -> Result<SearchBudget> {
        let mut b = match std::env::var("CONTAGRID_BUDGET") {
            Ok(v) => SearchBudget::new(
                v.trim()
                    .parse()
                    .with_context(|| format!("CONTAGRID_BUDGET={v:?}"))?,
            ),
            Err(_) => SearchBudget::default(),
        };
        b.force = self.force;
        Ok(b)
    }

    fn par(&self) -> Parallelism {
        Parallelism::jobs(self.jobs)
    }
}

#[derive(Args)]
struct PruneArgs {
    /// Skip the seed-free boundary filter.
    #[arg(long)]
    no_boundary: bool,
    /// Skip the empty adjacent line-pair filter.
    #[arg(long)]
    no_empty_pair: bool,
    /// Only one seed per odd column (odd m, optimal size only).
    #[arg(long)]
    odd_columns: bool,
}

impl PruneArgs {
    fn config(&self) -> PruneConfig {
        PruneConfig {
            boundary: !self.no_boundary,
            empty_pair: !self.no_empty_pair,
            odd_columns: self.odd_columns,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    dims: GridDims,
    /// List every counted seed set.
    #[arg(long)]
    witnesses: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value = "text", conflicts_with = "json")]
    format: CountFormat,
    #[command(flatten)]
    prune: PruneArgs,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    quantity: table::Quantity,
    /// Bound on both n and m.
    #[arg(long)]
    max: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: table::Format,
    #[command(flatten)]
    prune: PruneArgs,
    #[command(flatten)]
    search: SearchArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: verify::Suite,
    /// Largest grid side for the exhaustive checks.
    #[arg(long)]
    max: Option<usize>,
    /// Also write the report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    search: SearchArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Simulate(a) => simulate(a),
        Command::Gamma(a) => cmd_gamma(a),
        Command::Alpha(a) => count(a, false),
        Command::Beta(a) => count(a, true),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn out(text: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(text.as_bytes())?;
    stdout.flush()?;
    Ok(())
}

fn simulate(a: SimulateArgs) -> Result<u8> {
    let scenario = match (&a.scenario, a.dims, &a.seeds) {
        (Some(path), _, _) => Scenario::from_file(path)?,
        (None, Some(dims), Some(seeds)) => Scenario::from_flags(dims, seeds)?,
        _ => bail!("give --dims with --seeds, or --scenario"),
    };
    let seeds = scenario.seed_set()?;
    let t = closure(&seeds);
    let rounds = t.rounds.len();
    if a.json {
        let doc = json!({
            "n": scenario.n,
            "m": scenario.m,
            "seeds": scenario.seeds,
            "full": t.full,
            "rounds": rounds,
            "final": t.final_state.to_canonical(),
            "trace": a.trace.then(|| t.rounds.iter().map(|r| r.to_canonical()).collect::<Vec<_>>()),
        });
        out(&(serde_json::to_string_pretty(&doc)? + "\n"))?;
    } else {
        if a.trace {
            out(&render::trace(&t))?;
        }
        out(&if t.full {
            "FULL\n".to_string()
        } else {
            format!("STUCK after {rounds} rounds\n")
        })?;
    }
    Ok(if t.full { 0 } else { EXIT_STUCK })
}

fn cmd_gamma(a: GammaArgs) -> Result<u8> {
    let formula = gamma(a.dims).value;
    let brute = match a.method {
        GammaMethod::Formula => None,
        _ => Some(brute_gamma(
            a.dims,
            a.search.budget()?,
            PruneConfig::none(),
            a.search.par(),
        )?),
    };
    let agree = brute.as_ref().is_none_or(|(b, _)| *b == formula);
    if a.json {
        let mut doc = json!({"dims": {"n": a.dims.rows(), "m": a.dims.cols()}});
        if a.method != GammaMethod::Brute {
            doc["formula"] = json!(formula);
        }
        if let Some((b, w)) = &brute {
            doc["brute"] = json!(b);
            doc["witness"] = json!(w.to_canonical());
        }
        if a.method == GammaMethod::All {
            doc["agree"] = json!(agree);
        }
        out(&(serde_json::to_string_pretty(&doc)? + "\n"))?;
    } else {
        let text = match (a.method, &brute) {
            (GammaMethod::Formula, _) => format!("{formula}\n"),
            (GammaMethod::Brute, Some((b, _))) => format!("{b}\n"),
            (_, Some((b, _))) => format!("{formula} / {b}\n"),
            _ => unreachable!(),
        };
        out(&text)?;
    }
    if !agree {
        eprintln!("formula and exhaustive search disagree on {}", a.dims);
        return Ok(EXIT_FAIL);
    }
    Ok(0)
}

fn count(a: CountArgs, feasible: bool) -> Result<u8> {
    let (budget, par, prune) = (a.search.budget()?, a.search.par(), a.prune.config());
    let r = if feasible {
        count_feasible(a.dims, budget, prune, a.witnesses, par)?
    } else {
        enumerate_optimal(a.dims, budget, prune, a.witnesses, par)?
    };
    let format = if a.json { CountFormat::Json } else { a.format };
    match format {
        CountFormat::Json => out(&(serde_json::to_string_pretty(&r)? + "\n"))?,
        CountFormat::Text => {
            let mut text = format!("{}\n", r.count);
            for w in r.witnesses.iter().flatten() {
                text.push_str(&format!("{}\n", w.to_canonical()));
            }
            out(&text)?;
        }
        CountFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if let Some(sets) = &r.witnesses {
                w.write_record(["index", "seeds"])?;
                for (i, s) in sets.iter().enumerate() {
                    w.write_record([(i + 1).to_string(), s.to_canonical()])?;
                }
            } else {
                w.write_record(["n", "m", "k", "count"])?;
                let k = r.k.map(|k| k.to_string()).unwrap_or_default();
                w.write_record([
                    a.dims.rows().to_string(),
                    a.dims.cols().to_string(),
                    k,
                    r.count.to_string(),
                ])?;
            }
            out(&String::from_utf8(w.into_inner()?)?)?;
        }
    }
    Ok(0)
}

fn cmd_table(a: TableArgs) -> Result<u8> {
    let default = match a.quantity {
        table::Quantity::Gamma => 15,
        table::Quantity::Alpha => 6,
    };
    let max_n = a.max_n.or(a.max).unwrap_or(default);
    let max_m = a.max_m.or(a.max).unwrap_or(default);
    let t = table::build(
        a.quantity,
        max_n,
        max_m,
        a.search.budget()?,
        a.prune.config(),
        a.search.par(),
    )?;
    out(&table::render(&t, a.format)?)?;
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let settings = verify::Settings {
        max: a.max,
        budget: a.search.budget()?,
        par: a.search.par(),
    };
    let report = verify::run(a.suite, &settings)?;
    let text = serde_json::to_string_pretty(&report)? + "\n";
    if let Some(path) = &a.out {
        std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    out(&text)?;
    for (status, n) in &report.summary {
        eprintln!("{status}: {n}");
    }
    Ok(if report.failed() { EXIT_FAIL } else { 0 })
}
