// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `condchrom` command line.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use condchrom_core::bounds::{self, BoundReport};
use condchrom_core::constructions::construct;
use condchrom_core::solver::{self, Decision, SearchConfig, SolveResult, DEFAULT_SOLVER_BUDGET};
use condchrom_core::sweep::{self, TableRanges, DEFAULT_SIZE_CAP};
use condchrom_core::verify::check_conditional;
use condchrom_core::{Family, Graph};

use crate::error::{Error, Result};
use crate::json::{parse_coloring, ClaimedColoringDoc, ProvenanceDoc};
use crate::{dimacs, dot, table};

/// Exit statuses shared by every subcommand.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INVALID: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const BUDGET: u8 = 3;
}

#[derive(Debug, Parser)]
#[command(
    name = "condchrom",
    version,
    about = "Conditional chromatic numbers of graph families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a family instance as DIMACS col or DOT.
    Generate(GenerateArgs),
    /// Compute χ_r exactly.
    Solve(SolveArgs),
    /// Emit the explicit coloring for a covered (family, r) case.
    Construct(ConstructArgs),
    /// Check a coloring file against a graph file.
    Verify(VerifyArgs),
    /// Report the clique, Vset-d2r and min{r,Δ}+1 lower bounds.
    Bounds(BoundsArgs),
    /// Compare closed forms with exact values over parameter ranges.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Col,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Family spec such as `M(cyc:4)` or `L(wd:3,2)`.
    pub spec: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Col)]
    pub format: GraphFormat,
    /// Output file; stdout when absent. The provenance sidecar goes to
    /// `<out>.prov.json` unless `--provenance` is given.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub provenance: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Family spec; omit when using `--file`.
    pub spec: Option<String>,
    /// DIMACS col file to read instead of a family spec.
    #[arg(long, conflicts_with = "spec")]
    pub file: Option<PathBuf>,
    #[arg(short, long)]
    pub r: usize,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, env = "CONDCHROM_MAX_NODES", default_value_t = DEFAULT_SOLVER_BUDGET)]
    pub max_nodes: u64,
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: usize,
    /// Solve even when the instance exceeds the size cap.
    #[arg(long)]
    pub force: bool,
    /// Draw the witness from a seeded randomized search.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub spec: String,
    #[arg(short, long)]
    pub r: usize,
    /// Append the verifier report; the exit status reflects validity.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub coloring: PathBuf,
    #[arg(short, long)]
    pub r: usize,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, env = "CONDCHROM_MAX_NODES", default_value_t = bounds::DEFAULT_BOUND_BUDGET)]
    pub max_nodes: u64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Proposition number 1..7, or `all`.
    pub which: String,
    /// Inclusive range such as `3..4`.
    #[arg(long, value_parser = parse_range)]
    pub k: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub n: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub n1: Option<RangeInclusive<usize>>,
    #[arg(long, value_parser = parse_range)]
    pub n2: Option<RangeInclusive<usize>>,
    /// Partitions separated by `;`, e.g. `1,1,1;1,2`.
    #[arg(long, value_parser = parse_parts)]
    pub parts: Option<Partitions>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    /// Add a wall-clock `ms` column (output is then not reproducible).
    #[arg(long)]
    pub timing: bool,
    #[arg(long, env = "CONDCHROM_MAX_NODES", default_value_t = DEFAULT_SOLVER_BUDGET)]
    pub max_nodes: u64,
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: usize,
}

/// Parses `a`, `a..b` or `a..=b` as an inclusive range.
pub fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad number `{t}`: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Part-size lists for `table --parts`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partitions(pub Vec<Vec<usize>>);

pub fn parse_parts(s: &str) -> std::result::Result<Partitions, String> {
    s.split(';')
        .map(|group| {
            group
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| format!("bad part size `{t}`: {e}"))
                })
                .collect()
        })
        .collect::<std::result::Result<_, _>>()
        .map(Partitions)
}

fn parse_family(spec: &str) -> Result<Family> {
    Ok(spec.parse::<Family>()?)
}

fn load_graph(args: &InstanceArgs) -> Result<(String, Graph)> {
    match (&args.spec, &args.file) {
        (Some(spec), None) => {
            let family = parse_family(spec)?;
            Ok((family.to_string(), family.build()?.graph))
        }
        (None, Some(path)) => Ok((path.display().to_string(), dimacs::parse_col(&read(path)?)?)),
        _ => Err(Error::Input("give either a family spec or --file".into())),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn emit_json<T: Serialize>(value: &T) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn generate(args: &GenerateArgs) -> Result<u8> {
    let family = parse_family(&args.spec)?;
    let instance = family.build()?;
    let name = family.to_string();
    let text = match args.format {
        GraphFormat::Col => dimacs::write_col(&instance.graph, &[&name]),
        GraphFormat::Dot => dot::write_dot(&instance.graph, Some(&instance.provenance), &name),
    };
    let sidecar = args.provenance.clone().or_else(|| {
        args.out.as_ref().map(|out| {
            let mut s = out.clone().into_os_string();
            s.push(".prov.json");
            PathBuf::from(s)
        })
    });
    match &args.out {
        Some(out) => fs::write(out, text)?,
        None => emit(&text)?,
    }
    if let Some(path) = sidecar {
        let doc = ProvenanceDoc::new(&name, &instance.graph, &instance.provenance);
        fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    Ok(exit::OK)
}

#[derive(Serialize)]
struct SolveDoc<'a> {
    instance: &'a str,
    vertices: usize,
    edges: usize,
    r: usize,
    #[serde(flatten)]
    result: &'a SolveResult,
}

fn solve(args: &SolveArgs) -> Result<u8> {
    let (name, graph) = load_graph(&args.instance)?;
    if graph.vertex_count() > args.size_cap && !args.force {
        return Err(Error::Input(format!(
            "{name} has {} vertices, above the size cap {}; pass --force or raise --size-cap",
            graph.vertex_count(),
            args.size_cap
        )));
    }
    let r = args.instance.r;
    let mut result = solver::chi_r_exact(&graph, r, args.max_nodes)?;
    if let Some(seed) = args.seed {
        let level = r.min(graph.max_degree()?.max(1));
        let config = SearchConfig {
            skip_proper: false,
            seed: Some(seed),
        };
        let decided = solver::find_coloring(&graph, result.chi_r, level, args.max_nodes, &config)?;
        result.nodes_expanded += decided.nodes;
        if let Decision::Found(witness) = decided.decision {
            result.witness = witness;
        }
    }
    emit_json(&SolveDoc {
        instance: &name,
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        r,
        result: &result,
    })?;
    if result.proven {
        Ok(exit::OK)
    } else {
        eprintln!(
            "budget exhausted after {} nodes; χ_r in [{}, {}]",
            result.nodes_expanded, result.bracket[0], result.bracket[1]
        );
        Ok(exit::BUDGET)
    }
}

fn construct_cmd(args: &ConstructArgs) -> Result<u8> {
    let family = parse_family(&args.spec)?;
    let c = construct(&family, args.r)?;
    let report = if args.verify {
        Some(c.verify(args.r)?)
    } else {
        None
    };
    let valid = report.as_ref().is_none_or(|rep| rep.is_valid());
    emit_json(&ClaimedColoringDoc::new(&c.claim, report))?;
    Ok(if valid { exit::OK } else { exit::INVALID })
}

fn verify_cmd(args: &VerifyArgs) -> Result<u8> {
    let graph = dimacs::parse_col(&read(&args.graph)?)?;
    let coloring = parse_coloring(&read(&args.coloring)?)?;
    let report = check_conditional(&graph, &coloring, args.r)?;
    emit_json(&report)?;
    Ok(if report.is_valid() {
        exit::OK
    } else {
        exit::INVALID
    })
}

#[derive(Serialize)]
struct BoundsDoc<'a> {
    instance: &'a str,
    r: usize,
    max_degree: usize,
    clique: BoundReport,
    vset_d2r: BoundReport,
    basic: Option<BoundReport>,
    best: BoundReport,
}

fn bounds_cmd(args: &BoundsArgs) -> Result<u8> {
    let (name, graph) = load_graph(&args.instance)?;
    let r = args.instance.r;
    let budget = args.max_nodes;
    let basic = if graph.edge_count() > 0 {
        Some(bounds::basic_lower_bound(&graph, r)?)
    } else {
        None
    };
    let doc = BoundsDoc {
        instance: &name,
        r,
        max_degree: graph.max_degree()?,
        clique: bounds::clique_number(&graph, budget),
        vset_d2r: bounds::max_vset_d2r(&graph, r, budget),
        basic,
        best: bounds::best_lower_bound(&graph, r, budget)?,
    };
    let exact = doc.best.exact;
    emit_json(&doc)?;
    Ok(if exact { exit::OK } else { exit::BUDGET })
}

fn table_cmd(args: &TableArgs) -> Result<u8> {
    let ranges = TableRanges {
        k: args.k.clone(),
        n: args.n.clone(),
        n1: args.n1.clone(),
        n2: args.n2.clone(),
        parts: args.parts.clone().map(|p| p.0),
    };
    let planned = if args.which == "all" {
        sweep::plan_all(&ranges)?
    } else {
        let prop = args
            .which
            .parse::<u8>()
            .map_err(|_| Error::Input(format!("expected 1..7 or `all`, got `{}`", args.which)))?;
        sweep::plan(prop, &ranges)?
    };
    let rows = table::run_rows(&planned, args.size_cap, args.max_nodes)?;
    let text = match args.format {
        TableFormat::Csv => table::render_csv(&rows, args.timing)?,
        TableFormat::Json => table::render_json(&rows, args.timing)?,
    };
    emit(&text)?;
    let skipped = rows
        .iter()
        .filter(|t| t.row.status == sweep::MatchStatus::Skipped)
        .count();
    if skipped > 0 {
        eprintln!(
            "{skipped} row(s) above the size cap {} were skipped",
            args.size_cap
        );
    }
    Ok(table::exit_status(&rows))
}

/// Runs a parsed command, returning its exit status.
pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve(a),
        Command::Construct(a) => construct_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Bounds(a) => bounds_cmd(a),
        Command::Table(a) => table_cmd(a),
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::INPUT)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..4").unwrap(), 3..=4);
        assert_eq!(parse_range("3..=4").unwrap(), 3..=4);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("4..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn parts() {
        assert_eq!(
            parse_parts("1,1,1;1,2").unwrap().0,
            vec![vec![1, 1, 1], vec![1, 2]]
        );
        assert!(parse_parts("1,x").is_err());
    }

    #[test]
    fn unknown_flags_rejected() {
        assert!(
            Cli::try_parse_from(["condchrom", "solve", "cyc:4", "-r", "2", "--bogus"]).is_err()
        );
        assert!(Cli::try_parse_from(["condchrom", "solve", "cyc:4"]).is_err());
        let cli = Cli::try_parse_from(["condchrom", "table", "5", "--n", "4..7"]).unwrap();
        match cli.command {
            Command::Table(t) => assert_eq!(t.n, Some(4..=7)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
