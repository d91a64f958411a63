//! Thin command-line front end: compute invariants for a graph file, run a
//! verification campaign over a family, or generate an extremal graph.
//!
//! Exit codes: 0 all pass, 1 theorem violation found, 2 usage or parse
//! error, 3 resource cap exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spancolor::bounds;
use spancolor::coloring;
use spancolor::format;
use spancolor::generators;
use spancolor::matching;
use spancolor::sp;
use spancolor::verify::{self, Campaign, Check, ALL_CHECKS};
use spancolor::{Caps, Error, Multigraph};

#[derive(Parser)]
#[command(name = "spancolor", version, about = "spanning k-edge-colorable subgraph analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sp, matching, coloring, and bound values for a graph file
    Compute {
        path: PathBuf,
        /// include the factor and spanning-maximum witnesses
        #[arg(long)]
        witnesses: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run a verification campaign over a graph family
    Verify {
        /// exhaustive | random | trees | generated
        #[arg(long, default_value = "exhaustive")]
        family: String,
        /// vertex bound (exhaustive/trees) or vertex count (random)
        #[arg(long)]
        max_n: Option<usize>,
        /// edge budget: multigraph-variant cap (exhaustive) or edge count (random)
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// instance count for random/generated families
        #[arg(long)]
        count: Option<usize>,
        /// comma-separated check names, or "all"
        #[arg(long, default_value = "all")]
        theorems: String,
        /// parallelism degree; 0 = all available cores
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Write a generated graph in the canonical text format
    Generate {
        /// ratio-tree | tightness | star | path | cycle
        #[arg(long)]
        family: String,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// regularity of the tightness host (odd, or 2 for the 4-cycle)
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, default_value_t = 24)]
    cap_coloring_edges: usize,
    #[arg(long, default_value_t = 16)]
    cap_enumeration_edges: usize,
    #[arg(long, default_value_t = 24)]
    cap_subset_edges: usize,
    #[arg(long, default_value_t = 20)]
    cap_subset_vertices: usize,
}

impl CapArgs {
    fn to_caps(&self) -> Caps {
        Caps {
            coloring_edges: self.cap_coloring_edges,
            enumeration_edges: self.cap_enumeration_edges,
            subset_search_edges: self.cap_subset_edges,
            subset_vertices: self.cap_subset_vertices,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::ResourceCap { .. } => 3,
                Error::Parse { .. } | Error::InvalidInput(_) | Error::Precondition(_) => 2,
                Error::Internal(_) => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute { path, witnesses, output, caps } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            let g = format::parse(&text)?;
            let report = compute_report(&g, witnesses, &caps.to_caps())?;
            emit(&report, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            family,
            max_n,
            max_edges,
            seed,
            count,
            theorems,
            jobs,
            output,
            caps,
        } => {
            let checks = parse_checks(&theorems)?;
            let caps = caps.to_caps();
            let mut header: Vec<(String, String)> = vec![("family".into(), family.clone())];
            let instances = match family.as_str() {
                "exhaustive" => {
                    let n = max_n.unwrap_or(6);
                    if n > 8 {
                        return Err(Error::InvalidInput("exhaustive family needs max-n <= 8".into()));
                    }
                    let variant_edges = max_edges.unwrap_or(0);
                    header.push(("max_n".into(), n.to_string()));
                    header.push(("variant_edges".into(), variant_edges.to_string()));
                    verify::exhaustive_instances(n, variant_edges > 0, 3, variant_edges)
                }
                "random" => {
                    let n = max_n.unwrap_or(8);
                    let m = max_edges.unwrap_or(12);
                    let c = count.unwrap_or(100);
                    header.push(("n".into(), n.to_string()));
                    header.push(("m".into(), m.to_string()));
                    header.push(("seed".into(), seed.to_string()));
                    header.push(("count".into(), c.to_string()));
                    verify::random_instances(n, m, 3, seed, c)
                }
                "trees" => {
                    let n = max_n.unwrap_or(10);
                    if n > 13 {
                        return Err(Error::InvalidInput("trees family needs max-n <= 13".into()));
                    }
                    header.push(("max_n".into(), n.to_string()));
                    verify::tree_instances(n)
                }
                "generated" => {
                    let c = count.unwrap_or(20);
                    header.push(("seed".into(), seed.to_string()));
                    header.push(("count".into(), c.to_string()));
                    verify::generated_instances(c, seed)
                }
                other => {
                    return Err(Error::InvalidInput(format!("unknown family '{other}'")));
                }
            };
            header.push(("theorems".into(), theorems));
            let campaign = Campaign { header, instances, checks, caps };
            let report = campaign.run(jobs);
            emit(&report.render(), output.as_deref())?;
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Generate { family, a, b, n, r, output } => {
            let (graph, spec_line) = match family.as_str() {
                "path" => {
                    let n = require(n, "--n")?;
                    (generators::path(n), format!("path n={n}"))
                }
                "cycle" => {
                    let n = require(n, "--n")?;
                    if n < 3 {
                        return Err(Error::InvalidInput("cycles need n >= 3".into()));
                    }
                    (generators::cycle(n), format!("cycle n={n}"))
                }
                "star" => {
                    let n = require(n, "--n")?;
                    (generators::star(n), format!("star n={n}"))
                }
                "ratio-tree" => {
                    let (a, b, n) = (require(a, "--a")?, require(b, "--b")?, require(n, "--n")?);
                    (generators::ratio_tree(a, b, n)?, format!("ratio-tree a={a} b={b} n={n}"))
                }
                "tightness" => {
                    let r = require(r, "--r")?;
                    let host = match r {
                        2 => generators::cycle(4),
                        r if r % 2 == 1 => generators::complete(r + 1),
                        _ => {
                            return Err(Error::InvalidInput(
                                "tightness host needs odd r (complete graph) or r = 2".into(),
                            ))
                        }
                    };
                    (generators::tightness_graph(&host, 0)?, format!("tightness r={r}"))
                }
                other => {
                    return Err(Error::InvalidInput(format!("unknown generator family '{other}'")));
                }
            };
            let text =
                format::serialize_with_comments(&graph, &[format!("generator: {spec_line}")]);
            emit(&text, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn require(value: Option<usize>, flag: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::InvalidInput(format!("missing required parameter {flag}")))
}

fn parse_checks(theorems: &str) -> Result<Vec<Check>, Error> {
    if theorems == "all" {
        return Ok(ALL_CHECKS.to_vec());
    }
    theorems
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            Check::parse(name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown theorem check '{name}'")))
        })
        .collect()
}

fn emit(text: &str, output: Option<&std::path::Path>) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn compute_report(g: &Multigraph, witnesses: bool, caps: &Caps) -> Result<String, Error> {
    let mut out = format!("graph vertices={} edges={}\n", g.vertex_count(), g.edge_count());
    out.push_str(&format!("max_degree={}\n", g.max_degree()));
    out.push_str(&format!("min_degree={}\n", g.min_degree()));
    out.push_str(&format!("max_multiplicity={}\n", g.max_multiplicity()));
    out.push_str(&format!("nu={}\n", matching::matching_number(g)));
    let (chi, _) = coloring::chromatic_index(g, caps)?;
    out.push_str(&format!("chromatic_index={chi}\n"));
    let result = sp::sp_factor_search(g, caps)?;
    out.push_str(&format!("sp={}\n", result.sp));
    let bound_report = bounds::bound_values(g, caps)?;
    for r in &bound_report.records {
        out.push_str(&format!(
            "bound name={} value={} holds={} tight={}\n",
            r.kind.name(),
            r.value,
            r.holds,
            r.tight
        ));
    }
    if witnesses {
        out.push_str(&format!(
            "witness factor bound={} edges={}\n",
            result.factor.bound,
            join(result.factor.edges.iter())
        ));
        let colors: Vec<String> = result
            .coloring
            .colors()
            .iter()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect();
        out.push_str(&format!(
            "witness spanning_maximum k={} edges={} colors={}\n",
            result.sp,
            join(result.spanning_maximum.iter()),
            colors.join(",")
        ));
    }
    Ok(out)
}

fn join<'a>(items: impl Iterator<Item = &'a usize>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
