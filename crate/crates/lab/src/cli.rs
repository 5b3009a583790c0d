//! Command-line front end.
//!
//! Exit codes: 0 success (or every trial passed), 3 nothing found (or some
//! trial failed), 2 bad usage or input, 1 internal error. Colorings are
//! read from a file path, `-` for stdin, or inline JSON.

use std::io::Read;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Context};
use balance_core::claims::{Claim, ClaimParams, ClaimRun};
use balance_core::constructions::{
    clique_split_coloring, k5_coloring, single_edge_coloring, split_coloring_c4k, type_b_coloring,
};
use balance_core::engines::{find_balanced_c4k, find_balanced_c4k2, find_balanced_odd_cycle, EngineOutcome};
use balance_core::extremal::{half_family, linear_forest_family, FamilySpec};
use balance_core::formulas::{
    bal_odd_cycle, c4k_bounds, k5_bounds, linear_forest_ex, structural_upper_bound, CycleFormulaInput, K5Constants,
    Rational,
};
use balance_core::{verify_witness, Girth, ListColoring, NamedGraph, SmallGraph, TwoColoring};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::io::json::{coloring_from_str, ColoringJson, EngineJson, WitnessJson};
use crate::io::{dot, graph6, parse_target};
use crate::parallel;
use crate::report::VerifyReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NONE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "balance-lab",
    version,
    about = "Balanced copies of graphs in 2-list edge colorings of K_n"
)]
pub struct Cli {
    /// Worker threads (overrides BALANCE_LAB_WORKERS).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Graph6,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named graph (c5, p4, k5, 4pan, co4pan, bull, cricket, diamond, lf:3+1+1).
    Named { name: String },
    /// Girth of a graph.
    Girth {
        #[arg(long)]
        graph: String,
    },
    /// The subgraphs with half the edges and no isolated vertices, one per isomorphism class.
    HalfFamily {
        #[arg(long)]
        target: String,
    },
    /// Exact Turán number.
    Ex {
        #[arg(long)]
        n: usize,
        /// `c3c4c5`, `half:<target>` or `lf:<total>`.
        #[arg(long)]
        family: String,
    },
    /// Search a coloring for a balanced copy of a target.
    FindBalanced {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        target: String,
        /// Report the witness from the lowest root instead of the first one found.
        #[arg(long)]
        deterministic: bool,
    },
    /// Exact balancing number by enumerating 2-colorings.
    BalExact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
    },
    /// Exact list balancing number by enumerating list colorings.
    LbalExact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
    },
    /// Explicit colorings.
    #[command(subcommand)]
    Construct(Construct),
    /// Constructive cycle finders.
    #[command(subcommand)]
    Engine(Engine),
    /// Closed-form bounds.
    #[command(subcommand)]
    Formula(Formula),
    /// Seeded checks of a claim.
    Verify(VerifyArgs),
    /// Graphviz picture of a coloring, optionally highlighting a witness.
    ExportDot {
        #[arg(long)]
        coloring: String,
        /// Witness JSON, as printed by `find-balanced` or `engine`.
        #[arg(long)]
        witness: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Red star from k-1 vertices; no balanced C_{4k}.
    Split {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Red clique on the first `a` vertices.
    CliqueSplit {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
    },
    /// Two red t-cliques joined in blue, with the given pairs bicolored.
    Typeb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// Pairs `u,v` separated by `;`.
        #[arg(long, default_value = "")]
        rb: String,
    },
    /// The K_5 construction with a seeded girth-6 bicolored graph.
    K5 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// One red edge, everything else blue.
    SingleEdge {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Engine {
    /// Balanced C_{4k+alpha} in a 2-coloring.
    Odd {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Balanced C_{4k} in a 2-coloring.
    C4k {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        k: usize,
    },
    /// Balanced C_{4k+2} in a list coloring with a bicolored edge.
    C4k2 {
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Formula {
    /// (k-1)n - (k² - k - 1 - alpha)/2.
    BalOdd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Lower and upper bounds for C_{4k}.
    C4k {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Turán number of a linear forest given its component orders.
    LfEx {
        #[arg(long)]
        n: usize,
        /// Component orders, comma separated.
        #[arg(long)]
        orders: String,
    },
    /// Lower and upper bounds for K_5.
    K5 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eps: f64,
    },
    /// C(n,2)/2 + ceil(ex/2), with ex given or computed from the half family of a target.
    Structural {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "target", required_unless_present = "target")]
        ex: Option<usize>,
        #[arg(long)]
        target: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub claim: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    /// Root seed; drawn from the clock and reported when omitted.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub excess: Option<usize>,
    #[arg(long)]
    pub eps: Option<f64>,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<balance_core::Error> for Failure {
    fn from(e: balance_core::Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<crate::io::FormatError> for Failure {
    fn from(e: crate::io::FormatError) -> Self {
        Failure::Usage(e.into())
    }
}

type Res = Result<(i32, String), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let workers = cli.workers.filter(|&w| w > 0).unwrap_or_else(parallel::default_workers);
    let format = cli.format;
    match parallel::with_workers(workers, move || dispatch(cli.command, format)) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(e)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {e:#}\n"),
        },
        Err(Failure::Internal(e)) => Outcome {
            code: EXIT_INTERNAL,
            stdout: String::new(),
            stderr: format!("internal error: {e:#}\n"),
        },
    }
}

fn pick(format: Option<Format>, allowed: &[Format]) -> Result<Format, Failure> {
    match format {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(Failure::Usage(anyhow!(
            "format {f:?} is not available for this command"
        ))),
    }
}

fn line(s: impl Into<String>) -> String {
    let mut s = s.into();
    s.push('\n');
    s
}

fn pretty(v: &impl serde::Serialize) -> String {
    line(serde_json::to_string_pretty(v).expect("serializable"))
}

fn read_coloring(src: &str) -> Result<ListColoring, Failure> {
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(src).with_context(|| format!("reading {src}"))?
    };
    Ok(coloring_from_str(&text)?)
}

fn strict(c: ListColoring) -> Result<TwoColoring, Failure> {
    Ok(TwoColoring::new(c).context("this engine needs a coloring without bicolored pairs")?)
}

fn parse_alpha(s: &str) -> Result<i64, Failure> {
    match s.trim() {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        other => Err(Failure::Usage(anyhow!("alpha must be +1 or -1, got `{other}`"))),
    }
}

fn rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn graph_json(g: &SmallGraph) -> serde_json::Value {
    json!({ "n": g.vertex_count(), "edges": g.edge_list(), "graph6": graph6::encode(g) })
}

fn emit_graph(g: &SmallGraph, format: Option<Format>) -> Result<String, Failure> {
    Ok(match pick(format, &[Format::Graph6, Format::Json, Format::Text])? {
        Format::Json => pretty(&graph_json(g)),
        Format::Text => {
            let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            line(format!("n={} edges: {}", g.vertex_count(), edges.join(" ")))
        }
        _ => line(graph6::encode(g)),
    })
}

fn emit_coloring(c: &ListColoring, format: Option<Format>) -> Result<String, Failure> {
    Ok(match pick(format, &[Format::Json, Format::Dot])? {
        Format::Dot => dot::export_dot(c, &[]),
        _ => line(serde_json::to_string(&ColoringJson::from(c)).expect("serializable")),
    })
}

fn family(spec: &str) -> Result<FamilySpec, Failure> {
    if spec == "c3c4c5" {
        Ok(FamilySpec::short_cycles())
    } else if let Some(t) = spec.strip_prefix("half:") {
        Ok(half_family(&parse_target(t)?)?)
    } else if let Some(total) = spec.strip_prefix("lf:") {
        let total = total.parse::<usize>().with_context(|| format!("bad total `{total}`"))?;
        Ok(linear_forest_family(total)?)
    } else {
        Err(Failure::Usage(anyhow!(
            "unknown family `{spec}`; use c3c4c5, half:<target> or lf:<total>"
        )))
    }
}

fn engine_output(c: &ListColoring, out: Option<EngineOutcome>) -> Res {
    match out {
        None => Ok((EXIT_NONE, line(r#"{"found": false}"#))),
        Some(o) => {
            if !verify_witness(c, &o.target, &o.witness) {
                return Err(Failure::Internal(anyhow!(
                    "engine returned a witness that fails verification"
                )));
            }
            Ok((EXIT_OK, pretty(&EngineJson::from(&o))))
        }
    }
}

fn dispatch(command: Command, format: Option<Format>) -> Res {
    match command {
        Command::Named { name } => {
            let g = name.parse::<NamedGraph>()?.build()?;
            Ok((EXIT_OK, emit_graph(&g, format)?))
        }
        Command::Girth { graph } => {
            let g = parse_target(&graph)?;
            let girth = match g.girth() {
                Girth::Infinite => None,
                Girth::Finite(l) => Some(l),
            };
            Ok(match pick(format, &[Format::Text, Format::Json])? {
                Format::Json => (EXIT_OK, line(json!({ "girth": girth }).to_string())),
                _ => (EXIT_OK, line(girth.map_or("inf".to_string(), |l| l.to_string()))),
            })
        }
        Command::HalfFamily { target } => {
            let f = half_family(&parse_target(&target)?)?;
            Ok(match pick(format, &[Format::Graph6, Format::Json])? {
                Format::Json => {
                    let all: Vec<_> = f.members().iter().map(graph_json).collect();
                    (EXIT_OK, pretty(&all))
                }
                _ => (EXIT_OK, f.members().iter().map(|g| line(graph6::encode(g))).collect()),
            })
        }
        Command::Ex { n, family: spec } => {
            let f = family(&spec)?;
            let r = parallel::ex_exact(n, &f)?;
            Ok(match pick(format, &[Format::Json, Format::Text])? {
                Format::Text => (EXIT_OK, line(r.value.to_string())),
                _ => (
                    EXIT_OK,
                    pretty(&json!({
                        "n": n,
                        "family": spec,
                        "value": r.value,
                        "extremal": graph6::encode(&r.extremal),
                        "level_sizes": r.level_sizes,
                    })),
                ),
            })
        }
        Command::FindBalanced {
            coloring,
            target,
            deterministic,
        } => {
            let c = read_coloring(&coloring)?;
            let g = parse_target(&target)?;
            match parallel::find_balanced_copy(&c, &g, deterministic) {
                None => Ok((EXIT_NONE, line(r#"{"found": false}"#))),
                Some(w) => {
                    if !verify_witness(&c, &g, &w) {
                        return Err(Failure::Internal(anyhow!(
                            "search returned a witness that fails verification"
                        )));
                    }
                    Ok((EXIT_OK, pretty(&WitnessJson::new(&g, &w))))
                }
            }
        }
        Command::BalExact { n, target } => oracle(n, &target, false),
        Command::LbalExact { n, target } => oracle(n, &target, true),
        Command::Construct(c) => {
            let coloring = match c {
                Construct::Split { n, k } => split_coloring_c4k(n, k)?,
                Construct::CliqueSplit { n, a } => clique_split_coloring(n, a)?,
                Construct::Typeb { n, t, rb } => type_b_coloring(n, t, &parse_pairs(&rb)?)?,
                Construct::SingleEdge { n } => single_edge_coloring(n)?,
                Construct::K5 { n, eps, seed } => k5_coloring(n, eps, seed)?.coloring,
            };
            Ok((EXIT_OK, emit_coloring(&coloring, format)?))
        }
        Command::Engine(e) => match e {
            Engine::Odd { coloring, k, alpha } => {
                let c = read_coloring(&coloring)?;
                let alpha = parse_alpha(&alpha)?;
                let out = find_balanced_odd_cycle(&strict(c.clone())?, k, alpha)?;
                engine_output(&c, out)
            }
            Engine::C4k { coloring, k } => {
                let c = read_coloring(&coloring)?;
                let out = find_balanced_c4k(&strict(c.clone())?, k)?;
                engine_output(&c, out)
            }
            Engine::C4k2 { coloring, k } => {
                let c = read_coloring(&coloring)?;
                if c.stats().bicolored == 0 {
                    return Err(Failure::Usage(anyhow!(
                        "the c4k2 engine needs at least one bicolored pair"
                    )));
                }
                let out = find_balanced_c4k2(&c, k)?;
                engine_output(&c, out)
            }
        },
        Command::Formula(f) => formula(f),
        Command::Verify(args) => verify(args),
        Command::ExportDot { coloring, witness } => {
            let c = read_coloring(&coloring)?;
            let marked = match witness {
                None => Vec::new(),
                Some(src) => read_witness_edges(&src)?,
            };
            Ok((EXIT_OK, dot::export_dot(&c, &marked)))
        }
    }
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>, Failure> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (u, v) = p
                .split_once(',')
                .ok_or_else(|| anyhow!("pair `{p}` should look like u,v"))?;
            Ok((
                u.trim().parse().context("bad vertex")?,
                v.trim().parse().context("bad vertex")?,
            ))
        })
        .collect()
}

fn read_witness_edges(src: &str) -> Result<Vec<(usize, usize)>, Failure> {
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else {
        std::fs::read_to_string(src).with_context(|| format!("reading {src}"))?
    };
    let v: serde_json::Value = serde_json::from_str(&text).context("witness JSON")?;
    let w = v.get("witness").unwrap_or(&v);
    let edges = w
        .get("edges")
        .and_then(|e| e.as_array())
        .ok_or_else(|| anyhow!("witness JSON has no `edges`"))?;
    edges
        .iter()
        .map(|e| {
            let end = |key: &str| e.get(key).and_then(|x| x.as_u64()).map(|x| x as usize);
            match (end("u"), end("v")) {
                (Some(u), Some(v)) => Ok((u, v)),
                _ => Err(Failure::Usage(anyhow!("witness edge without u, v"))),
            }
        })
        .collect()
}

fn oracle(n: usize, target: &str, list: bool) -> Res {
    let g = parse_target(target)?;
    let r = if list {
        parallel::lbal_exact(n, &g)?
    } else {
        parallel::bal_exact(n, &g)?
    };
    let report = json!({
        "n": n,
        "target": graph6::encode(&g),
        "value": r.value,
        "colorings_examined": r.colorings_examined,
        "witness_coloring": r.witness_coloring.as_ref().map(ColoringJson::from),
    });
    Ok((EXIT_OK, pretty(&report)))
}

fn formula(f: Formula) -> Res {
    let out = match f {
        Formula::BalOdd { n, k, alpha } => {
            let input = CycleFormulaInput::new(n, k, parse_alpha(&alpha)?)?;
            json!({
                "cycle_length": input.cycle_length(),
                "bal": rational(bal_odd_cycle(input)),
                "in_proved_range": input.in_proved_range(),
            })
        }
        Formula::C4k { n, k } => {
            let (lo, hi) = c4k_bounds(n, k)?;
            json!({ "lower": format!("{lo}/1"), "upper_strict": format!("{hi}/1") })
        }
        Formula::LfEx { n, orders } => {
            let orders = orders
                .split(',')
                .map(|s| s.trim().parse::<usize>().with_context(|| format!("bad order `{s}`")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            json!({ "ex": format!("{}/1", linear_forest_ex(n, &orders)?) })
        }
        Formula::K5 { n, eps } => {
            let (lo, hi) = k5_bounds(n, eps)?;
            let k = K5Constants::new();
            json!({ "lower": lo, "upper": hi, "c": k.c, "upper_coeff": k.upper_coeff })
        }
        Formula::Structural { n, ex, target } => {
            let ex = match (ex, target) {
                (Some(e), _) => e,
                (None, Some(t)) => parallel::ex_exact(n, &half_family(&parse_target(&t)?)?)?.value,
                (None, None) => return Err(Failure::Usage(anyhow!("give --ex or --target"))),
            };
            json!({ "ex": ex, "bound": rational(structural_upper_bound(n, ex)) })
        }
    };
    Ok((EXIT_OK, pretty(&out)))
}

fn verify(a: VerifyArgs) -> Res {
    let claim = a.claim.parse::<Claim>()?;
    let params = ClaimParams {
        k: a.k,
        alpha: a.alpha.as_deref().map(parse_alpha).transpose()?,
        excess: a.excess,
        epsilon: a.eps,
    };
    let run = ClaimRun::new(claim, a.n, params)?;
    let (seed, auto) = match a.seed {
        Some(s) => (s, false),
        // Nothing to replay when no trial draws random numbers.
        None if !claim.is_randomized() => (0, false),
        None => (
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_nanos() as u64),
            true,
        ),
    };
    if a.trials == 0 {
        return Err(Failure::Usage(anyhow!("--trials must be positive")));
    }
    let outcomes = parallel::run_trials(&run, seed, a.trials)?;
    let report = VerifyReport::new(&run, seed, auto, &outcomes);
    let code = if report.all_passed { EXIT_OK } else { EXIT_NONE };
    Ok((code, pretty(&report)))
}
