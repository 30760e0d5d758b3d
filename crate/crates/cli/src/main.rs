//! `indsat`: build, verify and assemble graphs around induced saturation.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use indsat_core::assemble::{
    assemble_gt, cycle_family, freeness_probe, m3_edge_probe, short_path_probe, validate_base,
    AssembleError, CubicBase, Provider,
};
use indsat_core::catalog::{random_gnp, Family};
use indsat_core::detect::{cross_check, SearchError};
use indsat_core::io::{read_graph, read_text, territory_to_json, Manifest};
use indsat_core::territory::{canonical_with_perimeter, Territory};
use indsat_core::{graph6, Budget, Graph, Mode, Target, Verifier};

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const INFEASIBLE: u8 = 2;
const BUDGET: u8 = 3;
const IO_ERROR: u8 = 4;

#[derive(Parser)]
#[command(name = "indsat", version, about = "Induced saturation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog graph or a canonical territory.
    Construct(ConstructArgs),
    /// Check freeness / criticality / saturation for an induced path or cycle.
    Verify(VerifyArgs),
    /// Glue territories onto the cycle family of a cubic Hamiltonian base.
    Assemble(AssembleArgs),
    /// Cross-check the backtracking finder against brute force on random graphs.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Catalog name (`dodecahedron`, `vd`, `hex-torus`, `cycle:7`, ...) or `canonical`.
    #[arg(long)]
    family: String,
    #[arg(long)]
    t: Option<usize>,
    /// Canonical level.
    #[arg(long)]
    m: Option<usize>,
    /// Target perimeter for a canonical territory.
    #[arg(long)]
    perimeter: Option<u64>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write Graphviz DOT here.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Free,
    Del,
    Add,
    Is,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Free => Mode::Free,
            ModeArg::Del => Mode::DeletionCritical,
            ModeArg::Add => Mode::AdditionCritical,
            ModeArg::Is => Mode::Saturated,
        }
    }
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["cycle", "path"])))]
struct VerifyArgs {
    /// Graph file (.g6, .json territory, edge list) or catalog name.
    input: String,
    #[arg(long)]
    cycle: Option<usize>,
    /// Path target, counted in vertices.
    #[arg(long)]
    path: Option<usize>,
    #[arg(long, value_enum, default_value = "is")]
    mode: ModeArg,
    /// Verify the complement of the input instead.
    #[arg(long)]
    complement: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
    max_nodes: u64,
    #[arg(long, default_value_t = Budget::DEFAULT_TIME.as_secs())]
    max_seconds: u64,
    /// Report file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AssembleArgs {
    /// Catalog base (k4, k33, cube, heawood, mobius-kantor, pappus, desargues).
    #[arg(long, required_unless_present = "graph")]
    base: Option<String>,
    /// Base graph file instead of a catalog name.
    #[arg(long, requires = "ham")]
    graph: Option<PathBuf>,
    /// Hamiltonian cycle of `--graph`, whitespace-separated vertex ids.
    #[arg(long)]
    ham: Option<PathBuf>,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value = "canonical")]
    provider: Provider,
    /// Minimum girth demanded of the base.
    #[arg(long, default_value_t = 3)]
    g_min: usize,
    /// Run freeness and short-path probes when G_t has at most this many vertices.
    #[arg(long, default_value_t = 400)]
    probe_cap: usize,
    #[arg(long, default_value_t = Budget::DEFAULT_NODES)]
    max_nodes: u64,
    /// Manifest file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// graph6 of G_t.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { IO_ERROR } else { HOLDS });
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Assemble(a) => assemble(a),
        Command::Oracle(a) => oracle(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(IO_ERROR)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => print_stdout(text),
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn print_stdout(text: &str) -> Result<()> {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn summary(g: &Graph) -> String {
    let girth = g.girth().map_or("inf".to_string(), |x| x.to_string());
    format!("order {} size {} girth {girth}", g.order(), g.size())
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    v.with_context(|| format!("--{flag} is required for {family}"))
}

fn family_spec(a: &ConstructArgs) -> Result<String> {
    let f = a.family.replace('_', "-");
    if f.contains(':') {
        return Ok(f);
    }
    Ok(match f.as_str() {
        "vd" | "line-ktt" => format!("{f}:{}", need(a.t, "t", &f)?),
        "hex-torus" | "complete-bipartite" => {
            format!(
                "{f}:{},{}",
                need(a.rows, "rows", &f)?,
                need(a.cols, "cols", &f)?
            )
        }
        "cycle" | "path" | "complete" | "empty" | "edgeless" => {
            format!("{f}:{}", need(a.n, "n", &f)?)
        }
        _ => f,
    })
}

fn construct(a: ConstructArgs) -> Result<u8> {
    if a.family == "canonical" {
        let t = need(a.t, "t", "canonical")?;
        let terr = match (a.m, a.perimeter) {
            (Some(m), None) => Territory::canonical(t, m)?,
            (None, Some(p)) => match canonical_with_perimeter(t, p) {
                Ok((terr, _)) => terr,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(INFEASIBLE);
                }
            },
            _ => bail!("canonical needs exactly one of --m or --perimeter"),
        };
        emit(a.out.as_deref(), &territory_to_json(&terr))?;
        if let Some(p) = &a.dot {
            fs::write(p, terr.graph().to_dot("territory"))?;
        }
        eprintln!("{} perimeter {}", summary(terr.graph()), terr.perimeter());
        return Ok(HOLDS);
    }
    let family: Family = family_spec(&a)?.parse()?;
    let g = family.build()?;
    emit(a.out.as_deref(), &graph6::encode(&g)?)?;
    if let Some(p) = &a.dot {
        fs::write(p, g.to_dot(&family.to_string()))?;
    }
    eprintln!("{}", summary(&g));
    Ok(HOLDS)
}

fn load_input(input: &str) -> Result<Graph> {
    let path = Path::new(input);
    if path.exists() {
        return Ok(read_graph(path)?);
    }
    let family: Family = input
        .parse()
        .with_context(|| format!("`{input}` is neither a file nor a catalog name"))?;
    Ok(family.build()?)
}

fn verify(a: VerifyArgs) -> Result<u8> {
    let mut g = load_input(&a.input)?;
    if a.complement {
        g = g.complement();
    }
    let target = match (a.cycle, a.path) {
        (Some(k), _) => Target::cycle(k)?,
        (_, Some(k)) => Target::path(k)?,
        _ => unreachable!("clap enforces one target"),
    };
    let budget = Budget {
        max_nodes: a.max_nodes,
        max_time: Some(Duration::from_secs(a.max_seconds)),
    };
    let mode = Mode::from(a.mode);
    let report = match Verifier::new(budget, a.workers).run(&g, target, mode) {
        Ok(r) => r,
        Err(e @ (SearchError::BudgetExceeded { .. } | SearchError::TimeExceeded { .. })) => {
            eprintln!("error: {e}");
            return Ok(BUDGET);
        }
        Err(e) => return Err(e.into()),
    };
    emit(a.out.as_deref(), &serde_json::to_string_pretty(&report)?)?;
    Ok(if report.holds(mode) {
        HOLDS
    } else if report.free
        && report.any_budget_exceeded()
        && report.deletion.failing_edges.is_empty()
        && report.addition.failing_edges.is_empty()
    {
        BUDGET
    } else {
        FAILS
    })
}

fn load_base(a: &AssembleArgs) -> Result<std::result::Result<CubicBase, AssembleError>> {
    if let Some(path) = &a.graph {
        let g = read_graph(path)?;
        let ham_path = a.ham.as_ref().expect("clap requires --ham");
        let cycle = read_text(ham_path)?
            .split_whitespace()
            .map(|w| w.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("parsing {}", ham_path.display()))?;
        let name = path
            .file_stem()
            .map_or("base".into(), |s| s.to_string_lossy().into_owned());
        return Ok(validate_base(&name, g, cycle, a.g_min));
    }
    let family: Family = a.base.as_deref().unwrap_or_default().parse()?;
    Ok(CubicBase::from_catalog(&family, a.g_min))
}

fn assemble(a: AssembleArgs) -> Result<u8> {
    let base = match load_base(&a)? {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(INFEASIBLE);
        }
    };
    let family = cycle_family(&base)?;
    let assembly = match assemble_gt(&base, &family, a.t, a.provider) {
        Ok(x) => x,
        Err(e @ AssembleError::TerritoryUnavailable(_)) => {
            eprintln!("error: {e}");
            if let AssembleError::TerritoryUnavailable(items) = &e {
                for i in items {
                    eprintln!(
                        "  class {} cycle of length {}: {:?}",
                        i.class, i.length, i.cycle
                    );
                }
            }
            return Ok(INFEASIBLE);
        }
        Err(e) => return Err(e.into()),
    };
    let mut manifest = Manifest::new(&assembly, base.girth, a.g_min)?;
    let budget = Budget {
        max_nodes: a.max_nodes,
        ..Budget::default()
    };
    if a.provider == Provider::Canonical && assembly.graph.order() <= a.probe_cap {
        manifest.freeness = Some(freeness_probe(&assembly, &base, &Verifier::new(budget, 1))?);
        manifest.m3_probe = Some(m3_edge_probe(&assembly, &base, &budget)?);
    }
    if base.girth > 3 {
        let cap = (base.girth - 2) / 2;
        manifest.pair_probe = Some(short_path_probe(&base, &family, cap)?);
    }
    emit(a.out.as_deref(), &manifest.to_json())?;
    if let Some(p) = &a.graph_out {
        fs::write(p, &manifest.graph6)?;
    }
    if let Some(p) = &a.dot {
        fs::write(p, assembly.graph.to_dot("g_t"))?;
    }
    eprintln!("{}", summary(&assembly.graph));
    if let Some(f) = &manifest.freeness {
        eprintln!("C{} check: {}", 2 * a.t - 2, f.verdict());
    }
    Ok(if assembly.audit.passed() {
        HOLDS
    } else {
        FAILS
    })
}

fn oracle(a: OracleArgs) -> Result<u8> {
    if a.max_n > indsat_core::detect::BRUTE_FORCE_MAX_ORDER {
        bail!(
            "--max-n is capped at {}",
            indsat_core::detect::BRUTE_FORCE_MAX_ORDER
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut disagreements = Vec::new();
    let mut queries = 0usize;
    for i in 0..a.count {
        let n = rng.gen_range(1..=a.max_n);
        let p = rng.gen_range(0.1..0.9);
        let g = random_gnp(n, p, &mut rng);
        queries += n + n.saturating_sub(2);
        for d in cross_check(&g, &Budget::default())? {
            disagreements.push(serde_json::json!({
                "graph": i,
                "graph6": graph6::encode(&g)?,
                "target": d.target.to_string(),
                "search": d.search,
                "oracle": d.oracle,
            }));
        }
    }
    let ok = disagreements.is_empty();
    let report = serde_json::json!({
        "seed": a.seed,
        "graphs": a.count,
        "queries": queries,
        "disagreements": disagreements,
    });
    print_stdout(&serde_json::to_string_pretty(&report)?)?;
    Ok(if ok { HOLDS } else { FAILS })
}
