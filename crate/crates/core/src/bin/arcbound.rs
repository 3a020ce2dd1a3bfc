use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use arcbound::chromatic::{dichromatic_exact, dichromatic_greedy, verify_coloring, Coloring};
use arcbound::clusters::{
    absorbing_set, dominating_set, find_cluster, find_jewel, girth, grow_jewel_chain, ClusterSearch,
};
use arcbound::graph::{independence_number, OrientedGraph, VertexSet};
use arcbound::local::arc_boundedness;
use arcbound::pipeline::{
    color_digraph_arc_local, color_tournament_arc_local, complete_to_tournament, Budgets, Trace,
};
use arcbound::refine::{light_color_then_refine, split_by_trace, ExactGraphOracle, Refinement};
use arcbound::toolkit::{
    generate, parse_coloring, parse_digraph, serialize_coloring, serialize_digraph, GenSpec, Model,
};

#[derive(Parser)]
#[command(
    name = "arcbound",
    version,
    about = "Colour tournaments and dense digraphs from arc neighbourhoods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen(GenArgs),
    /// Report structural parameters of a digraph.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Colour a digraph.
    Color(ColorArgs),
    /// Check a colouring file against a digraph.
    Verify {
        file: PathBuf,
        coloring: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for a (k, ell)-cluster.
    Cluster {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = Budgets::default().cluster_work)]
        work: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Grow a jewel chain with jewel parameter d.
    Chain {
        file: PathBuf,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Complete a digraph to a tournament; added arcs are listed as comments.
    Complete {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split the vertices outside a set by their traces on it.
    Split {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        cluster: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    model: Model,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Base digraph file for a blow-up (default: a directed cycle).
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Largest cluster size searched.
    #[arg(long)]
    ell: Option<usize>,
    /// Domination size budget.
    #[arg(long = "K")]
    k_budget: Option<usize>,
    /// Work units per cluster search.
    #[arg(long)]
    work: Option<u64>,
    /// Vertex limit for exact dichromatic numbers.
    #[arg(long)]
    exact_limit: Option<usize>,
    /// Jewel parameter override for the dense method.
    #[arg(long)]
    jewel_d: Option<usize>,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        if let Some(x) = self.ell {
            b.ell = x;
        }
        if let Some(x) = self.k_budget {
            b.k_budget = x;
        }
        if let Some(x) = self.work {
            b.cluster_work = x;
        }
        if let Some(x) = self.exact_limit {
            b.exact_limit = x;
        }
        b.jewel_d = self.jewel_d;
        b
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Greedy,
    /// Tournament colourer.
    Tournament,
    /// Recursion on independence number over tournament completions.
    Dense,
    /// Light arcs first, then backedge graphs.
    Refine,
}

#[derive(Args)]
struct ColorArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "dense")]
    method: Method,
    /// Cluster parameter for the refine method.
    #[arg(long, default_value_t = 3)]
    t: usize,
    /// Pair threshold for the refine method.
    #[arg(long, default_value_t = 1)]
    c: usize,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Colouring output (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Trace report output (JSON).
    #[arg(long)]
    trace: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(degraded) => ExitCode::from(if degraded { 2 } else { 0 }),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_digraph(path: &PathBuf) -> Result<OrientedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_digraph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn set_text(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Returns whether the result is degraded.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen(args) => {
            let mut spec = GenSpec::new(args.model).parts(args.parts).seed(args.seed);
            spec.n = args.n;
            spec.q = args.q;
            spec.p = args.p;
            if let Some(base) = &args.base {
                spec.base = Some(read_digraph(base)?);
            }
            emit(&args.output, &serialize_digraph(&generate(&spec)?))?;
            Ok(false)
        }
        Command::Analyze {
            file,
            budgets,
            output,
        } => {
            let d = read_digraph(&file)?;
            emit(&output, &analyze(&d, &budgets.budgets()))?;
            Ok(false)
        }
        Command::Color(args) => color(args),
        Command::Verify {
            file,
            coloring,
            output,
        } => {
            let d = read_digraph(&file)?;
            let text = fs::read_to_string(&coloring)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let c = parse_coloring(&text, d.n())?;
            if !verify_coloring(&d, &c)? {
                bail!("a colour class contains a directed cycle");
            }
            emit(&output, &format!("valid colors {}\n", c.color_count()))?;
            Ok(false)
        }
        Command::Cluster {
            file,
            k,
            ell,
            work,
            output,
        } => {
            let d = read_digraph(&file)?;
            let text = match find_cluster(&d, k, ell, work) {
                ClusterSearch::Found(c) => format!("found {}\n", set_text(&c.members)),
                ClusterSearch::Absent => "absent\n".to_string(),
                ClusterSearch::BudgetExceeded => "budget-exceeded\n".to_string(),
            };
            emit(&output, &text)?;
            Ok(false)
        }
        Command::Chain {
            file,
            d: jewel,
            budgets,
            output,
        } => {
            let d = read_digraph(&file)?;
            let b = budgets.budgets();
            let t = if d.is_tournament() {
                d.clone()
            } else {
                complete_to_tournament(&d).t
            };
            let growth = grow_jewel_chain(&t, &d, jewel, b.ell, b.cluster_work);
            let mut text = format!("blocks {}\n", growth.chain.len());
            for block in &growth.chain.blocks {
                writeln!(text, "block {}", set_text(&block.members))?;
            }
            if growth.chain.is_empty() {
                let status = match find_jewel(&d, jewel, b.ell, b.cluster_work) {
                    ClusterSearch::BudgetExceeded => "budget-exceeded",
                    _ => "no-jewel",
                };
                writeln!(text, "status {status}")?;
            }
            writeln!(text, "budget_exceeded {}", growth.budget_exceeded)?;
            emit(&output, &text)?;
            Ok(false)
        }
        Command::Complete { file, output } => {
            let d = read_digraph(&file)?;
            let comp = complete_to_tournament(&d);
            comp.check()?;
            let mut text = serialize_digraph(&comp.t);
            for e in comp.b_arcs() {
                writeln!(text, "# added {} {}", e.tail, e.head)?;
            }
            emit(&output, &text)?;
            Ok(false)
        }
        Command::Split {
            file,
            cluster,
            output,
        } => {
            let d = read_digraph(&file)?;
            if let Some(&v) = cluster.iter().find(|&&v| v >= d.n()) {
                bail!("vertex {v} is out of range");
            }
            let c = VertexSet::from_iter_in(d.n(), cluster.iter().copied());
            let mut text = String::new();
            for class in split_by_trace(&d, &c) {
                writeln!(
                    text,
                    "class {} | out {} | in {}",
                    set_text(&class.members),
                    set_text(&class.out),
                    set_text(&class.inn)
                )?;
            }
            emit(&output, &text)?;
            Ok(false)
        }
    }
}

fn analyze(d: &OrientedGraph, b: &Budgets) -> String {
    let mut s = String::new();
    let exactness = |exact: bool| if exact { "exact" } else { "bound" };
    let alpha = independence_number(d, b.alpha_limit);
    let dom = dominating_set(d, b.domination_limit);
    let abs = absorbing_set(d, b.domination_limit);
    let t = arc_boundedness(d, b.exact_limit);
    let _ = writeln!(s, "n {}", d.n());
    let _ = writeln!(s, "arcs {}", d.arc_count());
    let _ = writeln!(s, "tournament {}", d.is_tournament());
    let _ = writeln!(s, "alpha {} {}", alpha.value, exactness(alpha.exact));
    let _ = writeln!(s, "gamma_plus {} {}", dom.value.len(), exactness(dom.exact));
    let _ = writeln!(
        s,
        "gamma_minus {} {}",
        abs.value.len(),
        exactness(abs.exact)
    );
    match girth(d) {
        Some(g) => writeln!(s, "girth {g}"),
        None => writeln!(s, "girth none"),
    }
    .expect("writing to a string");
    let _ = writeln!(s, "t {} {}", t.value, exactness(t.exact));
    match dichromatic_exact(d, b.exact_limit) {
        Ok((k, _)) => writeln!(s, "dichromatic {k} exact"),
        Err(_) => writeln!(
            s,
            "dichromatic {} bound",
            dichromatic_greedy(d).color_count()
        ),
    }
    .expect("writing to a string");
    s
}

fn color(args: ColorArgs) -> Result<bool> {
    let d = read_digraph(&args.file)?;
    let b = args.budgets.budgets();
    let (coloring, trace): (Option<Coloring>, Option<Trace>) = match args.method {
        Method::Exact => (Some(dichromatic_exact(&d, b.exact_limit)?.1), None),
        Method::Greedy => (Some(dichromatic_greedy(&d)), None),
        Method::Tournament => {
            let (c, t) = color_tournament_arc_local(&d, &b)?;
            (Some(c), Some(t))
        }
        Method::Dense => {
            let (c, t) = color_digraph_arc_local(&d, &b)?;
            (Some(c), Some(t))
        }
        Method::Refine => {
            let oracle = ExactGraphOracle {
                limit: b.graph_limit,
            };
            match light_color_then_refine(&d, args.t, args.c, &b, &oracle)? {
                (Refinement::Coloring(c), t) => (Some(c), Some(t)),
                (Refinement::Pair(p), t) => {
                    let text = format!(
                        "# complete pair\n# A {}\n# B {}\n",
                        set_text(&p.a),
                        set_text(&p.b)
                    );
                    emit(&args.output, &text)?;
                    (None, Some(t))
                }
            }
        }
    };
    if let Some(c) = &coloring {
        emit(&args.output, &serialize_coloring(c))?;
    }
    let degraded = trace.as_ref().is_some_and(|t| t.degraded);
    if let (Some(path), Some(t)) = (&args.trace, &trace) {
        fs::write(path, t.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(degraded)
}
