use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rainbow::bench::{default_instances, render_text, run_suite, RunConfig};
use rainbow::fpt::{decide_vc, saving_rc, saving_rvc, WinWinOutcome};
use rainbow::generate::Family;
use rainbow::io;
use rainbow::reductions::{
    check_equivalence, reduce_coloring_to_ssrvc, reduce_ssrvc_to_srvc, Reduction, SsrvcInstance,
};
use rainbow::solve::{Answer, DEFAULT_BUDGET};
use rainbow::{Coloring, Error, Graph, Result, Solver, Variant, VertexColoring};

#[derive(Parser)]
#[command(name = "rainbow", version, about = "Rainbow connectivity solvers, verifiers and reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide `number <= k`, or compute the optimum without --k.
    Solve(SolveArgs),
    /// Check a coloring file against a variant.
    Verify(VerifyArgs),
    /// Build the hardness-reduction instances and translate witnesses.
    Reduce(ReduceArgs),
    /// Write a generated graph.
    Generate(GenerateArgs),
    /// Cover-based and saving-based decision procedures.
    Fpt(FptArgs),
    /// Run a batch of generated instances.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Rc,
    Src,
    Rvc,
    Srvc,
    Ssrvc,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file (edge list or DIMACS).
    #[arg(long, short)]
    graph: PathBuf,
    #[arg(long, short, value_enum)]
    variant: VariantArg,
    /// Pair-set file, required for ssrvc.
    #[arg(long)]
    pairs: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphArgs,
    #[arg(long, short)]
    k: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Write the witness coloring here.
    #[arg(long, short)]
    witness: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphArgs,
    #[arg(long, short)]
    coloring: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    /// Subset instance on `K_n ∘ K_1`.
    Ssrvc,
    /// Diameter-3 strong rainbow vertex instance.
    Srvc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    /// Proper coloring of --graph.
    Coloring,
    /// Subset instance on `K_n ∘ K_1` given by --clique and --pairs.
    Ssrvc,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum, default_value = "coloring")]
    from: Source,
    /// Source graph for the coloring problem.
    #[arg(long, short, required_if_eq("from", "coloring"), conflicts_with_all = ["clique", "pairs"])]
    graph: Option<PathBuf>,
    /// Clique size of the subset instance.
    #[arg(long, required_if_eq("from", "ssrvc"))]
    clique: Option<usize>,
    /// Pendant pairs of the subset instance.
    #[arg(long, required_if_eq("from", "ssrvc"))]
    pairs: Option<PathBuf>,
    #[arg(long, short)]
    k: usize,
    /// Final stage to produce.
    #[arg(long, value_enum, default_value = "srvc")]
    to: Stage,
    /// Output prefix: writes PREFIX.graph, PREFIX.roles, PREFIX.dot and,
    /// for the subset stage, PREFIX.pairs.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Translate a source witness forward into PREFIX.witness.
    #[arg(long, requires = "out")]
    forward: Option<PathBuf>,
    /// Translate a target witness back to the source and print it.
    #[arg(long)]
    backward: Option<PathBuf>,
    /// Solve both sides of every step exactly and cross-check them.
    #[arg(long)]
    check: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dimacs,
    Dot,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family descriptor, e.g. `cycle:6`, `corona:complete:3`, `random:8:0.4`.
    family: Family,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "edges")]
    format: Format,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverVariant {
    Rc,
    Rvc,
    Srvc,
}

#[derive(Clone, Copy, ValueEnum)]
enum SavingVariant {
    Rc,
    Rvc,
}

#[derive(Args)]
struct FptArgs {
    #[arg(long, short)]
    graph: PathBuf,
    /// Decide `number <= k` through a minimum vertex cover.
    #[arg(long, value_enum, conflicts_with = "saving", required_unless_present = "saving")]
    variant: Option<CoverVariant>,
    /// Decide `rc <= m - k` or `rvc <= n - k`.
    #[arg(long, value_enum)]
    saving: Option<SavingVariant>,
    #[arg(long, short)]
    k: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, short)]
    witness: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance descriptors; the built-in suite when omitted.
    #[arg(long = "instance")]
    instances: Vec<Family>,
    /// Run no instances at all.
    #[arg(long, conflicts_with = "instances")]
    empty: bool,
    #[arg(long = "variant", value_enum)]
    variants: Vec<VariantArg>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Include wall time (output is then no longer reproducible byte for byte).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

/// Successful run; `false` means a decision came out "no".
type Outcome = Result<bool>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Reduce(a) => reduce(a),
        Command::Generate(a) => generate(a),
        Command::Fpt(a) => fpt(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn variant(arg: VariantArg, pairs: Option<&Path>) -> Result<Variant> {
    if pairs.is_some() && !matches!(arg, VariantArg::Ssrvc) {
        return Err(Error::InvalidArgument("--pairs only applies to ssrvc".into()));
    }
    Ok(match arg {
        VariantArg::Rc => Variant::Rc,
        VariantArg::Src => Variant::Src,
        VariantArg::Rvc => Variant::Rvc,
        VariantArg::Srvc => Variant::Srvc,
        VariantArg::Ssrvc => {
            let path = pairs.ok_or_else(|| Error::InvalidArgument("ssrvc needs --pairs".into()))?;
            Variant::Ssrvc(io::load_pairs(path)?)
        }
    })
}

fn load(input: &GraphArgs) -> Result<(Graph, Variant)> {
    let g = io::load_graph(&input.graph)?;
    let v = variant(input.variant, input.pairs.as_deref())?;
    Ok((g, v))
}

fn write(path: &Path, text: &str) -> Result<()> {
    Ok(std::fs::write(path, text)?)
}

fn emit(json: bool, value: &impl Serialize, text: String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        println!("{text}");
    }
    Ok(())
}

fn solve(a: SolveArgs) -> Outcome {
    let (g, v) = load(&a.input)?;
    let mut solver = Solver::with_budget(a.budget);
    let report = match a.k {
        Some(k) => solver.decide(&g, &v, k)?,
        None => solver.optimize(&g, &v)?,
    };
    if let (Some(path), Some(w)) = (&a.witness, &report.witness) {
        write(path, &io::write_coloring(w))?;
    }
    let text = match report.answer {
        Answer::Optimum(k) => format!("{v} = {k} ({} nodes)", report.nodes),
        Answer::Yes => format!("{v} <= {}: yes ({} nodes)", a.k.unwrap_or(0), report.nodes),
        Answer::No => format!("{v} <= {}: no ({} nodes)", a.k.unwrap_or(0), report.nodes),
    };
    emit(a.json, &report, text)?;
    Ok(report.answer != Answer::No)
}

fn verify(a: VerifyArgs) -> Outcome {
    let (g, v) = load(&a.input)?;
    let col = io::load_coloring(&a.coloring)?;
    let verdict = rainbow::verify::verify(&g, &v, &col)?;
    let text = match verdict.witness() {
        None => format!("{v}: rainbow"),
        Some((x, y)) => format!("{v}: no rainbow path between {x} and {y}"),
    };
    emit(a.json, &verdict, text)?;
    Ok(verdict.is_rainbow())
}

fn write_stage(prefix: &Path, r: &impl Reduction, pairs: Option<&rainbow::PairSet>) -> Result<()> {
    let with = |ext: &str| prefix.with_extension(ext);
    write(&with("graph"), &io::write_edge_list(r.target_graph()))?;
    write(&with("roles"), &io::write_roles(r.roles()))?;
    write(&with("dot"), &io::roles_to_dot(r.target_graph(), r.roles()))?;
    if let Some(p) = pairs {
        write(&with("pairs"), &io::write_pairs(p))?;
    }
    Ok(())
}

fn vertex_coloring(path: &Path) -> Result<VertexColoring> {
    match io::load_coloring(path)? {
        Coloring::Vertex(c) => Ok(c),
        Coloring::Edge(_) => Err(Error::InvalidColoring("expected a vertex coloring".into())),
    }
}

fn report_check(label: &str, r: &impl Reduction, solver: &mut Solver) -> Result<()> {
    let rep = check_equivalence(r, solver)?;
    println!(
        "{label}: both sides answer {} ({} + {} nodes)",
        if rep.answer { "yes" } else { "no" },
        rep.source_nodes,
        rep.target_nodes
    );
    Ok(())
}

fn reduce(a: ReduceArgs) -> Outcome {
    let mut solver = Solver::with_budget(a.budget);
    let first = match (a.from, &a.graph) {
        (Source::Coloring, Some(path)) => Some(reduce_coloring_to_ssrvc(&io::load_graph(path)?, a.k)?),
        _ => None,
    };
    let instance = match (&first, a.clique, &a.pairs) {
        (Some(r), _, _) => r.instance().clone(),
        (None, Some(n), Some(p)) => SsrvcInstance::new(n, io::load_pairs(p)?, a.k)?,
        _ => {
            return Err(Error::InvalidArgument(
                "--from coloring needs --graph; --from ssrvc needs --clique and --pairs".into(),
            ))
        }
    };
    if a.check {
        if let Some(r) = &first {
            report_check("coloring -> subset", r, &mut solver)?;
        }
    }
    let mut forward = a.forward.as_deref().map(vertex_coloring).transpose()?;
    if let Some(c) = &forward {
        let valid = match &first {
            Some(r) => r.source_accepts(c)?,
            None => instance.accepts(c)?,
        };
        if !valid {
            return Err(Error::InvalidArgument(format!(
                "--forward coloring is not a valid source witness for k = {}",
                a.k
            )));
        }
    }
    if let (Some(r), Some(c)) = (&first, forward.as_ref()) {
        forward = Some(translated(r, c)?);
    }
    match a.to {
        Stage::Ssrvc => {
            let back = a.backward.as_deref().map(vertex_coloring).transpose()?;
            if let Some(r) = &first {
                if let Some(prefix) = &a.out {
                    write_stage(prefix, r, Some(instance.pairs()))?;
                }
                if let Some(c) = back {
                    println!("{}", io::write_coloring(&Coloring::Vertex(r.backward(&c)?)).trim_end());
                }
            } else if let Some(prefix) = &a.out {
                write(&prefix.with_extension("graph"), &io::write_edge_list(instance.graph()))?;
                write(&prefix.with_extension("pairs"), &io::write_pairs(instance.pairs()))?;
            }
            println!(
                "subset instance: {} vertices, {} pairs, k = {}",
                instance.graph().n(),
                instance.pairs().len(),
                a.k
            );
        }
        Stage::Srvc => {
            let second = reduce_ssrvc_to_srvc(&instance)?;
            if a.check {
                report_check("subset -> diameter 3", &second, &mut solver)?;
            }
            if let Some(prefix) = &a.out {
                write_stage(prefix, &second, None)?;
            }
            if let Some(c) = forward.take() {
                forward = Some(translated(&second, &c)?);
            }
            if let Some(path) = &a.backward {
                let mut c = second.backward(&vertex_coloring(path)?)?;
                if let Some(r) = &first {
                    c = r.backward(&c)?;
                }
                println!("{}", io::write_coloring(&Coloring::Vertex(c)).trim_end());
            }
            println!(
                "diameter-3 instance: {} vertices, {} edges, k = {}",
                second.graph().n(),
                second.graph().m(),
                a.k
            );
        }
    }
    if let (Some(c), Some(prefix)) = (forward, &a.out) {
        write(&prefix.with_extension("witness"), &io::write_coloring(&Coloring::Vertex(c)))?;
    }
    Ok(true)
}

/// Forward translation, refusing to emit a target witness that fails.
fn translated(r: &impl Reduction, c: &VertexColoring) -> Result<VertexColoring> {
    let out = r.forward(c)?;
    if !r.target_accepts(&out)? {
        return Err(Error::Invariant(format!(
            "forward translation {:?} is rejected by the target",
            out.colors()
        )));
    }
    Ok(out)
}

fn generate(a: GenerateArgs) -> Outcome {
    let g = a.family.generate(a.seed)?;
    let text = match a.format {
        Format::Edges => format!("# {} seed {}\n{}", a.family, a.seed, io::write_edge_list(&g)),
        Format::Dimacs => format!("c {} seed {}\n{}", a.family, a.seed, io::write_dimacs(&g)),
        Format::Dot => g.to_dot(None),
    };
    match &a.out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn fpt(a: FptArgs) -> Outcome {
    let g = io::load_graph(&a.graph)?;
    let mut solver = Solver::with_budget(a.budget);
    let (label, out): (String, WinWinOutcome) = match (a.variant, a.saving) {
        (Some(v), _) => {
            let variant = match v {
                CoverVariant::Rc => Variant::Rc,
                CoverVariant::Rvc => Variant::Rvc,
                CoverVariant::Srvc => Variant::Srvc,
            };
            let out = decide_vc(&mut solver, &g, &variant, a.k)?;
            (format!("{variant} <= {}", a.k), out)
        }
        (None, Some(SavingVariant::Rc)) => (
            format!("rc <= m - {}", a.k),
            saving_rc(&mut solver, &g, a.k)?,
        ),
        (None, Some(SavingVariant::Rvc)) => (
            format!("rvc <= n - {}", a.k),
            saving_rvc(&mut solver, &g, a.k)?,
        ),
        (None, None) => unreachable!("clap requires --variant or --saving"),
    };
    if let (Some(path), Some(w)) = (&a.witness, &out.witness) {
        write(path, &io::write_coloring(w))?;
    }
    let text = format!(
        "{label}: {} via {}",
        if out.yes { "yes" } else { "no" },
        out.branch
    );
    emit(a.json, &out, text)?;
    Ok(out.yes)
}

fn bench(a: BenchArgs) -> Outcome {
    let variants = if a.variants.is_empty() {
        RunConfig::default().variants
    } else {
        a.variants
            .iter()
            .map(|&v| variant(v, None))
            .collect::<Result<_>>()?
    };
    let cfg = RunConfig {
        instances: if a.empty {
            Vec::new()
        } else if a.instances.is_empty() {
            default_instances()
        } else {
            a.instances
        },
        seed: a.seed,
        budget: a.budget,
        variants,
        timing: a.timing,
    };
    let records = run_suite(&cfg)?;
    let text = if a.json {
        serde_json::to_string_pretty(&serde_json::json!({ "config": cfg, "records": records }))? + "\n"
    } else {
        render_text(&records)
    };
    match &a.out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(true)
}
