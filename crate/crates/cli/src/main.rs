use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hadwiger::generators::{
    expected_minor_probability, fix_antitriangles, gen_dipole_graph, gen_petersen_complement,
    gen_random_dense, gen_v8_complement, k33_three_twists, monte_carlo_fixed_partition, RandomModel,
};
use hadwiger::graph::{antitriangle, parse_graph, write_graph, Graph, VertexSet};
use hadwiger::labeling::{
    axiom_check, clique_cover_labeling, complement_3coloring_cliques, extract_aacw, refine_labeling,
    solve_2sat_labeling, ClauseRelations, EdgeIndex, EdgeLabeling, LabelMode, LabelingError,
    RefineMode,
};
use hadwiger::strategies::{best_minor, Outcome};
use hadwiger::structure::{dipole_decompose, TGraphSpec};
use hadwiger::witness::{brute_force_max_minor, verify_minor, MinorWitness, Verdict};

/// Complete minors in graphs without a stable set of size three.
#[derive(Parser, Debug)]
#[command(name = "hadwiger", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph from one of the built-in families.
    Generate(GenerateArgs),
    /// Run every minor construction on a graph and rank the results.
    Analyze(AnalyzeArgs),
    /// Check a witness file against a graph.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Compute a good/bad edge labeling.
    Label {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = LabelKind::TwoSat)]
        mode: LabelKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a labeled graph into dipoles over a bipartition.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        labeling: PathBuf,
        /// Comma-separated left side.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        left: Vec<usize>,
        /// Read the labeling as medium (good edges may be `M`).
        #[arg(long)]
        medium: bool,
    },
    /// Run an experiment and write CSV.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Petersen,
    V8,
    Dipole,
    Random,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Class sizes for blow-ups (10 for petersen, 8 for v8).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// `k33-3twist`, `k33-3twist-odd`, or a file with a dipole spec.
    #[arg(long)]
    t: Option<String>,
    /// Pole size for the preset dipole constructions.
    #[arg(long, default_value_t = 1)]
    poles: usize,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep stable triples in random graphs instead of repairing them.
    #[arg(long)]
    raw: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Only show strategies whose name contains this.
    #[arg(long)]
    strategy: Option<String>,
    /// Run the exhaustive oracle (n <= 12).
    #[arg(long)]
    oracle: bool,
    /// Write the best witness here.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LabelKind {
    #[value(name = "2sat")]
    TwoSat,
    CliqueCover,
    Cor1,
    Cor2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExperimentKind {
    McProbability,
    SweepMinorSizes,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[arg(value_enum)]
    kind: ExperimentKind,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 0.9)]
    p: f64,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Exit status for results that contradict an expected bound.
const FINDING: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(&args),
        Command::Analyze(args) => cmd_analyze(&args),
        Command::Verify { input, witness } => cmd_verify(&input, &witness),
        Command::Label { input, mode, out } => cmd_label(&input, mode, out.as_deref()),
        Command::Decompose {
            input,
            labeling,
            left,
            medium,
        } => cmd_decompose(&input, &labeling, &left, medium),
        Command::Experiment(args) => cmd_experiment(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn class_status(g: &Graph) -> String {
    match antitriangle(g) {
        None => "yes".into(),
        Some((a, b, c)) => format!("no (stable set {a} {b} {c})"),
    }
}

fn cmd_generate(args: &GenerateArgs) -> Result<u8> {
    let g = match args.family {
        Family::Petersen => gen_petersen_complement(args.sizes.as_deref().unwrap_or(&[1; 10]))?,
        Family::V8 => gen_v8_complement(args.sizes.as_deref().unwrap_or(&[1; 8]))?,
        Family::Dipole => {
            if args.poles == 0 {
                bail!("--poles must be positive");
            }
            let spec = match args.t.as_deref() {
                Some("k33-3twist") => k33_three_twists(args.poles, false),
                Some("k33-3twist-odd") => k33_three_twists(args.poles, true),
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
                    TGraphSpec::parse(&text)?
                }
                None => bail!("dipole needs --t"),
            };
            gen_dipole_graph(&spec)
        }
        Family::Random => {
            let n = args.n.context("random needs --n")?;
            let model = RandomModel::new(n, args.c, args.alpha, args.seed)?;
            let g = gen_random_dense(&model);
            if args.raw {
                g
            } else {
                fix_antitriangles(&g, args.seed)
            }
        }
    };
    write_output(args.out.as_deref(), &write_graph(&g))?;
    let summary = format!("n {} m {} antitriangle-free {}", g.n(), g.m(), class_status(&g));
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<u8> {
    let g = read_graph(&args.input)?;
    let n = g.n();
    let target = n.div_ceil(2);
    let mut analysis = best_minor(&g);
    if args.oracle && analysis.oracle.is_none() {
        analysis.oracle = Some(brute_force_max_minor(&g, 2)?);
    }
    println!("n {n} m {} antitriangle-free {}", g.m(), class_status(&g));
    println!("{:<28} {:>5} {:>7} {:>9}  detail", "strategy", "size", "target", "verified");
    for r in &analysis.reports {
        if args.strategy.as_deref().is_some_and(|s| !r.strategy.contains(s)) {
            continue;
        }
        let (verified, detail) = match &r.outcome {
            Outcome::Witness(_) => ("yes", r.notes.join("; ")),
            Outcome::Failure(f) => ("no", f.to_string()),
        };
        println!("{:<28} {:>5} {:>7} {:>9}  {detail}", r.strategy, r.size(), target, verified);
    }
    let best = analysis.best();
    let best_size = analysis.best_size();
    if let Some(o) = &analysis.oracle {
        println!("oracle {} gap {}", o.size(), analysis.gap().unwrap_or(0));
    }
    if let Some(r) = best {
        println!("best {} via {}", best_size, r.strategy);
        let w = r.witness().expect("best has a witness");
        print!("{}", w.to_text());
        if let Some(path) = &args.witness_out {
            fs::write(path, w.to_text()).with_context(|| format!("writing {}", path.display()))?;
        }
    } else {
        println!("best 0");
    }
    let confirmed = analysis.oracle.as_ref().is_some_and(|o| o.size() == best_size);
    Ok(if best_size >= target || confirmed { 0 } else { FINDING })
}

fn cmd_verify(input: &Path, witness: &Path) -> Result<u8> {
    let g = read_graph(input)?;
    let text = fs::read_to_string(witness).with_context(|| format!("reading {}", witness.display()))?;
    let w = MinorWitness::parse(&text).with_context(|| format!("parsing {}", witness.display()))?;
    match verify_minor(&g, &w)? {
        Verdict::Valid => {
            println!("valid K{} minor", w.size());
            Ok(0)
        }
        Verdict::Invalid(v) => {
            println!("invalid: {v}");
            Ok(FINDING)
        }
    }
}

fn cmd_label(input: &Path, kind: LabelKind, out: Option<&Path>) -> Result<u8> {
    let g = read_graph(input)?;
    let lab = match kind {
        LabelKind::TwoSat => solve_2sat_labeling(&g, &[]),
        LabelKind::CliqueCover => match complement_3coloring_cliques(&g) {
            Some(cliques) => clique_cover_labeling(&g, &cliques),
            None => bail!("complement is not 3-colorable"),
        },
        LabelKind::Cor1 => refine_labeling(&g, RefineMode::Cor1),
        LabelKind::Cor2 => refine_labeling(&g, RefineMode::Cor2),
    };
    match lab {
        Ok(lab) => {
            write_output(out, &lab.to_text())?;
            let violations = axiom_check(&g, &lab);
            if let Some(v) = violations.first() {
                eprintln!("{} axiom violations, first: {v}", violations.len());
            }
            Ok(0)
        }
        Err(LabelingError::Infeasible) => {
            println!("infeasible");
            let rel = ClauseRelations::of_graph(&g);
            if let Some(cert) = extract_aacw(&rel)? {
                print!("{}", cert.to_text(EdgeIndex::new(&g).edges()));
            }
            Ok(FINDING)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_decompose(input: &Path, labeling: &Path, left: &[usize], medium: bool) -> Result<u8> {
    let g = read_graph(input)?;
    let text = fs::read_to_string(labeling).with_context(|| format!("reading {}", labeling.display()))?;
    let mode = if medium { LabelMode::Medium } else { LabelMode::Strict };
    let lab = EdgeLabeling::parse(&g, &text, mode)?;
    let left: VertexSet = left.iter().copied().collect();
    match dipole_decompose(&g, &lab, &left) {
        Ok(d) => {
            for (name, dipoles) in [("left", &d.left_dipoles), ("right", &d.right_dipoles)] {
                for dp in dipoles.iter() {
                    println!("{name} top {} bottom {}", dp.top, dp.bottom);
                }
            }
            print!("{}", d.to_tspec().to_text());
            Ok(0)
        }
        Err(e) => {
            println!("not a dipole graph: {e}");
            Ok(FINDING)
        }
    }
}

fn cmd_experiment(args: &ExperimentArgs) -> Result<u8> {
    let file = fs::File::create(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let mut w = csv::Writer::from_writer(file);
    match args.kind {
        ExperimentKind::McProbability => {
            let exact = expected_minor_probability(args.n, args.p)?;
            let est = monte_carlo_fixed_partition(args.n, args.p, args.trials, args.seed)?;
            w.write_record(["n", "p", "trials", "empirical", "exact", "sigma"])?;
            w.write_record([
                args.n.to_string(),
                args.p.to_string(),
                est.trials.to_string(),
                est.mean.to_string(),
                exact.probability.to_string(),
                est.stderr.to_string(),
            ])?;
            let off = (est.mean - exact.probability).abs();
            println!(
                "empirical {:.6} exact {:.6} ({:.2} standard errors)",
                est.mean,
                exact.probability,
                if est.stderr > 0.0 { off / est.stderr } else { 0.0 }
            );
        }
        ExperimentKind::SweepMinorSizes => {
            let mut rows: Vec<(u64, String, usize, usize)> = (0..args.seeds)
                .into_par_iter()
                .map(|s| -> Result<Vec<_>> {
                    let seed = args.seed + s;
                    let model = RandomModel::new(args.n, args.c, args.alpha, seed)?;
                    let g = fix_antitriangles(&gen_random_dense(&model), seed);
                    let target = g.n().div_ceil(2);
                    Ok(best_minor(&g)
                        .reports
                        .into_iter()
                        .map(|r| (seed, r.strategy.clone(), r.size(), target))
                        .collect())
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            rows.sort();
            w.write_record(["seed", "n", "alpha", "c", "strategy", "size", "target"])?;
            for (seed, strategy, size, target) in &rows {
                w.write_record([
                    seed.to_string(),
                    args.n.to_string(),
                    args.alpha.to_string(),
                    args.c.to_string(),
                    strategy.clone(),
                    size.to_string(),
                    target.to_string(),
                ])?;
            }
            println!("{} rows", rows.len());
        }
    }
    w.flush()?;
    std::io::stdout().flush()?;
    Ok(0)
}
