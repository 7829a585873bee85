use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use gravswarm::engineering::{DesignId, DesignProblem};
use gravswarm::functions::registry;
use gravswarm::harness::{
    param_sweep, parse_algorithm_list, parse_problem_list, run_experiment, run_single, save_summary_json,
    save_trace_csv, AlgorithmId, ExperimentReport, ExperimentSpec, ParamSet, ProblemId, RunConfig, Summary,
    SweepParam,
};
use gravswarm::{Error, Result};

#[derive(Parser)]
#[command(name = "gravswarm", version, about = "Swarm optimizers with centroid-based fuzzy mutation")]
struct Cli {
    /// TOML file with default values for any flag; flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One seeded run, optionally writing the per-iteration trace.
    Run(RunArgs),
    /// Repeated runs over algorithms and problems with trimmed statistics.
    Experiment(ExperimentArgs),
    /// Repeat an experiment for several values of a mutation parameter.
    Sweep(SweepArgs),
    /// Print the available problems.
    List,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    algo: Option<String>,
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// CSV output path.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long)]
    constrained: bool,
    /// Record wall time in the trace `elapsed_ms` column.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Comma-separated, e.g. `GPS,MGPS`.
    #[arg(long)]
    algos: Option<String>,
    /// Comma-separated ids and ranges, e.g. `F1..F23,EF1`.
    #[arg(long)]
    problems: Option<String>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    keep: Option<usize>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Summary JSON output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Population 30, half the iterations, 10 runs keeping 8.
    #[arg(long)]
    quick: bool,
    #[arg(long)]
    constrained: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// One of alpha_mut, beta_mut, rho, phi.
    #[arg(long)]
    param: Option<String>,
    /// Comma-separated values.
    #[arg(long)]
    values: Option<String>,
    #[command(flatten)]
    experiment: ExperimentArgs,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    algo: Option<String>,
    problem: Option<String>,
    algos: Option<String>,
    problems: Option<String>,
    pop: Option<usize>,
    iters: Option<usize>,
    seed: Option<u64>,
    runs: Option<usize>,
    keep: Option<usize>,
    trace: Option<PathBuf>,
    out: Option<PathBuf>,
    param: Option<String>,
    values: Option<String>,
    quick: bool,
    constrained: bool,
    timing: bool,
    params: ParamSet,
}

fn load_config(path: Option<&Path>) -> Result<FileConfig> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.ok_or_else(|| Error::InvalidConfig(format!("missing --{flag}")))
}

fn cmd_run(args: RunArgs, file: FileConfig) -> Result<()> {
    let algo: AlgorithmId = required(args.algo.or(file.algo), "algo")?.parse()?;
    let problem: ProblemId = required(args.problem.or(file.problem), "problem")?.parse()?;
    let mut config = RunConfig::new(
        args.pop.or(file.pop).unwrap_or(50),
        args.iters.or(file.iters).unwrap_or_else(|| problem.default_iterations()),
    );
    config.params = file.params;
    config.constrained = args.constrained || file.constrained;
    config.timing = args.timing || file.timing;
    let seed = args.seed.or(file.seed).unwrap_or(0);
    let trace = run_single(algo, problem, &config, seed)?;
    if let Some(path) = args.trace.or(file.trace) {
        save_trace_csv(&trace, &path)?;
    }
    println!("algorithm  {algo}");
    println!("problem    {problem}");
    println!("seed       {seed}");
    println!("iterations {}", config.max_iter);
    println!("best       {:e}", trace.final_fitness);
    let position: Vec<String> = trace.final_position.iter().map(|v| format!("{v:.6}")).collect();
    println!("position   [{}]", position.join(", "));
    Ok(())
}

fn build_spec(args: &ExperimentArgs, file: &FileConfig) -> Result<(ExperimentSpec, Option<PathBuf>)> {
    let algos = args.algos.clone().or(file.algos.clone());
    let problems = args.problems.clone().or(file.problems.clone());
    let mut spec = ExperimentSpec::new(
        parse_algorithm_list(&required(algos, "algos")?)?,
        parse_problem_list(&required(problems, "problems")?)?,
    );
    spec.pop_size = args.pop.or(file.pop);
    spec.max_iter = args.iters.or(file.iters);
    spec.runs = args.runs.or(file.runs);
    spec.keep_best = args.keep.or(file.keep);
    spec.base_seed = args.seed.or(file.seed).unwrap_or(0);
    spec.params = file.params;
    spec.quick = args.quick || file.quick;
    spec.constrained = args.constrained || file.constrained;
    Ok((spec, args.out.clone().or(file.out.clone())))
}

fn print_report(report: &ExperimentReport) {
    println!(
        "{:<8} {:<8} {:>12} {:>12} {:>12} {:>12} {:>5}",
        "problem", "algo", "best", "avg", "worst", "sd", "n"
    );
    for r in &report.rows {
        println!(
            "{:<8} {:<8} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e} {:>5}",
            r.problem.to_string(),
            r.algorithm.as_str(),
            r.stats.best,
            r.stats.avg,
            r.stats.worst,
            r.stats.sd,
            r.stats.n_used
        );
    }
    for t in &report.tallies {
        println!(
            "{} vs {}: {} wins, {} losses, {} ties",
            t.challenger, t.baseline, t.wins, t.losses, t.ties
        );
    }
}

fn cmd_experiment(args: ExperimentArgs, file: FileConfig) -> Result<()> {
    let (spec, out) = build_spec(&args, &file)?;
    let report = run_experiment(&spec)?;
    print_report(&report);
    if let Some(path) = out {
        save_summary_json(&Summary::Experiment(report), &path)?;
    }
    Ok(())
}

fn cmd_sweep(mut args: SweepArgs, file: FileConfig) -> Result<()> {
    let parameter: SweepParam = required(args.param.or(file.param.clone()), "param")?.parse()?;
    let values: Vec<f64> = required(args.values.or(file.values.clone()), "values")?
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidConfig(format!("bad sweep value `{v}`")))
        })
        .collect::<Result<_>>()?;
    let e = &mut args.experiment;
    if e.algos.is_none() && file.algos.is_none() {
        e.algos = Some("MGPS,MPSOGSA".into());
    }
    if e.problems.is_none() && file.problems.is_none() {
        e.problems = Some("F1,F10,F15".into());
    }
    let (spec, out) = build_spec(e, &file)?;
    let sweep = param_sweep(&spec, parameter, &values)?;
    for row in &sweep.rows {
        println!("{parameter} = {}", row.value);
        print_report(&row.report);
        println!();
    }
    if let Some(path) = out {
        save_summary_json(&Summary::Sweep(sweep), &path)?;
    }
    Ok(())
}

fn cmd_list() {
    println!("{:<6} {:<28} {:>4} {:>16}  domain", "id", "kind", "dim", "optimum");
    for p in registry() {
        let (lo, hi) = (p.space.lower(), p.space.upper());
        let uniform = lo.iter().all(|v| *v == lo[0]) && hi.iter().all(|v| *v == hi[0]);
        let domain = if uniform {
            format!("[{}, {}]^{}", lo[0], hi[0], p.dim())
        } else {
            format!("{lo:?} .. {hi:?}")
        };
        println!(
            "{:<6} {:<28} {:>4} {:>16.8}  {domain}",
            p.id.to_string(),
            p.category.label(),
            p.dim(),
            p.known_optimum
        );
    }
    for id in DesignId::ALL {
        let p = DesignProblem::new(id);
        println!(
            "{:<6} {:<28} {:>4} {:>16}  {:?} .. {:?}",
            id.to_string(),
            id.name(),
            p.dim(),
            "-",
            p.space.lower(),
            p.space.upper()
        );
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load_config(cli.config.as_deref()).and_then(|file| match cli.command {
        Command::Run(a) => cmd_run(a, file),
        Command::Experiment(a) => cmd_experiment(a, file),
        Command::Sweep(a) => cmd_sweep(a, file),
        Command::List => {
            cmd_list();
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
