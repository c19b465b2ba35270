//! `maxstn`: solve, bound, generate, render and benchmark instances of the
//! longest spanning tree with neighborhoods, and verify the ratio analysis.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use maxstn_core::bench::{random_family, run_family, tight_family, to_csv};
use maxstn_core::generators::{gen_example_greedy, gen_example_star, gen_random, gen_tight};
use maxstn_core::render::render_svg;
use maxstn_core::theory::{verify_with_offset, CaseAnalysis};
use maxstn_core::{
    algo_a1, algo_a2_with_budget, bounds_report, certified_ratio, exact_opt, read_instance,
    BoundsReport, Error, Instance, Producer, Solution, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "maxstn", version, about = "Longest spanning tree with neighborhoods")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or all algorithms on an instance and report bounds.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::A2)]
        algo: Algo,
        /// Largest number of selections the exact oracle may enumerate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Benchmark a family of instances and write a CSV table.
    Bench {
        #[arg(long, value_enum, default_value_t = Family::Random)]
        family: Family,
        /// Number of random instances.
        #[arg(long, default_value_t = 200)]
        seeds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Sizes for the tight family.
        #[arg(long, value_delimiter = ',', default_value = "10,20,50,100")]
        ns: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance as JSON.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Tight family parameter; defaults to 1/(n-1).
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a planar instance, optionally with a solution, as SVG.
    Render {
        file: PathBuf,
        /// Compute and draw this algorithm's solution.
        #[arg(long, value_enum, conflicts_with = "solution")]
        algo: Option<RenderAlgo>,
        /// Draw the first solution of a `solve` report.
        #[arg(long)]
        solution: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the constants and minima of the ratio analysis.
    VerifyTheory {
        #[arg(long, default_value_t = 1e-3)]
        grid_step: f64,
        /// Add this offset to rho before checking; the table must then fail.
        #[arg(long, default_value_t = 0.0)]
        perturb: f64,
        /// Run clean and perturbed; succeed iff the clean run passes and the
        /// perturbed one is caught.
        #[arg(long)]
        self_test: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    A1,
    A2,
    Exact,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderAlgo {
    A1,
    A2,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Random,
    Tight,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Star,
    Greedy,
    Tight,
    Random,
}

/// Failures mapped to exit codes.
enum Failure {
    Verification(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

#[derive(Serialize, Deserialize)]
struct SolutionRecord {
    algo: String,
    producer: Producer,
    length: f64,
    choice: Vec<usize>,
    selection: Vec<Vec<f64>>,
    edges: Vec<(usize, usize)>,
    certified_ratio: f64,
}

impl SolutionRecord {
    fn new(algo: &str, sol: &Solution, bounds: &BoundsReport) -> Self {
        SolutionRecord {
            algo: algo.to_string(),
            producer: sol.producer,
            length: sol.length,
            choice: sol.choice.clone(),
            selection: sol.selection.points.iter().map(|p| p.coords().to_vec()).collect(),
            edges: sol.tree.edges.clone(),
            certified_ratio: certified_ratio(sol, bounds),
        }
    }
}

#[derive(Serialize)]
struct SolveReport {
    n: usize,
    #[serde(rename = "N")]
    total_vertices: usize,
    dim: usize,
    bounds: BoundsReport,
    solutions: Vec<SolutionRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    skipped: Vec<String>,
}

#[derive(Deserialize)]
struct SolutionFile {
    solutions: Vec<SolutionRecord>,
}

fn emit(out: Option<&Path>, text: &str) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    read_instance(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run_algo(inst: &Instance, algo: Algo, budget: u64) -> maxstn_core::Result<Solution> {
    match algo {
        Algo::A1 => algo_a1(inst),
        Algo::A2 => algo_a2_with_budget(inst, budget),
        Algo::Exact => exact_opt(inst, budget),
        Algo::All => unreachable!("expanded by the caller"),
    }
}

fn algo_name(algo: Algo) -> &'static str {
    match algo {
        Algo::A1 => "a1",
        Algo::A2 => "a2",
        Algo::Exact => "exact",
        Algo::All => "all",
    }
}

fn cmd_solve(file: &Path, algo: Algo, budget: u64, out: Option<&Path>) -> CmdResult {
    let inst = load(file)?;
    let bounds = bounds_report(&inst)?;
    let algos = if algo == Algo::All {
        vec![Algo::A1, Algo::A2, Algo::Exact]
    } else {
        vec![algo]
    };
    let mut solutions = Vec::new();
    let mut skipped = Vec::new();
    for a in algos {
        match run_algo(&inst, a, budget) {
            Ok(sol) => solutions.push(SolutionRecord::new(algo_name(a), &sol, &bounds)),
            Err(e @ Error::BudgetExceeded { .. }) if algo == Algo::All => {
                skipped.push(format!("exact: {e}"));
            }
            Err(e) => return Err(e.into()),
        }
    }
    if algo == Algo::All {
        eprint!("{}", comparison_table(&solutions, &bounds));
    }
    let report = SolveReport {
        n: inst.n(),
        total_vertices: inst.total_vertices(),
        dim: inst.dim(),
        bounds,
        solutions,
        skipped,
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    emit(out, &text)
}

fn comparison_table(solutions: &[SolutionRecord], bounds: &BoundsReport) -> String {
    let exact = solutions.iter().find(|s| s.algo == "exact").map(|s| s.length);
    let mut t = format!(
        "{:<6} {:<10} {:>14} {:>14} {:>14}\n",
        "algo", "producer", "length", "vs_exact", "certified"
    );
    for s in solutions {
        let vs = match exact {
            Some(e) if e > 0.0 => format!("{:.6}", s.length / e),
            Some(_) => "1.000000".into(),
            None => "-".into(),
        };
        let _ = writeln!(
            t,
            "{:<6} {:<10} {:>14.6} {:>14} {:>14.6}",
            s.algo,
            s.producer.as_str(),
            s.length,
            vs,
            s.certified_ratio
        );
    }
    let _ = writeln!(t, "ub_best = {:.6}", bounds.ub_best);
    t
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    family: Family,
    seeds: usize,
    seed: u64,
    n_max: usize,
    k_max: usize,
    dim: usize,
    ns: &[usize],
    budget: u64,
    out: Option<&Path>,
) -> CmdResult {
    let instances = match family {
        Family::Random => random_family(seeds, seed, n_max, k_max, dim)?,
        Family::Tight => tight_family(ns)?,
    };
    let rows = run_family(&instances, budget);
    emit(out, &to_csv(&rows))
}

fn cmd_gen(
    kind: GenKind,
    n: usize,
    eps: Option<f64>,
    k_max: usize,
    dim: usize,
    seed: u64,
    out: Option<&Path>,
) -> CmdResult {
    let inst = match kind {
        GenKind::Star => gen_example_star(),
        GenKind::Greedy => gen_example_greedy(),
        GenKind::Tight => gen_tight(n, eps.unwrap_or(1.0 / (n as f64 - 1.0)))?,
        GenKind::Random => gen_random(n, k_max, dim, seed)?,
    };
    emit(out, &inst.to_json_string())
}

fn cmd_render(
    file: &Path,
    algo: Option<RenderAlgo>,
    solution: Option<&Path>,
    budget: u64,
    out: Option<&Path>,
) -> CmdResult {
    let inst = load(file)?;
    let sol = match (algo, solution) {
        (Some(a), _) => {
            let algo = match a {
                RenderAlgo::A1 => Algo::A1,
                RenderAlgo::A2 => Algo::A2,
                RenderAlgo::Exact => Algo::Exact,
            };
            Some(run_algo(&inst, algo, budget)?)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let file: SolutionFile = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let rec = file
                .solutions
                .into_iter()
                .next()
                .ok_or_else(|| Failure::Input(format!("{}: no solutions", path.display())))?;
            Some(Solution::from_parts(&inst, rec.producer, rec.choice, rec.edges)?)
        }
        (None, None) => None,
    };
    let svg = render_svg(&inst, sol.as_ref())?;
    emit(out, &svg)
}

fn theory_table(a: &CaseAnalysis) -> String {
    let mut t = format!(
        "{:<48} {:>24} {:>24} {:>9}  {}\n",
        "check", "value", "expected", "tol", "result"
    );
    for c in &a.checks {
        let _ = writeln!(
            t,
            "{:<48} {:>24.17} {:>24.17} {:>9.1e}  {}",
            c.name,
            c.value,
            c.expected,
            c.tol,
            if c.pass { "PASS" } else { "FAIL" }
        );
    }
    let _ = writeln!(
        t,
        "grid step {:e}: min g = {:.10} at (z, y) = ({:.4}, {:.4}); min f = {:.10} at z = {:.4}",
        a.grid_step, a.g_min, a.g_argmin.0, a.g_argmin.1, a.f_min, a.f_argmin
    );
    let failed = a.failures().count();
    let _ = writeln!(t, "{} checks, {} failed", a.checks.len(), failed);
    t
}

fn cmd_verify_theory(grid_step: f64, perturb: f64, self_test: bool) -> CmdResult {
    if self_test {
        let clean = verify_with_offset(grid_step, 0.0)?;
        let offset = if perturb != 0.0 { perturb } else { 1e-6 };
        let dirty = verify_with_offset(grid_step, offset)?;
        println!("clean run: {}", if clean.all_pass() { "all checks pass" } else { "FAILED" });
        println!(
            "perturbed run (rho + {offset:e}): {} failing checks",
            dirty.failures().count()
        );
        for c in dirty.failures() {
            println!("  detected: {}", c.name);
        }
        return match (clean.all_pass(), dirty.all_pass()) {
            (true, false) => {
                println!("self-test PASS");
                Ok(())
            }
            _ => Err(Failure::Verification("self-test FAIL".into())),
        };
    }
    let analysis = verify_with_offset(grid_step, perturb)?;
    print!("{}", theory_table(&analysis));
    if analysis.all_pass() {
        Ok(())
    } else {
        Err(Failure::Verification("theory verification failed".into()))
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Solve {
            file,
            algo,
            budget,
            out,
        } => cmd_solve(&file, algo, budget, out.as_deref()),
        Command::Bench {
            family,
            seeds,
            seed,
            n_max,
            k_max,
            dim,
            ns,
            budget,
            out,
        } => cmd_bench(family, seeds, seed, n_max, k_max, dim, &ns, budget, out.as_deref()),
        Command::Gen {
            kind,
            n,
            eps,
            k_max,
            dim,
            seed,
            out,
        } => cmd_gen(kind, n, eps, k_max, dim, seed, out.as_deref()),
        Command::Render {
            file,
            algo,
            solution,
            budget,
            out,
        } => cmd_render(&file, algo, solution.as_deref(), budget, out.as_deref()),
        Command::VerifyTheory {
            grid_step,
            perturb,
            self_test,
        } => cmd_verify_theory(grid_step, perturb, self_test),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxstn_core::write_instance;

    fn run_args(args: &[&str]) -> CmdResult {
        let mut full = vec!["maxstn"];
        full.extend_from_slice(args);
        run(Cli::try_parse_from(full).expect("arguments parse"))
    }

    fn code(r: &CmdResult) -> u8 {
        match r {
            Ok(()) => 0,
            Err(Failure::Verification(_)) => 1,
            Err(Failure::Input(_)) => 2,
        }
    }

    fn path(dir: &tempfile::TempDir, name: &str) -> String {
        dir.path().join(name).to_string_lossy().into_owned()
    }

    #[test]
    fn solve_exact_on_star_example() {
        let dir = tempfile::tempdir().unwrap();
        let inst = path(&dir, "star.json");
        let out = path(&dir, "out.json");
        write_instance(&gen_example_star(), &inst).unwrap();
        assert_eq!(code(&run_args(&["solve", &inst, "--algo", "exact", "--out", &out])), 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        let len = v["solutions"][0]["length"].as_f64().unwrap();
        assert!((len - 3.0).abs() < 1e-9);
        assert_eq!(v["solutions"][0]["producer"], "EXACT");
        assert_eq!(v["N"], 9);
    }

    #[test]
    fn solve_all_reports_every_algorithm() {
        let dir = tempfile::tempdir().unwrap();
        let inst = path(&dir, "g.json");
        let out = path(&dir, "out.json");
        write_instance(&gen_example_greedy(), &inst).unwrap();
        assert_eq!(code(&run_args(&["solve", &inst, "--algo", "all", "--out", &out])), 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        let algos: Vec<_> = v["solutions"].as_array().unwrap().iter().map(|s| s["algo"].clone()).collect();
        assert_eq!(algos, ["a1", "a2", "exact"]);
    }

    #[test]
    fn solve_all_skips_oracle_over_budget() {
        let dir = tempfile::tempdir().unwrap();
        let inst = path(&dir, "star.json");
        let out = path(&dir, "out.json");
        write_instance(&gen_example_star(), &inst).unwrap();
        assert_eq!(code(&run_args(&["solve", &inst, "--algo", "all", "--budget", "3", "--out", &out])), 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["solutions"].as_array().unwrap().len(), 2);
        assert!(v["skipped"][0].as_str().unwrap().contains("budget"));
        assert_eq!(code(&run_args(&["solve", &inst, "--algo", "exact", "--budget", "3"])), 2);
    }

    #[test]
    fn input_errors_exit_2() {
        let dir = tempfile::tempdir().unwrap();
        let bad = path(&dir, "bad.json");
        fs::write(&bad, "{\"dim\": 2, \"regions\": [").unwrap();
        assert_eq!(code(&run_args(&["solve", &bad])), 2);
        let one = path(&dir, "one.json");
        fs::write(&one, r#"{"dim":2,"regions":[{"label":"X1","vertices":[[0,0]]}]}"#).unwrap();
        assert_eq!(code(&run_args(&["solve", &one])), 2);
        assert_eq!(code(&run_args(&["solve", &path(&dir, "missing.json")])), 2);
        assert_eq!(code(&run_args(&["gen", "tight", "--n", "2"])), 2);
    }

    #[test]
    fn gen_round_trips_through_files() {
        let dir = tempfile::tempdir().unwrap();
        let out = path(&dir, "t.json");
        assert_eq!(code(&run_args(&["gen", "tight", "--n", "12", "--out", &out])), 0);
        let inst = read_instance(&out).unwrap();
        assert_eq!(inst, gen_tight(12, 1.0 / 11.0).unwrap());
        assert_eq!(code(&run_args(&["gen", "random", "--n", "5", "--dim", "3", "--seed", "4", "--out", &out])), 0);
        assert_eq!(read_instance(&out).unwrap(), gen_random(5, 3, 3, 4).unwrap());
    }

    #[test]
    fn render_line_counts() {
        let dir = tempfile::tempdir().unwrap();
        let inst = path(&dir, "g.json");
        let svg = path(&dir, "g.svg");
        write_instance(&gen_example_greedy(), &inst).unwrap();
        assert_eq!(code(&run_args(&["render", &inst, "--algo", "exact", "--out", &svg])), 0);
        assert_eq!(fs::read_to_string(&svg).unwrap().matches("<line ").count(), 2);
        assert_eq!(code(&run_args(&["render", &inst, "--out", &svg])), 0);
        assert_eq!(fs::read_to_string(&svg).unwrap().matches("<line ").count(), 0);
    }

    #[test]
    fn render_from_solve_report() {
        let dir = tempfile::tempdir().unwrap();
        let inst = path(&dir, "s.json");
        let rep = path(&dir, "r.json");
        let svg = path(&dir, "s.svg");
        write_instance(&gen_example_star(), &inst).unwrap();
        run_args(&["solve", &inst, "--algo", "a2", "--out", &rep]).ok().unwrap();
        assert_eq!(code(&run_args(&["render", &inst, "--solution", &rep, "--out", &svg])), 0);
        assert_eq!(fs::read_to_string(&svg).unwrap().matches("<line ").count(), 3);
        let other = path(&dir, "g.json");
        write_instance(&gen_example_greedy(), &other).unwrap();
        assert_eq!(code(&run_args(&["render", &other, "--solution", &rep])), 2);
    }

    #[test]
    fn render_rejects_3d() {
        let dir = tempfile::tempdir().unwrap();
        let inst = path(&dir, "r.json");
        write_instance(&gen_random(4, 2, 3, 1).unwrap(), &inst).unwrap();
        match run_args(&["render", &inst]) {
            Err(Failure::Input(msg)) => assert!(msg.contains("render supports d=2 only")),
            _ => panic!("3-D render must fail with an input error"),
        }
    }

    #[test]
    fn bench_empty_family_is_header_only() {
        let dir = tempfile::tempdir().unwrap();
        let out = path(&dir, "b.csv");
        assert_eq!(code(&run_args(&["bench", "--seeds", "0", "--out", &out])), 0);
        assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 1);
    }

    #[test]
    fn bench_tight_rows() {
        let dir = tempfile::tempdir().unwrap();
        let out = path(&dir, "b.csv");
        assert_eq!(code(&run_args(&["bench", "--family", "tight", "--ns", "10,20", "--out", &out])), 0);
        let text = fs::read_to_string(&out).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("tight-10,10,12,"));
        assert!(lines[3].starts_with("min,"));
    }

    #[test]
    fn verify_theory_modes() {
        assert_eq!(code(&run_args(&["verify-theory"])), 0);
        assert_eq!(code(&run_args(&["verify-theory", "--perturb", "1e-6"])), 1);
        assert_eq!(code(&run_args(&["verify-theory", "--self-test"])), 0);
        assert_eq!(code(&run_args(&["verify-theory", "--grid-step", "0.01"])), 2);
    }
}
