//! Benchmark sweeps: run both algorithms, the oracle and the bounds over a
//! family of instances and tabulate the results as CSV.

use std::fmt::Write;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::approx::{algo_a1, algo_a2_with_budget};
use crate::bounds::{bounds_report, certified_ratio};
use crate::error::{Error, Result};
use crate::exact::exact_opt;
use crate::generators::{gen_random, gen_tight};
use crate::instance::Instance;

pub const CSV_HEADER: &str =
    "instance_id,n,N,len_a1,len_a2,exact,ub_best,ratio_vs_exact,certified_ratio,status";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub id: String,
    pub n: usize,
    /// Total number of vertices over all regions.
    pub total_vertices: usize,
    pub len_a1: Option<f64>,
    pub len_a2: Option<f64>,
    /// `None` when the oracle budget is exceeded.
    pub exact: Option<f64>,
    pub ub_best: Option<f64>,
    /// `len_a2 / exact`.
    pub ratio_vs_exact: Option<f64>,
    /// `len_a2 / ub_best`.
    pub certified_ratio: Option<f64>,
    /// `"ok"`, `"exact skipped: ..."` or the error that stopped the row.
    pub status: String,
}

/// Minimum observed ratios over the rows that have them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub min_ratio_vs_exact: Option<f64>,
    pub min_certified_ratio: Option<f64>,
}

/// Evaluate one instance. Failures are recorded in the row, never raised.
pub fn run_instance(id: &str, inst: &Instance, budget: u64) -> BenchRow {
    let mut row = BenchRow {
        id: id.to_string(),
        n: inst.n(),
        total_vertices: inst.total_vertices(),
        len_a1: None,
        len_a2: None,
        exact: None,
        ub_best: None,
        ratio_vs_exact: None,
        certified_ratio: None,
        status: "ok".into(),
    };
    let mut core = || -> Result<()> {
        row.len_a1 = Some(algo_a1(inst)?.length);
        let a2 = algo_a2_with_budget(inst, budget)?;
        row.len_a2 = Some(a2.length);
        let report = bounds_report(inst)?;
        row.ub_best = Some(report.ub_best);
        row.certified_ratio = Some(certified_ratio(&a2, &report));
        match exact_opt(inst, budget) {
            Ok(opt) => {
                row.exact = Some(opt.length);
                row.ratio_vs_exact = Some(if opt.length > 0.0 {
                    a2.length / opt.length
                } else {
                    1.0
                });
            }
            Err(e @ Error::BudgetExceeded { .. }) => row.status = format!("exact skipped: {e}"),
            Err(e) => return Err(e),
        }
        Ok(())
    };
    if let Err(e) = core() {
        row.status = format!("error: {e}");
    }
    row
}

/// Run every instance, spread over the available cores; rows come back in
/// input order.
pub fn run_family(instances: &[(String, Instance)], budget: u64) -> Vec<BenchRow> {
    if instances.is_empty() {
        return Vec::new();
    }
    let workers = thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(instances.len());
    let chunk = instances.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = instances
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|(id, inst)| run_instance(id, inst, budget))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("benchmark worker panicked"))
            .collect()
    })
}

/// `count` random instances. A master generator seeded with `seed` draws
/// each instance's `n` uniformly from `2..=n_max` and its own seed.
pub fn random_family(
    count: usize,
    seed: u64,
    n_max: usize,
    k_max: usize,
    dim: usize,
) -> Result<Vec<(String, Instance)>> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!("n_max must be >= 2, got {n_max}")));
    }
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = master.gen_range(2..=n_max);
            let inst_seed: u64 = master.gen();
            let inst = gen_random(n, k_max, dim, inst_seed)?;
            Ok((format!("random-{seed}-{i}"), inst))
        })
        .collect()
}

/// Tight instances for each `n`, with `eps = 1/(n-1)`.
pub fn tight_family(ns: &[usize]) -> Result<Vec<(String, Instance)>> {
    ns.iter()
        .map(|&n| {
            let eps = 1.0 / (n as f64 - 1.0);
            Ok((format!("tight-{n}"), gen_tight(n, eps)?))
        })
        .collect()
}

pub fn summarize(rows: &[BenchRow]) -> Summary {
    let min = |f: fn(&BenchRow) -> Option<f64>| {
        rows.iter().filter_map(f).fold(None, |acc: Option<f64>, v| {
            Some(acc.map_or(v, |a| a.min(v)))
        })
    };
    Summary {
        min_ratio_vs_exact: min(|r| r.ratio_vs_exact),
        min_certified_ratio: min(|r| r.certified_ratio),
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_field(text: &str) -> String {
    if text.contains([',', '"', '\n']) {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

/// Header, one line per row, and a final `min` summary line. An empty slice
/// gives the header alone.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    s.push_str(CSV_HEADER);
    s.push('\n');
    if rows.is_empty() {
        return s;
    }
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{},{}",
            csv_field(&r.id),
            r.n,
            r.total_vertices,
            opt(r.len_a1),
            opt(r.len_a2),
            opt(r.exact),
            opt(r.ub_best),
            opt(r.ratio_vs_exact),
            opt(r.certified_ratio),
            csv_field(&r.status)
        );
    }
    let sum = summarize(rows);
    let _ = writeln!(
        s,
        "min,,,,,,,{},{},summary",
        opt(sum.min_ratio_vs_exact),
        opt(sum.min_certified_ratio)
    );
    s
}
