//! Benchmark harness: runs both isolators over a parameter grid and
//! cross-checks their root counts against each other and the Sturm oracle.

use std::time::Instant;

use thiserror::Error;

use crate::families::{generate_family, Family};
use crate::isolate::{cauchy_interval, isolate, Algorithm};
use crate::par::{self, Execution};
use crate::sturm::sturm_count;

/// One polynomial of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BenchInstance {
    pub family: Family,
    pub n: usize,
    pub tau: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub instance: BenchInstance,
    pub algorithm: Algorithm,
    pub tree_size: u64,
    pub quadratic_steps: u64,
    pub linear_steps: u64,
    pub var_calls: u64,
    pub max_n_exp: u32,
    /// Zero when timing is disabled.
    pub wall_time_ms: f64,
    pub root_count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchGrid {
    pub families: Vec<Family>,
    pub degrees: Vec<usize>,
    pub taus: Vec<u64>,
    pub seeds: Vec<u64>,
    pub algorithms: Vec<Algorithm>,
}

impl BenchGrid {
    /// Cartesian product in family, n, tau, seed order.
    pub fn instances(&self) -> Vec<BenchInstance> {
        let mut out = Vec::new();
        for &family in &self.families {
            for &n in &self.degrees {
                for &tau in &self.taus {
                    for &seed in &self.seeds {
                        out.push(BenchInstance {
                            family,
                            n,
                            tau,
                            seed,
                        });
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchOptions {
    pub execution: Execution,
    pub timing: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            execution: Execution::Parallel,
            timing: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenchError {
    #[error("cannot build {instance:?}: {source}")]
    Generation {
        instance: BenchInstance,
        source: crate::Error,
    },
    #[error("isolation failed on {instance:?}: {source}")]
    Isolation {
        instance: BenchInstance,
        source: crate::Error,
    },
    #[error("root counts disagree on {instance:?}: sturm={expected}, {algorithm}={found}")]
    Disagreement {
        instance: BenchInstance,
        algorithm: Algorithm,
        expected: usize,
        found: usize,
    },
}

/// Runs every (instance, algorithm) cell. Rows come back ordered by
/// instance, then by the grid's algorithm order, regardless of execution
/// mode.
pub fn run_bench(grid: &BenchGrid, opts: BenchOptions) -> Result<Vec<BenchRecord>, BenchError> {
    let instances = grid.instances();
    let per_instance = par::map(&instances, opts.execution, |inst| {
        run_instance(*inst, &grid.algorithms, opts.timing)
    });
    let mut rows = Vec::with_capacity(instances.len() * grid.algorithms.len());
    for r in per_instance {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn run_instance(
    instance: BenchInstance,
    algorithms: &[Algorithm],
    timing: bool,
) -> Result<Vec<BenchRecord>, BenchError> {
    let f = generate_family(instance.family, instance.n, instance.tau, instance.seed)
        .map_err(|source| BenchError::Generation { instance, source })?;
    let iso_err = |source| BenchError::Isolation { instance, source };
    let expected = sturm_count(&f, &cauchy_interval(&f).map_err(iso_err)?).map_err(iso_err)?;

    algorithms
        .iter()
        .map(|&algorithm| {
            let start = Instant::now();
            let result = isolate(&f, None, algorithm).map_err(iso_err)?;
            let elapsed = start.elapsed();
            if result.roots.len() != expected {
                return Err(BenchError::Disagreement {
                    instance,
                    algorithm,
                    expected,
                    found: result.roots.len(),
                });
            }
            let s = result.stats;
            Ok(BenchRecord {
                instance,
                algorithm,
                tree_size: s.tree_size,
                quadratic_steps: s.quadratic_steps,
                linear_steps: s.linear_steps,
                var_calls: s.var_calls,
                max_n_exp: s.max_n_exp,
                wall_time_ms: if timing {
                    elapsed.as_secs_f64() * 1e3
                } else {
                    0.0
                },
                root_count: result.roots.len(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilkinson_rows_agree() {
        let grid = BenchGrid {
            families: vec![Family::Wilkinson],
            degrees: vec![10],
            taus: vec![2],
            seeds: vec![0],
            algorithms: vec![Algorithm::Dsc2, Algorithm::Classic],
        };
        let rows = run_bench(
            &grid,
            BenchOptions {
                timing: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows
            .iter()
            .all(|r| r.root_count == 10 && r.wall_time_ms == 0.0));
        assert_eq!(rows[0].algorithm, Algorithm::Dsc2);
    }

    #[test]
    fn generation_errors_surface() {
        let grid = BenchGrid {
            families: vec![Family::Random],
            degrees: vec![4],
            taus: vec![1],
            seeds: vec![0],
            algorithms: vec![Algorithm::Dsc2],
        };
        assert!(matches!(
            run_bench(&grid, BenchOptions::default()),
            Err(BenchError::Generation { .. })
        ));
    }
}
