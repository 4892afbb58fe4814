use std::io::Write;
use std::str::FromStr;

use dsc2::bench::{run_bench, BenchError, BenchGrid, BenchOptions, BenchRecord};

use crate::error::CliError;

pub const CSV_HEADER: [&str; 12] = [
    "family",
    "n",
    "tau",
    "seed",
    "algorithm",
    "tree_size",
    "quadratic_steps",
    "linear_steps",
    "var_calls",
    "max_n_exp",
    "wall_time_ms",
    "root_count",
];

/// Parses `a,b,c` where each item is a value or an inclusive range `lo..hi`.
pub fn parse_list(s: &str) -> Result<Vec<u64>, CliError> {
    let one = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|e| CliError::Input(format!("bad list item `{x}`: {e}")))
    };
    let mut out = Vec::new();
    for item in s.split(',').filter(|x| !x.trim().is_empty()) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (one(lo)?, one(hi)?);
                if lo > hi {
                    return Err(CliError::Input(format!("empty range `{item}`")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(one(item)?),
        }
    }
    if out.is_empty() {
        return Err(CliError::Input(format!("empty list `{s}`")));
    }
    Ok(out)
}

/// Parses `a,b,c` of any `FromStr` item.
pub fn parse_names<T>(s: &str) -> Result<Vec<T>, CliError>
where
    T: FromStr,
    T::Err: std::fmt::Display,
{
    let out = s
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| {
            x.trim()
                .parse::<T>()
                .map_err(|e| CliError::Input(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err(CliError::Input(format!("empty list `{s}`")));
    }
    Ok(out)
}

pub fn bench_rows(grid: &BenchGrid, opts: BenchOptions) -> Result<Vec<BenchRecord>, CliError> {
    run_bench(grid, opts).map_err(|e| match e {
        BenchError::Generation { .. } => CliError::Input(e.to_string()),
        _ => CliError::Verification(e.to_string()),
    })
}

pub fn write_csv<W: Write>(rows: &[BenchRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.instance.family.to_string(),
            r.instance.n.to_string(),
            r.instance.tau.to_string(),
            r.instance.seed.to_string(),
            r.algorithm.to_string(),
            r.tree_size.to_string(),
            r.quadratic_steps.to_string(),
            r.linear_steps.to_string(),
            r.var_calls.to_string(),
            r.max_n_exp.to_string(),
            format!("{:.3}", r.wall_time_ms),
            r.root_count.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
