use std::fmt::Write as _;

use dsc2::{
    cauchy_interval, check_isolation, isolate, Algorithm, BigIntPoly, Dyadic, Isolation,
    RootDescriptor, SubdivisionStats,
};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum SquareFreePolicy {
    /// Reject input whose gcd with its derivative is non-constant.
    #[default]
    Error,
    /// Replace the input by its square-free part.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct IsolateOptions {
    pub algorithm: Algorithm,
    pub square_free: SquareFreePolicy,
    pub output: OutputFormat,
    pub stats: bool,
    pub verify: bool,
}

impl Default for IsolateOptions {
    fn default() -> Self {
        IsolateOptions {
            algorithm: Algorithm::Dsc2,
            square_free: SquareFreePolicy::Error,
            output: OutputFormat::Json,
            stats: false,
            verify: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IsolateReport {
    pub input_degree: usize,
    pub square_free_applied: bool,
    pub isolated: BigIntPoly,
    pub algorithm: Algorithm,
    pub isolation: Isolation,
}

/// Applies the square-free policy, isolates, and optionally cross-checks the
/// result against the Sturm oracle.
pub fn run_isolate(f: &BigIntPoly, opts: &IsolateOptions) -> Result<IsolateReport, CliError> {
    let input_degree = match f.degree() {
        None => return Err(CliError::Input("polynomial is identically zero".into())),
        Some(0) => return Err(CliError::Input("polynomial is a nonzero constant".into())),
        Some(d) => d,
    };
    let g = f.gcd(&f.derivative());
    let (isolated, square_free_applied) = if g.degree() == Some(0) {
        (f.clone(), false)
    } else {
        match opts.square_free {
            SquareFreePolicy::Error => return Err(CliError::NotSquareFree(g.to_string())),
            SquareFreePolicy::Auto => (f.square_free_part()?, true),
        }
    };
    let isolation = isolate(&isolated, None, opts.algorithm)?;
    if opts.verify {
        verify(&isolated, &isolation)?;
    }
    Ok(IsolateReport {
        input_degree,
        square_free_applied,
        isolated,
        algorithm: opts.algorithm,
        isolation,
    })
}

/// Checks every descriptor with the Sturm oracle.
pub fn verify(f: &BigIntPoly, isolation: &Isolation) -> Result<(), CliError> {
    check_isolation(f, &cauchy_interval(f)?, isolation).map_err(CliError::Verification)
}

#[derive(Serialize)]
struct DyadicJson {
    m: String,
    e: i64,
}

impl From<&Dyadic> for DyadicJson {
    fn from(d: &Dyadic) -> Self {
        DyadicJson {
            m: d.mantissa().to_string(),
            e: d.exponent(),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RootJson {
    Interval {
        lower: DyadicJson,
        upper: DyadicJson,
    },
    Point {
        at: DyadicJson,
    },
}

#[derive(Serialize)]
struct StatsJson {
    tree_size: u64,
    quadratic_steps: u64,
    linear_steps: u64,
    discarded: u64,
    var_calls: u64,
    max_n_exp: u32,
    max_depth: u64,
}

impl From<&SubdivisionStats> for StatsJson {
    fn from(s: &SubdivisionStats) -> Self {
        StatsJson {
            tree_size: s.tree_size,
            quadratic_steps: s.quadratic_steps,
            linear_steps: s.linear_steps,
            discarded: s.discarded,
            var_calls: s.var_calls,
            max_n_exp: s.max_n_exp,
            max_depth: s.max_depth,
        }
    }
}

#[derive(Serialize)]
struct ReportJson {
    degree: usize,
    square_free_applied: bool,
    roots: Vec<RootJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<StatsJson>,
}

impl IsolateReport {
    pub fn render(&self, format: OutputFormat, with_stats: bool) -> String {
        match format {
            OutputFormat::Json => self.render_json(with_stats),
            OutputFormat::Text => self.render_text(with_stats),
        }
    }

    fn render_json(&self, with_stats: bool) -> String {
        let roots = self
            .isolation
            .roots
            .iter()
            .map(|r| match r {
                RootDescriptor::Interval(i) => RootJson::Interval {
                    lower: i.lower().into(),
                    upper: i.upper().into(),
                },
                RootDescriptor::Point(p) => RootJson::Point { at: p.into() },
            })
            .collect();
        let report = ReportJson {
            degree: self.input_degree,
            square_free_applied: self.square_free_applied,
            roots,
            stats: with_stats.then(|| (&self.isolation.stats).into()),
        };
        let mut s = serde_json::to_string(&report).expect("report serializes");
        s.push('\n');
        s
    }

    fn render_text(&self, with_stats: bool) -> String {
        let mut out = String::new();
        let roots = &self.isolation.roots;
        let _ = writeln!(
            out,
            "degree {}, {} real root{} ({})",
            self.input_degree,
            roots.len(),
            if roots.len() == 1 { "" } else { "s" },
            self.algorithm
        );
        if self.square_free_applied {
            let _ = writeln!(out, "square-free part: {}", self.isolated);
        }
        for r in roots {
            let _ = match r {
                RootDescriptor::Interval(i) => writeln!(out, "  {i}"),
                RootDescriptor::Point(p) => writeln!(out, "  = {p}"),
            };
        }
        if with_stats {
            let s = &self.isolation.stats;
            let _ = writeln!(
                out,
                "tree_size={} quadratic_steps={} linear_steps={} discarded={} var_calls={} max_n_exp={} max_depth={}",
                s.tree_size, s.quadratic_steps, s.linear_steps, s.discarded, s.var_calls, s.max_n_exp, s.max_depth
            );
        }
        out
    }
}
