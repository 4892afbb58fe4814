//! Real-root isolation by Descartes subdivision.
//!
//! Two drivers share one engine: [`dsc2`] combines bisection with
//! Newton-guided quadratic steps, and [`dsc_classic`] always bisects.
//! Both return pairwise-disjoint isolating intervals and exact dyadic roots,
//! together with counters describing the recursion tree.

mod engine;
mod newton;
mod trace;

use std::cmp::Ordering;

use crate::arith::{BigIntPoly, Dyadic, OpenInterval};
use crate::error::{Error, Result};

pub use newton::{newton_snap, Endpoint};
pub use trace::{NoopObserver, Observer, StepKind, TraceEvent, TraceRecorder};

/// Largest supported speed exponent; `N_I = 2^(2^n_exp)` must keep its
/// logarithm in an `i64`.
pub const MAX_N_EXP: u32 = 62;

/// An interval waiting to be processed with its speed exponent `n_exp`,
/// where the interval is cut into `N = 2^(2^n_exp)` pieces for quadratic
/// steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActiveTask {
    pub interval: OpenInterval,
    pub n_exp: u32,
}

impl ActiveTask {
    pub fn new(interval: OpenInterval, n_exp: u32) -> Self {
        debug_assert!((1..=MAX_N_EXP).contains(&n_exp));
        ActiveTask { interval, n_exp }
    }

    /// `log2(N)`, i.e. `2^n_exp`.
    pub fn log2_n(&self) -> i64 {
        1i64 << self.n_exp
    }
}

/// One isolated real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootDescriptor {
    /// An open interval containing exactly one root, with `f` nonzero at both
    /// endpoints.
    Interval(OpenInterval),
    /// A root that is itself a dyadic number.
    Point(Dyadic),
}

impl RootDescriptor {
    /// Smallest point of the closure.
    pub fn left(&self) -> &Dyadic {
        match self {
            RootDescriptor::Interval(i) => i.lower(),
            RootDescriptor::Point(p) => p,
        }
    }

    /// Largest point of the closure.
    pub fn right(&self) -> &Dyadic {
        match self {
            RootDescriptor::Interval(i) => i.upper(),
            RootDescriptor::Point(p) => p,
        }
    }

    pub fn as_interval(&self) -> Option<&OpenInterval> {
        match self {
            RootDescriptor::Interval(i) => Some(i),
            RootDescriptor::Point(_) => None,
        }
    }

    pub fn as_point(&self) -> Option<&Dyadic> {
        match self {
            RootDescriptor::Point(p) => Some(p),
            RootDescriptor::Interval(_) => None,
        }
    }

    fn order(&self, other: &Self) -> Ordering {
        self.left()
            .cmp(other.left())
            .then_with(|| self.right().cmp(other.right()))
    }
}

/// Counters describing one isolation run.
///
/// `tree_size` counts intervals processed by the main loop; the var calls
/// spent on candidate probes are included in `var_calls` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubdivisionStats {
    pub tree_size: u64,
    pub quadratic_steps: u64,
    pub linear_steps: u64,
    pub discarded: u64,
    pub var_calls: u64,
    pub max_n_exp: u32,
    pub max_depth: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isolation {
    /// Sorted left to right.
    pub roots: Vec<RootDescriptor>,
    pub stats: SubdivisionStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Bisection combined with boundary and Newton-guided quadratic steps.
    Dsc2,
    /// Plain bisection.
    Classic,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dsc2 => "dsc2",
            Algorithm::Classic => "dsc",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dsc2" => Ok(Algorithm::Dsc2),
            "dsc" | "classic" => Ok(Algorithm::Classic),
            other => Err(format!(
                "unknown algorithm `{other}` (expected dsc2 or dsc)"
            )),
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// `(-2^(tau+1), 2^(tau+1))`, which contains every complex root's modulus
/// bound `1 + 2^tau`.
pub fn cauchy_interval(f: &BigIntPoly) -> Result<OpenInterval> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(OpenInterval::symmetric_pow2(f.tau() as i64 + 1))
}

/// Isolates the real roots of a square-free `f` with the Newton-accelerated
/// method. `initial` defaults to [`cauchy_interval`].
pub fn dsc2(f: &BigIntPoly, initial: Option<OpenInterval>) -> Result<Isolation> {
    isolate_observed(f, initial, Algorithm::Dsc2, &mut NoopObserver)
}

/// Isolates the real roots of a square-free `f` by bisection only.
pub fn dsc_classic(f: &BigIntPoly, initial: Option<OpenInterval>) -> Result<Isolation> {
    isolate_observed(f, initial, Algorithm::Classic, &mut NoopObserver)
}

pub fn isolate(
    f: &BigIntPoly,
    initial: Option<OpenInterval>,
    algorithm: Algorithm,
) -> Result<Isolation> {
    isolate_observed(f, initial, algorithm, &mut NoopObserver)
}

/// Runs either algorithm and reports every processed node and subdivision
/// step to `observer`.
///
/// Non-square-free input may not terminate; apply
/// [`BigIntPoly::square_free_part`] first.
pub fn isolate_observed(
    f: &BigIntPoly,
    initial: Option<OpenInterval>,
    algorithm: Algorithm,
    observer: &mut dyn Observer,
) -> Result<Isolation> {
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let initial = match initial {
        Some(i) => i,
        None => cauchy_interval(f)?,
    };
    let mut engine = engine::Engine::new(f, algorithm, observer);
    engine.run(initial);
    Ok(engine.finish())
}

pub(crate) fn sort_roots(roots: &mut [RootDescriptor]) {
    roots.sort_by(RootDescriptor::order);
}
