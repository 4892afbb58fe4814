use std::collections::BTreeSet;

use super::newton::{snap_from_values, Endpoint};
use super::trace::{Observer, StepKind};
use super::{
    sort_roots, ActiveTask, Algorithm, Isolation, RootDescriptor, SubdivisionStats, MAX_N_EXP,
};
use crate::arith::{BigIntPoly, Dyadic, OpenInterval};
use crate::descartes::{var, VarCount};

struct Pending {
    task: ActiveTask,
    depth: u64,
}

pub(super) struct Engine<'a> {
    f: &'a BigIntPoly,
    df: BigIntPoly,
    algorithm: Algorithm,
    observer: &'a mut dyn Observer,
    // LIFO: the last pushed task is processed next.
    stack: Vec<Pending>,
    isolating: Vec<OpenInterval>,
    points: BTreeSet<Dyadic>,
    stats: SubdivisionStats,
}

impl<'a> Engine<'a> {
    pub(super) fn new(
        f: &'a BigIntPoly,
        algorithm: Algorithm,
        observer: &'a mut dyn Observer,
    ) -> Self {
        Engine {
            f,
            df: f.derivative(),
            algorithm,
            observer,
            stack: Vec::new(),
            isolating: Vec::new(),
            points: BTreeSet::new(),
            stats: SubdivisionStats::default(),
        }
    }

    pub(super) fn run(&mut self, initial: OpenInterval) {
        self.stack.push(Pending {
            task: ActiveTask::new(initial, 1),
            depth: 0,
        });
        while let Some(Pending { task, depth }) = self.stack.pop() {
            self.process(task, depth);
        }
    }

    pub(super) fn finish(self) -> Isolation {
        let points = self.points;
        // An isolating interval whose root was already found exactly is
        // redundant: its single root is that point.
        let mut roots: Vec<RootDescriptor> = self
            .isolating
            .into_iter()
            .filter(|i| points.range(i.lower()..i.upper()).all(|p| !i.contains(p)))
            .map(RootDescriptor::Interval)
            .collect();
        roots.extend(points.into_iter().map(RootDescriptor::Point));
        sort_roots(&mut roots);
        Isolation {
            roots,
            stats: self.stats,
        }
    }

    fn count(&mut self, interval: &OpenInterval) -> VarCount {
        self.stats.var_calls += 1;
        var(self.f, interval)
    }

    fn is_root(&self, x: &Dyadic) -> bool {
        self.f.eval(x).is_zero()
    }

    fn record_point(&mut self, x: Dyadic) {
        self.points.insert(x);
    }

    fn process(&mut self, task: ActiveTask, depth: u64) {
        let v = self.count(&task.interval);
        self.stats.tree_size += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        self.stats.max_n_exp = self.stats.max_n_exp.max(task.n_exp);
        self.observer.on_node(&task, depth, v);

        match v.get() {
            0 => self.stats.discarded += 1,
            1 => {
                let i = &task.interval;
                if self.is_root(i.lower()) || self.is_root(i.upper()) {
                    // The interior root is separated from the endpoint root by
                    // further bisection.
                    self.bisect(task, depth);
                } else {
                    self.isolating.push(task.interval);
                }
            }
            _ => {
                if self.algorithm == Algorithm::Dsc2 && self.try_quadratic(&task, v, depth) {
                    return;
                }
                self.bisect(task, depth);
            }
        }
    }

    /// Var count of a candidate window, or `None` if `f` vanishes at one of
    /// its endpoints that is not an endpoint of `parent`. Such roots are
    /// recorded as exact points.
    fn probe(&mut self, parent: &OpenInterval, candidate: &OpenInterval) -> Option<VarCount> {
        let mut rejected = false;
        for end in [candidate.lower(), candidate.upper()] {
            if end == parent.lower() || end == parent.upper() {
                continue;
            }
            if self.is_root(end) {
                self.record_point(end.clone());
                rejected = true;
            }
        }
        if rejected {
            None
        } else {
            Some(self.count(candidate))
        }
    }

    fn try_quadratic(&mut self, task: &ActiveTask, v: VarCount, depth: u64) -> bool {
        let i = &task.interval;
        let log2_n = task.log2_n();
        let window = i.width().shl(-log2_n);

        let left = OpenInterval::new_unchecked(i.lower().clone(), i.lower() + &window);
        let right = OpenInterval::new_unchecked(i.upper() - &window, i.upper().clone());
        let v_left = self.probe(i, &left);
        let v_right = self.probe(i, &right);
        self.observer.on_boundary_probe(task, v, v_left, v_right);
        if v_left == Some(v) {
            self.push_quadratic(task, left, depth);
            return true;
        }
        if v_right == Some(v) {
            self.push_quadratic(task, right, depth);
            return true;
        }

        let mut candidates: Vec<OpenInterval> = Vec::with_capacity(2);
        for endpoint in [Endpoint::Lower, Endpoint::Upper] {
            let t = match endpoint {
                Endpoint::Lower => i.lower(),
                Endpoint::Upper => i.upper(),
            };
            let ft = self.f.eval(t);
            if ft.is_zero() {
                continue;
            }
            let dft = self.df.eval(t);
            if let Some((_, cand)) = snap_from_values(&ft, &dft, i, v, log2_n, endpoint) {
                if !candidates.contains(&cand) {
                    candidates.push(cand);
                }
            }
        }
        let mut chosen = None;
        for cand in candidates {
            if self.probe(i, &cand) == Some(v) && chosen.is_none() {
                chosen = Some(cand);
            }
        }
        match chosen {
            Some(cand) => {
                self.push_quadratic(task, cand, depth);
                true
            }
            None => false,
        }
    }

    fn push_quadratic(&mut self, parent: &ActiveTask, child: OpenInterval, depth: u64) {
        // Capping n_exp only limits how fast the windows shrink.
        let n_exp = (parent.n_exp + 1).min(MAX_N_EXP);
        let child = ActiveTask::new(child, n_exp);
        self.stats.quadratic_steps += 1;
        self.observer
            .on_step(parent, StepKind::Quadratic, std::slice::from_ref(&child));
        self.stack.push(Pending {
            task: child,
            depth: depth + 1,
        });
    }

    fn bisect(&mut self, task: ActiveTask, depth: u64) {
        let m = task.interval.midpoint();
        if self.is_root(&m) {
            self.record_point(m);
        }
        let n_exp = task.n_exp.saturating_sub(1).max(1);
        let (l, r) = task.interval.bisect();
        let children = [ActiveTask::new(l, n_exp), ActiveTask::new(r, n_exp)];
        self.stats.linear_steps += 1;
        self.observer.on_step(&task, StepKind::Linear, &children);
        let [l, r] = children;
        self.stack.push(Pending {
            task: r,
            depth: depth + 1,
        });
        self.stack.push(Pending {
            task: l,
            depth: depth + 1,
        });
    }
}
