use super::{ActiveTask, StepKind as Kind};
use crate::descartes::VarCount;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// The interval was replaced by one of width `w / N`.
    Quadratic,
    /// The interval was bisected.
    Linear,
}

/// Hooks into the isolation main loop. All methods default to no-ops.
pub trait Observer {
    fn on_node(&mut self, _task: &ActiveTask, _depth: u64, _var: VarCount) {}

    fn on_step(&mut self, _parent: &ActiveTask, _kind: StepKind, _children: &[ActiveTask]) {}

    /// Both boundary windows were probed; `None` marks a window rejected
    /// because `f` vanished at one of its new endpoints.
    fn on_boundary_probe(
        &mut self,
        _parent: &ActiveTask,
        _var: VarCount,
        _left: Option<VarCount>,
        _right: Option<VarCount>,
    ) {
    }
}

#[derive(Debug, Default, Clone, Copy)]
pub struct NoopObserver;

impl Observer for NoopObserver {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Node {
        task: ActiveTask,
        depth: u64,
        var: VarCount,
    },
    Step {
        parent: ActiveTask,
        kind: StepKind,
        children: Vec<ActiveTask>,
    },
    BoundaryProbe {
        parent: ActiveTask,
        var: VarCount,
        left: Option<VarCount>,
        right: Option<VarCount>,
    },
}

/// Records every event in order.
#[derive(Debug, Default, Clone)]
pub struct TraceRecorder {
    pub events: Vec<TraceEvent>,
}

impl Observer for TraceRecorder {
    fn on_node(&mut self, task: &ActiveTask, depth: u64, var: VarCount) {
        self.events.push(TraceEvent::Node {
            task: task.clone(),
            depth,
            var,
        });
    }

    fn on_step(&mut self, parent: &ActiveTask, kind: StepKind, children: &[ActiveTask]) {
        self.events.push(TraceEvent::Step {
            parent: parent.clone(),
            kind,
            children: children.to_vec(),
        });
    }

    fn on_boundary_probe(
        &mut self,
        parent: &ActiveTask,
        var: VarCount,
        left: Option<VarCount>,
        right: Option<VarCount>,
    ) {
        self.events.push(TraceEvent::BoundaryProbe {
            parent: parent.clone(),
            var,
            left,
            right,
        });
    }
}

impl TraceRecorder {
    /// Checks the recorded run against the subdivision invariants: widths
    /// are powers of two no larger than `2^max_width_log2`, `n_exp >= 1`,
    /// quadratic children get `n_exp + 1` and linear children
    /// `max(1, n_exp - 1)`, every child is at most half as wide as its
    /// parent and lies inside it, and at most one boundary window keeps the
    /// parent's variation count. Returns one message per violation.
    pub fn violations(&self, max_width_log2: i64) -> Vec<String> {
        let mut out = Vec::new();
        for event in &self.events {
            match event {
                TraceEvent::Node { task, .. } => {
                    match task.interval.width_log2() {
                        None => out.push(format!("{:?}: width not a power of two", task.interval)),
                        Some(w) if w > max_width_log2 => {
                            out.push(format!("{:?}: width 2^{w} too large", task.interval))
                        }
                        _ => {}
                    }
                    if task.n_exp < 1 {
                        out.push(format!("{:?}: n_exp = 0", task.interval));
                    }
                }
                TraceEvent::Step {
                    parent,
                    kind,
                    children,
                } => {
                    let expected = match kind {
                        Kind::Quadratic => parent.n_exp + 1,
                        Kind::Linear => parent.n_exp.saturating_sub(1).max(1),
                    };
                    let parent_w = parent.interval.width();
                    for child in children {
                        if child.n_exp != expected && child.n_exp != super::MAX_N_EXP {
                            out.push(format!(
                                "{kind:?} step from n_exp {} gave child n_exp {}",
                                parent.n_exp, child.n_exp
                            ));
                        }
                        if child.interval.width().shl(1) > parent_w {
                            out.push(format!(
                                "child {:?} wider than half of {:?}",
                                child.interval, parent.interval
                            ));
                        }
                        if !parent.interval.encloses(&child.interval) {
                            out.push(format!(
                                "child {:?} escapes {:?}",
                                child.interval, parent.interval
                            ));
                        }
                    }
                    if *kind == Kind::Quadratic {
                        let w = parent_w.shl(-parent.log2_n());
                        if children.len() != 1 || children[0].interval.width() != w {
                            out.push(format!(
                                "quadratic step from {:?} is not w/N",
                                parent.interval
                            ));
                        }
                    } else if children.len() != 2 {
                        out.push(format!(
                            "linear step from {:?} is not a bisection",
                            parent.interval
                        ));
                    }
                }
                TraceEvent::BoundaryProbe {
                    parent,
                    var,
                    left,
                    right,
                } => {
                    if *left == Some(*var) && *right == Some(*var) {
                        out.push(format!(
                            "both boundary windows of {:?} keep var {var}",
                            parent.interval
                        ));
                    }
                }
            }
        }
        out
    }
}
