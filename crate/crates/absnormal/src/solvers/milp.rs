//! Best-first branch-and-bound for the big-M minimization reformulation.
//!
//! Binary variables `y` are relaxed to `[0, 1]`; each node's LP optimum is
//! a lower bound for its subtree. Nodes are explored lowest-bound-first,
//! pruned against the incumbent at a relative gap of `1e-9`, and branched
//! on the most fractional `y` component. Ties in the queue break on
//! insertion order, so runs are deterministic.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::formulations::MilpProblem;
use crate::linalg::{Matrix, Vector};
use crate::solvers::lp::{simplex_solve, LpProblem, LpSolution};
use crate::solvers::{SolveOutcome, SolveStatus};

/// Default cap on explored nodes.
pub const DEFAULT_NODE_LIMIT: usize = 100_000;

const INTEGRALITY_TOL: f64 = 1e-6;
const RELATIVE_GAP: f64 = 1e-9;
const NODE_LP_PIVOT_LIMIT: usize = 100_000;

struct Node {
    bound: f64,
    seq: usize,
    fixed: Vec<Option<bool>>,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Node {}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Node {
    // BinaryHeap is a max-heap; reverse so the lowest bound pops first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .bound
            .total_cmp(&self.bound)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Node LP over variables `[x | w | y]`: `w >= 0`, `y in [0, 1]` (or fixed
/// by branching), `w <= mu y`, and `0 <= slack <= mu (e - y)` with
/// `slack = comp_const + comp_x x + comp_w w`.
fn node_lp(milp: &MilpProblem, fixed: &[Option<bool>]) -> LpProblem {
    let lpcc = &milp.lpcc;
    let s = lpcc.comp_dim();
    let n_x = lpcc.n_x();
    let nv = n_x + 2 * s;
    let w_at = |i: usize| n_x + i;
    let y_at = |i: usize| n_x + s + i;

    let mut lp = LpProblem::with_vars(nv);
    for i in 0..s {
        lp.nonneg[w_at(i)] = true;
        lp.nonneg[y_at(i)] = true;
    }
    lp.objective = Vector::from_fn(nv, |c| {
        if c < n_x {
            lpcc.obj_x[c]
        } else if c < n_x + s {
            lpcc.obj_w[c - n_x]
        } else {
            0.0
        }
    });
    lp.obj_const = lpcc.obj_const;

    let free_y: Vec<usize> = (0..s).filter(|&i| fixed[i].is_none()).collect();
    let ge_rows = 3 * s + free_y.len();
    let mut ge_lhs = Matrix::zeros(ge_rows, nv);
    let mut ge_rhs = Vector::zeros(ge_rows);
    for i in 0..s {
        // mu y_i - w_i >= 0
        ge_lhs.set(i, w_at(i), -1.0);
        ge_lhs.set(i, y_at(i), milp.mu);

        // slack_i >= 0
        let r = s + i;
        for c in 0..n_x {
            ge_lhs.set(r, c, lpcc.comp_x.get(i, c));
        }
        for c in 0..s {
            ge_lhs.set(r, w_at(c), lpcc.comp_w.get(i, c));
        }
        ge_rhs[r] = -lpcc.comp_const[i];

        // mu (1 - y_i) - slack_i >= 0
        let r = 2 * s + i;
        for c in 0..n_x {
            ge_lhs.set(r, c, -lpcc.comp_x.get(i, c));
        }
        for c in 0..s {
            ge_lhs.set(r, w_at(c), -lpcc.comp_w.get(i, c));
        }
        ge_lhs.set(r, y_at(i), -milp.mu);
        ge_rhs[r] = lpcc.comp_const[i] - milp.mu;
    }
    for (extra, &i) in free_y.iter().enumerate() {
        // y_i <= 1
        let r = 3 * s + extra;
        ge_lhs.set(r, y_at(i), -1.0);
        ge_rhs[r] = -1.0;
    }
    lp.ge_lhs = ge_lhs;
    lp.ge_rhs = ge_rhs;

    let fixed_count = s - free_y.len();
    let mut eq_lhs = Matrix::zeros(fixed_count, nv);
    let mut eq_rhs = Vector::zeros(fixed_count);
    let mut r = 0;
    for (i, value) in fixed.iter().enumerate() {
        if let Some(v) = value {
            eq_lhs.set(r, y_at(i), 1.0);
            eq_rhs[r] = if *v { 1.0 } else { 0.0 };
            r += 1;
        }
    }
    lp.eq_lhs = eq_lhs;
    lp.eq_rhs = eq_rhs;
    lp
}

struct Candidate {
    objective: f64,
    x: Vector,
    w: Vector,
    y: Vec<bool>,
}

/// Solve the big-M MILP to global optimality by branch-and-bound.
///
/// Returns the optimum with its `(x, w, y)`, `Infeasible` when no binary
/// assignment admits a feasible point, `Unbounded` if a node relaxation is
/// unbounded below, or `LimitReached` (carrying the best incumbent, if
/// any) when the node budget runs out.
pub fn solve_milp_bb(milp: &MilpProblem, node_limit: usize) -> SolveOutcome {
    let s = milp.lpcc.comp_dim();
    let n_x = milp.lpcc.n_x();

    let mut heap: BinaryHeap<Node> = BinaryHeap::new();
    let mut seq = 0usize;
    heap.push(Node { bound: f64::NEG_INFINITY, seq, fixed: vec![None; s] });

    let mut incumbent: Option<Candidate> = None;
    let mut nodes = 0usize;

    while let Some(node) = heap.pop() {
        if let Some(inc) = &incumbent {
            if node.bound >= inc.objective - RELATIVE_GAP * (1.0 + inc.objective.abs()) {
                continue;
            }
        }
        if nodes >= node_limit {
            return match incumbent {
                Some(inc) => SolveOutcome {
                    status: SolveStatus::LimitReached,
                    x: Some(inc.x),
                    w: Some(inc.w),
                    y: Some(inc.y),
                    objective: Some(inc.objective),
                    certificate: Some(format!(
                        "node limit {node_limit} reached; best bound {:.6e}",
                        node.bound
                    )),
                },
                None => SolveOutcome::with_certificate(
                    SolveStatus::LimitReached,
                    format!("node limit {node_limit} reached without an incumbent"),
                ),
            };
        }
        nodes += 1;

        let lp = node_lp(milp, &node.fixed);
        let (point, objective) = match simplex_solve(&lp, NODE_LP_PIVOT_LIMIT) {
            Ok(LpSolution::Optimal { x, objective }) => (x, objective),
            Ok(LpSolution::Infeasible) => continue,
            Ok(LpSolution::Unbounded { .. }) => {
                return SolveOutcome::with_certificate(
                    SolveStatus::Unbounded,
                    format!("relaxation unbounded below after {nodes} nodes"),
                );
            }
            Err(err) => {
                return SolveOutcome::with_certificate(
                    SolveStatus::LimitReached,
                    format!("node LP failed: {err}"),
                );
            }
        };

        if let Some(inc) = &incumbent {
            if objective >= inc.objective - RELATIVE_GAP * (1.0 + inc.objective.abs()) {
                continue;
            }
        }

        let y_vals: Vec<f64> = (0..s).map(|i| point[n_x + s + i]).collect();
        let most_fractional = (0..s)
            .map(|i| (i, y_vals[i].min(1.0 - y_vals[i])))
            .filter(|&(_, frac)| frac > INTEGRALITY_TOL)
            .max_by(|a, b| a.1.total_cmp(&b.1).then_with(|| b.0.cmp(&a.0)));

        match most_fractional {
            None => {
                // Integral point: new incumbent.
                let x = Vector::from_fn(n_x, |i| point[i]);
                let w = Vector::from_fn(s, |i| point[n_x + i]);
                let y = (0..s).map(|i| y_vals[i] > 0.5).collect();
                incumbent = Some(Candidate { objective, x, w, y });
            }
            Some((branch_var, _)) => {
                for value in [false, true] {
                    let mut fixed = node.fixed.clone();
                    fixed[branch_var] = Some(value);
                    seq += 1;
                    heap.push(Node { bound: objective, seq, fixed });
                }
            }
        }
    }

    match incumbent {
        Some(inc) => SolveOutcome {
            status: SolveStatus::Solved,
            x: Some(inc.x),
            w: Some(inc.w),
            y: Some(inc.y),
            objective: Some(inc.objective),
            certificate: Some(format!("branch-and-bound explored {nodes} nodes")),
        },
        None => SolveOutcome::with_certificate(
            SolveStatus::Infeasible,
            format!("no feasible binary assignment ({nodes} nodes explored)"),
        ),
    }
}
