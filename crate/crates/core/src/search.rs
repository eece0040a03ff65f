//! Steepest-descent counterexample search over single-edge toggles.
//!
//! The walk keeps the graph connected with minimum degree at least `delta`.
//! Each step scans every toggle, takes the one with the smallest resulting
//! slack (first pair in `(u, v)` order on ties), and restarts from a fresh
//! sample when no toggle lowers the slack. The budget counts evaluated
//! states, the start included.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conjectures::Claim;
use crate::enumeration::{sample_min_degree_with, CorpusFilter, DEFAULT_MAX_ATTEMPTS};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Signed slack of `claim` on `g`; negative means counterexample.
pub fn slack_objective(g: &Graph, claim: Claim) -> Result<f64> {
    claim.slack(g)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchState {
    pub current: Graph,
    pub slack: f64,
    pub best_slack: f64,
    pub step: usize,
    pub seed: u64,
    pub claim: Claim,
    pub constraints: CorpusFilter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TraceEvent {
    Start,
    Toggle { u: usize, v: usize },
    Restart,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceEntry {
    pub step: usize,
    pub event: TraceEvent,
    pub slack: f64,
    pub best_slack: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HuntOutcome {
    /// State after the last step.
    pub state: SearchState,
    /// Graph attaining `state.best_slack`.
    pub best: Graph,
    pub trace: Vec<TraceEntry>,
}

/// A toggled pair, the graph it produces and that graph's slack.
type Move = ((usize, usize), Graph, f64);

/// Lowest-slack toggle of `g` that keeps the constraints, if any.
fn best_toggle(g: &Graph, claim: Claim, delta: usize) -> Result<Option<Move>> {
    let n = g.order();
    let mut best: Option<Move> = None;
    for u in 0..n {
        for v in u + 1..n {
            let removing = g.has_edge(u, v);
            if removing && (g.degree(u) <= delta || g.degree(v) <= delta) {
                continue;
            }
            let h = g.with_toggled(u, v)?;
            if removing && !h.is_connected()? {
                continue;
            }
            let s = claim.slack(&h)?;
            if best.as_ref().is_none_or(|(_, _, b)| s < *b) {
                best = Some(((u, v), h, s));
            }
        }
    }
    Ok(best)
}

/// Runs the search for `budget` evaluated states. Deterministic in all arguments.
pub fn hunt(n: usize, delta: usize, claim: Claim, budget: usize, seed: u64) -> Result<HuntOutcome> {
    if budget < 1 {
        return Err(Error::Infeasible("budget must be at least 1".into()));
    }
    if n < claim.min_order() {
        return Err(Error::TooFewVertices { what: claim.id(), n, min: claim.min_order() });
    }
    if delta < 1 || delta >= n {
        return Err(Error::Infeasible(format!("need 1 <= delta <= n-1, got n = {n}, delta = {delta}")));
    }
    let constraints = CorpusFilter::connected(n).with_min_degree(delta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut current = sample_min_degree_with(&mut rng, n, delta, DEFAULT_MAX_ATTEMPTS)?;
    let mut slack = claim.slack(&current)?;
    let mut best = current.clone();
    let mut best_slack = slack;
    let mut trace = Vec::with_capacity(budget);
    trace.push(TraceEntry { step: 0, event: TraceEvent::Start, slack, best_slack });

    for step in 1..budget {
        let event = match best_toggle(&current, claim, delta)? {
            Some(((u, v), h, s)) if s < slack => {
                current = h;
                slack = s;
                TraceEvent::Toggle { u, v }
            }
            _ => {
                current = sample_min_degree_with(&mut rng, n, delta, DEFAULT_MAX_ATTEMPTS)?;
                slack = claim.slack(&current)?;
                TraceEvent::Restart
            }
        };
        assert!(constraints.accepts(&current), "search left the constraint set");
        if slack < best_slack {
            best_slack = slack;
            best = current.clone();
        }
        trace.push(TraceEntry { step, event, slack, best_slack });
    }

    Ok(HuntOutcome {
        state: SearchState {
            current,
            slack,
            best_slack,
            step: budget - 1,
            seed,
            claim,
            constraints,
        },
        best,
        trace,
    })
}
