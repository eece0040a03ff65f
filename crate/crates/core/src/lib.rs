//! Randić index, diameter and average distance of simple graphs.
//!
//! The crate computes the three invariants, evaluates the classical upper
//! bounds on diameter and average distance together with a degree-based
//! lower bound on the Randić index, and checks three inequalities relating
//! them:
//!
//! * `R - D >= sqrt(2) - (n + 1) / 2`
//! * `R / D >= (n - 3 + 2 sqrt(2)) / (2n - 2)`
//! * `R >= mu`
//!
//! Graphs come from an exhaustive isomorph-free generator (up to 8
//! vertices), from graph6 / sparse6 input, or from a seeded sampler.
//! [`survey`] sweeps the analytic bound families over an `(n, k)` grid and
//! [`search`] runs a local counterexample search.

pub mod bounds;
pub mod conjectures;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod report;
pub mod search;
pub mod survey;

pub use bounds::{randic_lower_bound, BoundProfile, PChoice, Regime};
pub use conjectures::{check_all, premises, Claim, ConjectureVerdict, PremiseProfile, DEFAULT_TOL};
pub use enumeration::{
    canonical_key, enumerate_connected, parse_graph6, parse_sparse6, serialize_graph6, CanonicalKey, CorpusFilter,
};
pub use error::{Error, ParseError, Result};
pub use graph::{DistanceMatrix, Graph, InvariantReport};
pub use report::{Format, ReportHeader, ReportRecord, TableWriter};
pub use search::{hunt, HuntOutcome, SearchState, TraceEntry, TraceEvent};
pub use survey::{survey, Family, SurveyReport};
