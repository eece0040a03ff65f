//! Per-graph verdicts for the Randić-versus-distance inequalities.
//!
//! Three claims are checked, each as a signed slack `lhs - rhs`:
//!
//! | id         | inequality                                  | extremal graph |
//! |------------|---------------------------------------------|----------------|
//! | `C1_ADD`   | `R - D >= sqrt(2) - (n+1)/2`                | `P_n`          |
//! | `C1_RATIO` | `R / D >= (n - 3 + 2 sqrt(2)) / (2n - 2)`   | `P_n`          |
//! | `C2`       | `R >= mu`                                   | `K_2`          |
//!
//! A numerically zero slack only counts as an equality when the graph is
//! also a path; a zero slack on anything else is flagged instead.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{path_difference_floor, path_ratio_floor};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default tolerance for inequality verdicts.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    /// `R - D >= sqrt(2) - (n+1)/2`
    #[serde(rename = "C1_ADD")]
    DiameterDifference,
    /// `R / D >= (n-3+2 sqrt(2))/(2n-2)`
    #[serde(rename = "C1_RATIO")]
    DiameterRatio,
    /// `R >= mu`
    #[serde(rename = "C2")]
    MeanDistance,
}

impl Claim {
    pub const ALL: [Claim; 3] = [Claim::DiameterDifference, Claim::DiameterRatio, Claim::MeanDistance];

    pub fn id(self) -> &'static str {
        match self {
            Claim::DiameterDifference => "C1_ADD",
            Claim::DiameterRatio => "C1_RATIO",
            Claim::MeanDistance => "C2",
        }
    }

    /// Smallest order the claim is stated for.
    pub fn min_order(self) -> usize {
        match self {
            Claim::DiameterDifference | Claim::DiameterRatio => 3,
            Claim::MeanDistance => 2,
        }
    }

    /// Signed slack `lhs - rhs` of the claim on `g`.
    pub fn slack(self, g: &Graph) -> Result<f64> {
        let n = g.order();
        if n < self.min_order() {
            return Err(Error::TooFewVertices { what: self.id(), n, min: self.min_order() });
        }
        let dist = g.all_pairs_distances()?;
        let r = g.randic_index();
        Ok(match self {
            Claim::DiameterDifference => r - dist.diameter() as f64 - path_difference_floor(n)?,
            Claim::DiameterRatio => r / dist.diameter() as f64 - path_ratio_floor(n)?,
            Claim::MeanDistance => r - dist.average(),
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "C1_ADD" => Ok(Claim::DiameterDifference),
            "C1_RATIO" => Ok(Claim::DiameterRatio),
            "C2" => Ok(Claim::MeanDistance),
            _ => Err(format!("unknown claim {s:?}; expected C1_ADD, C1_RATIO or C2")),
        }
    }
}

/// Outcome of checking one claim on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureVerdict {
    pub claim: Claim,
    /// `slack >= -tolerance`
    pub holds: bool,
    pub slack: f64,
    /// `|slack| <= tolerance` and the graph is a path.
    pub is_equality: bool,
    /// `|slack| <= tolerance` but the graph is not a path.
    pub near_equality_off_path: bool,
    pub tolerance: f64,
}

impl ConjectureVerdict {
    fn new(claim: Claim, slack: f64, tol: f64, path: bool) -> Self {
        let near_zero = slack.abs() <= tol;
        Self {
            claim,
            holds: slack >= -tol,
            slack,
            is_equality: near_zero && path,
            near_equality_off_path: near_zero && !path,
            tolerance: tol,
        }
    }

    /// A violated claim or an equality on a non-path.
    pub fn is_anomalous(&self) -> bool {
        !self.holds || self.near_equality_off_path
    }
}

/// Checks `claim` on `g`. Fails on disconnected graphs and graphs below
/// the claim's minimum order.
pub fn check(g: &Graph, claim: Claim, tol: f64) -> Result<ConjectureVerdict> {
    let slack = claim.slack(g)?;
    Ok(ConjectureVerdict::new(claim, slack, tol, is_path(g)))
}

pub fn check_c1_additive(g: &Graph, tol: f64) -> Result<ConjectureVerdict> {
    check(g, Claim::DiameterDifference, tol)
}

pub fn check_c1_ratio(g: &Graph, tol: f64) -> Result<ConjectureVerdict> {
    check(g, Claim::DiameterRatio, tol)
}

pub fn check_c2(g: &Graph, tol: f64) -> Result<ConjectureVerdict> {
    check(g, Claim::MeanDistance, tol)
}

/// Every claim whose order requirement `g` meets. Empty for disconnected graphs.
pub fn check_all(g: &Graph, tol: f64) -> Vec<ConjectureVerdict> {
    if g.order() == 0 || !g.is_connected().unwrap_or(false) {
        return Vec::new();
    }
    let path = is_path(g);
    let Ok(dist) = g.all_pairs_distances() else {
        return Vec::new();
    };
    let n = g.order();
    let r = g.randic_index();
    let diam = dist.diameter() as f64;
    Claim::ALL
        .iter()
        .filter(|c| n >= c.min_order())
        .map(|&claim| {
            let slack = match claim {
                Claim::DiameterDifference => r - diam - path_difference_floor(n).expect("n >= 3"),
                Claim::DiameterRatio => r / diam - path_ratio_floor(n).expect("n >= 3"),
                Claim::MeanDistance => r - dist.average(),
            };
            ConjectureVerdict::new(claim, slack, tol, path)
        })
        .collect()
}

/// Which degree-premise regimes a graph falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PremiseProfile {
    pub n: usize,
    pub delta: usize,
    /// `delta >= 5`: the difference form is proven.
    pub difference: bool,
    /// `delta >= n/5` and `n >= 15`: the ratio form is proven.
    pub ratio: bool,
    /// Same premise as `ratio`: `R >= mu` is proven.
    pub mean_distance: bool,
}

pub fn premises(g: &Graph) -> PremiseProfile {
    premises_for(g.order(), g.min_degree())
}

pub fn premises_for(n: usize, delta: usize) -> PremiseProfile {
    let linear = 5 * delta >= n && n >= 15;
    PremiseProfile {
        n,
        delta,
        difference: delta >= 5,
        ratio: linear,
        mean_distance: linear,
    }
}

impl PremiseProfile {
    /// Whether the proven regimes cover `claim`.
    pub fn covers(&self, claim: Claim) -> bool {
        match claim {
            Claim::DiameterDifference => self.difference,
            Claim::DiameterRatio => self.ratio,
            Claim::MeanDistance => self.mean_distance,
        }
    }
}

/// True for `K_1` and for connected graphs with degree sequence `(1, 1, 2, ..., 2)`.
pub fn is_path(g: &Graph) -> bool {
    let n = g.order();
    match n {
        0 => false,
        1 => true,
        _ => {
            g.size() == n - 1
                && g.max_degree() <= 2
                && (0..n).filter(|&v| g.degree(v) == 1).count() == 2
                && g.is_connected().unwrap_or(false)
        }
    }
}
