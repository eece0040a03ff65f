//! Grid survey of the bound and margin functions.
//!
//! Each [`Family`] is evaluated over its whole domain up to `n_max`, and
//! cells inside the family's claim region are checked against the claimed
//! sign: `>= 0` tolerates values down to `-tol`, `> 0` tolerates nothing.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    admissible_p, difference_margin_high, difference_margin_low, mean_distance_gap, randic_lower_bound,
    ratio_margin_high, ratio_margin_low, slope_floor,
};

/// How many violating or boundary cells a summary keeps verbatim.
pub const SAMPLE_LIMIT: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=0")]
    NonNegative,
    #[serde(rename = ">0")]
    Positive,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::NonNegative => ">=0",
            Relation::Positive => ">0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `slope_floor(n, k)` on `1 <= k <= n/2`; claimed `>= 0` everywhere.
    SlopeFloor,
    /// `difference_margin_low` on `1 <= k <= n/2`; claimed `> 0` for `k >= 5`.
    DifferenceMarginLow,
    /// `ratio_margin_low` on `1 <= k <= n/2`; claimed `> 0` for `n >= 15`, `k >= n/5`.
    RatioMarginLow,
    /// `difference_margin_high` on `n/2 < k <= n-1`, all five `p`; claimed `>= 0` for `n >= 4`.
    DifferenceMarginHigh,
    /// `ratio_margin_high`, same grid and claim.
    RatioMarginHigh,
    /// `mean_distance_gap` on `1 <= k <= n-1`; claimed `> 0` for `n >= 15`, `k >= n/5`.
    MeanDistanceGap,
    /// Forward difference in `k` of `difference_margin_low`; claimed `>= 0`.
    DifferenceMarginLowStep,
    /// Forward difference in `k` of `ratio_margin_low`; claimed `>= 0`.
    RatioMarginLowStep,
    /// Forward difference in `k` of `randic_lower_bound` on the low regime; claimed `>= 0`.
    RandicBoundLowStep,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::SlopeFloor,
        Family::DifferenceMarginLow,
        Family::RatioMarginLow,
        Family::DifferenceMarginHigh,
        Family::RatioMarginHigh,
        Family::MeanDistanceGap,
        Family::DifferenceMarginLowStep,
        Family::RatioMarginLowStep,
        Family::RandicBoundLowStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SlopeFloor => "slope_floor",
            Family::DifferenceMarginLow => "difference_margin_low",
            Family::RatioMarginLow => "ratio_margin_low",
            Family::DifferenceMarginHigh => "difference_margin_high",
            Family::RatioMarginHigh => "ratio_margin_high",
            Family::MeanDistanceGap => "mean_distance_gap",
            Family::DifferenceMarginLowStep => "difference_margin_low_step",
            Family::RatioMarginLowStep => "ratio_margin_low_step",
            Family::RandicBoundLowStep => "randic_bound_low_step",
        }
    }

    pub fn relation(self) -> Relation {
        match self {
            Family::DifferenceMarginLow | Family::RatioMarginLow | Family::MeanDistanceGap => Relation::Positive,
            _ => Relation::NonNegative,
        }
    }

    fn uses_p(self) -> bool {
        matches!(self, Family::DifferenceMarginHigh | Family::RatioMarginHigh)
    }

    /// Smallest `n` the family is evaluated at.
    fn min_n(self) -> usize {
        match self {
            Family::DifferenceMarginHigh | Family::RatioMarginHigh => 4,
            _ => 2,
        }
    }

    /// Range of `k` evaluated for order `n`.
    fn k_range(self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::SlopeFloor | Family::DifferenceMarginLow | Family::RatioMarginLow => 1..=n / 2,
            Family::DifferenceMarginHigh | Family::RatioMarginHigh => n / 2 + 1..=n - 1,
            Family::MeanDistanceGap => 1..=n - 1,
            // pairs (k, k+1) with both inside the low regime
            Family::DifferenceMarginLowStep | Family::RatioMarginLowStep | Family::RandicBoundLowStep => {
                1..=(n / 2).saturating_sub(1)
            }
        }
    }

    /// Whether `(n, k)` lies where the sign is claimed.
    pub fn in_claim(self, n: usize, k: usize) -> bool {
        match self {
            Family::DifferenceMarginLow => k >= 5,
            Family::RatioMarginLow | Family::MeanDistanceGap => n >= 15 && 5 * k >= n,
            _ => true,
        }
    }

    /// Value at one cell; `p` is used only by the high-regime families.
    pub fn eval(self, n: usize, k: usize, p: f64) -> f64 {
        let v = match self {
            Family::SlopeFloor => slope_floor(n, k),
            Family::DifferenceMarginLow => difference_margin_low(n, k),
            Family::RatioMarginLow => ratio_margin_low(n, k),
            Family::DifferenceMarginHigh => difference_margin_high(n, p, k),
            Family::RatioMarginHigh => ratio_margin_high(n, p, k),
            Family::MeanDistanceGap => mean_distance_gap(n, k),
            Family::DifferenceMarginLowStep => {
                difference_margin_low(n, k + 1).and_then(|b| difference_margin_low(n, k).map(|a| b - a))
            }
            Family::RatioMarginLowStep => ratio_margin_low(n, k + 1).and_then(|b| ratio_margin_low(n, k).map(|a| b - a)),
            Family::RandicBoundLowStep => {
                randic_lower_bound(n, k + 1).and_then(|b| randic_lower_bound(n, k).map(|a| b - a))
            }
        };
        v.unwrap_or(f64::NAN)
    }

    /// Every cell of the family's domain for order `n`.
    pub fn cells(self, n: usize) -> Vec<Cell> {
        if n < self.min_n() {
            return Vec::new();
        }
        let ps: Vec<Option<f64>> = if self.uses_p() {
            admissible_p(n).into_iter().map(Some).collect()
        } else {
            vec![None]
        };
        let mut out = Vec::new();
        for k in self.k_range(n) {
            for &p in &ps {
                out.push(Cell {
                    family: self,
                    n,
                    k,
                    p,
                    value: self.eval(n, k, p.unwrap_or(f64::NAN)),
                    in_claim: self.in_claim(n, k),
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cell {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub p: Option<f64>,
    pub value: f64,
    pub in_claim: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Outside,
    Ok,
    /// Inside a `>= 0` region with `|value| <= tol`.
    Boundary,
    Violation,
}

impl Cell {
    pub fn status(&self, tol: f64) -> CellStatus {
        if !self.in_claim {
            return CellStatus::Outside;
        }
        let v = self.value;
        match self.family.relation() {
            _ if v.is_nan() => CellStatus::Violation,
            Relation::Positive if v <= 0.0 => CellStatus::Violation,
            Relation::NonNegative if v < -tol => CellStatus::Violation,
            Relation::NonNegative if v.abs() <= tol => CellStatus::Boundary,
            _ => CellStatus::Ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilySummary {
    pub family: Family,
    pub relation: Relation,
    pub cells: usize,
    pub claim_cells: usize,
    /// Minimum over the claim region.
    pub min_value: Option<f64>,
    pub argmin: Option<(usize, usize, Option<f64>)>,
    pub violations: usize,
    pub boundary: usize,
    pub violation_samples: Vec<Cell>,
    pub boundary_samples: Vec<Cell>,
}

impl FamilySummary {
    fn empty(family: Family) -> Self {
        Self {
            family,
            relation: family.relation(),
            cells: 0,
            claim_cells: 0,
            min_value: None,
            argmin: None,
            violations: 0,
            boundary: 0,
            violation_samples: Vec::new(),
            boundary_samples: Vec::new(),
        }
    }

    fn absorb(&mut self, cell: &Cell, tol: f64) {
        self.cells += 1;
        let status = cell.status(tol);
        if status == CellStatus::Outside {
            return;
        }
        self.claim_cells += 1;
        if self.min_value.is_none_or(|m| cell.value < m) {
            self.min_value = Some(cell.value);
            self.argmin = Some((cell.n, cell.k, cell.p));
        }
        match status {
            CellStatus::Violation => {
                self.violations += 1;
                if self.violation_samples.len() < SAMPLE_LIMIT {
                    self.violation_samples.push(*cell);
                }
            }
            CellStatus::Boundary => {
                self.boundary += 1;
                if self.boundary_samples.len() < SAMPLE_LIMIT {
                    self.boundary_samples.push(*cell);
                }
            }
            _ => {}
        }
    }

    /// Merges a summary covering larger `n`; keeps the earlier argmin on ties.
    fn merge(mut self, other: Self) -> Self {
        self.cells += other.cells;
        self.claim_cells += other.claim_cells;
        if let Some(m) = other.min_value {
            if self.min_value.is_none_or(|s| m < s) {
                self.min_value = Some(m);
                self.argmin = other.argmin;
            }
        }
        self.violations += other.violations;
        self.boundary += other.boundary;
        for (mine, theirs) in [
            (&mut self.violation_samples, other.violation_samples),
            (&mut self.boundary_samples, other.boundary_samples),
        ] {
            let room = SAMPLE_LIMIT - mine.len();
            mine.extend(theirs.into_iter().take(room));
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Surveys one family for `n` up to `n_max`, in parallel over `n`.
pub fn survey_family(family: Family, n_max: usize, tol: f64) -> FamilySummary {
    (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut s = FamilySummary::empty(family);
            for cell in family.cells(n) {
                s.absorb(&cell, tol);
            }
            s
        })
        .reduce_with(FamilySummary::merge)
        .unwrap_or_else(|| FamilySummary::empty(family))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyReport {
    pub n_max: usize,
    pub tol: f64,
    pub families: Vec<FamilySummary>,
}

impl SurveyReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilySummary::passed)
    }
}

pub fn survey(n_max: usize, tol: f64) -> SurveyReport {
    SurveyReport {
        n_max,
        tol,
        families: Family::ALL.iter().map(|&f| survey_family(f, n_max, tol)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_floor_boundary_cell() {
        let cells = Family::SlopeFloor.cells(2);
        assert_eq!(cells.len(), 1);
        let c = cells[0];
        assert_eq!((c.n, c.k), (2, 1));
        assert!(c.value.abs() < 1e-15);
        assert_eq!(c.status(1e-9), CellStatus::Boundary);
    }

    #[test]
    fn difference_low_below_k5_is_outside() {
        let cells = Family::DifferenceMarginLow.cells(9);
        let c = cells.iter().find(|c| c.k == 4).unwrap();
        assert!(!c.in_claim);
        assert_eq!(c.status(1e-9), CellStatus::Outside);
        assert!(Family::DifferenceMarginLow.cells(10).iter().any(|c| c.k == 5 && c.in_claim));
    }

    #[test]
    fn domains() {
        assert_eq!(Family::DifferenceMarginHigh.cells(4).len(), 5);
        assert_eq!(Family::DifferenceMarginHigh.cells(3).len(), 0);
        assert_eq!(Family::MeanDistanceGap.cells(15).iter().filter(|c| c.in_claim).count(), 12);
        assert_eq!(Family::RandicBoundLowStep.cells(3).len(), 0);
        assert_eq!(Family::RandicBoundLowStep.cells(10).len(), 4);
    }

    #[test]
    fn statuses() {
        let mk = |family, value| Cell { family, n: 20, k: 10, p: None, value, in_claim: true };
        assert_eq!(mk(Family::MeanDistanceGap, 0.0).status(1e-9), CellStatus::Violation);
        assert_eq!(mk(Family::MeanDistanceGap, 1e-15).status(1e-9), CellStatus::Ok);
        assert_eq!(mk(Family::SlopeFloor, -1e-10).status(1e-9), CellStatus::Boundary);
        assert_eq!(mk(Family::SlopeFloor, -1e-8).status(1e-9), CellStatus::Violation);
        assert_eq!(mk(Family::SlopeFloor, f64::NAN).status(1e-9), CellStatus::Violation);
    }

    #[test]
    fn merge_matches_sequential() {
        let par = survey_family(Family::RatioMarginHigh, 80, 1e-9);
        let mut seq = FamilySummary::empty(Family::RatioMarginHigh);
        for n in 2..=80 {
            for c in Family::RatioMarginHigh.cells(n) {
                seq.absorb(&c, 1e-9);
            }
        }
        assert_eq!(par, seq);
    }

    #[test]
    fn small_survey_passes() {
        let report = survey(200, 1e-9);
        assert!(report.passed(), "{:?}", report.families.iter().filter(|f| !f.passed()).collect::<Vec<_>>());
        let g = &report.families[0];
        assert_eq!(g.boundary, 1);
        assert_eq!(g.argmin, Some((2, 1, None)));
    }
}
