//! Flat rows for the survey and hunt tables.

use randic_core::conjectures::is_path;
use randic_core::enumeration::serialize_graph6;
use randic_core::report::{Field, Row};
use randic_core::survey::{Cell, FamilySummary};
use randic_core::{HuntOutcome, SurveyReport, TraceEntry, TraceEvent};

fn summary_row(f: &FamilySummary) -> Row {
    let (n, k, p) = f.argmin.map_or((None, None, None), |(n, k, p)| (Some(n), Some(k), p));
    vec![
        ("kind", "summary".into()),
        ("family", f.family.name().into()),
        ("relation", f.relation.as_str().into()),
        ("n", Field::opt_int(n)),
        ("k", Field::opt_int(k)),
        ("p", Field::opt_float(p)),
        ("value", Field::opt_float(f.min_value)),
        ("cells", f.cells.into()),
        ("claim_cells", f.claim_cells.into()),
        ("violations", f.violations.into()),
        ("boundary", f.boundary.into()),
        ("passed", f.passed().into()),
    ]
}

fn cell_row(kind: &str, c: &Cell) -> Row {
    vec![
        ("kind", kind.into()),
        ("family", c.family.name().into()),
        ("relation", c.family.relation().as_str().into()),
        ("n", c.n.into()),
        ("k", c.k.into()),
        ("p", Field::opt_float(c.p)),
        ("value", c.value.into()),
        ("cells", Field::Null),
        ("claim_cells", Field::Null),
        ("violations", Field::Null),
        ("boundary", Field::Null),
        ("passed", Field::Null),
    ]
}

/// One summary row per family, then the sampled violation and boundary cells.
pub fn survey_rows(report: &SurveyReport) -> Vec<Row> {
    let mut rows: Vec<Row> = report.families.iter().map(summary_row).collect();
    for f in &report.families {
        rows.extend(f.violation_samples.iter().map(|c| cell_row("violation", c)));
        rows.extend(f.boundary_samples.iter().map(|c| cell_row("boundary", c)));
    }
    rows
}

pub fn hunt_row(o: &HuntOutcome, budget: usize, tol: f64) -> Row {
    let s = &o.state;
    let restarts = o.trace.iter().filter(|e| e.event == TraceEvent::Restart).count();
    vec![
        ("n", s.constraints.n.into()),
        ("min_degree", Field::opt_int(s.constraints.min_degree_at_least)),
        ("claim", s.claim.id().into()),
        ("budget", budget.into()),
        ("seed", Field::Int(s.seed as i64)),
        ("steps", s.step.into()),
        ("restarts", restarts.into()),
        ("best_slack", s.best_slack.into()),
        ("best_graph6", serialize_graph6(&o.best).unwrap_or_default().into()),
        ("best_is_path", is_path(&o.best).into()),
        ("final_slack", s.slack.into()),
        ("final_graph6", serialize_graph6(&s.current).unwrap_or_default().into()),
        ("counterexample", (s.best_slack < -tol).into()),
    ]
}

pub fn trace_row(e: &TraceEntry) -> Row {
    let (kind, u, v) = match e.event {
        TraceEvent::Start => ("start", None, None),
        TraceEvent::Toggle { u, v } => ("toggle", Some(u), Some(v)),
        TraceEvent::Restart => ("restart", None, None),
    };
    vec![
        ("step", e.step.into()),
        ("event", kind.into()),
        ("u", Field::opt_int(u)),
        ("v", Field::opt_int(v)),
        ("slack", e.slack.into()),
        ("best_slack", e.best_slack.into()),
    ]
}
