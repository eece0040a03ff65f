//! Report records and their CSV / JSON-lines emission.
//!
//! Both formats are produced from the same flat list of `(column, Field)`
//! pairs, so a CSV row and the matching JSON object always carry the same
//! values. Floats are rounded to 12 significant digits before either
//! rendering.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::bounds::BoundProfile;
use crate::conjectures::{check_all, is_path, premises, Claim, ConjectureVerdict, PremiseProfile};
use crate::enumeration::serialize_graph6;
use crate::graph::{Graph, InvariantReport};

pub const TOOL_NAME: &str = "randic";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Csv,
    #[default]
    Jsonl,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "jsonl" | "json" => Ok(Format::Jsonl),
            _ => Err(format!("unknown format {s:?}; expected csv or jsonl")),
        }
    }
}

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Text form of a float after [`round_sig`].
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    let r = round_sig(x);
    if r == 0.0 || (1e-5..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// One cell of an emitted row.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Text(String),
}

impl Field {
    pub fn opt_float(v: Option<f64>) -> Self {
        v.map_or(Field::Null, Field::Float)
    }

    pub fn opt_int(v: Option<usize>) -> Self {
        v.map_or(Field::Null, |x| Field::Int(x as i64))
    }

    fn to_json(&self) -> Value {
        match self {
            Field::Null => Value::Null,
            Field::Bool(b) => Value::Bool(*b),
            Field::Int(i) => Value::from(*i),
            Field::Float(f) => serde_json::Number::from_f64(round_sig(*f)).map_or(Value::Null, Value::Number),
            Field::Text(s) => Value::String(s.clone()),
        }
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as i64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Float(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_owned())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Null => Ok(()),
            Field::Bool(b) => write!(f, "{b}"),
            Field::Int(i) => write!(f, "{i}"),
            Field::Float(x) => f.write_str(&format_float(*x)),
            Field::Text(s) => f.write_str(s),
        }
    }
}

pub type Row = Vec<(&'static str, Field)>;

/// Run metadata written ahead of the rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportHeader {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub rng: &'static str,
    pub seed: Option<u64>,
    pub tol: f64,
    pub filter: Option<String>,
}

impl ReportHeader {
    pub fn new(command: impl Into<String>, tol: f64) -> Self {
        Self {
            tool: TOOL_NAME,
            version: TOOL_VERSION,
            command: command.into(),
            rng: crate::enumeration::RNG_ALGORITHM,
            seed: None,
            tol,
            filter: None,
        }
    }
}

/// Streams rows as CSV (header lines prefixed with `#`) or JSON lines (a
/// `{"header": ...}` object first).
pub struct TableWriter<W: Write> {
    format: Format,
    out: W,
    columns: Option<Vec<&'static str>>,
}

impl<W: Write> TableWriter<W> {
    pub fn new(mut out: W, format: Format, header: &ReportHeader) -> std::io::Result<Self> {
        match format {
            Format::Jsonl => {
                let line = serde_json::json!({ "header": header });
                writeln!(out, "{line}")?;
            }
            Format::Csv => {
                writeln!(out, "# tool: {} {}", header.tool, header.version)?;
                writeln!(out, "# command: {}", header.command)?;
                writeln!(out, "# rng: {}", header.rng)?;
                writeln!(out, "# seed: {}", header.seed.map_or("none".into(), |s| s.to_string()))?;
                writeln!(out, "# tol: {:e}", header.tol)?;
                writeln!(out, "# filter: {}", header.filter.as_deref().unwrap_or("none"))?;
            }
        }
        Ok(Self { format, out, columns: None })
    }

    pub fn write_row(&mut self, row: &[(&'static str, Field)]) -> std::io::Result<()> {
        match self.format {
            Format::Jsonl => {
                let obj: Map<String, Value> = row.iter().map(|(k, v)| ((*k).to_owned(), v.to_json())).collect();
                writeln!(self.out, "{}", Value::Object(obj))
            }
            Format::Csv => {
                let names: Vec<&'static str> = row.iter().map(|(k, _)| *k).collect();
                match &self.columns {
                    None => {
                        write_csv_record(&mut self.out, names.iter().map(|s| s.to_string()))?;
                        self.columns = Some(names);
                    }
                    Some(cols) => assert_eq!(cols, &names, "CSV rows must share one column order"),
                }
                write_csv_record(&mut self.out, row.iter().map(|(_, v)| v.to_string()))
            }
        }
    }

    pub fn flush(&mut self) -> std::io::Result<()> {
        self.out.flush()
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}

fn write_csv_record<W: Write>(out: &mut W, fields: impl Iterator<Item = String>) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(fields).map_err(std::io::Error::other)?;
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    out.write_all(&bytes)
}

/// Something unexpected about one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Anomaly {
    Disconnected,
    Violated(Claim),
    NearEqualityOffPath(Claim),
    /// A lower/upper bound the graph should satisfy did not hold.
    BoundViolated(&'static str),
}

impl fmt::Display for Anomaly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Anomaly::Disconnected => f.write_str("disconnected"),
            Anomaly::Violated(c) => write!(f, "violated:{c}"),
            Anomaly::NearEqualityOffPath(c) => write!(f, "near_equality_off_path:{c}"),
            Anomaly::BoundViolated(b) => write!(f, "bound_violated:{b}"),
        }
    }
}

/// Everything reported about one input graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRecord {
    /// 1-based input line, when read from a stream.
    pub line: Option<usize>,
    /// graph6 encoding of the graph as labeled in the input.
    pub graph_id: String,
    pub invariants: InvariantReport,
    pub is_path: bool,
    pub verdicts: Vec<ConjectureVerdict>,
    pub bounds: BoundProfile,
    pub premises: PremiseProfile,
    pub anomalies: Vec<Anomaly>,
}

impl ReportRecord {
    pub fn new(g: &Graph, line: Option<usize>, tol: f64) -> Self {
        let invariants = g.invariant_report();
        let verdicts = check_all(g, tol);
        let bounds = BoundProfile::new(invariants.n, invariants.min_degree);
        let mut anomalies = Vec::new();
        if !invariants.is_connected {
            anomalies.push(Anomaly::Disconnected);
        }
        for v in &verdicts {
            if !v.holds {
                anomalies.push(Anomaly::Violated(v.claim));
            }
            if v.near_equality_off_path {
                anomalies.push(Anomaly::NearEqualityOffPath(v.claim));
            }
        }
        if invariants.is_connected {
            if let (Some(d), Some(b)) = (invariants.diameter, bounds.erdos_diam) {
                if d as f64 > b + tol {
                    anomalies.push(Anomaly::BoundViolated("diameter"));
                }
            }
            if let (Some(mu), Some(b)) = (invariants.avg_distance, bounds.kw_mu) {
                if mu > b + tol {
                    anomalies.push(Anomaly::BoundViolated("avg_distance"));
                }
            }
        }
        if let Some(b) = bounds.randic_lb {
            if invariants.randic < b - tol {
                anomalies.push(Anomaly::BoundViolated("randic"));
            }
        }
        Self {
            line,
            graph_id: serialize_graph6(g).unwrap_or_default(),
            is_path: is_path(g),
            premises: premises(g),
            invariants,
            verdicts,
            bounds,
            anomalies,
        }
    }

    pub fn verdict(&self, claim: Claim) -> Option<&ConjectureVerdict> {
        self.verdicts.iter().find(|v| v.claim == claim)
    }

    /// Whether some claim or bound failed. Disconnection alone does not count.
    pub fn has_violation(&self) -> bool {
        self.anomalies
            .iter()
            .any(|a| matches!(a, Anomaly::Violated(_) | Anomaly::BoundViolated(_)))
    }

    /// Fixed column order shared by both output formats.
    pub fn row(&self) -> Row {
        let inv = &self.invariants;
        let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut row: Row = vec![
            ("line", Field::opt_int(self.line)),
            ("graph6", self.graph_id.clone().into()),
            ("n", inv.n.into()),
            ("m", inv.m.into()),
            ("min_degree", inv.min_degree.into()),
            ("degree_sequence", join(&inv.degree_sequence).into()),
            ("connected", inv.is_connected.into()),
            ("randic", inv.randic.into()),
            ("diameter", Field::opt_int(inv.diameter)),
            ("avg_distance", Field::opt_float(inv.avg_distance)),
        ];
        for (claim, names) in [
            (Claim::DiameterDifference, ["c1_add_slack", "c1_add_holds", "c1_add_equality"]),
            (Claim::DiameterRatio, ["c1_ratio_slack", "c1_ratio_holds", "c1_ratio_equality"]),
            (Claim::MeanDistance, ["c2_slack", "c2_holds", "c2_equality"]),
        ] {
            let v = self.verdict(claim);
            row.push((names[0], Field::opt_float(v.map(|v| v.slack))));
            row.push((names[1], v.map_or(Field::Null, |v| v.holds.into())));
            row.push((names[2], v.map_or(Field::Null, |v| v.is_equality.into())));
        }
        let b = &self.bounds;
        row.extend([
            ("is_path", self.is_path.into()),
            ("premise_difference", self.premises.difference.into()),
            ("premise_ratio", self.premises.ratio.into()),
            ("premise_mean_distance", self.premises.mean_distance.into()),
            ("bound_diameter", Field::opt_float(b.erdos_diam)),
            ("bound_avg_distance", Field::opt_float(b.kw_mu)),
            ("bound_randic", Field::opt_float(b.randic_lb)),
            ("p_candidates", b.p_used.as_ref().map_or(Field::Null, |p| join(&p.candidates).into())),
            ("p_rule", b.p_used.as_ref().map_or(Field::Null, |p| Field::Int(p.rule.row().into()))),
            ("regime", b.regime.as_str().into()),
            ("slope_floor", Field::opt_float(b.slope_floor)),
            (
                "anomalies",
                self.anomalies.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(";").into(),
            ),
        ]);
        row
    }
}
