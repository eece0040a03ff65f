//! Closed-form bounds on diameter, average distance and the Randić index in
//! terms of the order `n` and the minimum degree `k`, plus the auxiliary
//! margin functions used to show the degree-constrained inequalities.
//!
//! Every function here is pure arithmetic in `f64`. Preconditions are
//! checked and reported as [`Error::OutOfPremise`].

use std::f64::consts::SQRT_2;

use serde::Serialize;

use crate::error::{Error, Result};

fn premise(what: &'static str, n: usize, k: usize, ok: bool, reason: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfPremise { what, n, k, reason })
    }
}

/// Whether the low-degree branch (`k <= n/2`) of the Randić lower bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Low,
    High,
}

impl Regime {
    pub fn of(n: usize, k: usize) -> Self {
        if 2 * k <= n {
            Regime::Low
        } else {
            Regime::High
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Low => "low",
            Regime::High => "high",
        }
    }
}

/// Upper bound on the diameter of a connected graph with minimum degree `k >= 2`:
/// `3n/(k+1) - 1`.
pub fn erdos_diameter_bound(n: usize, k: usize) -> Result<f64> {
    premise("erdos_diameter_bound", n, k, n >= 1 && k >= 2, "needs n >= 1 and k >= 2")?;
    Ok(3.0 * n as f64 / (k as f64 + 1.0) - 1.0)
}

/// Upper bound on the average distance: `n/(k+1) + 2`.
pub fn kouider_winkler_bound(n: usize, k: usize) -> Result<f64> {
    premise("kouider_winkler_bound", n, k, n >= 1 && k >= 1, "needs n >= 1 and k >= 1")?;
    Ok(n as f64 / (k as f64 + 1.0) + 2.0)
}

/// Row of the case table that selects `p` for the high-degree Randić bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PRule {
    /// `n = 0 mod 4`: `p = n/2`
    Mod4Is0,
    /// `n = 1 mod 4`, `k` even: `floor(n/2)` or `ceil(n/2)`
    Mod4Is1KEven,
    /// `n = 1 mod 4`, `k` odd: `floor(n/2)`
    Mod4Is1KOdd,
    /// `n = 2 mod 4`, `k` even: `(n-2)/2` or `(n+2)/2`
    Mod4Is2KEven,
    /// `n = 2 mod 4`, `k` odd: `n/2`
    Mod4Is2KOdd,
    /// `n = 3 mod 4`, `k` even: `floor(n/2)` or `ceil(n/2)`
    Mod4Is3KEven,
    /// `n = 3 mod 4`, `k` odd: `ceil(n/2)`
    Mod4Is3KOdd,
}

impl PRule {
    /// 1-based position in the case table.
    pub fn row(self) -> u8 {
        self as u8 + 1
    }
}

/// The admissible `p` values for a given `(n, k)`. Two candidates on the
/// "or" rows, one otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PChoice {
    pub candidates: Vec<usize>,
    pub rule: PRule,
}

/// Halves a doubled value, failing if the table would yield a non-integer `p`.
fn halve(doubled: usize) -> Result<usize> {
    if !doubled.is_multiple_of(2) {
        return Err(Error::Internal(format!("p table produced non-integer p = {doubled}/2")));
    }
    Ok(doubled / 2)
}

/// Selects `p` for the high-degree branch of the Randić lower bound.
pub fn p_choice(n: usize, k: usize) -> Result<PChoice> {
    premise("p_choice", n, k, n >= 2 && k >= 1 && k < n, "needs n >= 2 and 1 <= k <= n-1")?;
    let k_even = k.is_multiple_of(2);
    // candidates as 2p
    let (rule, doubled): (PRule, &[usize]) = match (n % 4, k_even) {
        (0, _) => (PRule::Mod4Is0, &[n]),
        (1, true) => (PRule::Mod4Is1KEven, &[n - 1, n + 1]),
        (1, false) => (PRule::Mod4Is1KOdd, &[n - 1]),
        (2, true) => (PRule::Mod4Is2KEven, &[n - 2, n + 2]),
        (2, false) => (PRule::Mod4Is2KOdd, &[n]),
        (3, true) => (PRule::Mod4Is3KEven, &[n - 1, n + 1]),
        (3, false) => (PRule::Mod4Is3KOdd, &[n + 1]),
        _ => unreachable!(),
    };
    let candidates = doubled.iter().map(|&d| halve(d)).collect::<Result<Vec<_>>>()?;
    Ok(PChoice { candidates, rule })
}

/// The five values `p` may take for order `n`: `(n-2)/2, ..., (n+2)/2`.
pub fn admissible_p(n: usize) -> [f64; 5] {
    let n = n as f64;
    [(n - 2.0) / 2.0, (n - 1.0) / 2.0, n / 2.0, (n + 1.0) / 2.0, (n + 2.0) / 2.0]
}

fn is_admissible_p(n: usize, p: f64) -> bool {
    let offset = 2.0 * p - n as f64;
    offset.fract() == 0.0 && offset.abs() <= 2.0
}

fn low_regime_bound(n: f64, k: f64) -> f64 {
    k * (k - 1.0) / (2.0 * (n - 1.0)) + k * (n - k) / (k * (n - 1.0)).sqrt()
}

fn high_regime_raw(n: f64, p: f64, k: f64) -> f64 {
    (n - p) * (n - p - 1.0) / (2.0 * (n - 1.0)) + p * (p + k - n) / (2.0 * k) + p * (n - p) / (k * (n - 1.0)).sqrt()
}

/// The high-degree branch of the Randić lower bound evaluated at `p`, for
/// `n/2 < k <= n-1` and `p` one of [`admissible_p`].
pub fn high_regime_bound(n: usize, p: f64, k: usize) -> Result<f64> {
    premise("high_regime_bound", n, k, 2 * k > n && k < n, "needs n/2 < k <= n-1")?;
    if !is_admissible_p(n, p) {
        return Err(Error::InadmissibleP { n, p });
    }
    Ok(high_regime_raw(n as f64, p, k as f64))
}

/// Lower bound on `R(G)` over graphs of order `n` with minimum degree `k`,
/// with the `p` choice used when `k > n/2`. On the two-candidate rows the
/// smaller of the two evaluations is returned.
pub fn randic_lower_bound_detail(n: usize, k: usize) -> Result<(f64, Option<PChoice>)> {
    premise("randic_lower_bound", n, k, n >= 2 && k >= 1 && k < n, "needs n >= 2 and 1 <= k <= n-1")?;
    match Regime::of(n, k) {
        Regime::Low => Ok((low_regime_bound(n as f64, k as f64), None)),
        Regime::High => {
            let choice = p_choice(n, k)?;
            let value = choice
                .candidates
                .iter()
                .map(|&p| high_regime_raw(n as f64, p as f64, k as f64))
                .fold(f64::INFINITY, f64::min);
            Ok((value, Some(choice)))
        }
    }
}

pub fn randic_lower_bound(n: usize, k: usize) -> Result<f64> {
    randic_lower_bound_detail(n, k).map(|(v, _)| v)
}

/// `(2k-1)/(2(n-1)) + (n-3k)/(2 sqrt(k(n-1)))`, a lower bound on the
/// `k`-derivative of the low-regime margins. Nonnegative for `1 <= k <= n/2`.
pub fn slope_floor(n: usize, k: usize) -> Result<f64> {
    premise("slope_floor", n, k, n >= 2 && k >= 1, "needs n >= 2 and k >= 1")?;
    let (n, k) = (n as f64, k as f64);
    Ok((2.0 * k - 1.0) / (2.0 * (n - 1.0)) + (n - 3.0 * k) / (2.0 * (k * (n - 1.0)).sqrt()))
}

/// `sqrt(2) - (n+1)/2`, the value of `R - D` on the path `P_n`.
pub fn path_difference_floor(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::TooFewVertices { what: "path_difference_floor", n, min: 3 });
    }
    Ok(SQRT_2 - (n as f64 + 1.0) / 2.0)
}

/// `(n-3+2 sqrt(2))/(2n-2)`, the value of `R / D` on the path `P_n`.
pub fn path_ratio_floor(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::TooFewVertices { what: "path_ratio_floor", n, min: 3 });
    }
    let n = n as f64;
    Ok((n - 3.0 + 2.0 * SQRT_2) / (2.0 * n - 2.0))
}

fn low_regime_premise(what: &'static str, n: usize, k: usize) -> Result<()> {
    premise(what, n, k, n >= 2 && k >= 1 && 2 * k <= n, "needs n >= 2 and 1 <= k <= n/2")
}

/// Low-regime Randić bound minus the diameter bound minus the path floor
/// for `R - D`. Positive means `R - D >= sqrt(2) - (n+1)/2` is forced.
pub fn difference_margin_low(n: usize, k: usize) -> Result<f64> {
    low_regime_premise("difference_margin_low", n, k)?;
    let (nf, kf) = (n as f64, k as f64);
    Ok(low_regime_bound(nf, kf) - 3.0 * nf / (kf + 1.0) - SQRT_2 + (nf + 3.0) / 2.0)
}

/// Low-regime Randić bound minus the diameter bound scaled by the path
/// floor for `R / D`.
pub fn ratio_margin_low(n: usize, k: usize) -> Result<f64> {
    low_regime_premise("ratio_margin_low", n, k)?;
    let (nf, kf) = (n as f64, k as f64);
    let ratio = (nf - 3.0 + 2.0 * SQRT_2) / (2.0 * nf - 2.0);
    Ok(low_regime_bound(nf, kf) - (3.0 * nf / (kf + 1.0) - 1.0) * ratio)
}

/// High-regime Randić bound at `p` minus `3n/(k+1) - 1 + sqrt(2) - (n+1)/2`.
pub fn difference_margin_high(n: usize, p: f64, k: usize) -> Result<f64> {
    let q = high_regime_bound(n, p, k)?;
    let (nf, kf) = (n as f64, k as f64);
    Ok(q - (3.0 * nf / (kf + 1.0) - 1.0 + SQRT_2 - (nf + 1.0) / 2.0))
}

/// High-regime Randić bound at `p` minus `(3n/(k+1) - 1)(n-3+2 sqrt(2))/(2n-2)`.
pub fn ratio_margin_high(n: usize, p: f64, k: usize) -> Result<f64> {
    let q = high_regime_bound(n, p, k)?;
    let (nf, kf) = (n as f64, k as f64);
    Ok(q - (3.0 * nf / (kf + 1.0) - 1.0) * (nf - 3.0 + 2.0 * SQRT_2) / (2.0 * nf - 2.0))
}

/// Randić lower bound minus the average-distance upper bound. Positive
/// means every graph with this `(n, k)` has `R >= mu`.
pub fn mean_distance_gap(n: usize, k: usize) -> Result<f64> {
    Ok(randic_lower_bound(n, k)? - kouider_winkler_bound(n, k)?)
}

/// All bound values for one `(n, k)`. Fields whose premise fails are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundProfile {
    pub n: usize,
    pub k: usize,
    pub erdos_diam: Option<f64>,
    pub kw_mu: Option<f64>,
    pub randic_lb: Option<f64>,
    pub p_used: Option<PChoice>,
    pub slope_floor: Option<f64>,
    pub regime: Regime,
}

impl BoundProfile {
    pub fn new(n: usize, k: usize) -> Self {
        let (randic_lb, p_used) = match randic_lower_bound_detail(n, k) {
            Ok((v, p)) => (Some(v), p),
            Err(_) => (None, None),
        };
        Self {
            n,
            k,
            erdos_diam: erdos_diameter_bound(n, k).ok(),
            kw_mu: kouider_winkler_bound(n, k).ok(),
            randic_lb,
            p_used,
            slope_floor: slope_floor(n, k).ok(),
            regime: Regime::of(n, k),
        }
    }
}
