//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits non-zero if any failed.

use std::f64::consts::SQRT_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use randic_core::bounds::{
    admissible_p, difference_margin_high, difference_margin_low, erdos_diameter_bound, kouider_winkler_bound,
    mean_distance_gap, randic_lower_bound, ratio_margin_high, ratio_margin_low, slope_floor,
};
use randic_core::conjectures::{check_all, is_path, Claim};
use randic_core::enumeration::{gnp, parse_graph6, serialize_graph6};
use randic_core::{enumerate_connected, hunt, CorpusFilter, Graph};

const TOL: f64 = 1e-9;
const N_MAX: usize = 2000;

/// Connected graphs on n unlabeled vertices, n = 1..8 (OEIS A001349).
const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn corpus_counts(corpus: &[Vec<Graph>], elapsed: Duration) -> Outcome {
    let counts: Vec<usize> = corpus.iter().map(Vec::len).collect();
    let ok = counts == CONNECTED_COUNTS && elapsed < Duration::from_secs(300);
    outcome(ok, format!("counts {counts:?} in {:.1}s", elapsed.as_secs_f64()))
}

fn diameter_claims(corpus: &[Vec<Graph>]) -> Outcome {
    let mut worst = f64::INFINITY;
    let mut bad = Vec::new();
    let mut equalities = 0;
    for g in corpus.iter().skip(2).flatten() {
        let path = is_path(g);
        for v in check_all(g, TOL) {
            if v.claim == Claim::MeanDistance {
                continue;
            }
            worst = worst.min(v.slack);
            let tight = v.slack.abs() <= TOL;
            equalities += usize::from(v.is_equality);
            if !v.holds || v.is_equality != path || tight != path {
                bad.push(format!("{} {}", serialize_graph6(g).unwrap(), v.claim));
            }
        }
    }
    // one path per order, two claims each
    let ok = bad.is_empty() && equalities == 2 * 6;
    outcome(ok, format!("min slack {worst:.3e}, {equalities} equalities, {} failures {:?}", bad.len(), bad.first()))
}

fn mean_distance_claim(corpus: &[Vec<Graph>]) -> Outcome {
    let mut worst = f64::INFINITY;
    let mut tight = Vec::new();
    let mut violated = 0;
    for g in corpus.iter().skip(1).flatten() {
        let s = Claim::MeanDistance.slack(g).unwrap();
        worst = worst.min(s);
        violated += usize::from(s < -TOL);
        if s.abs() <= TOL {
            tight.push(g.clone());
        }
    }
    let ok = violated == 0 && tight == vec![Graph::complete(2)];
    outcome(ok, format!("min slack {worst:.3e}, {violated} violations, {} equality graphs", tight.len()))
}

fn bound_consistency(corpus: &[Vec<Graph>]) -> Outcome {
    let (mut diam, mut mean, mut randic) = (f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let mut checked = 0;
    for g in corpus.iter().skip(1).flatten() {
        let (n, k) = (g.order(), g.min_degree());
        let dist = g.all_pairs_distances().unwrap();
        if k >= 2 {
            diam = diam.min(erdos_diameter_bound(n, k).unwrap() - dist.diameter() as f64);
        }
        mean = mean.min(kouider_winkler_bound(n, k).unwrap() - dist.average());
        randic = randic.min(g.randic_index() - randic_lower_bound(n, k).unwrap());
        checked += 1;
    }
    let ok = diam >= -TOL && mean >= -TOL && randic >= -TOL;
    outcome(
        ok,
        format!("{checked} graphs; min margins: diameter {diam:.3e}, mean distance {mean:.3e}, randic {randic:.3e}"),
    )
}

fn slope_grid() -> Outcome {
    let start = Instant::now();
    let mut min = (f64::INFINITY, 0, 0);
    for n in 2..=N_MAX {
        for k in 1..=n / 2 {
            let v = slope_floor(n, k).unwrap();
            if v < min.0 {
                min = (v, n, k);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = min.0 >= -1e-12 && elapsed < Duration::from_secs(10);
    outcome(ok, format!("min {:.3e} at n={} k={} in {:.2}s", min.0, min.1, min.2, elapsed.as_secs_f64()))
}

/// Smallest value of `f` over the high-degree grid and all admissible `p`.
fn high_grid_min(f: fn(usize, f64, usize) -> randic_core::Result<f64>) -> (f64, usize, f64, usize) {
    let mut min = (f64::INFINITY, 0, 0.0, 0);
    for n in 4..=N_MAX {
        for k in n / 2 + 1..n {
            for p in admissible_p(n) {
                let v = f(n, p, k).unwrap();
                if v.is_nan() || v < min.0 {
                    min = (v, n, p, k);
                }
            }
        }
    }
    min
}

fn difference_formulas() -> Outcome {
    let mut low = (f64::INFINITY, 0, 0);
    for n in 10..=N_MAX {
        for k in 5..=n / 2 {
            let v = difference_margin_low(n, k).unwrap();
            if v < low.0 {
                low = (v, n, k);
            }
        }
    }
    let high = high_grid_min(difference_margin_high);
    let ok = low.0 > 0.0 && high.0 >= 0.0;
    outcome(
        ok,
        format!(
            "low min {:.4} at n={} k={}; high min {:.4} at n={} p={} k={}",
            low.0, low.1, low.2, high.0, high.1, high.2, high.3
        ),
    )
}

fn ratio_formulas() -> Outcome {
    let mut low = (f64::INFINITY, 0);
    for n in 15..=N_MAX {
        let v = ratio_margin_low(n, n.div_ceil(5)).unwrap();
        if v < low.0 {
            low = (v, n);
        }
    }
    let high = high_grid_min(ratio_margin_high);
    let ok = low.0 > 0.0 && high.0 >= 0.0;
    outcome(
        ok,
        format!(
            "low min {:.4} at n={}; high min {:.4} at n={} p={} k={}",
            low.0, low.1, high.0, high.1, high.2, high.3
        ),
    )
}

fn mean_distance_formula() -> Outcome {
    let mut min = (f64::INFINITY, 0, 0);
    for n in 15..=N_MAX {
        for k in n.div_ceil(5)..n {
            let v = mean_distance_gap(n, k).unwrap();
            if v.is_nan() || v < min.0 {
                min = (v, n, k);
            }
        }
    }
    outcome(min.0 > 0.0, format!("min {:.4} at n={} k={}", min.0, min.1, min.2))
}

fn closed_forms() -> Outcome {
    let mut worst = 0.0f64;
    for n in 3..=100 {
        let half = n as f64 / 2.0;
        worst = worst
            .max((Graph::path(n).randic_index() - (SQRT_2 + (n as f64 - 3.0) / 2.0)).abs())
            .max((Graph::complete(n).randic_index() - half).abs())
            .max((Graph::cycle(n).unwrap().randic_index() - half).abs());
    }
    outcome(worst <= 1e-12, format!("max deviation {worst:.3e}"))
}

fn codec_round_trip(corpus: &[Vec<Graph>]) -> Outcome {
    let mut failures = 0;
    let mut total = 0;
    let mut check = |g: &Graph| {
        total += 1;
        let text = serialize_graph6(g).unwrap();
        let back = parse_graph6(&text).unwrap();
        if &back != g || serialize_graph6(&back).unwrap() != text {
            failures += 1;
        }
    };
    corpus.iter().flatten().for_each(&mut check);
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09e667);
    for _ in 0..10_000 {
        let n = rng.random_range(1..=62);
        let p = rng.random::<f64>();
        check(&gnp(&mut rng, n, p));
    }
    outcome(failures == 0, format!("{total} graphs, {failures} mismatches"))
}

fn hunter() -> Outcome {
    let small = hunt(6, 1, Claim::DiameterDifference, 1_000, 42).unwrap();
    let large = hunt(20, 4, Claim::MeanDistance, 10_000, 42).unwrap();
    let ok = small.state.best_slack.abs() <= TOL && is_path(&small.best) && large.state.best_slack >= 0.0;
    outcome(
        ok,
        format!(
            "n=6 best slack {:.3e} (path: {}); n=20 best slack {:.4}",
            small.state.best_slack,
            is_path(&small.best),
            large.state.best_slack
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus: Vec<Vec<Graph>> = (1..=8)
        .map(|n| enumerate_connected(&CorpusFilter::connected(n)).unwrap().collect())
        .collect();
    let enum_time = start.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("corpus counts n=1..8", Box::new(|| corpus_counts(&corpus, enum_time))),
        ("diameter inequalities on corpus", Box::new(|| diameter_claims(&corpus))),
        ("mean distance inequality on corpus", Box::new(|| mean_distance_claim(&corpus))),
        ("diameter / mean distance / randic bounds on corpus", Box::new(|| bound_consistency(&corpus))),
        ("slope floor grid", Box::new(slope_grid)),
        ("difference form margins", Box::new(difference_formulas)),
        ("ratio form margins", Box::new(ratio_formulas)),
        ("mean distance gap", Box::new(mean_distance_formula)),
        ("closed forms", Box::new(closed_forms)),
        ("graph6 round trip", Box::new(|| codec_round_trip(&corpus))),
        ("hunter sanity", Box::new(hunter)),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        failed += usize::from(!o.passed);
        println!(
            "[{}] criterion {:>2}: {name}: {} ({:.2}s)",
            if o.passed { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
