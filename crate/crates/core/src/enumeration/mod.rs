//! Corpora of small graphs: exhaustive isomorph-free generation, graph6 /
//! sparse6 interchange for externally generated corpora, and seeded random
//! sampling under a minimum-degree constraint.

mod canon;
mod graph6;
mod sample;

use std::collections::HashSet;

pub use canon::{canonical_form, canonical_key, CanonicalKey, MAX_CANON_ORDER};
pub use graph6::{
    parse_graph6, parse_line, parse_sparse6, read_graphs, serialize_graph6, InputLine, GRAPH6_HEADER,
    MAX_SHORT_ORDER, SPARSE6_HEADER,
};
pub use sample::{gnp, sample_min_degree, sample_min_degree_with, DEFAULT_MAX_ATTEMPTS, RNG_ALGORITHM};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the internal generator produces.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Which graphs of order `n` a corpus keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusFilter {
    pub n: usize,
    pub min_degree_at_least: Option<usize>,
    pub connected_only: bool,
}

impl CorpusFilter {
    /// All connected graphs of order `n`.
    pub fn connected(n: usize) -> Self {
        Self { n, min_degree_at_least: None, connected_only: true }
    }

    pub fn with_min_degree(mut self, delta: usize) -> Self {
        self.min_degree_at_least = Some(delta);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidFilter("n must be at least 1".into()));
        }
        if let Some(d) = self.min_degree_at_least {
            if d > self.n - 1 {
                return Err(Error::InvalidFilter(format!(
                    "min degree {d} exceeds n - 1 = {}",
                    self.n - 1
                )));
            }
        }
        Ok(())
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() == self.n
            && self.min_degree_at_least.is_none_or(|d| g.min_degree() >= d)
            && (!self.connected_only || g.is_connected().unwrap_or(false))
    }
}

/// Every canonical graph on `n` vertices obtained by attaching a new vertex
/// to each parent in every allowed way, deduplicated by canonical key.
fn extend_level(parents: &[Graph], connected_only: bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for parent in parents {
        for g in children(parent, connected_only, 0) {
            let (key, perm) = canonical_form(&g).expect("order within canonical limit");
            if seen.insert(key) {
                out.push(g.relabel(&perm));
            }
        }
    }
    out
}

/// `parent` plus a vertex joined to each neighborhood subset with at least
/// `min_new_degree` members (and at least one when connectivity is required).
fn children(parent: &Graph, connected_only: bool, min_new_degree: usize) -> impl Iterator<Item = Graph> + '_ {
    let m = parent.order();
    let first = u64::from(connected_only && m > 0);
    (first..1u64 << m).filter(move |s| s.count_ones() as usize >= min_new_degree).map(move |subset| {
        let mut g = Graph::empty(m + 1);
        for (u, v) in parent.edges() {
            g.set_edge(u, v, true);
        }
        for u in 0..m {
            if subset >> u & 1 == 1 {
                g.set_edge(u, m, true);
            }
        }
        g
    })
}

/// Streams one representative per isomorphism class of graphs on
/// `filter.n` vertices that pass the filter.
///
/// Every graph on `n` vertices arises from some graph on `n - 1` vertices
/// by adding a vertex, and every connected graph has a non-cut vertex, so
/// growing complete lower levels one vertex at a time reaches every class.
/// Emitted graphs are canonically labeled; the order is deterministic.
pub fn enumerate_connected(filter: &CorpusFilter) -> Result<Corpus> {
    filter.validate()?;
    if filter.n > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationTooLarge { n: filter.n, max: MAX_ENUMERATION_ORDER });
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 2..filter.n {
        level = extend_level(&level, filter.connected_only);
    }
    Ok(Corpus {
        filter: *filter,
        parents: if filter.n == 1 { Vec::new() } else { level },
        parent: 0,
        pending: Vec::new(),
        seen: HashSet::new(),
        single: filter.n == 1,
    })
}

/// Lazy stream over the top level of an enumeration.
pub struct Corpus {
    filter: CorpusFilter,
    parents: Vec<Graph>,
    parent: usize,
    pending: Vec<Graph>,
    seen: HashSet<CanonicalKey>,
    single: bool,
}

impl Corpus {
    pub fn filter(&self) -> &CorpusFilter {
        &self.filter
    }
}

impl Iterator for Corpus {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single {
            self.single = false;
            let g = Graph::empty(1);
            return self.filter.accepts(&g).then_some(g);
        }
        let delta = self.filter.min_degree_at_least.unwrap_or(0);
        loop {
            if let Some(g) = self.pending.pop() {
                return Some(g);
            }
            let parent = self.parents.get(self.parent)?;
            self.parent += 1;
            // the new vertex raises each degree by at most one
            if parent.min_degree() + 1 < delta {
                continue;
            }
            let mut batch = Vec::new();
            for g in children(parent, self.filter.connected_only, delta) {
                if !self.filter.accepts(&g) {
                    continue;
                }
                let (key, perm) = canonical_form(&g).expect("order within canonical limit");
                if self.seen.insert(key) {
                    batch.push(g.relabel(&perm));
                }
            }
            batch.reverse();
            self.pending = batch;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(filter: CorpusFilter) -> usize {
        enumerate_connected(&filter).unwrap().count()
    }

    #[test]
    fn connected_counts_small() {
        // connected graphs on n vertices: 1, 1, 2, 6, 21, 112
        for (n, want) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            assert_eq!(count(CorpusFilter::connected(n)), want, "n={n}");
        }
    }

    #[test]
    fn all_graph_counts_small() {
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let f = CorpusFilter { n, min_degree_at_least: None, connected_only: false };
            assert_eq!(count(f), want, "n={n}");
        }
    }

    #[test]
    fn min_degree_filter() {
        let k6: Vec<_> = enumerate_connected(&CorpusFilter::connected(6).with_min_degree(5)).unwrap().collect();
        assert_eq!(k6, vec![Graph::complete(6)]);
        let all = enumerate_connected(&CorpusFilter::connected(6)).unwrap();
        let brute = all.filter(|g| g.min_degree() >= 3).count();
        assert_eq!(count(CorpusFilter::connected(6).with_min_degree(3)), brute);
    }

    #[test]
    fn emitted_graphs_are_distinct_and_connected() {
        let mut keys = HashSet::new();
        for g in enumerate_connected(&CorpusFilter::connected(6)).unwrap() {
            assert!(g.is_connected().unwrap());
            assert!(keys.insert(canonical_key(&g).unwrap()));
            assert_eq!(canonical_key(&g).unwrap().to_graph(), g);
        }
    }

    #[test]
    fn three_vertex_classes() {
        let got: Vec<_> = enumerate_connected(&CorpusFilter::connected(3)).unwrap().collect();
        assert_eq!(got.len(), 2);
        assert!(got.iter().any(|g| g.size() == 2));
        assert!(got.iter().any(|g| g.size() == 3));
    }

    #[test]
    fn filter_errors() {
        assert!(matches!(
            enumerate_connected(&CorpusFilter::connected(9)),
            Err(Error::EnumerationTooLarge { n: 9, max: 8 })
        ));
        assert!(enumerate_connected(&CorpusFilter::connected(0)).is_err());
        assert!(enumerate_connected(&CorpusFilter::connected(4).with_min_degree(4)).is_err());
        assert_eq!(count(CorpusFilter::connected(1)), 1);
        assert_eq!(count(CorpusFilter::connected(1).with_min_degree(0)), 1);
    }
}
