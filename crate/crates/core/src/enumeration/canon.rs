//! Exhaustive canonical labeling for small graphs.
//!
//! Vertices are first split into cells by an isomorphism-invariant label
//! (degree, then the sorted degrees of the neighbors). The key is the
//! smallest upper-triangle bit string, read in graph6 order, over all
//! labelings that place the cells in ascending label order. Any labeling
//! restricted this way maps onto the corresponding one for an isomorphic
//! graph, so equal keys coincide exactly with isomorphism.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_key`]. The key for `n = 10` is 45 bits.
pub const MAX_CANON_ORDER: usize = 10;

/// Upper-triangle bit string of the canonically labeled graph, first pair
/// `(0, 1)` in the most significant position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    bits: u64,
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Rebuilds the canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = pair_count(n);
        let mut g = Graph::empty(n);
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - pos) & 1 == 1 {
                    g.set_edge(i, j, true);
                }
                pos += 1;
            }
        }
        g
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    /// cell index required at each position
    slot_cell: Vec<usize>,
    cell_of: Vec<usize>,
    labeling: Vec<usize>,
    used: u64,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, prefix: u64) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|(best, _)| prefix < *best) {
                self.best = Some((prefix, self.labeling.clone()));
            }
            return;
        }
        let shift = self.total - pair_count(pos + 1);
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.cell_of[v] != self.slot_cell[pos] {
                continue;
            }
            let mut next = prefix;
            for &u in &self.labeling[..pos] {
                next = next << 1 | u64::from(self.g.has_edge(u, v));
            }
            if let Some((best, _)) = &self.best {
                if next > best >> shift {
                    continue;
                }
            }
            self.labeling.push(v);
            self.used |= 1 << v;
            self.run(pos + 1, next);
            self.used &= !(1 << v);
            self.labeling.pop();
        }
    }
}

/// Computes the canonical key and a relabeling `perm` with
/// `g.relabel(&perm)` equal to `key.to_graph()`.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::CanonicalTooLarge { n, max: MAX_CANON_ORDER });
    }
    let labels: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut distinct = labels.clone();
    distinct.sort();
    distinct.dedup();
    let cell_of: Vec<usize> = labels.iter().map(|l| distinct.binary_search(l).expect("present")).collect();
    let mut slot_cell = cell_of.clone();
    slot_cell.sort_unstable();

    let mut search = Search {
        g,
        n,
        total: pair_count(n),
        slot_cell,
        cell_of,
        labeling: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0);
    let (bits, labeling) = search.best.expect("at least one labeling exists");
    let mut perm = vec![0; n];
    for (pos, &v) in labeling.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalKey { n: n as u8, bits }, perm))
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_form(g).map(|(k, _)| k)
}
