//! Canonical forms and isomorphism testing for small graphs.
//!
//! The canonical key is the lexicographically smallest upper-triangle bit
//! string (graph6 column order) over all vertex orderings that list the
//! vertices by their colour-refinement class. Colour refinement is
//! labeling-independent, so the restriction keeps the key exact while
//! cutting the permutation search down to orderings within each class.
//!
//! [`is_isomorphic`] is a separate backtracking matcher that does not use
//! canonical forms at all; tests cross-check the two.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::{bits, Graph, VertexMask};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical forms are limited to {CANON_MAX_ORDER} vertices, got {0}")]
pub struct CanonError(pub usize);

/// Labeling-invariant key: equal iff the graphs are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative as a labeled graph.
    pub fn graph(&self) -> Graph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut adj = vec![0u64; n];
        let mut idx = 0;
        for k in 1..n {
            for i in 0..k {
                if self.bits >> (total - 1 - idx) & 1 == 1 {
                    adj[i] |= 1 << k;
                    adj[k] |= 1 << i;
                }
                idx += 1;
            }
        }
        Graph::from_rows(adj)
    }
}

/// Colour-refinement classes, numbered by a labeling-independent rank.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(g.neighbors(v)).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colour[v] = distinct.binary_search(&sigs[v]).unwrap();
        }
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Colour class required at each position.
    slot_class: Vec<usize>,
    colour: Vec<usize>,
    order: Vec<usize>,
    cols: Vec<u64>,
    best_cols: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, k: usize, v: usize) -> u64 {
        let mut col = 0u64;
        for (i, &u) in self.order[..k].iter().enumerate() {
            if self.g.has_edge(u, v) {
                col |= 1 << (k - 1 - i);
            }
        }
        col
    }

    fn dfs(&mut self, k: usize, used: VertexMask) {
        if k == self.n {
            let better = match &self.best_cols {
                None => true,
                Some(best) => self.cols < *best,
            };
            if better {
                self.best_cols = Some(self.cols.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..self.n {
            if used & (1 << v) != 0 || self.colour[v] != self.slot_class[k] {
                continue;
            }
            let col = self.column(k, v);
            self.cols[k] = col;
            if let Some(best) = &self.best_cols {
                if self.cols[..=k].cmp(&best[..=k]) == Ordering::Greater {
                    continue;
                }
            }
            self.order[k] = v;
            self.dfs(k + 1, used | (1 << v));
        }
    }
}

/// Canonical ordering: `result[i]` is the vertex placed at position `i`.
pub fn canonical_ordering(g: &Graph) -> Result<Vec<usize>, CanonError> {
    Ok(search(g)?.0)
}

fn search(g: &Graph) -> Result<(Vec<usize>, Vec<u64>), CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError(n));
    }
    let colour = refine(g);
    let mut slot_class = colour.clone();
    slot_class.sort_unstable();
    let mut s = Search {
        g,
        n,
        slot_class,
        colour,
        order: vec![0; n],
        cols: vec![0; n],
        best_cols: None,
        best_order: Vec::new(),
    };
    s.dfs(0, 0);
    Ok((s.best_order, s.best_cols.unwrap_or_default()))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    let (_, cols) = search(g)?;
    let key = cols
        .iter()
        .enumerate()
        .fold(0u64, |acc, (k, &c)| (acc << k) | c);
    Ok(CanonicalForm {
        n: g.order() as u8,
        bits: key,
    })
}

/// Canonical representative graph of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    canonical_form(g).map(|c| c.graph())
}

/// Backtracking isomorphism test. Works at any order.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// An adjacency-preserving bijection `map[v_g] = v_h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    // Highest degree first tends to constrain the search early.
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut map = vec![usize::MAX; n];
    if extend(g, h, &order, 0, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, order: &[usize], k: usize, map: &mut [usize], used: u64) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in h.vertices() {
        if used & (1 << w) != 0 || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..k]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            if extend(g, h, order, k + 1, map, used | (1 << w)) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}
