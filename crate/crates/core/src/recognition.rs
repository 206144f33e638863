//! Recognizers for the strong Havel-Hakimi class and its neighbours.
//!
//! Two independent tests decide membership in the class:
//! [`is_in_s_definitional`] walks every induced subgraph and checks every
//! maximum-degree vertex, while [`find_forbidden`] scans for the nine
//! minimal forbidden induced subgraphs of [`FORBIDDEN_S`].

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, is_isomorphic, CanonicalForm};
use crate::catalog::{CatalogId, FORBIDDEN_S};
use crate::graph::{bits, Graph, VertexMask};

/// Largest order accepted by [`is_in_s_definitional`] (it visits all 2^n
/// vertex subsets).
pub const DEFINITIONAL_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("definitional oracle limited to {DEFINITIONAL_MAX_ORDER} vertices, got {0}")]
    TooLarge(usize),
}

/// An induced copy of a forbidden graph inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbWitness {
    pub forbidden: CatalogId,
    /// Host vertices, increasing.
    pub vertices: Vec<usize>,
}

/// Five distinct vertices with edges `vw`, `ux`, `uy` and non-edges `uv`,
/// `wx`, `wy`. This is the configuration excluded from matrogenic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConfigWitness {
    pub v: usize,
    pub w: usize,
    pub u: usize,
    pub x: usize,
    pub y: usize,
}

/// Subsets of `0..n` with exactly `k` elements, in increasing mask order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexMask> {
    let limit = 1u128 << n.min(64);
    let mut next: Option<u128> = (k <= n && n <= 64).then(|| (1u128 << k) - 1);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < limit).then_some(succ)
        };
        Some(cur as VertexMask)
    })
}

/// Checks the Havel-Hakimi property for `v` inside the subgraph induced on
/// `within` (which must contain `v`).
pub fn has_hh_property_within(g: &Graph, within: VertexMask, v: usize) -> bool {
    let dv = g.degree_in(v, within);
    if bits(within).any(|u| g.degree_in(u, within) > dv) {
        return false;
    }
    let nbrs = g.neighbors(v) & within;
    let others = within & !nbrs & !(1u64 << v);
    let min_nbr = bits(nbrs).map(|u| g.degree_in(u, within)).min();
    let max_other = bits(others).map(|u| g.degree_in(u, within)).max();
    match (min_nbr, max_other) {
        (Some(lo), Some(hi)) => lo >= hi,
        _ => true,
    }
}

/// `v` has maximum degree and no neighbour of `v` has smaller degree than a
/// non-neighbour.
pub fn has_hh_property(g: &Graph, v: usize) -> Result<bool, RecognitionError> {
    if v >= g.order() {
        return Err(RecognitionError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(has_hh_property_within(g, g.vertex_mask(), v))
}

/// Some induced subgraph `g[J]` with a maximum-degree vertex lacking the
/// Havel-Hakimi property, as `(J, v)`. Subsets are visited in increasing
/// mask order, vertices in increasing order.
pub fn definitional_witness(g: &Graph) -> Result<Option<(VertexMask, usize)>, RecognitionError> {
    let n = g.order();
    if n > DEFINITIONAL_MAX_ORDER {
        return Err(RecognitionError::TooLarge(n));
    }
    for set in 1..=g.vertex_mask() {
        let deg: Vec<usize> = bits(set).map(|u| g.degree_in(u, set)).collect();
        let top = *deg.iter().max().unwrap();
        for (i, u) in bits(set).enumerate() {
            if deg[i] == top && !has_hh_property_within(g, set, u) {
                return Ok(Some((set, u)));
            }
        }
    }
    Ok(None)
}

/// Membership in the class by its definition: every maximum-degree vertex
/// of every induced subgraph has the Havel-Hakimi property.
pub fn is_in_s_definitional(g: &Graph) -> Result<bool, RecognitionError> {
    Ok(definitional_witness(g)?.is_none())
}

/// Vertices of some induced copy of `h` in `g`, searching subsets in
/// increasing mask order.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.order();
    let m = h.size();
    k_subsets(g.order(), k)
        .find(|&set| {
            let edges: usize = bits(set).map(|u| g.degree_in(u, set)).sum::<usize>() / 2;
            edges == m && is_isomorphic(&g.induced_by_mask(set), h)
        })
        .map(|set| bits(set).collect())
}

fn forbidden_forms() -> &'static HashMap<CanonicalForm, CatalogId> {
    static FORMS: OnceLock<HashMap<CanonicalForm, CatalogId>> = OnceLock::new();
    FORMS.get_or_init(|| {
        FORBIDDEN_S
            .iter()
            .map(|&id| {
                let g = id.graph().expect("catalog");
                (canonical_form(&g).expect("small"), id)
            })
            .collect()
    })
}

/// First induced member of [`FORBIDDEN_S`]: 5-vertex subsets are scanned
/// before 6-vertex ones, each in increasing mask order.
pub fn find_forbidden(g: &Graph) -> Option<ForbWitness> {
    let forms = forbidden_forms();
    for k in [5, 6] {
        for set in k_subsets(g.order(), k) {
            let edges: usize = bits(set).map(|u| g.degree_in(u, set)).sum::<usize>() / 2;
            // Forbidden graphs have between 4 and 8 edges.
            if !(4..=8).contains(&edges) {
                continue;
            }
            let sub = g.induced_by_mask(set);
            let form = canonical_form(&sub).expect("at most six vertices");
            if let Some(&forbidden) = forms.get(&form) {
                return Some(ForbWitness {
                    forbidden,
                    vertices: bits(set).collect(),
                });
            }
        }
    }
    None
}

pub fn is_in_s_forb(g: &Graph) -> bool {
    find_forbidden(g).is_none()
}

/// First configuration in lexicographic `(v, w, u, x, y)` order with `x < y`.
pub fn find_matrogenic_config(g: &Graph) -> Option<ConfigWitness> {
    for v in g.vertices() {
        for w in bits(g.neighbors(v)) {
            let far = g.vertex_mask() & !g.neighbors(v) & !(1u64 << v) & !(1u64 << w);
            for u in bits(far) {
                let cand = g.neighbors(u) & !g.neighbors(w) & !(1u64 << w);
                if cand.count_ones() >= 2 {
                    let mut it = bits(cand);
                    let x = it.next().unwrap();
                    let y = it.next().unwrap();
                    return Some(ConfigWitness { v, w, u, x, y });
                }
            }
        }
    }
    None
}

pub fn is_matrogenic_config_free(g: &Graph) -> bool {
    find_matrogenic_config(g).is_none()
}

/// Kind of obstruction to being a threshold graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThresholdObstruction {
    TwoK2,
    C4,
    P4,
}

/// First induced `2K2`, `C4` or `P4`, in increasing mask order.
pub fn find_threshold_obstruction(g: &Graph) -> Option<(ThresholdObstruction, Vec<usize>)> {
    k_subsets(g.order(), 4).find_map(|set| {
        let mut deg: Vec<usize> = bits(set).map(|u| g.degree_in(u, set)).collect();
        deg.sort_unstable();
        let kind = match deg.as_slice() {
            [1, 1, 1, 1] => ThresholdObstruction::TwoK2,
            [2, 2, 2, 2] => ThresholdObstruction::C4,
            [1, 1, 2, 2] => ThresholdObstruction::P4,
            _ => return None,
        };
        Some((kind, bits(set).collect()))
    })
}

/// No induced `2K2`, `C4` or `P4`.
pub fn is_threshold(g: &Graph) -> bool {
    find_threshold_obstruction(g).is_none()
}

/// `v` lies on an induced 4-cycle.
pub fn in_induced_c4(g: &Graph, v: usize) -> bool {
    let nv = g.neighbors(v);
    let far = g.vertex_mask() & !nv & !(1u64 << v);
    bits(nv).any(|w| {
        bits(nv & !g.neighbors(w) & !(1u64 << w))
            .any(|x| far & g.neighbors(w) & g.neighbors(x) != 0)
    })
}

/// `v` is the middle vertex of an induced `P5` `a-w-v-x-b`.
pub fn is_center_of_induced_p5(g: &Graph, v: usize) -> bool {
    let nv = g.neighbors(v);
    let far = g.vertex_mask() & !nv & !(1u64 << v);
    bits(nv).any(|w| {
        bits(nv & !g.neighbors(w) & !(1u64 << w)).any(|x| {
            let ends_a = far & g.neighbors(w) & !g.neighbors(x);
            let ends_b = far & g.neighbors(x) & !g.neighbors(w);
            bits(ends_a).any(|a| ends_b & !g.neighbors(a) != 0)
        })
    })
}
