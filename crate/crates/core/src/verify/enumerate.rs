//! Non-isomorphic graphs of small order, generated by vertex augmentation.
//!
//! Every graph on `n` vertices is some graph on `n - 1` vertices plus one
//! new vertex, so extending each `(n-1)`-vertex representative by all
//! `2^(n-1)` neighbourhoods and deduplicating by canonical form yields every
//! isomorphism class exactly once. Classes are emitted as canonical
//! representatives sorted by canonical key.

use std::collections::BTreeSet;
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::par;

use super::VerifyError;

/// Largest order [`enumerate_graphs`] will produce.
pub const ENUMERATION_MAX_ORDER: usize = 8;

fn augment(prev: &[Graph]) -> Vec<Graph> {
    let forms: Vec<Vec<CanonicalForm>> = par::map(prev, |g| {
        let n = g.order();
        let edges = g.edges();
        (0u64..1 << n)
            .map(|nbrs| {
                let mut e = edges.clone();
                e.extend(crate::graph::bits(nbrs).map(|u| (u, n)));
                let h = Graph::from_edges(n + 1, &e).expect("in range");
                canonical_form(&h).expect("within canonical bound")
            })
            .collect()
    });
    let unique: BTreeSet<CanonicalForm> = forms.into_iter().flatten().collect();
    unique.into_iter().map(|f| f.graph()).collect()
}

fn cache() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(vec![Arc::new(vec![Graph::empty(1).unwrap()])]))
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Arc<Vec<Graph>>, VerifyError> {
    if !(1..=ENUMERATION_MAX_ORDER).contains(&n) {
        return Err(VerifyError::OrderOutOfRange {
            n,
            max: ENUMERATION_MAX_ORDER,
        });
    }
    let mut levels = cache().lock().unwrap();
    while levels.len() < n {
        let next = augment(levels.last().unwrap());
        levels.push(Arc::new(next));
    }
    Ok(Arc::clone(&levels[n - 1]))
}

/// Representatives for every order `1..=n_max`, smallest order first.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Arc<Vec<Graph>>>, VerifyError> {
    if n_max == 0 {
        return Err(VerifyError::OrderOutOfRange {
            n: 0,
            max: ENUMERATION_MAX_ORDER,
        });
    }
    (1..=n_max).map(enumerate_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let g4 = enumerate_graphs(4).unwrap();
        for (i, a) in g4.iter().enumerate() {
            for b in &g4[i + 1..] {
                assert!(!is_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(9).is_err());
    }
}
