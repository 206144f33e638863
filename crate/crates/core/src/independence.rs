//! Exact independence numbers and the Maxine heuristic.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, Graph, VertexMask};

/// Largest order for the branch-and-bound solver.
pub const ALPHA_MAX_ORDER: usize = 24;
/// Largest order for the exhaustive subset oracle.
pub const BRUTE_FORCE_MAX_ORDER: usize = 20;
/// Largest order for listing every maximum independent set.
pub const ALL_MAX_SETS_MAX_ORDER: usize = 12;
/// Largest order for exploring every Maxine branch.
pub const MAXINE_BRANCH_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{what} limited to {limit} vertices, got {order}")]
pub struct ScaleError {
    pub what: &'static str,
    pub limit: usize,
    pub order: usize,
}

fn check(g: &Graph, what: &'static str, limit: usize) -> Result<(), ScaleError> {
    if g.order() > limit {
        Err(ScaleError {
            what,
            limit,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}

/// Number of cliques in a greedy clique cover of `cand`; an upper bound on
/// the independence number of `g[cand]`.
fn clique_cover_bound(g: &Graph, mut cand: VertexMask) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut common = g.neighbors(v) & cand;
        cand &= !(1u64 << v);
        while common != 0 {
            let u = common.trailing_zeros() as usize;
            common &= g.neighbors(u);
            cand &= !(1u64 << u);
        }
        cliques += 1;
    }
    cliques
}

struct BranchAndBound<'a> {
    g: &'a Graph,
    best: VertexMask,
}

impl BranchAndBound<'_> {
    fn run(&mut self, mut cand: VertexMask, mut chosen: VertexMask) {
        // Vertices of degree at most one in the candidate set can always be
        // taken into some maximum independent set.
        loop {
            let low = bits(cand).find(|&v| self.g.degree_in(v, cand) <= 1);
            match low {
                Some(v) => {
                    chosen |= 1 << v;
                    cand &= !(self.g.neighbors(v) | (1 << v));
                }
                None => break,
            }
        }
        let best = self.best.count_ones() as usize;
        let have = chosen.count_ones() as usize;
        if cand == 0 {
            if have > best {
                self.best = chosen;
            }
            return;
        }
        if have + clique_cover_bound(self.g, cand) <= best {
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| (self.g.degree_in(v, cand), std::cmp::Reverse(v)))
            .unwrap();
        self.run(cand & !(self.g.neighbors(v) | (1 << v)), chosen | (1 << v));
        self.run(cand & !(1 << v), chosen);
    }
}

/// A maximum independent set, sorted.
pub fn maximum_independent_set(g: &Graph) -> Result<Vec<usize>, ScaleError> {
    check(g, "branch-and-bound", ALPHA_MAX_ORDER)?;
    let mut bb = BranchAndBound { g, best: 0 };
    bb.run(g.vertex_mask(), 0);
    Ok(bits(bb.best).collect())
}

/// Exact independence number by branch and bound.
pub fn independence_number(g: &Graph) -> Result<usize, ScaleError> {
    maximum_independent_set(g).map(|s| s.len())
}

/// Exact independence number by checking every vertex subset.
pub fn independence_number_brute_force(g: &Graph) -> Result<usize, ScaleError> {
    check(g, "exhaustive search", BRUTE_FORCE_MAX_ORDER)?;
    Ok((0..=g.vertex_mask())
        .filter(|&s| g.is_independent(s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Every independent set of size `α(g)`, each sorted, in lexicographic order.
pub fn all_maximum_independent_sets(g: &Graph) -> Result<Vec<Vec<usize>>, ScaleError> {
    check(g, "maximum independent set listing", ALL_MAX_SETS_MAX_ORDER)?;
    let sets: Vec<VertexMask> = (0..=g.vertex_mask())
        .filter(|&s| g.is_independent(s))
        .collect();
    let alpha = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    let mut out: Vec<Vec<usize>> = sets
        .into_iter()
        .filter(|s| s.count_ones() == alpha)
        .map(|s| bits(s).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// How Maxine picks among tied maximum-degree vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxineStrategy {
    FirstIndex,
    LastIndex,
    SeededRandom(u64),
}

/// One run of Maxine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxineOutcome {
    /// Deleted vertices, in deletion order.
    pub deletions: Vec<usize>,
    /// The independent set left behind, sorted.
    pub survivors: Vec<usize>,
    pub size: usize,
}

/// Run Maxine, letting `choose` pick an index into the (increasing) list of
/// current maximum-degree vertices.
pub fn maxine_run_with<F>(g: &Graph, mut choose: F) -> MaxineOutcome
where
    F: FnMut(&[usize]) -> usize,
{
    let mut alive = g.vertex_mask();
    let mut deletions = Vec::new();
    loop {
        let top = bits(alive)
            .map(|v| g.degree_in(v, alive))
            .max()
            .unwrap_or(0);
        if top == 0 {
            break;
        }
        let tied: Vec<usize> = bits(alive)
            .filter(|&v| g.degree_in(v, alive) == top)
            .collect();
        let v = tied[choose(&tied).min(tied.len() - 1)];
        alive &= !(1u64 << v);
        deletions.push(v);
    }
    let survivors: Vec<usize> = bits(alive).collect();
    MaxineOutcome {
        deletions,
        size: survivors.len(),
        survivors,
    }
}

pub fn maxine_run(g: &Graph, strategy: MaxineStrategy) -> MaxineOutcome {
    match strategy {
        MaxineStrategy::FirstIndex => maxine_run_with(g, |_| 0),
        MaxineStrategy::LastIndex => maxine_run_with(g, |tied| tied.len() - 1),
        MaxineStrategy::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            maxine_run_with(g, |tied| rng.gen_range(0..tied.len()))
        }
    }
}

/// Every independent-set size Maxine can reach, over all tie-breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxineBranchSummary {
    pub achievable_sizes: BTreeSet<usize>,
    pub min_size: usize,
    pub max_size: usize,
    /// Distinct complete deletion sequences (saturating).
    pub branch_count: u64,
}

/// Explore every choice of maximum-degree vertex at every step. States are
/// memoized on the set of surviving vertices.
pub fn maxine_all_branches(g: &Graph) -> Result<MaxineBranchSummary, ScaleError> {
    check(g, "Maxine branch exploration", MAXINE_BRANCH_MAX_ORDER)?;
    let mut memo: HashMap<VertexMask, (BTreeSet<usize>, u64)> = HashMap::new();
    let (sizes, count) = explore(g, g.vertex_mask(), &mut memo);
    Ok(MaxineBranchSummary {
        min_size: *sizes.first().unwrap(),
        max_size: *sizes.last().unwrap(),
        achievable_sizes: sizes,
        branch_count: count,
    })
}

fn explore(
    g: &Graph,
    alive: VertexMask,
    memo: &mut HashMap<VertexMask, (BTreeSet<usize>, u64)>,
) -> (BTreeSet<usize>, u64) {
    if let Some(hit) = memo.get(&alive) {
        return hit.clone();
    }
    let top = bits(alive)
        .map(|v| g.degree_in(v, alive))
        .max()
        .unwrap_or(0);
    let result = if top == 0 {
        (BTreeSet::from([alive.count_ones() as usize]), 1)
    } else {
        let mut sizes = BTreeSet::new();
        let mut count = 0u64;
        for v in bits(alive).filter(|&v| g.degree_in(v, alive) == top) {
            let (s, c) = explore(g, alive & !(1u64 << v), memo);
            sizes.extend(s);
            count = count.saturating_add(c);
        }
        (sizes, count)
    };
    memo.insert(alive, result.clone());
    result
}
