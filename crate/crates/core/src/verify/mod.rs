//! Exhaustive checks of the class characterization and the residue
//! theorems over every graph up to a given order.
//!
//! Each check walks the enumerated graphs of orders `1..=n_max`, evaluates
//! a per-graph predicate (in parallel when the `parallel` feature is on)
//! and collects the failures into a [`TheoremReport`]. Reports are
//! deterministic: violations are sorted by graph6 string and message.

mod enumerate;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use enumerate::{enumerate_graphs, enumerate_up_to, ENUMERATION_MAX_ORDER};

use crate::canon::{canonical_form, CanonicalForm};
use crate::catalog::{CatalogId, FORBIDDEN_S};
use crate::degseq::graph_residue;
use crate::graph::{bits, Graph};
use crate::graph6::emit_graph6;
use crate::independence::{all_maximum_independent_sets, independence_number, maxine_all_branches};
use crate::par;
use crate::recognition::{
    contains_induced, find_forbidden, find_matrogenic_config, in_induced_c4,
    is_center_of_induced_p5, is_in_s_definitional, is_threshold,
};

/// Full Maxine branch exploration is applied up to this order in the
/// residue-bound check.
pub const BRANCHING_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("order {n} outside the supported range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    ForbEquivalence,
    MinimalForbidden,
    ResidueBounds,
    REqualsAlphaS,
    LemmaC4P5,
    ClassChain,
    MaxineC4P5Free,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::ForbEquivalence,
        TheoremId::MinimalForbidden,
        TheoremId::ResidueBounds,
        TheoremId::REqualsAlphaS,
        TheoremId::LemmaC4P5,
        TheoremId::ClassChain,
        TheoremId::MaxineC4P5Free,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ForbEquivalence => "forb-equivalence",
            TheoremId::MinimalForbidden => "minimal-forbidden",
            TheoremId::ResidueBounds => "residue-bounds",
            TheoremId::REqualsAlphaS => "r-equals-alpha-S",
            TheoremId::LemmaC4P5 => "lemma-c4-p5",
            TheoremId::ClassChain => "class-chain",
            TheoremId::MaxineC4P5Free => "maxine-c4-p5-free",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub message: String,
}

/// Graphs checked at one order, and how many met the theorem's hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCount {
    pub n: usize,
    pub graphs: usize,
    pub hypothesis_met: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub n_max: usize,
    pub graphs_checked: usize,
    pub counts: Vec<OrderCount>,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl TheoremReport {
    fn new(
        theorem_id: TheoremId,
        n_max: usize,
        counts: Vec<OrderCount>,
        mut violations: Vec<Violation>,
    ) -> Self {
        violations.sort();
        TheoremReport {
            theorem_id,
            n_max,
            graphs_checked: counts.iter().map(|c| c.graphs).sum(),
            counts,
            passed: violations.is_empty(),
            violations,
        }
    }
}

/// Result of checking one graph.
#[derive(Default)]
struct Check {
    hypothesis_met: bool,
    failures: Vec<String>,
}

impl Check {
    fn hypothesis(met: bool) -> Self {
        Check {
            hypothesis_met: met,
            failures: Vec::new(),
        }
    }

    fn fail_unless(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

fn sweep<F>(theorem: TheoremId, n_max: usize, check: F) -> Result<TheoremReport, VerifyError>
where
    F: Fn(&Graph) -> Check + Sync + Send,
{
    let levels = enumerate_up_to(n_max)?;
    let mut counts = Vec::new();
    let mut violations = Vec::new();
    for (i, graphs) in levels.iter().enumerate() {
        let results = par::map(graphs.as_slice(), |g| (emit_graph6(g), check(g)));
        counts.push(OrderCount {
            n: i + 1,
            graphs: graphs.len(),
            hypothesis_met: results.iter().filter(|(_, c)| c.hypothesis_met).count(),
        });
        for (graph6, c) in results {
            violations.extend(c.failures.into_iter().map(|message| Violation {
                graph6: graph6.clone(),
                message,
            }));
        }
    }
    Ok(TheoremReport::new(theorem, n_max, counts, violations))
}

/// The definitional oracle and the forbidden-subgraph scan agree.
pub fn verify_forb_equivalence(n_max: usize) -> Result<TheoremReport, VerifyError> {
    sweep(TheoremId::ForbEquivalence, n_max, |g| {
        let by_definition = is_in_s_definitional(g).expect("enumerated graphs are small");
        let witness = find_forbidden(g);
        let mut c = Check::hypothesis(by_definition);
        c.fail_unless(by_definition == witness.is_none(), || match &witness {
            Some(w) => format!(
                "definitional oracle accepts but {} is induced on {:?}",
                w.forbidden, w.vertices
            ),
            None => "definitional oracle rejects but no forbidden subgraph found".into(),
        });
        c
    })
}

fn is_minimal_forbidden(g: &Graph) -> bool {
    !is_in_s_definitional(g).expect("small")
        && g.vertices()
            .all(|v| is_in_s_definitional(&g.remove_vertex(v).unwrap()).expect("small"))
}

/// Graphs outside the class whose one-vertex-deleted subgraphs are all
/// inside it, up to isomorphism, in enumeration order.
pub fn minimal_forbidden(n_max: usize) -> Result<Vec<Graph>, VerifyError> {
    let levels = enumerate_up_to(n_max)?;
    Ok(levels
        .iter()
        .flat_map(|graphs| {
            par::filter_map(graphs.as_slice(), |g| {
                is_minimal_forbidden(g).then(|| g.clone())
            })
        })
        .collect())
}

/// The minimal forbidden graphs found by enumeration are exactly the
/// catalog members of order at most `n_max`, and each catalog member is
/// itself minimal.
pub fn verify_minimal_forbidden(n_max: usize) -> Result<TheoremReport, VerifyError> {
    let levels = enumerate_up_to(n_max)?;
    let found = minimal_forbidden(n_max)?;
    let found_forms: BTreeSet<CanonicalForm> =
        found.iter().map(|g| canonical_form(g).unwrap()).collect();
    let mut violations = Vec::new();
    let mut expected = BTreeSet::new();
    for id in FORBIDDEN_S {
        let g = id.graph().unwrap();
        if !is_minimal_forbidden(&g) {
            violations.push(Violation {
                graph6: emit_graph6(&g),
                message: format!("catalog graph {id} is not a minimal forbidden graph"),
            });
        }
        if g.order() <= n_max {
            let form = canonical_form(&g).unwrap();
            expected.insert(form);
            if !found_forms.contains(&form) {
                violations.push(Violation {
                    graph6: emit_graph6(&g),
                    message: format!("catalog graph {id} not found by enumeration"),
                });
            }
        }
    }
    for g in &found {
        if !expected.contains(&canonical_form(g).unwrap()) {
            violations.push(Violation {
                graph6: emit_graph6(g),
                message: "minimal forbidden graph missing from the catalog".into(),
            });
        }
    }
    let counts = levels
        .iter()
        .enumerate()
        .map(|(i, graphs)| OrderCount {
            n: i + 1,
            graphs: graphs.len(),
            hypothesis_met: found.iter().filter(|g| g.order() == i + 1).count(),
        })
        .collect();
    Ok(TheoremReport::new(
        TheoremId::MinimalForbidden,
        n_max,
        counts,
        violations,
    ))
}

/// `R <= alpha` everywhere, and `R <= M <= alpha` for every reachable Maxine
/// size on graphs of order at most [`BRANCHING_MAX_ORDER`].
pub fn verify_residue_bounds(n_max: usize) -> Result<TheoremReport, VerifyError> {
    sweep(TheoremId::ResidueBounds, n_max, |g| {
        let r = graph_residue(g);
        let alpha = independence_number(g).expect("small");
        let branching = g.order() <= BRANCHING_MAX_ORDER;
        let mut c = Check::hypothesis(branching);
        c.fail_unless(r <= alpha, || format!("residue {r} exceeds alpha {alpha}"));
        if branching {
            let s = maxine_all_branches(g).expect("small");
            c.fail_unless(r <= s.min_size && s.max_size <= alpha, || {
                format!(
                    "Maxine sizes {:?} not within [residue {r}, alpha {alpha}]",
                    s.achievable_sizes
                )
            });
        }
        c
    })
}

/// For graphs passing the forbidden-subgraph scan: `R = alpha`, and every
/// Maxine branch ends with exactly `R` vertices.
pub fn verify_r_equals_alpha_on_s(n_max: usize) -> Result<TheoremReport, VerifyError> {
    sweep(TheoremId::REqualsAlphaS, n_max, |g| {
        let in_s = find_forbidden(g).is_none();
        let mut c = Check::hypothesis(in_s);
        if in_s {
            let r = graph_residue(g);
            let alpha = independence_number(g).expect("small");
            c.fail_unless(r == alpha, || {
                format!("residue {r} differs from alpha {alpha}")
            });
            let s = maxine_all_branches(g).expect("small");
            c.fail_unless(s.achievable_sizes == BTreeSet::from([r]), || {
                format!(
                    "Maxine sizes {:?} differ from residue {r}",
                    s.achievable_sizes
                )
            });
        }
        c
    })
}

/// A maximum-degree vertex lying in every maximum independent set lies in
/// an induced `C4` or is the centre of an induced `P5`.
pub fn verify_lemma_c4_p5(n_max: usize) -> Result<TheoremReport, VerifyError> {
    sweep(TheoremId::LemmaC4P5, n_max, |g| {
        let mut c = Check::default();
        if g.is_edgeless() {
            return c;
        }
        let sets = all_maximum_independent_sets(g).expect("small");
        let in_all = sets
            .iter()
            .map(|s| crate::graph::mask_of(s))
            .fold(g.vertex_mask(), |acc, m| acc & m);
        let top = g.max_degree();
        for v in bits(in_all).filter(|&v| g.degree(v) == top) {
            c.hypothesis_met = true;
            c.fail_unless(in_induced_c4(g, v) || is_center_of_induced_p5(g, v), || {
                format!("vertex {v} is in every maximum independent set but in no induced C4 and centres no induced P5")
            });
        }
        c
    })
}

/// threshold => matrogenic-configuration-free => in the class.
pub fn verify_class_chain(n_max: usize) -> Result<TheoremReport, VerifyError> {
    sweep(TheoremId::ClassChain, n_max, |g| {
        let threshold = is_threshold(g);
        let config = find_matrogenic_config(g);
        let forb = find_forbidden(g);
        let mut c = Check::hypothesis(config.is_none());
        c.fail_unless(!threshold || config.is_none(), || {
            format!(
                "threshold graph contains the configuration {:?}",
                config.unwrap()
            )
        });
        c.fail_unless(config.is_some() || forb.is_none(), || {
            let w = forb.as_ref().unwrap();
            format!(
                "configuration-free graph contains {} on {:?}",
                w.forbidden, w.vertices
            )
        });
        c
    })
}

/// Maxine always reaches `alpha` on graphs with no induced `C4` or `P5`.
pub fn verify_maxine_c4_p5_free(n_max: usize) -> Result<TheoremReport, VerifyError> {
    let c4 = CatalogId::Cycle(4).graph().unwrap();
    let p5 = CatalogId::Path(5).graph().unwrap();
    sweep(TheoremId::MaxineC4P5Free, n_max, move |g| {
        let free = contains_induced(g, &c4).is_none() && contains_induced(g, &p5).is_none();
        let mut c = Check::hypothesis(free);
        if free {
            let alpha = independence_number(g).expect("small");
            let s = maxine_all_branches(g).expect("small");
            c.fail_unless(s.min_size == alpha, || {
                format!(
                    "Maxine sizes {:?} fall short of alpha {alpha}",
                    s.achievable_sizes
                )
            });
        }
        c
    })
}

pub fn verify(theorem: TheoremId, n_max: usize) -> Result<TheoremReport, VerifyError> {
    match theorem {
        TheoremId::ForbEquivalence => verify_forb_equivalence(n_max),
        TheoremId::MinimalForbidden => verify_minimal_forbidden(n_max),
        TheoremId::ResidueBounds => verify_residue_bounds(n_max),
        TheoremId::REqualsAlphaS => verify_r_equals_alpha_on_s(n_max),
        TheoremId::LemmaC4P5 => verify_lemma_c4_p5(n_max),
        TheoremId::ClassChain => verify_class_chain(n_max),
        TheoremId::MaxineC4P5Free => verify_maxine_c4_p5_free(n_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn forb_equivalence_small() {
        let r = verify_forb_equivalence(4).unwrap();
        assert!(r.passed);
        assert_eq!(r.graphs_checked, 18);
    }

    #[test]
    fn five_vertex_minimal_forbidden() {
        let found = minimal_forbidden(5).unwrap();
        assert_eq!(found.len(), 5);
        let r = verify_minimal_forbidden(5).unwrap();
        assert!(r.passed, "{:?}", r.violations);
    }

    #[test]
    fn small_sweeps_pass() {
        for t in TheoremId::ALL {
            let r = verify(t, 5).unwrap();
            assert!(r.passed, "{t}: {:?}", r.violations);
        }
    }

    #[test]
    fn range_checked() {
        assert!(verify_class_chain(0).is_err());
        assert!(verify_class_chain(9).is_err());
    }
}
