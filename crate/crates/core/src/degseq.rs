//! Degree sequences and the Havel-Hakimi reduction.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// A list of nonnegative integers kept in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("cannot reduce an empty sequence")]
    Empty,
    #[error("largest term {term} exceeds the {remaining} remaining terms")]
    TermTooLarge { term: usize, remaining: usize },
    #[error("reduction produced a negative term: {}", fmt_signed(.attempted))]
    NegativeTerm { attempted: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("sequence {0} is not graphical")]
pub struct NotGraphical(pub DegreeSequence);

fn fmt_signed(terms: &[i64]) -> String {
    let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    format!("({})", parts.join(","))
}

impl DegreeSequence {
    /// Sorts `terms` into nonincreasing order.
    pub fn new(mut terms: Vec<usize>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(terms)
    }

    pub fn of_graph(g: &Graph) -> Self {
        DegreeSequence::new(g.degrees())
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|&t| t == 0)
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&t| t == 0).count()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One Havel-Hakimi step: drop a largest term `t` and subtract one from the
/// next `t` terms. Ties are broken toward the earliest sorted positions,
/// which does not affect the resulting multiset.
pub fn hh_step(d: &DegreeSequence) -> Result<DegreeSequence, StepError> {
    let (&t, rest) = d.0.split_first().ok_or(StepError::Empty)?;
    if t > rest.len() {
        return Err(StepError::TermTooLarge {
            term: t,
            remaining: rest.len(),
        });
    }
    let attempted: Vec<i64> = rest
        .iter()
        .enumerate()
        .map(|(i, &x)| x as i64 - i64::from(i < t))
        .collect();
    if attempted.iter().any(|&x| x < 0) {
        let mut attempted = attempted;
        attempted.sort_unstable_by(|a, b| b.cmp(a));
        return Err(StepError::NegativeTerm { attempted });
    }
    Ok(DegreeSequence::new(
        attempted.into_iter().map(|x| x as usize).collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum Terminal {
    AllZero {
        residue: usize,
    },
    /// The step out of the last recorded sequence went negative.
    NegativeTerm {
        attempted: Vec<i64>,
    },
    /// The largest term of the last recorded sequence had too few partners.
    TermTooLarge {
        term: usize,
        remaining: usize,
    },
}

/// Every sequence `d^0, d^1, ...` visited by the reduction, and how it ended.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub steps: Vec<DegreeSequence>,
    pub terminal: Terminal,
}

impl ReductionTrace {
    pub fn is_graphical(&self) -> bool {
        matches!(self.terminal, Terminal::AllZero { .. })
    }

    pub fn residue(&self) -> Option<usize> {
        match self.terminal {
            Terminal::AllZero { residue } => Some(residue),
            _ => None,
        }
    }

    /// Human-readable trace: one `d^i: (...)` line per step, then either
    /// `residue: R` or a `not graphical:` line naming the failing step.
    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, d)| format!("d^{i}: {d}"))
            .collect();
        let last = self.steps.len() - 1;
        out.push(match &self.terminal {
            Terminal::AllZero { residue } => format!("residue: {residue}"),
            Terminal::NegativeTerm { attempted } => format!(
                "not graphical: step d^{last} -> d^{} gives {}, which has a negative term",
                last + 1,
                fmt_signed(attempted)
            ),
            Terminal::TermTooLarge { term, remaining } => format!(
                "not graphical: step d^{last} -> d^{} needs {term} partners but only {remaining} remain",
                last + 1
            ),
        });
        out
    }
}

pub fn hh_reduce(d: &DegreeSequence) -> ReductionTrace {
    let mut steps = vec![d.clone()];
    loop {
        let cur = steps.last().unwrap();
        if cur.is_all_zero() {
            let residue = cur.len();
            return ReductionTrace {
                steps,
                terminal: Terminal::AllZero { residue },
            };
        }
        match hh_step(cur) {
            Ok(next) => steps.push(next),
            Err(StepError::NegativeTerm { attempted }) => {
                return ReductionTrace {
                    steps,
                    terminal: Terminal::NegativeTerm { attempted },
                }
            }
            Err(StepError::TermTooLarge { term, remaining }) => {
                return ReductionTrace {
                    steps,
                    terminal: Terminal::TermTooLarge { term, remaining },
                }
            }
            Err(StepError::Empty) => unreachable!("empty sequences are all-zero"),
        }
    }
}

pub fn is_graphical(d: &DegreeSequence) -> bool {
    hh_reduce(d).is_graphical()
}

/// Erdős–Gallai test: even sum, and for every `k`
/// `d_1 + ... + d_k <= k(k-1) + sum_{i>k} min(d_i, k)`.
pub fn is_graphical_eg(d: &DegreeSequence) -> bool {
    let t = d.terms();
    let total: usize = t.iter().sum();
    if !total.is_multiple_of(2) {
        return false;
    }
    let mut prefix = 0;
    for k in 1..=t.len() {
        prefix += t[k - 1];
        let tail: usize = t[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Number of zeros the reduction ends with.
pub fn residue(d: &DegreeSequence) -> Result<usize, NotGraphical> {
    hh_reduce(d)
        .residue()
        .ok_or_else(|| NotGraphical(d.clone()))
}

/// `R(G)`, the residue of the degree sequence of `g`.
pub fn graph_residue(g: &Graph) -> usize {
    residue(&DegreeSequence::of_graph(g)).expect("degree sequences of graphs are graphical")
}
