//! Per-graph analysis records: residue, independence number, Maxine sizes
//! and class membership, with explicit markers where a quantity was not
//! computed because the graph is too large for the exact method.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::degseq::{graph_residue, DegreeSequence};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6, Graph6Error};
use crate::independence::{
    independence_number, maxine_all_branches, maxine_run, MaxineStrategy, ALPHA_MAX_ORDER,
    MAXINE_BRANCH_MAX_ORDER,
};
use crate::par;
use crate::recognition::{find_forbidden, is_matrogenic_config_free, is_threshold, ForbWitness};

/// Largest order for the subset scans behind `in_S`, `threshold` and the
/// matrogenic configuration test.
pub const RECOGNITION_MAX_ORDER: usize = 32;

pub const SKIPPED: &str = "skipped: scale";

/// A computed value, or an explicit note that it was skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field<T> {
    Value(T),
    Skipped,
}

impl<T> Field<T> {
    fn when(ok: bool, f: impl FnOnce() -> T) -> Self {
        if ok {
            Field::Value(f())
        } else {
            Field::Skipped
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Field::Value(v) => Some(v),
            Field::Skipped => None,
        }
    }
}

impl<T: Serialize> Serialize for Field<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Field::Value(v) => v.serialize(s),
            Field::Skipped => s.serialize_str(SKIPPED),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Field<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Value(v) => v.fmt(f),
            Field::Skipped => f.write_str(SKIPPED),
        }
    }
}

/// How the Maxine columns are filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxineMode {
    /// Min and max over every branch.
    AllBranches,
    /// One run; min and max are both its size.
    Single(MaxineStrategy),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisRecord {
    pub graph6: String,
    pub n: usize,
    pub degree_sequence: DegreeSequence,
    pub residue: usize,
    pub alpha: Field<usize>,
    pub maxine_min: Field<usize>,
    pub maxine_max: Field<usize>,
    #[serde(rename = "in_S")]
    pub in_s: Field<bool>,
    pub matrogenic_config_free: Field<bool>,
    pub threshold: Field<bool>,
    pub witness: Option<ForbWitness>,
}

pub const CSV_HEADER: [&str; 11] = [
    "graph6",
    "n",
    "degree_sequence",
    "residue",
    "alpha",
    "maxine_min",
    "maxine_max",
    "in_S",
    "matrogenic_config_free",
    "threshold",
    "witness",
];

impl AnalysisRecord {
    /// Columns in [`CSV_HEADER`] order. Lists are space-separated; the
    /// witness is `name:v1 v2 ...`.
    pub fn csv_row(&self) -> [String; 11] {
        let seq: Vec<String> = self
            .degree_sequence
            .terms()
            .iter()
            .map(|t| t.to_string())
            .collect();
        let witness = self
            .witness
            .as_ref()
            .map(|w| {
                let vs: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
                format!("{}:{}", w.forbidden, vs.join(" "))
            })
            .unwrap_or_default();
        [
            self.graph6.clone(),
            self.n.to_string(),
            seq.join(" "),
            self.residue.to_string(),
            self.alpha.to_string(),
            self.maxine_min.to_string(),
            self.maxine_max.to_string(),
            self.in_s.to_string(),
            self.matrogenic_config_free.to_string(),
            self.threshold.to_string(),
            witness,
        ]
    }

    /// Checks `residue <= maxine_min <= maxine_max <= alpha` and
    /// `in_S => residue == alpha` over whichever fields were computed.
    pub fn check_invariants(&self) -> Result<(), String> {
        let chain = [
            Some(self.residue),
            self.maxine_min.value().copied(),
            self.maxine_max.value().copied(),
            self.alpha.value().copied(),
        ];
        let present: Vec<usize> = chain.iter().flatten().copied().collect();
        if present.windows(2).any(|w| w[0] > w[1]) {
            return Err(format!(
                "ordering residue <= maxine_min <= maxine_max <= alpha violated: {chain:?}"
            ));
        }
        if let (Field::Value(true), Field::Value(alpha)) = (self.in_s, self.alpha) {
            if alpha != self.residue {
                return Err(format!(
                    "graph in S with residue {} but alpha {alpha}",
                    self.residue
                ));
            }
        }
        Ok(())
    }
}

pub fn analyze(g: &Graph, mode: MaxineMode) -> AnalysisRecord {
    let n = g.order();
    let recognizable = n <= RECOGNITION_MAX_ORDER;
    let (maxine_min, maxine_max) = match mode {
        MaxineMode::AllBranches if n <= MAXINE_BRANCH_MAX_ORDER => {
            let s = maxine_all_branches(g).expect("within bound");
            (Field::Value(s.min_size), Field::Value(s.max_size))
        }
        MaxineMode::AllBranches => (Field::Skipped, Field::Skipped),
        MaxineMode::Single(strategy) => {
            let m = maxine_run(g, strategy).size;
            (Field::Value(m), Field::Value(m))
        }
    };
    let witness = if recognizable {
        find_forbidden(g)
    } else {
        None
    };
    AnalysisRecord {
        graph6: emit_graph6(g),
        n,
        degree_sequence: DegreeSequence::of_graph(g),
        residue: graph_residue(g),
        alpha: Field::when(n <= ALPHA_MAX_ORDER, || {
            independence_number(g).expect("within bound")
        }),
        maxine_min,
        maxine_max,
        in_s: Field::when(recognizable, || witness.is_none()),
        matrogenic_config_free: Field::when(recognizable, || is_matrogenic_config_free(g)),
        threshold: Field::when(recognizable, || is_threshold(g)),
        witness,
    }
}

/// A graph6 line that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based line number.
    pub line: usize,
    pub error: Graph6Error,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.error)
    }
}

/// Analyze a graph6 stream, one result per non-blank line, in input order.
pub fn analyze_lines(text: &str, mode: MaxineMode) -> Vec<Result<AnalysisRecord, LineError>> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.trim()))
        .collect();
    par::map(&lines, |&(line, s)| {
        parse_graph6(s)
            .map(|g| analyze(&g, mode))
            .map_err(|error| LineError { line, error })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named, CatalogId::*};

    #[test]
    fn k2_record() {
        let r = analyze(&named(Complete(2)), MaxineMode::AllBranches);
        assert_eq!(r.graph6, "A_");
        assert_eq!(r.residue, 1);
        assert_eq!(r.alpha, Field::Value(1));
        assert_eq!(r.in_s, Field::Value(true));
        assert!(r.check_invariants().is_ok());
    }

    #[test]
    fn p5_record() {
        let r = analyze(&named(Path(5)), MaxineMode::AllBranches);
        assert_eq!(r.residue, 2);
        assert_eq!(r.alpha, Field::Value(3));
        assert_eq!(
            (r.maxine_min, r.maxine_max),
            (Field::Value(2), Field::Value(3))
        );
        assert_eq!(r.in_s, Field::Value(false));
        assert_eq!(r.witness.as_ref().unwrap().forbidden, Path(5));
        assert!(r.check_invariants().is_ok());
    }

    #[test]
    fn c5_record() {
        let r = analyze(
            &named(Cycle(5)),
            MaxineMode::Single(MaxineStrategy::FirstIndex),
        );
        assert_eq!(
            (r.residue, r.alpha, r.in_s),
            (2, Field::Value(2), Field::Value(true))
        );
    }

    #[test]
    fn large_graphs_are_marked_skipped() {
        let r = analyze(&named(Cycle(40)), MaxineMode::AllBranches);
        assert_eq!(r.alpha, Field::Skipped);
        assert_eq!(r.maxine_min, Field::Skipped);
        assert_eq!(r.in_s, Field::Skipped);
        assert_eq!(r.csv_row()[4], SKIPPED);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["alpha"], SKIPPED);
        assert!(r.check_invariants().is_ok());
    }

    #[test]
    fn invariant_violation_detected() {
        let mut r = analyze(&named(Path(5)), MaxineMode::AllBranches);
        r.maxine_min = Field::Value(1);
        assert!(r.check_invariants().is_err());
        let mut r = analyze(&named(Path(5)), MaxineMode::AllBranches);
        r.in_s = Field::Value(true);
        assert!(r.check_invariants().is_err());
    }

    #[test]
    fn lines_keep_order_and_report_errors() {
        let out = analyze_lines("A_\n\nbad line\n@\n", MaxineMode::AllBranches);
        assert_eq!(out.len(), 3);
        assert_eq!(out[0].as_ref().unwrap().graph6, "A_");
        assert_eq!(out[1].as_ref().unwrap_err().line, 3);
        assert_eq!(out[2].as_ref().unwrap().graph6, "@");
    }
}
