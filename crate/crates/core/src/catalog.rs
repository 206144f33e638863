//! Named graphs with fixed labelings.
//!
//! The nine members of [`FORBIDDEN_S`] are the minimal forbidden induced
//! subgraphs of the strong Havel-Hakimi class. The hand-drawn members
//! (4-pan, kite, stool, co-domino) are pinned down by the edge lists below;
//! `verify::minimal_forbidden` recomputes the set from scratch and the test
//! suite checks it against these encodings.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    /// Edgeless graph `nK1`.
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{2,3}` plus an edge inside the part of size three.
    K23Plus,
    /// `C4` with a pendant vertex.
    FourPan,
    /// Triangle `{0,1,2}`, vertex 3 adjacent to 0 and 1, pendant 4 on 2.
    Kite,
    /// Triangle `{0,1,2}`, vertex 3 adjacent to 1, pendants 4 and 5 on 3.
    Stool,
    /// Complement of the domino.
    CoDomino,
    TwoP3,
    P3PlusK3,
    /// The 2x3 grid: two squares sharing an edge.
    Domino,
    /// Two triangles joined by one edge.
    DumbbellA,
    /// Two triangles joined by a perfect matching (the prism).
    DumbbellB,
}

/// Minimal forbidden induced subgraphs of the strong Havel-Hakimi class, in
/// the order used for witness reporting.
pub const FORBIDDEN_S: [CatalogId; 9] = [
    CatalogId::Path(5),
    CatalogId::FourPan,
    CatalogId::CompleteBipartite(2, 3),
    CatalogId::K23Plus,
    CatalogId::Kite,
    CatalogId::TwoP3,
    CatalogId::P3PlusK3,
    CatalogId::Stool,
    CatalogId::CoDomino,
];

fn edges(n: usize, e: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, e).expect("static catalog edge list")
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters(msg.into())
}

impl CatalogId {
    pub fn graph(self) -> Result<Graph, GraphError> {
        use CatalogId::*;
        Ok(match self {
            Empty(n) => Graph::empty(n)?,
            Path(n) => {
                if n == 0 {
                    return Err(bad("P_n needs n >= 1"));
                }
                let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::from_edges(n, &e)?
            }
            Cycle(n) => {
                if n < 3 {
                    return Err(bad("C_n needs n >= 3"));
                }
                let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &e)?
            }
            Complete(n) => {
                if n == 0 {
                    return Err(bad("K_n needs n >= 1"));
                }
                Graph::empty(n)?.complement()
            }
            CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(bad("K_{m,n} needs m, n >= 1"));
                }
                Graph::empty(a)?.join(&Graph::empty(b)?)?
            }
            K23Plus => edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)]),
            FourPan => edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
            Kite => edges(5, &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (2, 4)]),
            Stool => edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (3, 5)]),
            CoDomino => Domino.graph()?.complement(),
            TwoP3 => {
                let p3 = Path(3).graph()?;
                p3.disjoint_union(&p3)?
            }
            P3PlusK3 => Path(3).graph()?.disjoint_union(&Complete(3).graph()?)?,
            Domino => edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]),
            DumbbellA => edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]),
            DumbbellB => edges(
                6,
                &[
                    (0, 1),
                    (0, 2),
                    (1, 2),
                    (3, 4),
                    (3, 5),
                    (4, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            ),
        })
    }

    /// Parse the short names printed by `Display`, e.g. `P5`, `K2,3`, `kite`.
    pub fn parse(name: &str) -> Option<CatalogId> {
        use CatalogId::*;
        let fixed = match name {
            "K2,3+" => Some(K23Plus),
            "4-pan" => Some(FourPan),
            "kite" => Some(Kite),
            "stool" => Some(Stool),
            "co-domino" => Some(CoDomino),
            "2P3" => Some(TwoP3),
            "P3+K3" => Some(P3PlusK3),
            "domino" => Some(Domino),
            "dumbbell-A" => Some(DumbbellA),
            "dumbbell-B" => Some(DumbbellB),
            _ => None,
        };
        if fixed.is_some() {
            return fixed;
        }
        let num = |s: &str| s.parse::<usize>().ok();
        if let Some(rest) = name.strip_prefix('K') {
            if let Some((a, b)) = rest.split_once(',') {
                return Some(CompleteBipartite(num(a)?, num(b)?));
            }
            return num(rest).map(Complete);
        }
        if let Some(rest) = name.strip_suffix("K1") {
            return num(rest).map(Empty);
        }
        if let Some(rest) = name.strip_prefix('P') {
            return num(rest).map(Path);
        }
        if let Some(rest) = name.strip_prefix('C') {
            return num(rest).map(Cycle);
        }
        None
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CatalogId::*;
        match self {
            Empty(n) => write!(f, "{n}K1"),
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Complete(n) => write!(f, "K{n}"),
            CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            K23Plus => f.write_str("K2,3+"),
            FourPan => f.write_str("4-pan"),
            Kite => f.write_str("kite"),
            Stool => f.write_str("stool"),
            CoDomino => f.write_str("co-domino"),
            TwoP3 => f.write_str("2P3"),
            P3PlusK3 => f.write_str("P3+K3"),
            Domino => f.write_str("domino"),
            DumbbellA => f.write_str("dumbbell-A"),
            DumbbellB => f.write_str("dumbbell-B"),
        }
    }
}

impl Serialize for CatalogId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Shorthand for catalog graphs with known-good parameters.
pub fn named(id: CatalogId) -> Graph {
    id.graph().expect("valid catalog parameters")
}
