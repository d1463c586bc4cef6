//! Good/bad edge labelings.
//!
//! A labeling splits `E(G)` into good and bad edges. It satisfies the
//! *good edge axiom* when every two good edges touch, and the *bad edge
//! axiom* when no induced path of length two uses only bad edges. Both
//! axioms are pairwise constraints on edges, so finding a labeling is a
//! 2-satisfiability problem over two relations on `E(G)`:
//!
//! * untouching pairs (both good is forbidden),
//! * pairs forming an induced path `u - v - w` (both bad is forbidden).
//!
//! In medium mode the good class is only required to respect the bad edge
//! axiom on its complement; its members are then called medium edges.

mod aacw;
mod cover;
mod refine;
mod twosat;

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

pub use aacw::{extract_aacw, AacwCertificate, Relation};
pub use cover::{clique_cover_labeling, complement_3coloring_cliques};
pub use refine::{refine_labeling, refine_with_trace, untouching_medium_pairs, RefineMode, Refinement};
pub use twosat::{solve_2sat_labeling, solve_relations, TwoSat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Good,
    Bad,
}

impl Label {
    pub fn symbol(self) -> char {
        match self {
            Label::Good => 'G',
            Label::Bad => 'B',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelMode {
    /// The good class is claimed to satisfy the good edge axiom.
    Strict,
    /// Good labels mean "medium": only the bad edge axiom is claimed.
    Medium,
}

/// Dense lookup from vertex pairs to edge ids (positions in `Graph::edges`).
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    n: usize,
    edges: Vec<(usize, usize)>,
    ids: Vec<u32>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let edges = g.edges();
        let mut ids = vec![u32::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            ids[u * n + v] = i as u32;
            ids[v * n + u] = i as u32;
        }
        EdgeIndex { n, edges, ids }
    }

    #[inline]
    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        let id = self.ids[u * self.n + v];
        (id != u32::MAX).then_some(id as usize)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A total labeling of the edges of one graph, indexed like `Graph::edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    edges: Vec<(usize, usize)>,
    labels: Vec<Label>,
    pub mode: LabelMode,
}

impl EdgeLabeling {
    pub fn uniform(g: &Graph, label: Label, mode: LabelMode) -> Self {
        let edges = g.edges();
        let labels = vec![label; edges.len()];
        EdgeLabeling { edges, labels, mode }
    }

    pub fn from_fn(g: &Graph, mode: LabelMode, f: impl Fn(usize, usize) -> Label) -> Self {
        let edges = g.edges();
        let labels = edges.iter().map(|&(u, v)| f(u, v)).collect();
        EdgeLabeling { edges, labels, mode }
    }

    pub(crate) fn from_parts(edges: Vec<(usize, usize)>, labels: Vec<Label>, mode: LabelMode) -> Self {
        assert_eq!(edges.len(), labels.len());
        EdgeLabeling { edges, labels, mode }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, u: usize, v: usize) -> Option<Label> {
        let key = (u.min(v), u.max(v));
        self.edges
            .binary_search(&key)
            .ok()
            .map(|i| self.labels[i])
    }

    pub fn set(&mut self, id: usize, label: Label) {
        self.labels[id] = label;
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), Label)> + '_ {
        self.edges.iter().copied().zip(self.labels.iter().copied())
    }

    pub fn count(&self, label: Label) -> usize {
        self.labels.iter().filter(|&&l| l == label).count()
    }

    /// Whether this labeling covers exactly the edges of `g`.
    pub fn is_total_on(&self, g: &Graph) -> bool {
        self.edges == g.edges()
    }

    /// Spanning subgraph of good (or medium) edges.
    pub fn good_graph(&self, n: usize) -> Graph {
        let mut h = Graph::new(n);
        for ((u, v), l) in self.iter() {
            if l == Label::Good {
                h.add_edge(u, v);
            }
        }
        h
    }

    /// Restriction to the subgraph induced by `keep`, renumbered like
    /// `Graph::induced`.
    pub fn restrict(&self, g: &Graph, keep: &[usize]) -> EdgeLabeling {
        let sub = g.induced(keep);
        EdgeLabeling::from_fn(&sub, self.mode, |i, j| {
            self.get(keep[i], keep[j]).expect("edge of the induced subgraph")
        })
    }

    /// Lines `u v G|B`, in edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((u, v), l) in self.iter() {
            let _ = writeln!(out, "{u} {v} {}", l.symbol());
        }
        out
    }

    pub fn parse(g: &Graph, text: &str, mode: LabelMode) -> Result<Self, LabelingError> {
        let edges = g.edges();
        let mut labels: Vec<Option<Label>> = vec![None; edges.len()];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad_line = || LabelingError::MalformedLine { line: i + 1 };
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v, l] = parts[..] else {
                return Err(bad_line());
            };
            let u: usize = u.parse().map_err(|_| bad_line())?;
            let v: usize = v.parse().map_err(|_| bad_line())?;
            let label = match l {
                "G" | "M" => Label::Good,
                "B" => Label::Bad,
                _ => return Err(bad_line()),
            };
            let key = (u.min(v), u.max(v));
            let id = edges
                .binary_search(&key)
                .map_err(|_| LabelingError::NotAnEdge { u, v })?;
            if labels[id].replace(label).is_some() {
                return Err(LabelingError::DuplicateLabel { u, v });
            }
        }
        if let Some(id) = labels.iter().position(Option::is_none) {
            let (u, v) = edges[id];
            return Err(LabelingError::Unlabeled { u, v });
        }
        let labels = labels.into_iter().map(|l| l.expect("checked")).collect();
        Ok(EdgeLabeling { edges, labels, mode })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("({u},{v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("edge ({u},{v}) labeled twice")]
    DuplicateLabel { u: usize, v: usize },
    #[error("edge ({u},{v}) has no label")]
    Unlabeled { u: usize, v: usize },
    #[error("line {line}: expected `u v G|B`")]
    MalformedLine { line: usize },
    #[error("clique list entry {index} is not a clique")]
    NotAClique { index: usize },
    #[error("vertex {vertex} lies in {count} of {k} cliques, need more than k/3 (at least k/3 for odd k)")]
    Uncovered { vertex: usize, count: usize, k: usize },
    #[error("no labeling satisfies the axioms and the forced labels")]
    Infeasible,
    #[error("labeling infeasible but no certificate walk found within {bound} steps")]
    CertificateSearchExhausted { bound: usize },
}

/// The two pairwise relations on a common vertex set that a labeling must
/// respect: no `untouching` pair may be all good, no `open_paths` pair may
/// be all bad. For a graph the vertex set is `E(G)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClauseRelations {
    pub order: usize,
    /// Sorted pairs `(i, j)`, `i < j`.
    pub untouching: Vec<(usize, usize)>,
    /// Sorted pairs `(i, j)`, `i < j`.
    pub open_paths: Vec<(usize, usize)>,
}

impl ClauseRelations {
    pub fn of_graph(g: &Graph) -> Self {
        let index = EdgeIndex::new(g);
        Self::with_index(g, &index)
    }

    pub fn with_index(g: &Graph, index: &EdgeIndex) -> Self {
        let n = g.n();
        let mut untouching = Vec::new();
        for (e, &(a, b)) in index.edges().iter().enumerate() {
            let mut far = g.edge_reach(a, b);
            far.toggle_range(..);
            let far: Vec<usize> = far.ones().collect();
            for (i, &c) in far.iter().enumerate() {
                for &d in &far[i + 1..] {
                    if let Some(f) = index.id(c, d) {
                        if e < f {
                            untouching.push((e, f));
                        }
                    }
                }
            }
        }
        let mut open_paths = Vec::new();
        for v in 0..n {
            let nbrs: Vec<usize> = g.neighbors(v).collect();
            for (i, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[i + 1..] {
                    if !g.has_edge(u, w) {
                        let e = index.id(u, v).expect("edge");
                        let f = index.id(v, w).expect("edge");
                        open_paths.push((e.min(f), e.max(f)));
                    }
                }
            }
        }
        untouching.sort_unstable();
        open_paths.sort_unstable();
        ClauseRelations {
            order: index.len(),
            untouching,
            open_paths,
        }
    }

    /// Adjacency lists of one relation.
    pub fn adjacency(&self, rel: Relation) -> Vec<Vec<usize>> {
        let pairs = match rel {
            Relation::Untouching => &self.untouching,
            Relation::OpenPath => &self.open_paths,
        };
        let mut adj = vec![Vec::new(); self.order];
        for &(i, j) in pairs {
            adj[i].push(j);
            if i != j {
                adj[j].push(i);
            }
        }
        adj
    }

    pub fn contains(&self, rel: Relation, i: usize, j: usize) -> bool {
        let pairs = match rel {
            Relation::Untouching => &self.untouching,
            Relation::OpenPath => &self.open_paths,
        };
        pairs.binary_search(&(i.min(j), i.max(j))).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    GoodPairUntouching,
    BadPathOpen,
}

/// Two edges breaking one of the axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AxiomViolation {
    pub kind: ViolationKind,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::GoodPairUntouching => "good edges do not touch",
            ViolationKind::BadPathOpen => "bad edges form an induced path",
        };
        write!(
            f,
            "{what}: ({},{}) and ({},{})",
            self.first.0, self.first.1, self.second.0, self.second.1
        )
    }
}

/// All axiom violations of `lab` on `g`. In medium mode only the bad edge
/// axiom is checked.
///
/// Panics if `lab` is not a labeling of exactly `E(g)`.
pub fn axiom_check(g: &Graph, lab: &EdgeLabeling) -> Vec<AxiomViolation> {
    assert!(lab.is_total_on(g), "labeling does not cover E(G)");
    let rel = ClauseRelations::of_graph(g);
    axiom_check_with(&rel, lab)
}

pub(crate) fn axiom_check_with(rel: &ClauseRelations, lab: &EdgeLabeling) -> Vec<AxiomViolation> {
    let edges = lab.edges();
    let labels = lab.labels();
    let mut out = Vec::new();
    if lab.mode == LabelMode::Strict {
        for &(i, j) in &rel.untouching {
            if labels[i] == Label::Good && labels[j] == Label::Good {
                out.push(AxiomViolation {
                    kind: ViolationKind::GoodPairUntouching,
                    first: edges[i],
                    second: edges[j],
                });
            }
        }
    }
    for &(i, j) in &rel.open_paths {
        if labels[i] == Label::Bad && labels[j] == Label::Bad {
            out.push(AxiomViolation {
                kind: ViolationKind::BadPathOpen,
                first: edges[i],
                second: edges[j],
            });
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn axiom_check_examples() {
        let k6 = Graph::complete(6);
        assert!(axiom_check(&k6, &EdgeLabeling::uniform(&k6, Label::Bad, LabelMode::Strict)).is_empty());

        let g = two_k2();
        let v = axiom_check(&g, &EdgeLabeling::uniform(&g, Label::Good, LabelMode::Strict));
        assert_eq!(
            v,
            vec![AxiomViolation {
                kind: ViolationKind::GoodPairUntouching,
                first: (0, 1),
                second: (2, 3)
            }]
        );
        // medium mode ignores the good edge axiom
        assert!(axiom_check(&g, &EdgeLabeling::uniform(&g, Label::Good, LabelMode::Medium)).is_empty());

        let p = prism();
        let lab = EdgeLabeling::from_fn(&p, LabelMode::Strict, |u, v| {
            if u % 2 == v % 2 {
                Label::Bad
            } else {
                Label::Good
            }
        });
        assert!(axiom_check(&p, &lab).is_empty());
    }

    #[test]
    fn path_needs_a_good_edge() {
        let g = Graph::path(3);
        let v = axiom_check(&g, &EdgeLabeling::uniform(&g, Label::Bad, LabelMode::Strict));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::BadPathOpen);
    }

    #[test]
    fn relations_of_small_graphs() {
        let rel = ClauseRelations::of_graph(&two_k2());
        assert_eq!(rel.untouching, vec![(0, 1)]);
        assert!(rel.open_paths.is_empty());
        let rel = ClauseRelations::of_graph(&Graph::cycle(5));
        // edges of C5 sorted: (0,1),(0,4),(1,2),(2,3),(3,4)
        assert!(rel.untouching.is_empty());
        assert_eq!(rel.open_paths.len(), 5);
        // every pair of edges in the line graph of K5 touches
        assert!(ClauseRelations::of_graph(&petersen_complement()).untouching.is_empty());
    }

    #[test]
    fn labeling_text_round_trip() {
        let p = prism();
        let lab = EdgeLabeling::from_fn(&p, LabelMode::Strict, |u, v| {
            if (u + v) % 2 == 1 {
                Label::Good
            } else {
                Label::Bad
            }
        });
        let text = lab.to_text();
        assert!(text.starts_with("0 2 B\n0 3 G\n"));
        assert_eq!(EdgeLabeling::parse(&p, &text, LabelMode::Strict).unwrap(), lab);
        assert_eq!(
            EdgeLabeling::parse(&p, "0 1 G\n", LabelMode::Strict),
            Err(LabelingError::NotAnEdge { u: 0, v: 1 })
        );
        assert!(matches!(
            EdgeLabeling::parse(&p, "0 2 B\n", LabelMode::Strict),
            Err(LabelingError::Unlabeled { .. })
        ));
        assert_eq!(
            EdgeLabeling::parse(&p, "0 2 X\n", LabelMode::Strict),
            Err(LabelingError::MalformedLine { line: 1 })
        );
    }

    #[test]
    fn restriction_keeps_labels() {
        let p = prism();
        let lab = EdgeLabeling::from_fn(&p, LabelMode::Strict, |u, _| {
            if u == 0 {
                Label::Good
            } else {
                Label::Bad
            }
        });
        let sub = lab.restrict(&p, &[0, 2, 3]);
        assert_eq!(sub.get(0, 1), Some(Label::Good));
        assert_eq!(sub.get(0, 2), Some(Label::Good));
        assert_eq!(sub.get(1, 2), None);
    }
}
