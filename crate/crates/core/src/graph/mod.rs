//! Dense undirected simple graphs and the structural predicates used
//! throughout the crate: antitriangles, dominating edges, c-twins,
//! vertex cuts and cliques.
//!
//! Adjacency is stored as one bit row per vertex. Graphs in this crate are
//! typically very dense, so row operations (union, intersection, counting)
//! are the workhorse.

mod clique;
mod cut;
mod io;

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

pub use clique::max_clique;
pub use cut::{min_vertex_cut, separates, VertexCut};
pub use io::{parse_graph, write_graph, ParseError};

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Empty graph with `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Panics on loops or out-of-range
    /// endpoints; use [`parse_graph`] for untrusted input.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].set(v, false);
        self.rows[v].set(u, false);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    /// Open neighborhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    /// Closed neighborhood `N(v) ∪ {v}`.
    pub fn closed_row(&self, v: usize) -> FixedBitSet {
        let mut r = self.rows[v].clone();
        r.insert(v);
        r
    }

    /// Vertices touched by the edge `(u, v)`: `N(u) ∪ N(v) ∪ {u, v}`.
    pub fn edge_reach(&self, u: usize, v: usize) -> FixedBitSet {
        let mut r = self.rows[u].clone();
        r.union_with(&self.rows[v]);
        r.insert(u);
        r.insert(v);
        r
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Whether `set` is a clique.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether vertex sets `a` and `b` touch: they intersect or some edge
    /// joins them.
    pub fn touches(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter()
            .any(|&u| b.iter().any(|&v| u == v || self.has_edge(u, v)))
    }

    /// Whether every vertex of `a` is adjacent to every vertex of `b`.
    pub fn complete_to(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&u| b.iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether no vertex of `a` is adjacent to a vertex of `b`.
    pub fn anticomplete_to(&self, a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|&u| b.iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Whether the subgraph induced on `set` is connected. The empty set is
    /// not connected.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut seen = vec![false; set.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, &w) in set.iter().enumerate() {
                if !seen[j] && self.has_edge(set[i], w) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected components of the subgraph induced by `active`, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, active: &FixedBitSet) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut comps = Vec::new();
        for s in active.ones() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let mut next = self.rows[v].clone();
                next.intersect_with(active);
                next.difference_with(&seen);
                for w in next.ones() {
                    seen.insert(w);
                    comp.push(w);
                    stack.push(w);
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut all = FixedBitSet::with_capacity(self.n);
        all.insert_range(..);
        self.components_within(&all)
    }

    /// Induced subgraph on `keep` (in the given order); vertex `i` of the
    /// result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with vertices renamed by `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Membership in the antitriangle-free class.
    pub fn is_antitriangle_free(&self) -> bool {
        antitriangle(self).is_none()
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn pair(u: usize, v: usize) -> Self {
        VertexSet::from_iter([u, v])
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Maps every member through `f` and re-sorts.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> VertexSet {
        self.0.iter().map(|&v| f(v)).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Partition of the vertex set into maximal classes of c-twins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CTwinPartition {
    pub classes: Vec<VertexSet>,
}

impl CTwinPartition {
    /// Index of the class containing each vertex.
    pub fn class_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                out[v] = i;
            }
        }
        out
    }
}

pub fn complement(g: &Graph) -> Graph {
    let mut h = Graph::new(g.n);
    for u in 0..g.n {
        let mut r = g.rows[u].clone();
        r.toggle_range(..);
        r.set(u, false);
        h.rows[u] = r;
    }
    h
}

/// Lexicographically first pairwise non-adjacent triple, if any.
pub fn antitriangle(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n;
    for a in 0..n {
        let mut non_a = g.rows[a].clone();
        non_a.toggle_range(..);
        for b in non_a.ones().filter(|&b| b > a) {
            let mut common = non_a.clone();
            common.difference_with(&g.rows[b]);
            if let Some(c) = common.ones().find(|&c| c > b) {
                return Some((a, b, c));
            }
        }
    }
    None
}

/// Edges `(u, v)` whose closed neighborhoods together cover every vertex.
pub fn dominating_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| g.edge_reach(u, v).count_ones(..) == g.n)
        .collect()
}

/// Maximal c-twin classes. Two distinct vertices are c-twins when they have
/// the same closed neighborhood (which forces them to be adjacent).
pub fn c_twin_classes(g: &Graph) -> CTwinPartition {
    let mut by_row: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n {
        let key: Vec<usize> = g.closed_row(v).ones().collect();
        match by_row.get(&key) {
            Some(&i) => classes[i].push(v),
            None => {
                by_row.insert(key, classes.len());
                classes.push(vec![v]);
            }
        }
    }
    CTwinPartition {
        classes: classes.into_iter().map(VertexSet::from).collect(),
    }
}

/// Whether `u` and `v` are distinct c-twins.
pub fn are_c_twins(g: &Graph, u: usize, v: usize) -> bool {
    u != v && g.has_edge(u, v) && g.closed_row(u) == g.closed_row(v)
}
