//! Maximum matchings in general graphs with Tutte–Berge certificates, and
//! bipartite Hall matchings with violating-set certificates.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// A maximum matching together with a set `S` maximizing
/// `odd_components(G - S) - |S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    /// Matched edges `(u, v)` with `u < v`, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// The Gallai–Edmonds set `A(G)`: vertices adjacent to, but not in, the
    /// set of vertices missed by some maximum matching.
    pub tutte_set: VertexSet,
}

impl MatchingResult {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.pairs.len() == g.n()
    }

    /// Components of `G - S` with an odd number of vertices.
    pub fn odd_components(&self, g: &Graph) -> Vec<VertexSet> {
        odd_components_without(g, self.tutte_set.members())
    }

    /// `odd_components(G - S) - |S|`; by the Tutte–Berge formula equal to
    /// `n - 2 * size()`.
    pub fn deficiency(&self, g: &Graph) -> usize {
        deficiency_of(g, self.tutte_set.members())
    }
}

pub fn odd_components_without(g: &Graph, removed: &[usize]) -> Vec<VertexSet> {
    let mut active = FixedBitSet::with_capacity(g.n());
    active.insert_range(..);
    for &v in removed {
        active.set(v, false);
    }
    g.components_within(&active)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .map(VertexSet::from)
        .collect()
}

/// `odd_components(G - set) - |set|`, clamped at zero.
pub fn deficiency_of(g: &Graph, set: &[usize]) -> usize {
    odd_components_without(g, set).len().saturating_sub(set.len())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Free,
    Even,
    Odd,
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    base: Vec<usize>,
    parent: Vec<Option<usize>>,
    mark: Vec<Mark>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![None; n],
            base: (0..n).collect(),
            parent: vec![None; n],
            mark: vec![Mark::Free; n],
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.g.n() {
            if self.mate[u].is_some() {
                continue;
            }
            if let Some(v) = self.g.neighbors(u).find(|&v| self.mate[v].is_none()) {
                self.mate[u] = Some(v);
                self.mate[v] = Some(u);
            }
        }
    }

    /// Base where the tree paths from `a` and `b` meet, or `None` when they
    /// lie in different trees.
    fn lca(&self, mut a: usize, mut b: usize) -> Option<usize> {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            match self.mate[a] {
                None => break,
                Some(m) => a = self.parent[m].expect("odd vertex has a parent"),
            }
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return Some(b);
            }
            match self.mate[b] {
                None => return None,
                Some(m) => b = self.parent[m].expect("odd vertex has a parent"),
            }
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path vertex is matched");
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("odd vertex has a parent");
        }
    }

    /// Grows an alternating forest from `roots`. Returns the exposed vertex
    /// ending an augmenting path, if one is found.
    fn search(&mut self, roots: &[usize]) -> Option<usize> {
        let n = self.g.n();
        for v in 0..n {
            self.base[v] = v;
            self.parent[v] = None;
            self.mark[v] = Mark::Free;
        }
        let mut queue = VecDeque::new();
        for &r in roots {
            self.mark[r] = Mark::Even;
            queue.push_back(r);
        }
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                match self.mark[to] {
                    Mark::Even => {
                        let b = self
                            .lca(v, to)
                            .expect("even vertices of distinct trees would give an augmenting path");
                        let mut in_blossom = vec![false; n];
                        self.mark_path(v, b, to, &mut in_blossom);
                        self.mark_path(to, b, v, &mut in_blossom);
                        for i in 0..n {
                            if in_blossom[self.base[i]] {
                                self.base[i] = b;
                                if self.mark[i] != Mark::Even {
                                    self.mark[i] = Mark::Even;
                                    queue.push_back(i);
                                }
                            }
                        }
                    }
                    Mark::Free => {
                        self.parent[to] = Some(v);
                        self.mark[to] = Mark::Odd;
                        match self.mate[to] {
                            None => return Some(to),
                            Some(m) => {
                                self.mark[m] = Mark::Even;
                                queue.push_back(m);
                            }
                        }
                    }
                    Mark::Odd => {}
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = Some(end);
        while let Some(x) = v {
            let p = self.parent[x].expect("augmenting path is rooted");
            let next = self.mate[p];
            self.mate[x] = Some(p);
            self.mate[p] = Some(x);
            v = next;
        }
    }
}

/// Maximum matching by Edmonds' blossom algorithm, augmenting from the
/// lowest-id exposed vertex first, plus the Gallai–Edmonds certificate read
/// off a final alternating forest grown from every exposed vertex.
pub fn max_matching(g: &Graph) -> MatchingResult {
    let n = g.n();
    let mut b = Blossom::new(g);
    b.greedy();
    // a vertex with no augmenting path stays that way after later augmentations
    for r in 0..n {
        if b.mate[r].is_none() {
            if let Some(end) = b.search(&[r]) {
                b.augment(end);
            }
        }
    }
    let exposed: Vec<usize> = (0..n).filter(|&v| b.mate[v].is_none()).collect();
    let found = b.search(&exposed);
    debug_assert!(found.is_none(), "matching is maximum");
    let tutte_set = (0..n).filter(|&v| b.mark[v] == Mark::Odd).collect();
    let pairs = (0..n)
        .filter_map(|u| b.mate[u].filter(|&v| u < v).map(|v| (u, v)))
        .collect();
    MatchingResult { pairs, tutte_set }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HallOutcome {
    /// Every vertex of `a` matched into `b`; pairs are `(a-vertex, b-vertex)`.
    Matching(Vec<(usize, usize)>),
    /// `set ⊆ a` with more members than `neighborhood = N(set) ∩ b`.
    Violation {
        set: VertexSet,
        neighborhood: VertexSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("sides share vertex {0}")]
    OverlappingSides(usize),
}

/// Matches `a` into `b` using only `(a, b)` edges of `g`: a greedy pass
/// followed by augmenting paths. When `a` cannot be saturated, returns a
/// Hall violator found by alternating search from the unmatched vertices.
pub fn hall_matching(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<HallOutcome, MatchingError> {
    if let Some(&v) = a.iter().find(|&&v| b.contains(v)) {
        return Err(MatchingError::OverlappingSides(v));
    }
    let nbrs: Vec<Vec<usize>> = a
        .iter()
        .map(|&u| b.iter().copied().filter(|&w| g.has_edge(u, w)).collect())
        .collect();
    let mut mate_of_b: Vec<Option<usize>> = vec![None; g.n()];
    let mut mate_of_a: Vec<Option<usize>> = vec![None; a.len()];
    for (i, ns) in nbrs.iter().enumerate() {
        if let Some(&w) = ns.iter().find(|&&w| mate_of_b[w].is_none()) {
            mate_of_b[w] = Some(i);
            mate_of_a[i] = Some(w);
        }
    }
    fn try_kuhn(
        i: usize,
        nbrs: &[Vec<usize>],
        seen: &mut [bool],
        mate_of_a: &mut [Option<usize>],
        mate_of_b: &mut [Option<usize>],
    ) -> bool {
        for &w in &nbrs[i] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate_of_b[w].is_none_or(|j| try_kuhn(j, nbrs, seen, mate_of_a, mate_of_b)) {
                mate_of_b[w] = Some(i);
                mate_of_a[i] = Some(w);
                return true;
            }
        }
        false
    }
    for i in 0..a.len() {
        if mate_of_a[i].is_none() {
            let mut seen = vec![false; g.n()];
            try_kuhn(i, &nbrs, &mut seen, &mut mate_of_a, &mut mate_of_b);
        }
    }
    if mate_of_a.iter().all(Option::is_some) {
        let pairs = a
            .iter()
            .zip(&mate_of_a)
            .map(|(&u, w)| (u, w.expect("saturated")))
            .collect();
        return Ok(HallOutcome::Matching(pairs));
    }
    // alternating reachability from every unmatched a-vertex
    let mut in_set = vec![false; a.len()];
    let mut reached_b = vec![false; g.n()];
    let mut stack: Vec<usize> = (0..a.len()).filter(|&i| mate_of_a[i].is_none()).collect();
    for &i in &stack {
        in_set[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &w in &nbrs[i] {
            if reached_b[w] {
                continue;
            }
            reached_b[w] = true;
            let j = mate_of_b[w].expect("no augmenting path remains");
            if !in_set[j] {
                in_set[j] = true;
                stack.push(j);
            }
        }
    }
    let set: VertexSet = a
        .iter()
        .zip(&in_set)
        .filter_map(|(&u, &s)| s.then_some(u))
        .collect();
    let neighborhood: VertexSet = b.iter().copied().filter(|&w| reached_b[w]).collect();
    Ok(HallOutcome::Violation { set, neighborhood })
}
