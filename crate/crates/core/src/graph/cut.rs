use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCut {
    pub size: usize,
    pub vertices: VertexSet,
}

/// Unit-capacity vertex-split flow network. Vertex `v` becomes `2v`
/// (in) and `2v + 1` (out) joined by a capacity-1 arc.
struct SplitNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
    base_cap: Vec<u32>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let big = n as u32 + 1;
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
            base_cap: Vec::new(),
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, big);
            net.arc(2 * v + 1, 2 * u, big);
        }
        net.base_cap = net.cap.clone();
        net
    }

    fn arc(&mut self, from: usize, to: usize, c: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(c);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base_cap);
    }

    /// One BFS augmentation from `src` to `dst`; returns false when none.
    fn augment(&mut self, src: usize, dst: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    if y == dst {
                        let mut z = dst;
                        while z != src {
                            let a = via[z];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            z = self.head[a ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn reachable(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[src] = true;
        let mut stack = vec![src];
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Minimum `s`-`t` vertex separator for non-adjacent `s`, `t`, or `None`
    /// if its size is at least `limit`.
    fn separator(&mut self, s: usize, t: usize, limit: usize) -> Option<VertexSet> {
        self.reset();
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit && self.augment(src, dst) {
            flow += 1;
        }
        if flow >= limit {
            return None;
        }
        let seen = self.reachable(src);
        let n = self.adj.len() / 2;
        let cut: VertexSet = (0..n)
            .filter(|&v| v != s && seen[2 * v] && !seen[2 * v + 1])
            .collect();
        debug_assert_eq!(cut.len(), flow);
        Some(cut)
    }
}

/// Minimum vertex cut of `g`. Returns `None` for complete graphs, which
/// have no cutset, and a size-0 cut for disconnected graphs.
///
/// Uses the classic connectivity scan: a minimum separator of size `k`
/// misses one of any `k + 1` vertices, so only sources among the first
/// `best + 1` vertices need to be tried.
pub fn min_vertex_cut(g: &Graph) -> Option<VertexCut> {
    let n = g.n();
    if g.m() == n * n.saturating_sub(1) / 2 {
        return None;
    }
    if g.components().len() > 1 {
        return Some(VertexCut {
            size: 0,
            vertices: VertexSet::new(),
        });
    }
    let mut net = SplitNetwork::new(g);
    let mut best: Option<VertexSet> = None;
    let mut s = 0;
    while s < n && s <= best.as_ref().map_or(n, |b| b.len()) {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let limit = best.as_ref().map_or(n, |b| b.len());
            if let Some(cut) = net.separator(s, t, limit) {
                best = Some(cut);
            }
        }
        s += 1;
    }
    best.map(|vertices| VertexCut {
        size: vertices.len(),
        vertices,
    })
}

/// Whether removing `set` leaves a disconnected graph (at least two
/// components among the remaining vertices).
pub fn separates(g: &Graph, set: &[usize]) -> bool {
    let mut active = FixedBitSet::with_capacity(g.n());
    active.insert_range(..);
    for &v in set {
        active.set(v, false);
    }
    g.components_within(&active).len() >= 2
}
