use crate::graph::{complement, Graph, VertexSet};

use super::{EdgeLabeling, Label, LabelMode, LabelingError};

/// Labeling induced by a multiset of `k` cliques: an edge is good when more
/// than `k/2` of the cliques contain one of its ends.
///
/// Every vertex must lie in more than `k/3` of the cliques, or in at least
/// `k/3` when `k` is odd, since then no edge sits exactly at `k/2`. For odd
/// `k` the result satisfies both axioms.
pub fn clique_cover_labeling(g: &Graph, cliques: &[VertexSet]) -> Result<EdgeLabeling, LabelingError> {
    let n = g.n();
    let k = cliques.len();
    for (index, c) in cliques.iter().enumerate() {
        if c.iter().any(|&v| v >= n) || !g.is_clique(c.members()) {
            return Err(LabelingError::NotAClique { index });
        }
    }
    let mut count = vec![0usize; n];
    for c in cliques {
        for &v in c.iter() {
            count[v] += 1;
        }
    }
    let covered = |c: usize| if k % 2 == 1 { 3 * c >= k } else { 3 * c > k };
    if let Some(vertex) = (0..n).find(|&v| !covered(count[v])) {
        return Err(LabelingError::Uncovered {
            vertex,
            count: count[vertex],
            k,
        });
    }
    Ok(EdgeLabeling::from_fn(g, LabelMode::Strict, |u, v| {
        let hits = cliques
            .iter()
            .filter(|c| c.contains(u) || c.contains(v))
            .count();
        if 2 * hits > k {
            Label::Good
        } else {
            Label::Bad
        }
    }))
}

/// Cliques covering `V(g)` from a proper coloring of the complement with as
/// few colors as possible, at most three. `None` if the complement needs
/// four or more colors.
pub fn complement_3coloring_cliques(g: &Graph) -> Option<Vec<VertexSet>> {
    let h = complement(g);
    let n = h.n();
    if n == 0 {
        return Some(Vec::new());
    }
    (1..=3).find_map(|k| {
        let mut color = vec![usize::MAX; n];
        color_dsatur(&h, k, &mut color, 0).then(|| {
            let mut classes: Vec<VertexSet> = (0..k)
                .map(|c| (0..n).filter(|&v| color[v] == c).collect())
                .filter(|s: &VertexSet| !s.is_empty())
                .collect();
            classes.sort_by_key(|s| s.min());
            classes
        })
    })
}

/// Backtracking `k`-coloring, branching on the most saturated vertex.
fn color_dsatur(h: &Graph, k: usize, color: &mut [usize], colored: usize) -> bool {
    let n = h.n();
    if colored == n {
        return true;
    }
    let mut pick = None;
    let mut best = (0usize, 0usize);
    for v in (0..n).filter(|&v| color[v] == usize::MAX) {
        let mut seen = 0u64;
        for w in h.neighbors(v) {
            if color[w] != usize::MAX {
                seen |= 1 << color[w];
            }
        }
        let key = (seen.count_ones() as usize, h.degree(v));
        if pick.is_none() || key > best {
            pick = Some((v, seen));
            best = key;
        }
    }
    let (v, seen) = pick.expect("uncolored vertex");
    // colors above the largest used one are interchangeable
    let used = color.iter().filter(|&&c| c != usize::MAX).max().map_or(0, |&c| c + 1);
    for c in 0..k.min(used + 1) {
        if seen >> c & 1 == 0 {
            color[v] = c;
            if color_dsatur(h, k, color, colored + 1) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}
