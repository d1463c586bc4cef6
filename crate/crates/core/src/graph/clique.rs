use fixedbitset::FixedBitSet;

use super::{Graph, VertexSet};

/// Maximum clique by branch and bound with a greedy-coloring bound
/// (Tomita-style). Practical up to roughly a hundred vertices on the dense
/// graphs this crate deals with.
pub fn max_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut best = Vec::new();
    let mut current = Vec::new();
    // initial order: degree descending
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    expand(g, &mut current, order, &mut best);
    best.into()
}

/// Greedy coloring of `cands` in order; returns vertices sorted by color and
/// each vertex's color number (1-based).
fn color_sort(g: &Graph, cands: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_rows: Vec<FixedBitSet> = Vec::new();
    for &v in cands {
        let k = class_rows
            .iter()
            .position(|row| row.is_disjoint(g.row(v)))
            .unwrap_or_else(|| {
                classes.push(Vec::new());
                class_rows.push(FixedBitSet::with_capacity(g.n()));
                classes.len() - 1
            });
        classes[k].push(v);
        class_rows[k].insert(v);
    }
    let mut order = Vec::with_capacity(cands.len());
    let mut colors = Vec::with_capacity(cands.len());
    for (k, class) in classes.into_iter().enumerate() {
        for v in class {
            order.push(v);
            colors.push(k + 1);
        }
    }
    (order, colors)
}

fn expand(g: &Graph, current: &mut Vec<usize>, cands: Vec<usize>, best: &mut Vec<usize>) {
    let (order, colors) = color_sort(g, &cands);
    let mut remaining = order.clone();
    for i in (0..order.len()).rev() {
        if current.len() + colors[i] <= best.len() {
            return;
        }
        let v = order[i];
        current.push(v);
        let next: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&w| w != v && g.has_edge(v, w))
            .collect();
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        remaining.retain(|&w| w != v);
    }
}
