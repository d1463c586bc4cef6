use crate::graph::Graph;

use super::{ClauseRelations, EdgeIndex, EdgeLabeling, Label, LabelMode, LabelingError};

/// Implication-graph 2-SAT over variables `0..k`. Literal `2x` is "x is
/// good", `2x + 1` is "x is bad".
#[derive(Clone, Debug)]
pub struct TwoSat {
    vars: usize,
    imp: Vec<Vec<usize>>,
}

#[inline]
pub(crate) fn good(x: usize) -> usize {
    2 * x
}

#[inline]
pub(crate) fn bad(x: usize) -> usize {
    2 * x + 1
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat {
            vars,
            imp: vec![Vec::new(); 2 * vars],
        }
    }

    /// Clause `a ∨ b` on literals.
    pub fn either(&mut self, a: usize, b: usize) {
        self.imp[a ^ 1].push(b);
        self.imp[b ^ 1].push(a);
    }

    pub fn force(&mut self, lit: usize) {
        self.either(lit, lit);
    }

    pub fn from_relations(rel: &ClauseRelations) -> Self {
        let mut sat = TwoSat::new(rel.order);
        for &(i, j) in &rel.untouching {
            sat.either(bad(i), bad(j));
        }
        for &(i, j) in &rel.open_paths {
            sat.either(good(i), good(j));
        }
        sat
    }

    pub(crate) fn implications(&self) -> &[Vec<usize>] {
        &self.imp
    }

    /// Strongly connected components, numbered in Tarjan completion order
    /// (sinks of the condensation first).
    pub fn components(&self) -> Vec<usize> {
        let n = self.imp.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut comp = vec![usize::MAX; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut next_index = 0;
        let mut next_comp = 0;
        let mut frames: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            frames.push((root, 0));
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
                if let Some(&w) = self.imp[v].get(*pos) {
                    *pos += 1;
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        frames.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
        comp
    }

    /// A satisfying assignment (`true` = good), or `None`. The assignment
    /// sets each variable to the literal whose component comes later in
    /// topological order.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let comp = self.components();
        (0..self.vars)
            .map(|x| {
                let (g, b) = (comp[good(x)], comp[bad(x)]);
                (g != b).then_some(g < b)
            })
            .collect()
    }
}

/// Solve the labeling constraints of `rel`, returning one label per element.
pub fn solve_relations(rel: &ClauseRelations, forced: &[(usize, Label)]) -> Option<Vec<Label>> {
    let mut sat = TwoSat::from_relations(rel);
    for &(x, l) in forced {
        sat.force(match l {
            Label::Good => good(x),
            Label::Bad => bad(x),
        });
    }
    sat.solve().map(|a| {
        a.into_iter()
            .map(|g| if g { Label::Good } else { Label::Bad })
            .collect()
    })
}

/// A labeling of `g` satisfying both axioms and the forced labels, if one
/// exists.
pub fn solve_2sat_labeling(
    g: &Graph,
    forced: &[((usize, usize), Label)],
) -> Result<EdgeLabeling, LabelingError> {
    let index = EdgeIndex::new(g);
    let mut unit = Vec::with_capacity(forced.len());
    for &((u, v), l) in forced {
        let id = (u < g.n() && v < g.n())
            .then(|| index.id(u, v))
            .flatten()
            .ok_or(LabelingError::NotAnEdge { u, v })?;
        unit.push((id, l));
    }
    let rel = ClauseRelations::with_index(g, &index);
    let labels = solve_relations(&rel, &unit).ok_or(LabelingError::Infeasible)?;
    Ok(EdgeLabeling::from_parts(
        index.edges().to_vec(),
        labels,
        LabelMode::Strict,
    ))
}
