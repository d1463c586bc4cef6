use crate::graph::{are_c_twins, Graph};

use super::{
    axiom_check_with, solve_relations, ClauseRelations, EdgeIndex, EdgeLabeling, Label, LabelMode,
    LabelingError, Relation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefineMode {
    /// Both axioms, edges between c-twins bad, good class flip-maximal.
    Cor1,
    /// Medium mode, edges between c-twins bad, few untouching medium pairs.
    Cor2,
}

/// A refined labeling together with the number of untouching medium (good)
/// pairs after the start and after every accepted flip.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub labeling: EdgeLabeling,
    pub untouching_history: Vec<usize>,
}

pub fn refine_labeling(g: &Graph, mode: RefineMode) -> Result<EdgeLabeling, LabelingError> {
    refine_with_trace(g, mode).map(|r| r.labeling)
}

/// Number of untouching pairs whose edges are both labeled good.
pub fn untouching_medium_pairs(g: &Graph, lab: &EdgeLabeling) -> usize {
    let rel = ClauseRelations::of_graph(g);
    count_untouching_good(&rel, lab.labels())
}

fn count_untouching_good(rel: &ClauseRelations, labels: &[Label]) -> usize {
    rel.untouching
        .iter()
        .filter(|&&(i, j)| labels[i] == Label::Good && labels[j] == Label::Good)
        .count()
}

pub fn refine_with_trace(g: &Graph, mode: RefineMode) -> Result<Refinement, LabelingError> {
    let index = EdgeIndex::new(g);
    let rel = ClauseRelations::with_index(g, &index);
    let edges = index.edges().to_vec();
    let twin: Vec<bool> = edges.iter().map(|&(u, v)| are_c_twins(g, u, v)).collect();
    let forced: Vec<(usize, Label)> = (0..edges.len())
        .filter(|&e| twin[e])
        .map(|e| (e, Label::Bad))
        .collect();
    let untouch = rel.adjacency(Relation::Untouching);
    let open = rel.adjacency(Relation::OpenPath);
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(untouch[e].len()), e));

    let start = solve_relations(&rel, &forced);
    let (mut labels, label_mode) = match (mode, start) {
        (RefineMode::Cor1, None) => return Err(LabelingError::Infeasible),
        (RefineMode::Cor1, Some(l)) => (l, LabelMode::Strict),
        (RefineMode::Cor2, Some(l)) => (l, LabelMode::Medium),
        (RefineMode::Cor2, None) => (
            twin.iter()
                .map(|&t| if t { Label::Bad } else { Label::Good })
                .collect(),
            LabelMode::Medium,
        ),
    };

    let mut history = vec![count_untouching_good(&rel, &labels)];
    let good_partners = |labels: &[Label], e: usize| {
        untouch[e].iter().filter(|&&f| labels[f] == Label::Good).count()
    };
    loop {
        let mut changed = false;
        for &e in &order {
            if twin[e] {
                continue;
            }
            let partners = good_partners(&labels, e);
            let flip = match (mode, labels[e]) {
                // becoming good must keep every good pair touching
                (RefineMode::Cor1, Label::Bad) => partners == 0,
                (RefineMode::Cor1, Label::Good) => false,
                // adding a medium edge is an improvement only if it adds no
                // untouching medium pair
                (RefineMode::Cor2, Label::Bad) => partners == 0,
                // removing one must lower the count and keep the bad axiom
                (RefineMode::Cor2, Label::Good) => {
                    partners > 0 && open[e].iter().all(|&f| labels[f] == Label::Good)
                }
            };
            if flip {
                let before = *history.last().expect("start");
                labels[e] = match labels[e] {
                    Label::Good => Label::Bad,
                    Label::Bad => Label::Good,
                };
                let after = match labels[e] {
                    Label::Good => before + partners,
                    Label::Bad => before - partners,
                };
                history.push(after);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let labeling = EdgeLabeling::from_parts(edges, labels, label_mode);
    debug_assert!(mode == RefineMode::Cor2 || axiom_check_with(&rel, &labeling).is_empty());
    Ok(Refinement {
        labeling,
        untouching_history: history,
    })
}
