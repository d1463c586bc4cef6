//! Constructions of complete minors, each returning a verified witness or a
//! structured reason for failing, and an orchestrator that runs them all.

use std::fmt;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{
    antitriangle, are_c_twins, max_clique, min_vertex_cut, separates, Graph, VertexSet,
};
use crate::labeling::{
    axiom_check, clique_cover_labeling, complement_3coloring_cliques, extract_aacw, refine_labeling,
    solve_2sat_labeling, AacwCertificate, AxiomViolation, ClauseRelations, EdgeLabeling, Label,
    LabelMode, LabelingError, RefineMode,
};
use crate::matching::{hall_matching, max_matching, HallOutcome};
use crate::structure::{recognize_blownup, BlowupMatch, BlowupTarget};
use crate::witness::{brute_force_max_minor, verify_minor, MinorWitness, Verdict, Violation};

/// Graphs up to this order also get the exhaustive oracle in `best_minor`.
pub const ORACLE_AUTO_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("graph has the stable set {{{0},{1},{2}}}")]
    Antitriangle(usize, usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("{0} does not separate the graph")]
    NotACutset(VertexSet),
    #[error("n = {0} is odd")]
    OddOrder(usize),
    #[error("labeling does not cover the edges of the graph")]
    LabelingMismatch,
    #[error("labeling breaks an axiom: {0}")]
    AxiomViolation(AxiomViolation),
}

/// Why a strategy produced no witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// The strategy does not apply to this input.
    NotApplicable(String),
    /// No labeling satisfies both axioms.
    AxiomInfeasible {
        certificate: Option<AacwCertificate>,
        edges: Vec<(usize, usize)>,
    },
    /// The good graph has no perfect matching: removing `tutte_set` leaves
    /// `odd_components`, `deficiency` more than `|tutte_set|`. Vertex ids
    /// refer to the graph the matching was attempted on.
    TutteBerge {
        tutte_set: VertexSet,
        odd_components: Vec<VertexSet>,
        deficiency: usize,
    },
    /// A perfect matching exists but its edges do not form a minor (only
    /// possible for medium labelings).
    MatchingNotMinor(Violation),
    /// Recognized a blown-up Petersen complement but built no witness.
    PetersenException,
    /// A construction produced prevertices that failed verification.
    InvalidWitness(Violation),
    Error(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NotApplicable(why) => write!(f, "not applicable: {why}"),
            Failure::AxiomInfeasible { certificate, .. } => match certificate {
                Some(c) => write!(f, "no valid labeling; certificate walk of length {}", c.len()),
                None => write!(f, "no valid labeling"),
            },
            Failure::TutteBerge {
                tutte_set,
                odd_components,
                deficiency,
            } => write!(
                f,
                "no perfect good matching: removing {tutte_set} leaves {} odd components (deficiency {deficiency})",
                odd_components.len()
            ),
            Failure::MatchingNotMinor(v) => write!(f, "perfect matching is not a minor: {v}"),
            Failure::PetersenException => write!(f, "blown-up Petersen complement without witness"),
            Failure::InvalidWitness(v) => write!(f, "construction failed verification: {v}"),
            Failure::Error(e) => write!(f, "error: {e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Witness(MinorWitness),
    Failure(Failure),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyReport {
    pub strategy: String,
    pub outcome: Outcome,
    /// Dominating edges removed before the strategy ran (original ids).
    pub peeled: Vec<(usize, usize)>,
    pub notes: Vec<String>,
}

impl StrategyReport {
    fn new(strategy: &str, outcome: Outcome) -> Self {
        StrategyReport {
            strategy: strategy.to_string(),
            outcome,
            peeled: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn failed(strategy: &str, failure: Failure) -> Self {
        StrategyReport::new(strategy, Outcome::Failure(failure))
    }

    pub fn witness(&self) -> Option<&MinorWitness> {
        match &self.outcome {
            Outcome::Witness(w) => Some(w),
            Outcome::Failure(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&Failure> {
        match &self.outcome {
            Outcome::Failure(f) => Some(f),
            Outcome::Witness(_) => None,
        }
    }

    /// Witness size, 0 on failure.
    pub fn size(&self) -> usize {
        self.witness().map_or(0, MinorWitness::size)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("strategy {}\n", self.strategy);
        let _ = writeln!(out, "size {}", self.size());
        if !self.peeled.is_empty() {
            let list: Vec<String> = self.peeled.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let _ = writeln!(out, "peeled {}", list.join(" "));
        }
        for note in &self.notes {
            let _ = writeln!(out, "note {note}");
        }
        match &self.outcome {
            Outcome::Witness(w) => out.push_str(&w.to_text()),
            Outcome::Failure(f) => {
                let _ = writeln!(out, "failure {f}");
            }
        }
        out
    }
}

/// Verify `prevertices` on `g` and wrap them as a report.
fn finish(g: &Graph, strategy: &str, prevertices: Vec<VertexSet>) -> StrategyReport {
    let w = MinorWitness::for_graph(g, prevertices);
    let outcome = match verify_minor(g, &w) {
        Ok(Verdict::Valid) => Outcome::Witness(w),
        Ok(Verdict::Invalid(v)) => Outcome::Failure(Failure::InvalidWitness(v)),
        Err(e) => Outcome::Failure(Failure::Error(e.to_string())),
    };
    StrategyReport::new(strategy, outcome)
}

fn require_antitriangle_free(g: &Graph) -> Result<(), StrategyError> {
    match antitriangle(g) {
        Some((a, b, c)) => Err(StrategyError::Antitriangle(a, b, c)),
        None => Ok(()),
    }
}

/// Result of repeatedly deleting dominating edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peeled {
    /// Removed edges in original ids, in removal order.
    pub prevertices: Vec<(usize, usize)>,
    pub residual: Graph,
    /// Vertex `i` of `residual` is vertex `kept[i]` of the input.
    pub kept: Vec<usize>,
}

impl Peeled {
    /// Peeled edges followed by a residual witness translated to input ids.
    pub fn lift(&self, residual_prevertices: &[VertexSet]) -> Vec<VertexSet> {
        self.prevertices
            .iter()
            .map(|&(u, v)| VertexSet::pair(u, v))
            .chain(residual_prevertices.iter().map(|p| p.map(|v| self.kept[v])))
            .collect()
    }
}

/// Remove the lexicographically first dominating edge until none is left.
/// Each removed edge touches everything removed after it and everything
/// left, so it extends any minor of the residual graph.
pub fn peel_dominating(g: &Graph) -> Peeled {
    let mut kept: Vec<usize> = (0..g.n()).collect();
    let mut residual = g.clone();
    let mut prevertices = Vec::new();
    while let Some((u, v)) = residual
        .edges()
        .into_iter()
        .find(|&(u, v)| residual.edge_reach(u, v).count_ones(..) == residual.n())
    {
        prevertices.push((kept[u], kept[v]));
        let keep: Vec<usize> = (0..residual.n()).filter(|&x| x != u && x != v).collect();
        residual = residual.induced(&keep);
        kept = keep.iter().map(|&x| kept[x]).collect();
    }
    Peeled {
        prevertices,
        residual,
        kept,
    }
}

/// Greedy maximal packing of vertex-disjoint induced paths on three
/// vertices (triples in lexicographic order), plus the larger of the at
/// most two cliques left over. Has size at least `n/3` on graphs without
/// a stable set of size three.
pub fn p3_packing_minor(g: &Graph) -> Result<MinorWitness, StrategyError> {
    require_antitriangle_free(g)?;
    let n = g.n();
    let mut free = vec![true; n];
    let mut prevertices = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if !(free[a] && free[b] && free[c]) {
                    continue;
                }
                let edges = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)];
                if edges.iter().filter(|&&e| e).count() == 2 {
                    free[a] = false;
                    free[b] = false;
                    free[c] = false;
                    prevertices.push(VertexSet::from(vec![a, b, c]));
                }
            }
        }
    }
    let mut active = FixedBitSet::with_capacity(n);
    for v in (0..n).filter(|&v| free[v]) {
        active.insert(v);
    }
    let comps = g.components_within(&active);
    if let Some(best) = comps.iter().max_by_key(|c| (c.len(), std::cmp::Reverse(c[0]))) {
        debug_assert!(g.is_clique(best), "leftover of a maximal packing is a clique");
        prevertices.extend(best.iter().map(|&v| VertexSet::singleton(v)));
    }
    let w = MinorWitness::for_graph(g, prevertices);
    assert!(3 * w.size() >= n, "packing bound failed");
    Ok(w)
}

/// Counts gathered while building the edge conflict coloring.
#[derive(Clone, Debug, PartialEq)]
pub struct ConflictStats {
    pub m: usize,
    /// Edges dropped for touching few vertices (`E'`).
    pub dropped: usize,
    pub average_far: f64,
    /// Largest conflict degree among kept edges.
    pub max_degree_kept: usize,
    pub colors: usize,
    /// `sum over v of C(n - 1 - d(v), 2)`.
    pub vedges_by_vertex: u64,
    /// `sum over edges e of |far(e)|`, where `far(e)` is the set of
    /// vertices not touching `e`.
    pub vedges_by_edge: u64,
}

impl ConflictStats {
    /// `ceil((m - |E'|) / (max_degree_kept + 1))`.
    pub fn size_bound(&self) -> usize {
        (self.m - self.dropped).div_ceil(self.max_degree_kept + 1)
    }
}

/// Two edges conflict when they share an end or do not touch; a set of
/// pairwise non-conflicting edges is a family of prevertices. Edges whose
/// far set is at least twice the average are dropped, the rest are greedily
/// colored in order of increasing conflict degree, and the largest color
/// class is returned. Conflicts are evaluated on the fly.
pub fn conflict_graph_minor(g: &Graph) -> Result<(MinorWitness, ConflictStats), StrategyError> {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return Err(StrategyError::NoEdges);
    }
    let far: Vec<FixedBitSet> = edges
        .iter()
        .map(|&(u, v)| {
            let mut s = g.edge_reach(u, v);
            s.toggle_range(..);
            s
        })
        .collect();
    let far_len: Vec<usize> = far.iter().map(|s| s.count_ones(..)).collect();
    let vedges_by_edge: u64 = far_len.iter().map(|&k| k as u64).sum();
    let vedges_by_vertex: u64 = (0..n)
        .map(|v| {
            let k = (n - 1 - g.degree(v)) as u64;
            k * k.saturating_sub(1) / 2
        })
        .sum();
    let average_far = vedges_by_edge as f64 / m as f64;
    let degree: Vec<usize> = edges
        .iter()
        .zip(&far)
        .map(|(&(u, v), f)| {
            let sharing = g.degree(u) + g.degree(v) - 2;
            let inside: usize = f.ones().map(|x| g.row(x).intersection(f).count()).sum();
            sharing + inside / 2
        })
        .collect();
    let kept: Vec<usize> = (0..m)
        .filter(|&e| !(far_len[e] > 0 && far_len[e] as f64 >= 2.0 * average_far))
        .collect();
    let dropped = m - kept.len();
    let max_degree_kept = kept.iter().map(|&e| degree[e]).max().unwrap_or(0);
    let mut order = kept;
    order.sort_by_key(|&e| (degree[e], e));

    // per color: endpoint set and the partner of every covered vertex
    let mut used: Vec<FixedBitSet> = Vec::new();
    let mut partner: Vec<Vec<usize>> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &e in &order {
        let (u, v) = edges[e];
        let fits = |c: usize| {
            !used[c].contains(u)
                && !used[c].contains(v)
                && far[e]
                    .ones()
                    .all(|x| partner[c][x] == usize::MAX || !far[e].contains(partner[c][x]))
        };
        let c = (0..classes.len()).find(|&c| fits(c)).unwrap_or_else(|| {
            used.push(FixedBitSet::with_capacity(n));
            partner.push(vec![usize::MAX; n]);
            classes.push(Vec::new());
            classes.len() - 1
        });
        used[c].insert(u);
        used[c].insert(v);
        partner[c][u] = v;
        partner[c][v] = u;
        classes[c].push(e);
    }
    let best = classes
        .iter()
        .max_by_key(|c| c.len())
        .expect("at least one kept edge");
    let stats = ConflictStats {
        m,
        dropped,
        average_far,
        max_degree_kept,
        colors: classes.len(),
        vedges_by_vertex,
        vedges_by_edge,
    };
    let prevertices = best
        .iter()
        .map(|&e| VertexSet::pair(edges[e].0, edges[e].1))
        .collect();
    let w = MinorWitness::for_graph(g, prevertices);
    assert!(w.size() >= stats.size_bound(), "greedy coloring bound failed");
    Ok((w, stats))
}

/// How a cutset construction went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutsetTrace {
    /// The inclusion-minimal cutset finally used.
    pub cutset: VertexSet,
    /// Clique whose vertices became singleton prevertices.
    pub singles: VertexSet,
    /// Clique the matching went into.
    pub other: VertexSet,
    pub matching: Vec<(usize, usize)>,
    /// Times a Hall violation replaced the cutset by a smaller one.
    pub shrinks: usize,
}

fn shrink_to_minimal(g: &Graph, cut: &mut Vec<usize>) {
    let mut i = 0;
    while i < cut.len() {
        let mut trial = cut.clone();
        trial.remove(i);
        if separates(g, &trial) {
            *cut = trial;
        } else {
            i += 1;
        }
    }
}

fn non_neighbor(g: &Graph, v: usize, set: &[usize]) -> Option<usize> {
    set.iter().copied().find(|&w| w != v && !g.has_edge(v, w))
}

/// Complete minor from a small cutset. The two sides left by a minimal
/// cutset are cliques, and each cutset vertex is complete to one of them.
/// One side contributes singletons and cutset vertices complete to it are
/// matched into the other side. A failing Hall condition exhibits a smaller
/// cutset, which replaces the current one.
pub fn cutset_minor(g: &Graph, m: &VertexSet) -> Result<(MinorWitness, CutsetTrace), StrategyError> {
    let n = g.n();
    if m.iter().any(|&v| v >= n) || !separates(g, m.members()) {
        return Err(StrategyError::NotACutset(m.clone()));
    }
    let mut cut = m.clone().into_vec();
    let mut shrinks = 0;
    loop {
        shrink_to_minimal(g, &mut cut);
        let mut active = FixedBitSet::with_capacity(n);
        active.insert_range(..);
        for &v in &cut {
            active.set(v, false);
        }
        let comps = g.components_within(&active);
        if comps.len() > 2 {
            return Err(StrategyError::Antitriangle(comps[0][0], comps[1][0], comps[2][0]));
        }
        let (left, right) = (&comps[0], &comps[1]);
        for (side, other) in [(left, right), (right, left)] {
            for &v in side {
                if let Some(w) = non_neighbor(g, v, side) {
                    let mut t = [v, w, other[0]];
                    t.sort_unstable();
                    return Err(StrategyError::Antitriangle(t[0], t[1], t[2]));
                }
            }
        }
        let to_left: Vec<usize> = cut.iter().copied().filter(|&x| g.complete_to(&[x], left)).collect();
        let to_right: Vec<usize> = cut.iter().copied().filter(|&x| g.complete_to(&[x], right)).collect();
        if let Some(&x) = cut.iter().find(|x| !to_left.contains(x) && !to_right.contains(x)) {
            let a = non_neighbor(g, x, left).expect("not complete to left");
            let b = non_neighbor(g, x, right).expect("not complete to right");
            let mut t = [x, a, b];
            t.sort_unstable();
            return Err(StrategyError::Antitriangle(t[0], t[1], t[2]));
        }
        let score_left = (left.len() + to_left.len()).min(left.len() + right.len());
        let score_right = (right.len() + to_right.len()).min(left.len() + right.len());
        let (singles, other, toward) = if score_left >= score_right {
            (left, right, &to_left)
        } else {
            (right, left, &to_right)
        };
        let take = toward.len().min(other.len());
        let a: VertexSet = toward[..take].iter().copied().collect();
        let b: VertexSet = other.iter().copied().collect();
        match hall_matching(g, &a, &b).expect("cutset and sides are disjoint") {
            HallOutcome::Matching(pairs) => {
                let mut prevertices: Vec<VertexSet> =
                    singles.iter().map(|&v| VertexSet::singleton(v)).collect();
                prevertices.extend(pairs.iter().map(|&(x, y)| VertexSet::pair(x, y)));
                let w = MinorWitness::for_graph(g, prevertices);
                if 2 * m.len() <= n {
                    assert!(2 * w.size() >= n, "cutset bound failed");
                }
                let trace = CutsetTrace {
                    cutset: VertexSet::from(cut),
                    singles: singles.iter().copied().collect(),
                    other: b,
                    matching: pairs,
                    shrinks,
                };
                return Ok((w, trace));
            }
            HallOutcome::Violation { set, neighborhood } => {
                // (cut - S) + (N(S) in other) separates singles + S from the
                // rest of other, and is smaller
                cut.retain(|v| !set.contains(*v));
                cut.extend(neighborhood.iter().copied());
                cut.sort_unstable();
                debug_assert!(separates(g, &cut));
                shrinks += 1;
            }
        }
    }
}

/// Edges of `K_5` as pairs of `{0..4}` in lexicographic order; index `i`
/// is vertex `i` of the Petersen complement.
fn k5_edge_index(a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    (0..a).map(|i| 4 - i).sum::<usize>() + (b - a - 1)
}

/// Five paths of length two that partition the edges of `K_5`; any two of
/// them share a vertex of `K_5`.
const K5_PATHS: [[(usize, usize); 2]; 5] = [
    [(0, 1), (1, 2)],
    [(2, 3), (3, 4)],
    [(4, 0), (0, 2)],
    [(2, 4), (4, 1)],
    [(1, 3), (3, 0)],
];

/// A `K_5` minor of a blown-up Petersen complement: each path of
/// `K5_PATHS` becomes an edge between two class representatives.
fn petersen_k5(found: &BlowupMatch) -> Vec<VertexSet> {
    let mut class_of_target = vec![0; found.to_target.len()];
    for (class, &t) in found.to_target.iter().enumerate() {
        class_of_target[t] = class;
    }
    let rep = |t: usize| found.classes[class_of_target[t]].members()[0];
    K5_PATHS
        .iter()
        .map(|&[(a, b), (c, d)]| VertexSet::pair(rep(k5_edge_index(a, b)), rep(k5_edge_index(c, d))))
        .collect()
}

/// Perfect matching of the edges between different c-twin classes, if any.
fn cross_class_matching(g: &Graph) -> Option<Vec<VertexSet>> {
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        if !are_c_twins(g, u, v) {
            h.add_edge(u, v);
        }
    }
    let mm = max_matching(&h);
    mm.is_perfect(&h)
        .then(|| mm.pairs.iter().map(|&(u, v)| VertexSet::pair(u, v)).collect())
}

/// Branch taken by `good_matching_minor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoodMatchingBranch {
    Empty,
    Cutset,
    Clique,
    Petersen,
    Matching,
}

impl fmt::Display for GoodMatchingBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GoodMatchingBranch::Empty => "peeled-everything",
            GoodMatchingBranch::Cutset => "cutset",
            GoodMatchingBranch::Clique => "clique",
            GoodMatchingBranch::Petersen => "petersen-complement",
            GoodMatchingBranch::Matching => "good-matching",
        })
    }
}

/// `K_{n/2}` minor from a good/bad labeling of an even-order graph: peel
/// dominating edges, then use a small cutset, a big clique, the blown-up
/// Petersen complement construction, or a perfect matching of good edges.
/// When none applies the Tutte–Berge obstruction of the good graph is
/// reported instead.
pub fn good_matching_minor(g: &Graph, lab: &EdgeLabeling) -> Result<StrategyReport, StrategyError> {
    good_matching_named(g, lab, "good-matching")
}

fn good_matching_named(g: &Graph, lab: &EdgeLabeling, name: &str) -> Result<StrategyReport, StrategyError> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(StrategyError::OddOrder(n));
    }
    if !lab.is_total_on(g) {
        return Err(StrategyError::LabelingMismatch);
    }
    if let Some(&v) = axiom_check(g, lab).first() {
        return Err(StrategyError::AxiomViolation(v));
    }
    let peeled = peel_dominating(g);
    let h = &peeled.residual;
    let hn = h.n();
    let (branch, residual_report) = 'pick: {
        if hn == 0 {
            break 'pick (GoodMatchingBranch::Empty, Ok(Vec::new()));
        }
        if let Some(cut) = min_vertex_cut(h).filter(|c| 2 * c.size <= hn) {
            let result = cutset_minor(h, &cut.vertices).map(|(w, _)| w.prevertices);
            break 'pick (GoodMatchingBranch::Cutset, result.map_err(|e| Failure::Error(e.to_string())));
        }
        let clique = max_clique(h);
        if 2 * clique.len() >= hn {
            let singles = clique.iter().map(|&v| VertexSet::singleton(v)).collect();
            break 'pick (GoodMatchingBranch::Clique, Ok(singles));
        }
        if let Some(found) = recognize_blownup(h, BlowupTarget::PetersenComplement) {
            let k5 = petersen_k5(&found);
            let best = match cross_class_matching(h) {
                Some(pairs) if pairs.len() > k5.len() => pairs,
                _ => k5,
            };
            break 'pick (GoodMatchingBranch::Petersen, Ok(best));
        }
        let sub_lab = lab.restrict(g, &peeled.kept);
        let good = sub_lab.good_graph(hn);
        let mm = max_matching(&good);
        let result = if mm.is_perfect(&good) {
            let pairs: Vec<VertexSet> = mm.pairs.iter().map(|&(u, v)| VertexSet::pair(u, v)).collect();
            let w = MinorWitness::new(pairs.clone());
            match verify_minor(h, &w) {
                Ok(Verdict::Valid) => Ok(pairs),
                Ok(Verdict::Invalid(v)) => Err(Failure::MatchingNotMinor(v)),
                Err(e) => Err(Failure::Error(e.to_string())),
            }
        } else {
            let to_input = |s: &VertexSet| s.map(|v| peeled.kept[v]);
            let odd = mm.odd_components(&good);
            Err(Failure::TutteBerge {
                tutte_set: to_input(&mm.tutte_set),
                deficiency: mm.deficiency(&good),
                odd_components: odd.iter().map(to_input).collect(),
            })
        };
        (GoodMatchingBranch::Matching, result)
    };
    let mut report = match residual_report {
        Ok(prevertices) => finish(g, name, peeled.lift(&prevertices)),
        Err(f) => StrategyReport::failed(name, f),
    };
    report.peeled = peeled.prevertices.clone();
    report.notes.push(format!("branch {branch}"));
    Ok(report)
}

/// All strategy reports for one graph, best first, with the exhaustive
/// oracle's answer for small graphs.
#[derive(Clone, Debug)]
pub struct Analysis {
    /// Sorted by witness size (descending), then strategy name.
    pub reports: Vec<StrategyReport>,
    /// Largest minor with prevertices of size at most two, for small graphs.
    pub oracle: Option<MinorWitness>,
    pub in_class: bool,
}

impl Analysis {
    pub fn best(&self) -> Option<&StrategyReport> {
        self.reports.first().filter(|r| r.witness().is_some())
    }

    pub fn best_size(&self) -> usize {
        self.best().map_or(0, StrategyReport::size)
    }

    /// Largest size among witnesses that only use vertices and edges.
    pub fn best_compliant_size(&self) -> usize {
        self.reports
            .iter()
            .filter_map(|r| r.witness())
            .filter(|w| w.ssh_compliant())
            .map(MinorWitness::size)
            .max()
            .unwrap_or(0)
    }

    /// Oracle size minus the best compliant witness size.
    pub fn gap(&self) -> Option<usize> {
        self.oracle
            .as_ref()
            .map(|o| o.size().saturating_sub(self.best_compliant_size()))
    }

    pub fn report(&self, strategy: &str) -> Option<&StrategyReport> {
        self.reports.iter().find(|r| r.strategy == strategy)
    }
}

/// Labelings tried by `best_minor`, by strategy name.
fn candidate_labelings(h: &Graph) -> Vec<(&'static str, Result<EdgeLabeling, Failure>)> {
    let mut out = Vec::new();
    let two_sat = solve_2sat_labeling(h, &[]).map_err(|_| {
        let rel = ClauseRelations::of_graph(h);
        let certificate = extract_aacw(&rel).ok().flatten();
        Failure::AxiomInfeasible {
            certificate,
            edges: h.edges(),
        }
    });
    out.push(("good-matching/2sat", two_sat));
    let cover = match complement_3coloring_cliques(h) {
        Some(cliques) => clique_cover_labeling(h, &cliques)
            .map_err(|e| Failure::NotApplicable(e.to_string()))
            .and_then(|lab| match axiom_check(h, &lab).first() {
                Some(v) => Err(Failure::NotApplicable(format!("cover labeling breaks an axiom: {v}"))),
                None => Ok(lab),
            }),
        None => Err(Failure::NotApplicable("complement is not 3-colorable".into())),
    };
    out.push(("good-matching/clique-cover", cover));
    let cor1 = refine_labeling(h, RefineMode::Cor1).map_err(|e| match e {
        LabelingError::Infeasible => Failure::AxiomInfeasible {
            certificate: None,
            edges: h.edges(),
        },
        other => Failure::Error(other.to_string()),
    });
    out.push(("good-matching/cor1", cor1));
    let cor2 = refine_labeling(h, RefineMode::Cor2).map_err(|e| Failure::Error(e.to_string()));
    out.push(("good-matching/cor2", cor2));
    out
}

/// Run every applicable strategy on `g` and rank the results.
pub fn best_minor(g: &Graph) -> Analysis {
    let n = g.n();
    let in_class = antitriangle(g).is_none();
    let mut reports = Vec::new();

    let clique = max_clique(g);
    reports.push(finish(
        g,
        "clique",
        clique.iter().map(|&v| VertexSet::singleton(v)).collect(),
    ));

    let peeled = peel_dominating(g);
    let h = &peeled.residual;
    let with_peel = |mut r: StrategyReport| {
        r.peeled = peeled.prevertices.clone();
        r
    };
    let lifted = |name: &str, prevertices: Vec<VertexSet>| with_peel(finish(g, name, peeled.lift(&prevertices)));
    let skip = |name: &str, why: &str| with_peel(StrategyReport::failed(name, Failure::NotApplicable(why.into())));

    match conflict_graph_minor(h) {
        Ok((w, stats)) => {
            let mut r = lifted("conflict-graph", w.prevertices);
            r.notes.push(format!(
                "dropped {} of {} edges, {} colors, bound {}",
                stats.dropped,
                stats.m,
                stats.colors,
                stats.size_bound()
            ));
            reports.push(r);
        }
        Err(e) => reports.push(skip("conflict-graph", &e.to_string())),
    }

    if !in_class {
        let why = "graph has a stable set of size three";
        for name in [
            "p3-packing",
            "cutset",
            "good-matching/2sat",
            "good-matching/clique-cover",
            "good-matching/cor1",
            "good-matching/cor2",
        ] {
            reports.push(skip(name, why));
        }
    } else {
        match p3_packing_minor(h) {
            Ok(w) => reports.push(lifted("p3-packing", w.prevertices)),
            Err(e) => reports.push(skip("p3-packing", &e.to_string())),
        }
        match min_vertex_cut(h) {
            Some(cut) if 2 * cut.size <= h.n() => match cutset_minor(h, &cut.vertices) {
                Ok((w, _)) => reports.push(lifted("cutset", w.prevertices)),
                Err(e) => reports.push(skip("cutset", &e.to_string())),
            },
            Some(cut) => reports.push(skip("cutset", &format!("smallest cutset has {} vertices", cut.size))),
            None => reports.push(skip("cutset", "no cutset")),
        }
        for (name, lab) in candidate_labelings(h) {
            let report = match lab {
                Err(f) => with_peel(StrategyReport::failed(name, f)),
                Ok(_) if h.n() % 2 == 1 => skip(name, "odd number of vertices"),
                Ok(lab) => match good_matching_named(h, &lab, name) {
                    Ok(r) => {
                        let mut lifted_report = match r.outcome {
                            Outcome::Witness(w) => lifted(name, w.prevertices),
                            Outcome::Failure(Failure::TutteBerge {
                                tutte_set,
                                odd_components,
                                deficiency,
                            }) => with_peel(StrategyReport::failed(
                                name,
                                Failure::TutteBerge {
                                    tutte_set: tutte_set.map(|v| peeled.kept[v]),
                                    odd_components: odd_components
                                        .iter()
                                        .map(|c| c.map(|v| peeled.kept[v]))
                                        .collect(),
                                    deficiency,
                                },
                            )),
                            Outcome::Failure(f) => with_peel(StrategyReport::failed(name, f)),
                        };
                        if lab.mode == LabelMode::Medium {
                            lifted_report.notes.push("medium labeling".into());
                        }
                        lifted_report.notes.extend(r.notes);
                        lifted_report
                    }
                    Err(e) => skip(name, &e.to_string()),
                },
            };
            reports.push(report);
        }
    }

    reports.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| a.strategy.cmp(&b.strategy)));
    let oracle = (n <= ORACLE_AUTO_N)
        .then(|| brute_force_max_minor(g, 2).ok())
        .flatten();
    Analysis {
        reports,
        oracle,
        in_class,
    }
}

/// Good edges of a labeling, for reporting.
pub fn good_edges(lab: &EdgeLabeling) -> Vec<(usize, usize)> {
    lab.iter()
        .filter(|&(_, l)| l == Label::Good)
        .map(|(e, _)| e)
        .collect()
}
