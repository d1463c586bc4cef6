//! Dipole structure of a labeled graph split into two sides with no good
//! edge between them, and recognition of blown-up Petersen and V8
//! complements.
//!
//! Within a side, the components of bad edges and non-edges are *dipoles*.
//! Each dipole splits into two cliques (*poles*) that see complementary
//! parts of the other side. A left and a right dipole are matched
//! *straight* when top meets top and bottom meets bottom, and *twisted*
//! when top meets bottom.

use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::generators::{petersen, v8};
use crate::graph::{c_twin_classes, complement, Graph, VertexSet};
use crate::labeling::{EdgeLabeling, Label, LabelMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Straight,
    Twisted,
}

impl Twist {
    pub fn symbol(self) -> char {
        match self {
            Twist::Straight => 'S',
            Twist::Twisted => 'T',
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Twist::Straight => Twist::Twisted,
            Twist::Twisted => Twist::Straight,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dipole {
    /// The pole holding the dipole's smallest vertex.
    pub top: VertexSet,
    pub bottom: VertexSet,
}

impl Dipole {
    pub fn is_proper(&self) -> bool {
        !self.top.is_empty() && !self.bottom.is_empty()
    }

    pub fn len(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> VertexSet {
        self.top.iter().chain(self.bottom.iter()).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DipoleDecomposition {
    pub left: VertexSet,
    pub right: VertexSet,
    /// Ordered by smallest vertex.
    pub left_dipoles: Vec<Dipole>,
    pub right_dipoles: Vec<Dipole>,
    /// `matrix[i][j]` matches left dipole `i` with right dipole `j`.
    pub matrix: Vec<Vec<Twist>>,
}

impl DipoleDecomposition {
    pub fn dipoles(&self, side: Side) -> &[Dipole] {
        match side {
            Side::Left => &self.left_dipoles,
            Side::Right => &self.right_dipoles,
        }
    }

    pub fn to_tspec(&self) -> TGraphSpec {
        let sizes = |ds: &[Dipole]| ds.iter().map(|d| (d.top.len(), d.bottom.len())).collect();
        TGraphSpec {
            twists: self.matrix.clone(),
            left_poles: sizes(&self.left_dipoles),
            right_poles: sizes(&self.right_dipoles),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("labeling does not cover the edges of the graph")]
    LabelingMismatch,
    #[error("good edge ({u},{v}) crosses between the sides")]
    CrossingGoodEdge { u: usize, v: usize },
    #[error("non-edge ({u},{v}) closes an odd cycle of non-edges and bad edges")]
    OddNonEdgeCycle { u: usize, v: usize },
    #[error("bad edge ({u},{v}) would have to join a pole to its antipole")]
    BadEdgeAcrossPoles { u: usize, v: usize },
    #[error("edge ({u},{v}) joins a pole to its antipole")]
    PoleTouchesAntipole { u: usize, v: usize },
    #[error("{u} and {v} share a pole but see different parts of the {side} side's complement")]
    NotCoupled { side: Side, u: usize, v: usize },
    #[error("poles of {side} dipole {dipole} do not see complementary parts of the other side")]
    NotAnticoupled { side: Side, dipole: usize },
    #[error("left dipole {left} and right dipole {right} are matched neither straight nor twisted")]
    Unmatched { left: usize, right: usize },
}

fn set_of(n: usize, vs: &[usize]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for &v in vs {
        s.insert(v);
    }
    s
}

/// Dipoles of one side: components of bad edges and non-edges, each
/// 2-colored so that non-edges join different poles and bad edges join
/// the same pole.
fn split_side(g: &Graph, lab: &EdgeLabeling, side: &[usize]) -> Result<Vec<Dipole>, DecomposeError> {
    let n = g.n();
    let inside = set_of(n, side);
    // +1 same pole (bad edge), -1 other pole (non-edge)
    let link = |u: usize, v: usize| -> Option<bool> {
        if !g.has_edge(u, v) {
            Some(false)
        } else if lab.get(u, v) == Some(Label::Bad) {
            Some(true)
        } else {
            None
        }
    };
    let mut color = vec![u8::MAX; n];
    let mut dipoles = Vec::new();
    for &root in side {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut members = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in inside.ones().filter(|&v| v != u) {
                let Some(same) = link(u, v) else { continue };
                let want = if same { color[u] } else { 1 - color[u] };
                if color[v] == u8::MAX {
                    color[v] = want;
                    members.push(v);
                    queue.push_back(v);
                } else if color[v] != want {
                    let (a, b) = (u.min(v), u.max(v));
                    return Err(if same {
                        DecomposeError::BadEdgeAcrossPoles { u: a, v: b }
                    } else {
                        DecomposeError::OddNonEdgeCycle { u: a, v: b }
                    });
                }
            }
        }
        members.sort_unstable();
        let top: VertexSet = members.iter().copied().filter(|&v| color[v] == 0).collect();
        let bottom: VertexSet = members.iter().copied().filter(|&v| color[v] == 1).collect();
        dipoles.push(Dipole { top, bottom });
    }
    Ok(dipoles)
}

fn check_side(g: &Graph, dipoles: &[Dipole], side: Side, other: &FixedBitSet) -> Result<(), DecomposeError> {
    let view = |v: usize| {
        let mut s = g.row(v).clone();
        s.intersect_with(other);
        s
    };
    for d in dipoles {
        for &u in d.top.iter() {
            if let Some(&v) = d.bottom.iter().find(|&&v| g.has_edge(u, v)) {
                return Err(DecomposeError::PoleTouchesAntipole {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
    }
    for d in dipoles {
        for pole in [&d.top, &d.bottom] {
            if let Some(&first) = pole.iter().next() {
                let seen = view(first);
                if let Some(&v) = pole.iter().find(|&&v| view(v) != seen) {
                    return Err(DecomposeError::NotCoupled { side, u: first, v });
                }
            }
        }
    }
    for (i, d) in dipoles.iter().enumerate() {
        if !d.is_proper() {
            continue;
        }
        let mut both = view(d.top.members()[0]);
        let b = view(d.bottom.members()[0]);
        if !both.is_disjoint(&b) {
            return Err(DecomposeError::NotAnticoupled { side, dipole: i });
        }
        both.union_with(&b);
        if both != *other {
            return Err(DecomposeError::NotAnticoupled { side, dipole: i });
        }
    }
    Ok(())
}

fn matched(g: &Graph, a: &Dipole, b: &Dipole, twist: Twist) -> bool {
    let (b_same, b_other) = match twist {
        Twist::Straight => (&b.top, &b.bottom),
        Twist::Twisted => (&b.bottom, &b.top),
    };
    g.complete_to(a.top.members(), b_same.members())
        && g.complete_to(a.bottom.members(), b_other.members())
        && g.anticomplete_to(a.top.members(), b_other.members())
        && g.anticomplete_to(a.bottom.members(), b_same.members())
}

/// Dipole decomposition of `g` with respect to `left` and its complement.
/// No good edge may cross between the sides.
pub fn dipole_decompose(
    g: &Graph,
    lab: &EdgeLabeling,
    left: &VertexSet,
) -> Result<DipoleDecomposition, DecomposeError> {
    let n = g.n();
    if let Some(&v) = left.iter().find(|&&v| v >= n) {
        return Err(DecomposeError::VertexOutOfRange(v));
    }
    if !lab.is_total_on(g) {
        return Err(DecomposeError::LabelingMismatch);
    }
    let left_set = set_of(n, left.members());
    let mut right_set = left_set.clone();
    right_set.toggle_range(..);
    for ((u, v), l) in lab.iter() {
        if l == Label::Good && left_set[u] != left_set[v] {
            return Err(DecomposeError::CrossingGoodEdge { u, v });
        }
    }
    let right: VertexSet = right_set.ones().collect();
    let left_dipoles = split_side(g, lab, left.members())?;
    let right_dipoles = split_side(g, lab, right.members())?;
    check_side(g, &left_dipoles, Side::Left, &right_set)?;
    check_side(g, &right_dipoles, Side::Right, &left_set)?;
    let mut matrix = Vec::with_capacity(left_dipoles.len());
    for (i, a) in left_dipoles.iter().enumerate() {
        let mut row = Vec::with_capacity(right_dipoles.len());
        for (j, b) in right_dipoles.iter().enumerate() {
            let t = [Twist::Straight, Twist::Twisted]
                .into_iter()
                .find(|&t| matched(g, a, b, t))
                .ok_or(DecomposeError::Unmatched { left: i, right: j })?;
            row.push(t);
        }
        matrix.push(row);
    }
    Ok(DipoleDecomposition {
        left: left.clone(),
        right,
        left_dipoles,
        right_dipoles,
        matrix,
    })
}

/// A complete bipartite graph between `l` left and `r` right dipoles with a
/// twist on every pair, plus the size of every pole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TGraphSpec {
    pub twists: Vec<Vec<Twist>>,
    /// `(top, bottom)` sizes per left dipole.
    pub left_poles: Vec<(usize, usize)>,
    pub right_poles: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TSpecError {
    #[error("need at least one dipole on each side")]
    NoDipoles,
    #[error("twist matrix must be {l}x{r}")]
    Shape { l: usize, r: usize },
    #[error("{side} dipole {dipole} has two empty poles")]
    EmptyDipole { side: Side, dipole: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl TGraphSpec {
    pub fn new(
        twists: Vec<Vec<Twist>>,
        left_poles: Vec<(usize, usize)>,
        right_poles: Vec<(usize, usize)>,
    ) -> Result<Self, TSpecError> {
        let (l, r) = (left_poles.len(), right_poles.len());
        if l == 0 || r == 0 {
            return Err(TSpecError::NoDipoles);
        }
        if twists.len() != l || twists.iter().any(|row| row.len() != r) {
            return Err(TSpecError::Shape { l, r });
        }
        for (side, poles) in [(Side::Left, &left_poles), (Side::Right, &right_poles)] {
            if let Some(dipole) = poles.iter().position(|&(t, b)| t + b == 0) {
                return Err(TSpecError::EmptyDipole { side, dipole });
            }
        }
        Ok(TGraphSpec {
            twists,
            left_poles,
            right_poles,
        })
    }

    /// `K_{3,3}` with a perfect matching of twisted pairs (`i` with `i`),
    /// every pole of size `k`.
    pub fn k33_three_twists(k: usize) -> Self {
        let twists = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { Twist::Twisted } else { Twist::Straight })
                    .collect()
            })
            .collect();
        TGraphSpec::new(twists, vec![(k, k); 3], vec![(k, k); 3]).expect("valid preset")
    }

    pub fn l(&self) -> usize {
        self.left_poles.len()
    }

    pub fn r(&self) -> usize {
        self.right_poles.len()
    }

    pub fn order(&self) -> usize {
        self.left_poles
            .iter()
            .chain(&self.right_poles)
            .map(|&(t, b)| t + b)
            .sum()
    }

    pub fn left_order(&self) -> usize {
        self.left_poles.iter().map(|&(t, b)| t + b).sum()
    }

    /// `l r`, one row of `S`/`T` per left dipole, then all pole sizes
    /// (left dipoles first, top before bottom).
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.l(), self.r());
        for row in &self.twists {
            out.extend(row.iter().map(|t| t.symbol()));
            out.push('\n');
        }
        let sizes: Vec<String> = self
            .left_poles
            .iter()
            .chain(&self.right_poles)
            .flat_map(|&(t, b)| [t.to_string(), b.to_string()])
            .collect();
        let _ = writeln!(out, "{}", sizes.join(" "));
        out
    }

    pub fn parse(text: &str) -> Result<Self, TSpecError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, s)| (i + 1, s.trim()))
            .filter(|(_, s)| !s.is_empty());
        let err = |line: usize, reason: &str| TSpecError::Parse {
            line,
            reason: reason.to_string(),
        };
        let (hl, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(hl, "expected `l r`"))?;
        let [l, r] = dims[..] else {
            return Err(err(hl, "expected `l r`"));
        };
        let mut twists = Vec::with_capacity(l);
        for _ in 0..l {
            let (ln, row) = lines.next().ok_or_else(|| err(hl, "missing twist rows"))?;
            let row: Vec<Twist> = row
                .chars()
                .map(|c| match c {
                    'S' => Ok(Twist::Straight),
                    'T' => Ok(Twist::Twisted),
                    _ => Err(err(ln, "twist rows use S and T")),
                })
                .collect::<Result<_, _>>()?;
            twists.push(row);
        }
        let mut sizes = Vec::new();
        for (ln, line) in lines {
            for tok in line.split_whitespace() {
                sizes.push(tok.parse::<usize>().map_err(|_| err(ln, "bad pole size"))?);
            }
        }
        if sizes.len() != 2 * (l + r) {
            return Err(err(hl, &format!("expected {} pole sizes", 2 * (l + r))));
        }
        let pairs: Vec<(usize, usize)> = sizes.chunks(2).map(|c| (c[0], c[1])).collect();
        let right = pairs[l..].to_vec();
        let mut left = pairs;
        left.truncate(l);
        TGraphSpec::new(twists, left, right)
    }

    /// Vertex ranges of every pole: left dipoles first, top before bottom.
    fn pole_ranges(&self) -> (Vec<[std::ops::Range<usize>; 2]>, Vec<[std::ops::Range<usize>; 2]>) {
        let mut next = 0;
        let mut take = |poles: &[(usize, usize)]| {
            poles
                .iter()
                .map(|&(t, b)| {
                    let top = next..next + t;
                    let bottom = next + t..next + t + b;
                    next += t + b;
                    [top, bottom]
                })
                .collect::<Vec<_>>()
        };
        let left = take(&self.left_poles);
        let right = take(&self.right_poles);
        (left, right)
    }

    /// The left side of `reconstruct_from_T(self)`.
    pub fn left_vertices(&self) -> VertexSet {
        (0..self.left_order()).collect()
    }

    /// The dipoles of the reconstructed graph as vertex sets.
    pub fn dipoles(&self) -> (Vec<Dipole>, Vec<Dipole>) {
        let (l, r) = self.pole_ranges();
        let conv = |ranges: Vec<[std::ops::Range<usize>; 2]>| {
            ranges
                .into_iter()
                .map(|[t, b]| Dipole {
                    top: t.collect(),
                    bottom: b.collect(),
                })
                .collect()
        };
        (conv(l), conv(r))
    }
}

/// The graph described by a dipole specification.
#[allow(non_snake_case)]
pub fn reconstruct_from_T(spec: &TGraphSpec) -> Graph {
    let mut g = Graph::new(spec.order());
    let (left, right) = spec.pole_ranges();
    let clique = |g: &mut Graph, a: std::ops::Range<usize>, b: std::ops::Range<usize>| {
        for u in a {
            for v in b.clone() {
                if u != v {
                    g.add_edge(u, v);
                }
            }
        }
    };
    for side in [&left, &right] {
        for (i, [t, b]) in side.iter().enumerate() {
            clique(&mut g, t.clone(), t.clone());
            clique(&mut g, b.clone(), b.clone());
            for [t2, b2] in &side[i + 1..] {
                let dipole = t.start..b.end;
                clique(&mut g, dipole, t2.start..b2.end);
            }
        }
    }
    for (i, [lt, lb]) in left.iter().enumerate() {
        for (j, [rt, rb]) in right.iter().enumerate() {
            let (to_top, to_bottom) = match spec.twists[i][j] {
                Twist::Straight => (rt, rb),
                Twist::Twisted => (rb, rt),
            };
            clique(&mut g, lt.clone(), to_top.clone());
            clique(&mut g, lb.clone(), to_bottom.clone());
        }
    }
    g
}

/// The labeling that comes with a dipole construction: edges between
/// different dipoles of one side are good (medium), all others bad.
pub fn construction_labeling(spec: &TGraphSpec, g: &Graph) -> EdgeLabeling {
    let (left, right) = spec.dipoles();
    let n = g.n();
    let mut dipole_of = vec![(Side::Left, 0); n];
    for (side, ds) in [(Side::Left, &left), (Side::Right, &right)] {
        for (i, d) in ds.iter().enumerate() {
            for &v in d.top.iter().chain(d.bottom.iter()) {
                dipole_of[v] = (side, i);
            }
        }
    }
    EdgeLabeling::from_fn(g, LabelMode::Medium, |u, v| {
        let (su, du) = dipole_of[u];
        let (sv, dv) = dipole_of[v];
        if su == sv && du != dv {
            Label::Good
        } else {
            Label::Bad
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowupTarget {
    PetersenComplement,
    V8Complement,
}

impl BlowupTarget {
    pub fn base(self) -> Graph {
        match self {
            BlowupTarget::PetersenComplement => complement(&petersen()),
            BlowupTarget::V8Complement => complement(&v8()),
        }
    }
}

/// c-twin classes of a graph matched to the vertices of a target graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupMatch {
    pub classes: Vec<VertexSet>,
    /// `to_target[i]` is the target vertex of `classes[i]`.
    pub to_target: Vec<usize>,
}

/// Whether `g` is `target` with each vertex replaced by a clique of
/// c-twins. Contracts the c-twin classes and searches for an isomorphism
/// of the quotient onto the target.
pub fn recognize_blownup(g: &Graph, target: BlowupTarget) -> Option<BlowupMatch> {
    let base = target.base();
    let classes = c_twin_classes(g).classes;
    if classes.len() != base.n() {
        return None;
    }
    let reps: Vec<usize> = classes.iter().map(|c| c.members()[0]).collect();
    let quotient = g.induced(&reps);
    let to_target = isomorphism(&quotient, &base)?;
    Some(BlowupMatch { classes, to_target })
}

/// An isomorphism `a -> b` by backtracking with degree pruning.
fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.m() != b.m() {
        return None;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(a, b, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
    extend(a, b, 0, &mut map, &mut used).then_some(map)
}
