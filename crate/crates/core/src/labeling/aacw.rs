use std::collections::VecDeque;
use std::fmt::Write as _;

use super::twosat::{bad, good, TwoSat};
use super::{ClauseRelations, LabelingError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Untouching edges: not both good.
    Untouching,
    /// Edges forming an induced path of length two: not both bad.
    OpenPath,
}

impl Relation {
    fn other(self) -> Self {
        match self {
            Relation::Untouching => Relation::OpenPath,
            Relation::OpenPath => Relation::Untouching,
        }
    }
}

/// An even closed walk whose steps alternate between the two relations
/// and which visits some element twice at an odd distance. Its existence
/// rules out any valid good/bad partition.
///
/// The walk is stored starting at the repeated element, so
/// `walk[0] == walk[repeat.1]` with `repeat.0 == 0`. The prefix up to
/// `repeat.1` is itself an odd closed walk alternating from its first
/// element, the nose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AacwCertificate {
    /// `walk.len() - 1` steps; `walk.first() == walk.last()`.
    pub walk: Vec<usize>,
    pub first: Relation,
    pub repeat: (usize, usize),
}

impl AacwCertificate {
    pub fn nose(&self) -> usize {
        self.walk[self.repeat.0]
    }

    pub fn len(&self) -> usize {
        self.walk.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks every invariant directly against the relations.
    pub fn validate(&self, rel: &ClauseRelations) -> Result<(), String> {
        let l = self.walk.len();
        if l < 2 {
            return Err("walk too short".into());
        }
        if self.walk[0] != self.walk[l - 1] {
            return Err("walk is not closed".into());
        }
        if (l - 1) % 2 != 0 {
            return Err(format!("walk length {} is odd", l - 1));
        }
        if let Some(&x) = self.walk.iter().find(|&&x| x >= rel.order) {
            return Err(format!("element {x} out of range"));
        }
        let mut step = self.first;
        for (i, w) in self.walk.windows(2).enumerate() {
            if !rel.contains(step, w[0], w[1]) {
                return Err(format!("step {i} ({},{}) not in {step:?}", w[0], w[1]));
            }
            step = step.other();
        }
        let (i, j) = self.repeat;
        if i >= j || j >= l {
            return Err("bad repeat positions".into());
        }
        if (j - i) % 2 != 1 {
            return Err("repeat distance is even".into());
        }
        if self.walk[i] != self.walk[j] {
            return Err("repeat positions hold different elements".into());
        }
        Ok(())
    }

    /// `nose u v` followed by one `u v` line per walk element, for
    /// relations built from the edge list `edges`.
    pub fn to_text(&self, edges: &[(usize, usize)]) -> String {
        let (u, v) = edges[self.nose()];
        let mut out = format!("nose {u} {v}\n");
        for &x in &self.walk {
            let (u, v) = edges[x];
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Shortest literal path in the implication graph, as literals.
fn bfs_path(imp: &[Vec<usize>], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; imp.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in &imp[x] {
            if prev[y] != usize::MAX {
                continue;
            }
            prev[y] = x;
            if y == to {
                let mut path = vec![to];
                let mut z = to;
                while z != from {
                    z = prev[z];
                    path.push(z);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(y);
        }
    }
    None
}

/// An infeasibility certificate for the labeling constraints of `rel`, or
/// `None` when a valid partition exists.
///
/// Implications alternate between the relations: an untouching pair sends
/// "good" to "bad" and an open-path pair sends "bad" to "good". A literal
/// cycle through both polarities of one element therefore reads as an
/// alternating closed walk of even length in which that element recurs at
/// an odd position.
pub fn extract_aacw(rel: &ClauseRelations) -> Result<Option<AacwCertificate>, LabelingError> {
    let sat = TwoSat::from_relations(rel);
    let comp = sat.components();
    let Some(x) = (0..rel.order).find(|&x| comp[good(x)] == comp[bad(x)]) else {
        return Ok(None);
    };
    let bound = 4 * rel.order;
    let exhausted = LabelingError::CertificateSearchExhausted { bound };
    let imp = sat.implications();
    let there = bfs_path(imp, good(x), bad(x)).ok_or(exhausted.clone())?;
    let back = bfs_path(imp, bad(x), good(x)).ok_or(exhausted.clone())?;
    let half = there.len() - 1;
    let walk: Vec<usize> = there
        .iter()
        .chain(&back[1..])
        .map(|&lit| lit / 2)
        .collect();
    if walk.len() - 1 > bound {
        return Err(exhausted);
    }
    Ok(Some(AacwCertificate {
        walk,
        first: Relation::Untouching,
        repeat: (0, half),
    }))
}
