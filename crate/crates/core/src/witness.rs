//! Minor certificates: families of disjoint connected prevertices that
//! pairwise touch, their verifier, and an exhaustive oracle for small graphs.

use std::fmt;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{write_graph, Graph, VertexSet};

/// Largest prevertex any strategy in this crate produces.
pub const MAX_PREVERTEX: usize = 3;

/// Largest graph the exhaustive oracle accepts.
pub const ORACLE_MAX_N: usize = 12;

/// Short content hash of a graph's canonical edge-list text.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphDigest(String);

impl GraphDigest {
    pub fn of(g: &Graph) -> Self {
        let hash = Sha256::digest(write_graph(g).as_bytes());
        let mut s = String::with_capacity(16);
        for b in &hash[..8] {
            let _ = write!(s, "{b:02x}");
        }
        GraphDigest(s)
    }
}

impl fmt::Display for GraphDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Prevertices of a complete minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub prevertices: Vec<VertexSet>,
    /// Graph this witness was built for, when known.
    pub target: Option<GraphDigest>,
}

impl MinorWitness {
    pub fn new(prevertices: Vec<VertexSet>) -> Self {
        MinorWitness {
            prevertices,
            target: None,
        }
    }

    pub fn for_graph(g: &Graph, prevertices: Vec<VertexSet>) -> Self {
        MinorWitness {
            prevertices,
            target: Some(GraphDigest::of(g)),
        }
    }

    /// Order of the complete minor.
    pub fn size(&self) -> usize {
        self.prevertices.len()
    }

    /// True when every prevertex is a single vertex or an edge.
    pub fn ssh_compliant(&self) -> bool {
        self.prevertices.iter().all(|p| p.len() <= 2)
    }

    /// Text form: `witness k` followed by one sorted prevertex per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("witness {}\n", self.prevertices.len());
        for p in &self.prevertices {
            let ids: Vec<String> = p.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", ids.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, WitnessParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines.next().ok_or(WitnessParseError::MissingHeader)?;
        let k: usize = header
            .strip_prefix("witness")
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or(WitnessParseError::MissingHeader)?;
        let mut prevertices = Vec::with_capacity(k);
        for (line, l) in lines {
            let ids: Result<Vec<usize>, _> = l.split_whitespace().map(str::parse).collect();
            let ids = ids.map_err(|_| WitnessParseError::MalformedLine { line })?;
            prevertices.push(VertexSet::from(ids));
        }
        if prevertices.len() != k {
            return Err(WitnessParseError::CountMismatch {
                expected: k,
                found: prevertices.len(),
            });
        }
        Ok(MinorWitness::new(prevertices))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessParseError {
    #[error("missing `witness k` header")]
    MissingHeader,
    #[error("line {line}: expected vertex ids")]
    MalformedLine { line: usize },
    #[error("header announces {expected} prevertices, found {found}")]
    CountMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("prevertex {index} references vertex {vertex} >= n = {n}")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("exhaustive search limited to n <= {ORACLE_MAX_N}, got {n}")]
    OracleBudgetExceeded { n: usize },
    #[error("prevertex size bound must be 1..=3, got {0}")]
    BadSizeBound(usize),
}

/// First property a witness fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyPrevertex { index: usize },
    Oversized { index: usize, size: usize },
    Overlap { first: usize, second: usize, vertex: usize },
    Disconnected { index: usize },
    Untouching { first: usize, second: usize },
    WrongGraph { expected: GraphDigest, actual: GraphDigest },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyPrevertex { index } => write!(f, "prevertex {index} is empty"),
            Violation::Oversized { index, size } => {
                write!(f, "prevertex {index} has {size} vertices (max {MAX_PREVERTEX})")
            }
            Violation::Overlap {
                first,
                second,
                vertex,
            } => write!(f, "prevertices {first} and {second} share vertex {vertex}"),
            Violation::Disconnected { index } => {
                write!(f, "prevertex {index} does not induce a connected subgraph")
            }
            Violation::Untouching { first, second } => {
                write!(f, "prevertices {first} and {second} do not touch")
            }
            Violation::WrongGraph { expected, actual } => {
                write!(f, "witness targets graph {expected}, checked against {actual}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks that `w` certifies a complete minor of `g`.
pub fn verify_minor(g: &Graph, w: &MinorWitness) -> Result<Verdict, WitnessError> {
    let n = g.n();
    for (index, p) in w.prevertices.iter().enumerate() {
        if let Some(&vertex) = p.iter().find(|&&v| v >= n) {
            return Err(WitnessError::VertexOutOfRange { index, vertex, n });
        }
    }
    if let Some(expected) = &w.target {
        let actual = GraphDigest::of(g);
        if *expected != actual {
            return Ok(Verdict::Invalid(Violation::WrongGraph {
                expected: expected.clone(),
                actual,
            }));
        }
    }
    let mut owner = vec![usize::MAX; n];
    for (index, p) in w.prevertices.iter().enumerate() {
        if p.is_empty() {
            return Ok(Verdict::Invalid(Violation::EmptyPrevertex { index }));
        }
        if p.len() > MAX_PREVERTEX {
            return Ok(Verdict::Invalid(Violation::Oversized {
                index,
                size: p.len(),
            }));
        }
        for &v in p {
            if owner[v] != usize::MAX {
                return Ok(Verdict::Invalid(Violation::Overlap {
                    first: owner[v],
                    second: index,
                    vertex: v,
                }));
            }
            owner[v] = index;
        }
        if !g.is_connected_set(p.members()) {
            return Ok(Verdict::Invalid(Violation::Disconnected { index }));
        }
    }
    for (i, a) in w.prevertices.iter().enumerate() {
        for (j, b) in w.prevertices.iter().enumerate().skip(i + 1) {
            if !g.touches(a.members(), b.members()) {
                return Ok(Verdict::Invalid(Violation::Untouching {
                    first: i,
                    second: j,
                }));
            }
        }
    }
    Ok(Verdict::Valid)
}

/// Largest complete minor whose prevertices are connected sets of at most
/// `max_size` vertices, by exhaustive search. Only for `n <= 12`.
pub fn brute_force_max_minor(g: &Graph, max_size: usize) -> Result<MinorWitness, WitnessError> {
    if !(1..=MAX_PREVERTEX).contains(&max_size) {
        return Err(WitnessError::BadSizeBound(max_size));
    }
    if g.n() > ORACLE_MAX_N {
        return Err(WitnessError::OracleBudgetExceeded { n: g.n() });
    }
    let cands = connected_sets(g, max_size);
    let masks: Vec<u32> = cands
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    // touch[i] bitmask of vertices touching candidate i (closed neighborhood)
    let reach: Vec<u32> = cands
        .iter()
        .map(|c| {
            c.iter().fold(0u32, |m, &v| {
                m | 1 << v | g.neighbors(v).fold(0u32, |a, w| a | 1 << w)
            })
        })
        .collect();
    let compatible = |i: usize, j: usize| masks[i] & masks[j] == 0 && reach[i] & masks[j] != 0;

    let mut search = Search {
        n: g.n(),
        masks: &masks,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    let all: Vec<usize> = (0..cands.len()).collect();
    search.run(&all, 0, &compatible);
    let prevertices = search.best.iter().map(|&i| cands[i].clone()).collect();
    Ok(MinorWitness::for_graph(g, prevertices))
}

struct Search<'a> {
    n: usize,
    masks: &'a [u32],
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, cands: &[usize], used: u32, compatible: &dyn Fn(usize, usize) -> bool) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        // every further prevertex needs a vertex of its own
        let free = self.n - used.count_ones() as usize;
        if self.chosen.len() + cands.len().min(free) <= self.best.len() {
            return;
        }
        for (k, &c) in cands.iter().enumerate() {
            if self.chosen.len() + (cands.len() - k).min(free) <= self.best.len() {
                return;
            }
            let next: Vec<usize> = cands[k + 1..]
                .iter()
                .copied()
                .filter(|&d| compatible(c, d))
                .collect();
            self.chosen.push(c);
            self.run(&next, used | self.masks[c], compatible);
            self.chosen.pop();
        }
    }
}

/// All connected vertex sets of size `1..=max_size`, smaller sets first.
fn connected_sets(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut out: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    if max_size >= 2 {
        out.extend(g.edges().into_iter().map(|(u, v)| VertexSet::pair(u, v)));
    }
    if max_size >= 3 {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.is_connected_set(&[a, b, c]) {
                        out.push(VertexSet::from(vec![a, b, c]));
                    }
                }
            }
        }
    }
    out
}
