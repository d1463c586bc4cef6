//! Graph families and the dense random model.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{complement, Graph};
use crate::structure::TGraphSpec;

pub use crate::structure::reconstruct_from_T as gen_dipole_graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("expected {expected} class sizes, got {found}")]
    SizeCount { expected: usize, found: usize },
    #[error("class {index} has size 0")]
    ZeroSize { index: usize },
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("n = {n} is even; only odd n is supported")]
    EvenOrder { n: usize },
    #[error("edge probability {0} outside (0, 1]")]
    InvalidProbability(f64),
    #[error("at least one trial is required")]
    NoTrials,
}

/// The Petersen graph as the Kneser graph on the 2-subsets of `{0..4}`
/// (lexicographic order), adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut g = Graph::new(10);
    for i in 0..10 {
        for j in i + 1..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The Möbius ladder on 8 vertices: the cycle `0..7` plus chords `i, i+4`.
pub fn v8() -> Graph {
    let mut g = Graph::cycle(8);
    for i in 0..4 {
        g.add_edge(i, i + 4);
    }
    g
}

/// Replace vertex `v` of `base` by a clique of `sizes[v]` c-twins. Vertices
/// are numbered class by class.
pub fn blow_up(base: &Graph, sizes: &[usize]) -> Result<Graph, GeneratorError> {
    if sizes.len() != base.n() {
        return Err(GeneratorError::SizeCount {
            expected: base.n(),
            found: sizes.len(),
        });
    }
    if let Some(index) = sizes.iter().position(|&s| s == 0) {
        return Err(GeneratorError::ZeroSize { index });
    }
    let owner: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(v, &s)| std::iter::repeat(v).take(s))
        .collect();
    let n = owner.len();
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if owner[a] == owner[b] || base.has_edge(owner[a], owner[b]) {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Complement of a blown-up Petersen graph: ten cliques, two of them
/// joined exactly when their Petersen vertices are not adjacent.
pub fn gen_petersen_complement(sizes: &[usize]) -> Result<Graph, GeneratorError> {
    blow_up(&complement(&petersen()), sizes)
}

/// Complement of a blown-up V8.
pub fn gen_v8_complement(sizes: &[usize]) -> Result<Graph, GeneratorError> {
    blow_up(&complement(&v8()), sizes)
}

/// `K_{3,3}` with three disjoint twisted pairs and poles of size `k`. With
/// `odd`, the top poles of the first left and first right dipole get one
/// extra vertex, giving `12k + 2` vertices.
pub fn k33_three_twists(k: usize, odd: bool) -> TGraphSpec {
    let mut spec = TGraphSpec::k33_three_twists(k);
    if odd {
        spec.left_poles[0].0 += 1;
        spec.right_poles[0].0 += 1;
    }
    spec
}

/// `G(n, p)` with `p = 1 - c n^(-alpha)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomModel {
    pub n: usize,
    pub c: f64,
    pub alpha: f64,
    pub seed: u64,
}

impl RandomModel {
    pub fn new(n: usize, c: f64, alpha: f64, seed: u64) -> Result<Self, GeneratorError> {
        let model = RandomModel { n, c, alpha, seed };
        if !(c.is_finite() && c > 0.0) {
            return Err(GeneratorError::InvalidModel(format!("c = {c} must be positive")));
        }
        if !(0.0..1.0).contains(&alpha) {
            return Err(GeneratorError::InvalidModel(format!("alpha = {alpha} must lie in [0, 1)")));
        }
        if n == 0 {
            return Err(GeneratorError::InvalidModel("n must be positive".into()));
        }
        let p = model.p();
        if !(p > 0.0 && p < 1.0) {
            return Err(GeneratorError::InvalidModel(format!("p = {p} must lie in (0, 1)")));
        }
        Ok(model)
    }

    pub fn q(&self) -> f64 {
        self.c * (self.n as f64).powf(-self.alpha)
    }

    pub fn p(&self) -> f64 {
        1.0 - self.q()
    }

    /// `floor((n - 1) / 2)`, the number of two-vertex prevertices.
    pub fn d(&self) -> usize {
        self.n.saturating_sub(1) / 2
    }
}

/// Sample `G(n, p)` from a ChaCha8 stream seeded with `model.seed`, one
/// draw per vertex pair in lexicographic order.
pub fn gen_random_dense(model: &RandomModel) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
    let p = model.p();
    let n = model.n;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Add edges until no stable set of size three is left. Triples are
/// visited in lexicographic order; each antitriangle found gets one of its
/// three pairs, chosen uniformly.
pub fn fix_antitriangles(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = g.clone();
    let n = h.n();
    for a in 0..n {
        for b in a + 1..n {
            if h.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if h.has_edge(a, b) || h.has_edge(a, c) || h.has_edge(b, c) {
                    continue;
                }
                let (u, v) = [(a, b), (a, c), (b, c)][rng.gen_range(0..3)];
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Probability that one fixed partition of `n` (odd) vertices into `d`
/// pairs and a singleton yields a `K_{d+1}` minor in `G(n, p)`, and the
/// logarithm of the expected number of such partitions that do.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinorExpectation {
    pub probability: f64,
    pub log_probability: f64,
    /// `ln(n! / (d! 2^d))`, the number of such partitions.
    pub log_partitions: f64,
    pub log_expected: f64,
}

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

pub fn expected_minor_probability(n: usize, p: f64) -> Result<MinorExpectation, GeneratorError> {
    if n % 2 == 0 {
        return Err(GeneratorError::EvenOrder { n });
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(GeneratorError::InvalidProbability(p));
    }
    let d = (n - 1) / 2;
    let q = 1.0 - p;
    let pairs = (d * d.saturating_sub(1) / 2) as f64;
    let d_f = d as f64;
    // every pair edge present, every two pairs touch, every pair touches
    // the singleton
    let log_probability =
        d_f * p.ln() + pairs * (-q.powi(4)).ln_1p() + d_f * (-q.powi(2)).ln_1p();
    let log_partitions = ln_factorial(n) - ln_factorial(d) - d_f * std::f64::consts::LN_2;
    Ok(MinorExpectation {
        probability: log_probability.exp(),
        log_probability,
        log_partitions,
        log_expected: log_partitions + log_probability,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub trials: u64,
    pub hits: u64,
}

/// Estimate the fixed-partition minor probability by sampling only the
/// edges the event depends on. Trial `t` draws from ChaCha8 stream `t` of
/// `seed`, so the estimate does not depend on thread scheduling.
pub fn monte_carlo_fixed_partition(
    n: usize,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate, GeneratorError> {
    if n % 2 == 0 {
        return Err(GeneratorError::EvenOrder { n });
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(GeneratorError::InvalidProbability(p));
    }
    if trials == 0 {
        return Err(GeneratorError::NoTrials);
    }
    let d = (n - 1) / 2;
    let hits: u64 = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            u64::from(trial(&mut rng, d, p))
        })
        .sum();
    let mean = hits as f64 / trials as f64;
    let stderr = (mean * (1.0 - mean) / trials as f64).sqrt();
    Ok(MonteCarloEstimate {
        mean,
        stderr,
        trials,
        hits,
    })
}

fn trial(rng: &mut ChaCha8Rng, d: usize, p: f64) -> bool {
    let mut edge = || rng.gen_bool(p);
    for _ in 0..d {
        if !edge() {
            return false;
        }
    }
    for i in 0..d {
        for _ in i + 1..d {
            let touching = (0..4).fold(false, |acc, _| edge() | acc);
            if !touching {
                return false;
            }
        }
        let touching = edge() | edge();
        if !touching {
            return false;
        }
    }
    true
}
