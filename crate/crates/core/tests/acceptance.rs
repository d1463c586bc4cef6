//! Acceptance run: one line per criterion. Checks known to be unattainable
//! as stated are evaluated and printed as RECORDED without failing the run.

use std::collections::VecDeque;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hadwiger::generators::{
    expected_minor_probability, fix_antitriangles, gen_dipole_graph, gen_petersen_complement,
    gen_random_dense, gen_v8_complement, k33_three_twists, monte_carlo_fixed_partition, RandomModel,
};
use hadwiger::graph::{antitriangle, min_vertex_cut, Graph, VertexSet};
use hadwiger::labeling::{
    axiom_check, clique_cover_labeling, extract_aacw, solve_2sat_labeling, solve_relations,
    ClauseRelations, EdgeLabeling, Label, LabelMode,
};
use hadwiger::matching::max_matching;
use hadwiger::strategies::{
    best_minor, conflict_graph_minor, good_matching_minor, p3_packing_minor, Failure,
};
use hadwiger::structure::construction_labeling;
use hadwiger::witness::{brute_force_max_minor, MinorWitness};

enum Status {
    Pass,
    Fail,
    /// Evaluated faithfully, fails, and is known to be unattainable.
    Recorded,
}

struct Line {
    id: &'static str,
    status: Status,
    detail: String,
}

fn check(id: &'static str, ok: bool, detail: String) -> Line {
    Line {
        id,
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

// ---------------------------------------------------------------------------
// independent referees

/// Minor check written from the definition: disjoint nonempty connected
/// prevertices that pairwise have an edge between them.
fn referee_minor(g: &Graph, w: &MinorWitness) -> bool {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, p) in w.prevertices.iter().enumerate() {
        if p.is_empty() {
            return false;
        }
        for &v in p.iter() {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        let members = p.members();
        let mut seen = vec![members[0]];
        let mut queue = VecDeque::from([members[0]]);
        while let Some(x) = queue.pop_front() {
            for &y in members {
                if !seen.contains(&y) && g.has_edge(x, y) {
                    seen.push(y);
                    queue.push_back(y);
                }
            }
        }
        if seen.len() != members.len() {
            return false;
        }
    }
    let k = w.size();
    let mut touch = vec![vec![false; k]; k];
    for (u, v) in g.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            touch[a][b] = true;
            touch[b][a] = true;
        }
    }
    (0..k).all(|a| (0..k).all(|b| a == b || touch[a][b]))
}

fn brute_matching_size(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut Vec<bool>, from: usize) -> usize {
        let n = g.n();
        let Some(v) = (from..n).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for w in v + 1..n {
            if !used[w] && g.has_edge(v, w) {
                used[w] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, &mut vec![false; g.n()], 0)
}

fn component_count_without(g: &Graph, removed: u32) -> usize {
    let n = g.n();
    let mut seen = removed;
    let mut count = 0;
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        count += 1;
        seen |= 1 << s;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if seen >> y & 1 == 0 && g.has_edge(x, y) {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// Smallest vertex set whose removal leaves at least two components.
fn brute_min_cut(g: &Graph) -> Option<usize> {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| component_count_without(g, s) >= 2)
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Satisfiability of the two relations by trying every labeling.
fn referee_feasible(rel: &ClauseRelations) -> bool {
    (0u32..1 << rel.order).any(|good| {
        rel.untouching.iter().all(|&(i, j)| good >> i & 1 == 0 || good >> j & 1 == 0)
            && rel.open_paths.iter().all(|&(i, j)| good >> i & 1 == 1 || good >> j & 1 == 1)
    })
}

/// Per-vertex and per-edge vedge counts. The vertex side counts the edges
/// among the non-neighbors of each vertex, the edge side counts vertices
/// touching neither end.
fn vedge_counts(g: &Graph) -> (u64, u64, u64) {
    let n = g.n();
    let mut by_vertex = 0u64;
    let mut binomial = 0u64;
    for v in 0..n {
        let far: Vec<usize> = (0..n).filter(|&x| x != v && !g.has_edge(v, x)).collect();
        for (i, &a) in far.iter().enumerate() {
            for &b in &far[i + 1..] {
                if g.has_edge(a, b) {
                    by_vertex += 1;
                }
            }
        }
        let k = far.len() as u64;
        binomial += k * k.saturating_sub(1) / 2;
    }
    let mut by_edge = 0u64;
    for (a, b) in g.edges() {
        by_edge += (0..n)
            .filter(|&x| x != a && x != b && !g.has_edge(a, x) && !g.has_edge(b, x))
            .count() as u64;
    }
    (by_vertex, binomial, by_edge)
}

fn literal_binomial(g: &Graph) -> u64 {
    (0..g.n())
        .map(|v| {
            let k = (g.n() - g.degree(v)) as u64;
            k * k.saturating_sub(1) / 2
        })
        .sum()
}

// ---------------------------------------------------------------------------
// corpora

fn random_in_class(seed: u64, n_max: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=n_max);
    let c = rng.gen_range(0.3..1.0);
    let alpha = rng.gen_range(0.1..0.9);
    let model = RandomModel::new(n, c, alpha, seed).expect("valid model");
    fix_antitriangles(&gen_random_dense(&model), seed ^ 0x5eed)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
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

/// Three random cliques partitioning an even number of vertices, plus
/// random edges between them and whatever edges are needed to kill stable
/// triples (one vertex per clique).
fn three_clique_graph(seed: u64) -> (Graph, Vec<VertexSet>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * rng.gen_range(3..=15);
    let part: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
    let p = rng.gen_range(0.2..0.9);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] == part[v] || rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    let cliques = (0..3)
        .map(|c| (0..n).filter(|&v| part[v] == c).collect::<VertexSet>())
        .collect();
    (fix_antitriangles(&g, seed), cliques)
}

// ---------------------------------------------------------------------------
// criteria

fn soundness_and_third(corpus: &mut Vec<Graph>) -> Vec<Line> {
    let mut witnesses = 0;
    let mut bad = Vec::new();
    let mut short = Vec::new();
    for seed in 0..500u64 {
        let g = random_in_class(1000 + seed, 40);
        let n = g.n();
        assert!(antitriangle(&g).is_none());
        let analysis = best_minor(&g);
        for r in &analysis.reports {
            if let Some(w) = r.witness() {
                witnesses += 1;
                if !referee_minor(&g, w) {
                    bad.push(format!("seed {seed} {}", r.strategy));
                }
            }
            if let Some(Failure::InvalidWitness(v)) = r.failure() {
                bad.push(format!("seed {seed} {}: {v}", r.strategy));
            }
        }
        let p3 = p3_packing_minor(&g).expect("in class");
        if !referee_minor(&g, &p3) || p3.size() < n.div_ceil(3) {
            short.push(format!("seed {seed} n {n} size {}", p3.size()));
        }
        corpus.push(g);
    }
    vec![
        check(
            "1",
            bad.is_empty(),
            format!("500 graphs, {witnesses} witnesses, {} rejected {:?}", bad.len(), bad.first()),
        ),
        check(
            "2",
            short.is_empty(),
            format!("p3-packing below ceil(n/3) on {} of 500 {:?}", short.len(), short.first()),
        ),
    ]
}

fn oracle_gap(corpus: &mut Vec<Graph>) -> Line {
    let mut named = vec![
        ("C5", Graph::cycle(5)),
        (
            "prism",
            Graph::from_edges(6, &[(0, 2), (0, 4), (2, 4), (1, 3), (1, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
        ),
        ("2K2", Graph::from_edges(4, &[(0, 1), (2, 3)])),
        ("petersen-complement", gen_petersen_complement(&[1; 10]).unwrap()),
        ("v8-complement", gen_v8_complement(&[1; 8]).unwrap()),
    ];
    for seed in 0..200u64 {
        named.push(("random", random_in_class(5000 + seed, 9)));
    }
    let mut gaps = Vec::new();
    let mut ssh_findings = Vec::new();
    let mut over = Vec::new();
    for (name, g) in named {
        let n = g.n();
        let analysis = best_minor(&g);
        let oracle = match &analysis.oracle {
            Some(o) => o.clone(),
            None => brute_force_max_minor(&g, 2).expect("small graph"),
        };
        assert!(referee_minor(&g, &oracle));
        let best = analysis.best_compliant_size();
        if best > oracle.size() {
            over.push(name);
        } else if best < oracle.size() {
            gaps.push(format!("{name}(n={n}) {best}<{}", oracle.size()));
        }
        if 2 * oracle.size() < n {
            ssh_findings.push(format!("{name}(n={n}) oracle {}", oracle.size()));
        }
        corpus.push(g);
    }
    let named_gaps: Vec<&String> = gaps.iter().filter(|s| !s.starts_with("random")).collect();
    check(
        "3",
        over.is_empty() && ssh_findings.is_empty(),
        format!(
            "205 graphs, {} gaps reported (named: {:?}), oracle below ceil(n/2) on {} {:?}",
            gaps.len(),
            named_gaps,
            ssh_findings.len(),
            ssh_findings
        ),
    )
}

fn goodbad_pipeline(corpus: &mut Vec<Graph>) -> Line {
    let mut findings = Vec::new();
    let mut via_cover = 0;
    for seed in 0..50u64 {
        let (g, cliques) = three_clique_graph(7000 + seed);
        assert!(antitriangle(&g).is_none());
        let n = g.n();
        let lab = match clique_cover_labeling(&g, &cliques) {
            Ok(lab) if axiom_check(&g, &lab).is_empty() => {
                via_cover += 1;
                lab
            }
            _ => match solve_2sat_labeling(&g, &[]) {
                Ok(lab) => lab,
                Err(e) => {
                    findings.push(format!("seed {seed}: {e}"));
                    continue;
                }
            },
        };
        match good_matching_minor(&g, &lab) {
            Ok(r) => match r.witness() {
                Some(w) if referee_minor(&g, w) && 2 * w.size() >= n => {}
                _ => findings.push(format!("seed {seed} n {n}: {}", r.to_text().replace('\n', " | "))),
            },
            Err(e) => findings.push(format!("seed {seed}: {e}")),
        }
        corpus.push(g);
    }
    check(
        "4",
        findings.is_empty(),
        format!("50 graphs ({via_cover} via clique cover), {} findings {:?}", findings.len(), findings.first()),
    )
}

fn dipole_numbers(corpus: &mut Vec<Graph>) -> Line {
    let spec1 = k33_three_twists(1, false);
    let g1 = gen_dipole_graph(&spec1);
    let cut1 = min_vertex_cut(&g1).map(|c| c.size);

    let spec2 = k33_three_twists(2, true);
    let g2 = gen_dipole_graph(&spec2);
    let cut2 = min_vertex_cut(&g2).map(|c| c.size);
    let good = construction_labeling(&spec2, &g2).good_graph(g2.n());
    let mm = max_matching(&good);
    let odd = mm.odd_components(&good);
    let left = spec2.left_vertices();
    let right: VertexSet = (0..g2.n()).filter(|&v| !left.contains(v)).collect();
    let certificate = !mm.is_perfect(&good) && odd.contains(&left) && odd.contains(&right);
    let ok = cut1 == Some(7) && g2.n() == 26 && cut2 == Some(14) && certificate;
    corpus.push(g1);
    corpus.push(g2);
    check(
        "5",
        ok,
        format!(
            "k=1 cut {cut1:?}; k=2 n {} cut {cut2:?}, medium deficiency {}, L and R odd components {certificate}",
            26,
            mm.deficiency(&good)
        ),
    )
}

fn vedges(corpus: &[Graph]) -> Vec<Line> {
    let mut general = 0;
    let mut in_class = 0;
    let mut broken = Vec::new();
    let mut literal_mismatch = 0;
    for (i, g) in corpus.iter().enumerate() {
        let (by_vertex, binomial, by_edge) = vedge_counts(g);
        if by_vertex != by_edge {
            broken.push(format!("graph {i}: {by_vertex} vs {by_edge}"));
        }
        general += 1;
        if antitriangle(g).is_none() {
            in_class += 1;
            if binomial != by_edge {
                broken.push(format!("graph {i}: binomial {binomial} vs {by_edge}"));
            }
            if let Ok((_, stats)) = conflict_graph_minor(g) {
                if stats.vedges_by_vertex != binomial || stats.vedges_by_edge != by_edge {
                    broken.push(format!("graph {i}: library counts differ"));
                }
            }
            if literal_binomial(g) != by_edge {
                literal_mismatch += 1;
            }
        }
    }
    vec![
        check(
            "6",
            broken.is_empty(),
            format!(
                "{general} graphs: sum_v e(non-nbrs of v) = sum_e |far(e)|; {in_class} in class also match sum_v C(n-1-d(v),2); {} mismatches {:?}",
                broken.len(),
                broken.first()
            ),
        ),
        Line {
            id: "6-literal",
            status: if literal_mismatch == 0 { Status::Pass } else { Status::Recorded },
            detail: format!(
                "sum_v C(n-d(v),2) = sum_e |far(e)| fails on {literal_mismatch} of {in_class} class graphs (binomial is off by one)"
            ),
        },
    ]
}

fn monte_carlo() -> Vec<Line> {
    let mut rows = Vec::new();
    let mut ok = true;
    for (i, &(n, p)) in [(5usize, 0.9f64), (9, 0.8), (9, 0.95)].iter().enumerate() {
        let exact = expected_minor_probability(n, p).unwrap().probability;
        let est = monte_carlo_fixed_partition(n, p, 100_000, 42 + i as u64).unwrap();
        let z = (est.mean - exact).abs() / est.stderr;
        ok &= z <= 4.0;
        rows.push(format!("({n},{p}) empirical {:.5} exact {exact:.5} z {z:.2}", est.mean));
    }
    // direct product for d = 2: two pair edges, one touching pair of pairs,
    // two pairs touching the singleton
    let q: f64 = 0.1;
    let oracle = 0.9f64.powi(2) * (1.0 - q.powi(4)) * (1.0 - q.powi(2)).powi(2);
    let exact = expected_minor_probability(5, 0.9).unwrap().probability;
    let frozen: f64 = 0.793_801_6;
    let literal: f64 = 0.89371;
    vec![
        check("7", ok, rows.join("; ")),
        check(
            "7-exact",
            (exact - oracle).abs() <= 1e-12 && (exact - frozen).abs() <= 1e-5,
            format!("(5,0.9) closed form {exact:.7}, direct product {oracle:.7}, frozen {frozen}"),
        ),
        Line {
            id: "7-literal",
            status: if (exact - literal).abs() <= 1e-5 { Status::Pass } else { Status::Recorded },
            detail: format!("stated value {literal} vs closed form {exact:.7} (stated arithmetic is inconsistent)"),
        },
    ]
}

fn duality() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut mismatches = Vec::new();
    let (mut feasible, mut certified) = (0, 0);
    for i in 0..1000 {
        let rel = if i % 2 == 0 {
            // arbitrary relation pair on up to 7 elements
            let order = rng.gen_range(1..=7);
            let (mut untouching, mut open_paths) = (Vec::new(), Vec::new());
            for a in 0..order {
                for b in a + 1..order {
                    if rng.gen_bool(0.35) {
                        untouching.push((a, b));
                    }
                    if rng.gen_bool(0.35) {
                        open_paths.push((a, b));
                    }
                }
            }
            ClauseRelations {
                order,
                untouching,
                open_paths,
            }
        } else {
            // relations of a graph on up to 7 vertices with few edges
            loop {
                let n = rng.gen_range(3..=7);
                let p = rng.gen_range(0.2..0.8);
                let g = random_graph(&mut rng, n, p);
                if g.m() <= 16 {
                    break ClauseRelations::of_graph(&g);
                }
            }
        };
        let truth = referee_feasible(&rel);
        let solved = solve_relations(&rel, &[]);
        let cert = extract_aacw(&rel).expect("search bound");
        if let Some(labels) = &solved {
            let good = |x: usize| labels[x] == Label::Good;
            let valid = rel.untouching.iter().all(|&(a, b)| !(good(a) && good(b)))
                && rel.open_paths.iter().all(|&(a, b)| good(a) || good(b));
            if !valid {
                mismatches.push(format!("instance {i}: solution breaks a clause"));
            }
            feasible += 1;
        }
        if let Some(c) = &cert {
            if let Err(e) = c.validate(&rel) {
                mismatches.push(format!("instance {i}: certificate invalid: {e}"));
            }
            certified += 1;
        }
        if solved.is_some() == cert.is_some() || solved.is_some() != truth {
            mismatches.push(format!("instance {i}: solver {} certificate {} referee {truth}", solved.is_some(), cert.is_some()));
        }
    }
    check(
        "8",
        mismatches.is_empty(),
        format!("1000 instances, {feasible} feasible, {certified} certified, {} mismatches {:?}", mismatches.len(), mismatches.first()),
    )
}

fn matching_and_cut(corpus: &mut Vec<Graph>) -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut wrong = Vec::new();
    for i in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.95);
        let g = random_graph(&mut rng, n, p);
        let mm = max_matching(&g);
        let nu = brute_matching_size(&g);
        let deficiency = n - 2 * nu;
        let tutte = mm.odd_components(&g).len() - mm.tutte_set.len();
        if mm.size() != nu || mm.deficiency(&g) != deficiency || tutte != deficiency {
            wrong.push(format!("graph {i}: matching {} vs {nu}, Tutte-Berge {tutte} vs {deficiency}", mm.size()));
        }
        let cut = min_vertex_cut(&g).map(|c| c.size);
        if cut != brute_min_cut(&g) {
            wrong.push(format!("graph {i}: cut {cut:?} vs {:?}", brute_min_cut(&g)));
        }
        corpus.push(g);
    }
    check("9", wrong.is_empty(), format!("200 graphs, {} disagreements {:?}", wrong.len(), wrong.first()))
}

fn conflict_bound(corpus: &mut Vec<Graph>) -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut wrong = Vec::new();
    let mut min_ratio = f64::INFINITY;
    for i in 0..200u64 {
        let n = rng.gen_range(10..=300);
        let model = RandomModel::new(n, rng.gen_range(0.5..1.0), rng.gen_range(0.3..0.7), 10_000 + i).unwrap();
        let g = gen_random_dense(&model);
        let (w, stats) = conflict_graph_minor(&g).expect("dense graph has edges");
        let bound = (stats.m - stats.dropped).div_ceil(stats.max_degree_kept + 1);
        if w.size() < bound || 2 * stats.dropped > stats.m || !referee_minor(&g, &w) {
            wrong.push(format!("graph {i}: size {} bound {bound} dropped {}/{}", w.size(), stats.dropped, stats.m));
        }
        min_ratio = min_ratio.min(w.size() as f64 / bound.max(1) as f64);
        if n <= 60 {
            corpus.push(g);
        }
    }
    let pc = gen_petersen_complement(&[1; 10]).unwrap();
    let lab = EdgeLabeling::uniform(&pc, Label::Good, LabelMode::Strict);
    let report = good_matching_minor(&pc, &lab).expect("valid labeling");
    let k5 = report.witness().is_some_and(|w| w.size() == 5 && referee_minor(&pc, w))
        && report.notes.iter().any(|s| s.contains("petersen"));
    check(
        "10",
        wrong.is_empty() && k5,
        format!(
            "200 graphs, {} below bound (worst size/bound {min_ratio:.2}); Petersen complement K5 via exception branch {k5}",
            wrong.len()
        ),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut corpus = Vec::new();
    let mut lines = soundness_and_third(&mut corpus);
    lines.push(oracle_gap(&mut corpus));
    lines.push(goodbad_pipeline(&mut corpus));
    lines.push(dipole_numbers(&mut corpus));
    let mc = monte_carlo();
    let dual = duality();
    let mc9 = matching_and_cut(&mut corpus);
    let conflict = conflict_bound(&mut corpus);
    lines.extend(vedges(&corpus));
    lines.extend(mc);
    lines.push(dual);
    lines.push(mc9);
    lines.push(conflict);

    let mut failed = 0;
    for line in &lines {
        let tag = match line.status {
            Status::Pass => "PASS",
            Status::Fail => {
                failed += 1;
                "FAIL"
            }
            Status::Recorded => "RECORDED",
        };
        println!("criterion {:<10} {tag:<8} {}", line.id, line.detail);
    }
    println!("acceptance finished in {:.1}s, {failed} failing", start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
