use proptest::prelude::*;

use hadwiger::generators::{
    fix_antitriangles, gen_dipole_graph, gen_petersen_complement, gen_v8_complement,
};
use hadwiger::graph::{
    antitriangle, c_twin_classes, complement, dominating_edges, max_clique, min_vertex_cut, Graph,
    VertexSet,
};
use hadwiger::labeling::{
    axiom_check, clique_cover_labeling, refine_labeling, solve_2sat_labeling, Label, RefineMode,
};
use hadwiger::matching::{hall_matching, max_matching, HallOutcome};
use hadwiger::strategies::{conflict_graph_minor, cutset_minor, p3_packing_minor};
use hadwiger::structure::{
    construction_labeling, dipole_decompose, recognize_blownup, BlowupTarget, Side, TGraphSpec,
    Twist,
};
use hadwiger::witness::{brute_force_max_minor, verify_minor};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_in_class(max_n: usize) -> impl Strategy<Value = Graph> {
    (arb_graph(max_n), any::<u64>()).prop_map(|(g, seed)| fix_antitriangles(&g, seed))
}

fn arb_permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn arb_tspec() -> impl Strategy<Value = TGraphSpec> {
    (1..=3usize, 1..=3usize).prop_flat_map(|(l, r)| {
        (
            prop::collection::vec(prop::collection::vec(any::<bool>(), r), l),
            prop::collection::vec((1..=2usize, 0..=2usize), l),
            prop::collection::vec((1..=2usize, 0..=2usize), r),
        )
            .prop_map(|(twists, left, right)| {
                let twists = twists
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|t| if t { Twist::Twisted } else { Twist::Straight })
                            .collect()
                    })
                    .collect();
                TGraphSpec::new(twists, left, right).expect("valid shape")
            })
    })
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        prop_assert_eq!(complement(&complement(&g)), g);
    }

    #[test]
    fn antitriangle_iff_complement_has_triangle(g in arb_graph(10)) {
        let h = complement(&g);
        let n = h.n();
        let mut triangle = false;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    triangle |= h.has_edge(a, b) && h.has_edge(a, c) && h.has_edge(b, c);
                }
            }
        }
        prop_assert_eq!(antitriangle(&g).is_some(), triangle);
    }

    #[test]
    fn removing_a_dominating_edge_stays_in_class(g in arb_in_class(30)) {
        for (u, v) in dominating_edges(&g) {
            let keep: Vec<usize> = (0..g.n()).filter(|&x| x != u && x != v).collect();
            prop_assert!(antitriangle(&g.induced(&keep)).is_none());
        }
    }

    #[test]
    fn max_clique_matches_brute_force(g in arb_graph(12)) {
        let n = g.n();
        let best = (0u32..1 << n)
            .filter(|&s| is_clique(&g, &(0..n).filter(|&v| s >> v & 1 == 1).collect::<Vec<_>>()))
            .map(u32::count_ones)
            .max()
            .unwrap_or(0) as usize;
        let c = max_clique(&g);
        prop_assert!(is_clique(&g, c.members()));
        prop_assert_eq!(c.len(), best);
    }

    #[test]
    fn twin_classes_are_cliques_of_equal_closed_neighborhoods(g in arb_graph(12)) {
        for class in c_twin_classes(&g).classes {
            let m = class.members();
            prop_assert!(is_clique(&g, m));
            for &v in &m[1..] {
                prop_assert_eq!(g.closed_row(m[0]), g.closed_row(v));
            }
        }
    }

    #[test]
    fn larger_prevertices_never_hurt(g in arb_graph(7)) {
        let two = brute_force_max_minor(&g, 2).unwrap();
        let three = brute_force_max_minor(&g, 3).unwrap();
        prop_assert!(three.size() >= two.size());
        prop_assert!(verify_minor(&g, &three).unwrap().is_valid());
    }

    #[test]
    fn matching_size_is_invariant_under_relabeling((g, perm) in arb_permuted(12)) {
        let h = g.relabel(&perm);
        let (a, b) = (max_matching(&g), max_matching(&h));
        prop_assert_eq!(a.size(), b.size());
        prop_assert_eq!(a.deficiency(&g), a.odd_components(&g).len() - a.tutte_set.len());
    }

    #[test]
    fn hall_violations_are_genuine(g in arb_graph(12), split in 1usize..11) {
        let n = g.n();
        let split = split.min(n);
        let a: VertexSet = (0..split).collect();
        let b: VertexSet = (split..n).collect();
        match hall_matching(&g, &a, &b).unwrap() {
            HallOutcome::Matching(pairs) => {
                prop_assert_eq!(pairs.len(), a.len());
                for &(x, y) in &pairs {
                    prop_assert!(a.contains(x) && b.contains(y) && g.has_edge(x, y));
                }
            }
            HallOutcome::Violation { set, neighborhood } => {
                let actual: VertexSet = b
                    .iter()
                    .copied()
                    .filter(|&y| set.iter().any(|&x| g.has_edge(x, y)))
                    .collect();
                prop_assert_eq!(&actual, &neighborhood);
                prop_assert!(set.len() > neighborhood.len());
            }
        }
    }

    #[test]
    fn produced_labelings_satisfy_the_axioms(g in arb_in_class(9)) {
        if let Ok(lab) = solve_2sat_labeling(&g, &[]) {
            prop_assert!(axiom_check(&g, &lab).is_empty());
        }
        if let Ok(lab) = refine_labeling(&g, RefineMode::Cor1) {
            prop_assert!(axiom_check(&g, &lab).is_empty());
        }
    }

    #[test]
    fn odd_clique_lists_label_successfully(
        n in 3usize..9,
        picks in prop::collection::vec(prop::collection::vec(any::<bool>(), 9), 1..=3),
    ) {
        // an odd number of cliques covering every vertex at least k/3 times
        let k = 2 * picks.len() - 1;
        let mut cliques: Vec<VertexSet> = picks
            .iter()
            .take(k)
            .map(|bits| (0..n).filter(|&v| bits[v]).collect())
            .collect();
        while cliques.len() < k {
            cliques.push((0..n).collect());
        }
        let mut g = Graph::new(n);
        for c in &cliques {
            for (i, &u) in c.members().iter().enumerate() {
                for &v in &c.members()[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        if let Ok(lab) = clique_cover_labeling(&g, &cliques) {
            prop_assert!(axiom_check(&g, &lab).is_empty());
        }
    }

    #[test]
    fn dipole_graphs_are_in_class_and_decompose(spec in arb_tspec()) {
        let g = gen_dipole_graph(&spec);
        let lab = construction_labeling(&spec, &g);
        let all_poles_nonempty = spec
            .left_poles
            .iter()
            .chain(&spec.right_poles)
            .all(|&(t, b)| t > 0 && b > 0);
        if all_poles_nonempty {
            prop_assert!(antitriangle(&g).is_none());
        }
        let d = dipole_decompose(&g, &lab, &spec.left_vertices()).unwrap();
        prop_assert_eq!(d.left_dipoles.len(), spec.l());
        prop_assert_eq!(d.right_dipoles.len(), spec.r());
        for side in [Side::Left, Side::Right] {
            let dipoles = d.dipoles(side);
            for (i, a) in dipoles.iter().enumerate() {
                for b in &dipoles[i + 1..] {
                    for &u in a.vertices().iter() {
                        for &v in b.vertices().iter() {
                            if g.has_edge(u, v) {
                                prop_assert_eq!(lab.get(u, v), Some(Label::Good));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn blowups_are_recognized(sizes in prop::collection::vec(1usize..=3, 10)) {
        let g = gen_petersen_complement(&sizes).unwrap();
        let found = recognize_blownup(&g, BlowupTarget::PetersenComplement).expect("recognized");
        let mut got: Vec<usize> = found.classes.iter().map(VertexSet::len).collect();
        let mut want = sizes.clone();
        got.sort_unstable();
        want.sort_unstable();
        prop_assert_eq!(got, want);
        prop_assert!(antitriangle(&g).is_none());

        let g = gen_v8_complement(&sizes[..8]).unwrap();
        prop_assert!(recognize_blownup(&g, BlowupTarget::V8Complement).is_some());
        prop_assert!(antitriangle(&g).is_none());
    }

    #[test]
    fn fix_antitriangles_only_adds_edges(g in arb_graph(12), seed in any::<u64>()) {
        let h = fix_antitriangles(&g, seed);
        prop_assert!(antitriangle(&h).is_none());
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(u, v));
        }
        let n = g.n();
        prop_assert!(h.m() - g.m() <= n * n.saturating_sub(1) * n.saturating_sub(2) / 6);
    }

    #[test]
    fn construction_bounds(g in arb_in_class(16)) {
        let n = g.n();
        let p3 = p3_packing_minor(&g).unwrap();
        prop_assert!(3 * p3.size() >= n);
        prop_assert!(verify_minor(&g, &p3).unwrap().is_valid());
        if let Ok((w, stats)) = conflict_graph_minor(&g) {
            prop_assert!(w.size() >= stats.size_bound());
            prop_assert!(2 * stats.dropped <= stats.m);
            prop_assert!(verify_minor(&g, &w).unwrap().is_valid());
        }
        if let Some(cut) = min_vertex_cut(&g).filter(|c| 2 * c.size <= n) {
            let (w, _) = cutset_minor(&g, &cut.vertices).unwrap();
            prop_assert!(2 * w.size() >= n);
            prop_assert!(verify_minor(&g, &w).unwrap().is_valid());
        }
    }
}
