mod common;

use std::collections::VecDeque;

use common::*;
use proptest::prelude::*;
use uquad::arrangement::{
    count_regions, region_family, region_family_at, region_graph, Permutation,
};
use uquad::drawing::{
    assign_coordinates, check_dominance, compact, drawing_to_arrangement, extract_zones,
    validate_upright_quad,
};
use uquad::family::{build_graph, chain_between, SetFamily, StateSet};
use uquad::io;
use uquad::recognize::{census, implication_poset, recognize};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn undirected_distances(f: &SetFamily, from: usize) -> Vec<usize> {
    let g = build_graph(f).unwrap();
    let adj = g.adjacency();
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn region_count_formula(pi in permutation(8)) {
        let a = arrangement(&pi);
        let f = region_family(&a);
        prop_assert_eq!(f.len(), 1 + pi.len() + inversions(pi.as_slice()));
        prop_assert_eq!(count_regions(&a), f.len());
        prop_assert_eq!(masks(&f), fine_sampled_states(pi.as_slice()));
    }

    #[test]
    fn doubling_resolution_is_idempotent(pi in permutation(7), r in 1usize..4) {
        let a = arrangement(&pi);
        prop_assert_eq!(region_family_at(&a, r), region_family_at(&a, 2 * r));
    }

    #[test]
    fn chains_step_by_one_element(pi in permutation(6), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let f = family_of(&pi);
        let (s, t) = (f.states()[i.index(f.len())], f.states()[j.index(f.len())]);
        let (lo, hi) = if s.is_subset(t) { (s, t) } else if t.is_subset(s) { (t, s) } else { (StateSet::EMPTY, s.union(t)) };
        let chain = chain_between(&f, lo, hi).unwrap();
        prop_assert_eq!(chain.first().copied(), Some(lo));
        prop_assert_eq!(chain.last().copied(), Some(hi));
        prop_assert_eq!(chain.len(), hi.len() - lo.len() + 1);
        for w in chain.windows(2) {
            prop_assert!(w[0].is_subset(w[1]) && w[1].len() == w[0].len() + 1);
        }
        prop_assert!(chain.iter().all(|&c| f.contains(c)));
    }

    #[test]
    fn graph_is_a_partial_cube(pi in permutation(5)) {
        let f = family_of(&pi);
        let g = build_graph(&f).unwrap();
        let mut indeg = vec![0; g.vertex_count()];
        let mut outdeg = vec![0; g.vertex_count()];
        for e in g.edges() {
            outdeg[e.from] += 1;
            indeg[e.to] += 1;
            prop_assert_eq!(g.vertices()[e.to], g.vertices()[e.from].with(e.label));
        }
        for v in 0..g.vertex_count() {
            prop_assert_eq!(indeg[v] == 0, g.vertices()[v].is_empty());
            prop_assert_eq!(outdeg[v] == 0, g.vertices()[v] == f.union_all());
        }
        for s in 0..g.vertex_count() {
            let dist = undirected_distances(&f, s);
            for (t, &d) in dist.iter().enumerate() {
                prop_assert_eq!(d, g.vertices()[s].symmetric_difference(g.vertices()[t]).len());
            }
        }
    }

    #[test]
    fn recognized_orders_form_a_realizer(pi in permutation(7)) {
        let f = family_of(&pi);
        let o = recognize(&f).unwrap().unwrap();
        let a = o.arrangement(f.universe()).unwrap();
        prop_assert_eq!(region_family(&a), f.clone());
        let poset = implication_poset(&f).unwrap();
        prop_assert!(poset.is_linear_extension(&o.x_order));
        prop_assert!(poset.is_linear_extension(&o.y_order));
        let (xr, yr) = o.ranks(pi.len()).unwrap();
        for e in 0..pi.len() {
            for g in e + 1..pi.len() {
                if !poset.comparable(e, g) {
                    prop_assert_ne!(xr[e] < xr[g], yr[e] < yr[g]);
                }
            }
        }
        let n = pi.len();
        prop_assert!(f.len() <= 1 + (n + 1) * n / 2);
    }

    #[test]
    fn compacted_drawings_roundtrip(pi in permutation(6)) {
        let f = family_of(&pi);
        let g = build_graph(&f).unwrap();
        let d = assign_coordinates(&f, &recognize(&f).unwrap().unwrap()).unwrap();
        let c = compact(&d, &g).unwrap();
        prop_assert!(validate_upright_quad(&c, &g).is_ok());
        prop_assert!(check_dominance(&c, &g).is_ok());
        prop_assert!(c.x_span() <= d.x_span() && c.y_span() <= d.y_span());
        let zones = extract_zones(&c, &g).unwrap();
        prop_assert_eq!(zones.len(), pi.len());
        prop_assert!(zones.iter().all(|z| z.label.is_some()));
        let back = region_graph(&drawing_to_arrangement(&c, &g).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn files_roundtrip(pi in permutation(6)) {
        let a = arrangement(&pi);
        let a2 = io::parse_arrangement(&io::write_arrangement(&a)).unwrap();
        prop_assert_eq!(&a2, &a.canonical());
        let f = region_family(&a);
        let text = io::write_family(&f);
        prop_assert_eq!(io::parse_family(&text).unwrap(), f.clone());
        let g = build_graph(&f).unwrap();
        let d = assign_coordinates(&f, &recognize(&f).unwrap().unwrap()).unwrap();
        let (g2, d2) = io::parse_drawing(&io::write_drawing(&g, &d)).unwrap();
        prop_assert_eq!(g2, g);
        prop_assert_eq!(d2, d);
    }
}

#[test]
fn census_respects_factorial_bound() {
    for n in 0..=6 {
        let r = census(n).unwrap();
        let factorial: usize = (1..=n).product();
        assert_eq!(r.permutations, factorial);
        assert!(r.labeled_classes <= factorial);
        assert!(r.unlabeled_classes <= r.labeled_classes);
        assert!(r.max_family_size <= r.state_bound);
        assert!(r.reflection_identity, "n={n}");
        assert!(r.inverse_isomorphic, "n={n}");
    }
}
