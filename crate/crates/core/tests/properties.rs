mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zf_core::approx::approximate_zero_forcing;
use zf_core::certificate::{solve, Certificate, DecompositionSource};
use zf_core::decomposition::{make_nice, PathDecomposition};
use zf_core::forcing::{closure, white_set};
use zf_core::generators::{random_connected, random_gnp};
use zf_core::graph::{Graph, VertexSet};

fn connected_graph() -> impl Strategy<Value = Graph> {
    (1usize..=14, 0.05f64..0.7, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (0usize..=14, 0.0f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| random_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// The decomposition read off a vertex ordering: bag `i` holds the `i`-th
/// vertex and every earlier vertex with a neighbour at position `i` or
/// later.
fn ordering_decomposition(g: &Graph, seed: u64) -> PathDecomposition {
    let mut order: Vec<usize> = g.vertices().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let bags = (0..order.len())
        .map(|i| {
            let mut bag: Vec<usize> = order[..i]
                .iter()
                .copied()
                .filter(|&u| g.neighbors(u).iter().any(|&w| pos[w] >= i))
                .collect();
            bag.push(order[i]);
            VertexSet::from(bag)
        })
        .collect();
    PathDecomposition::new(g, bags).expect("ordering decompositions are valid")
}

fn naive_blue(g: &Graph, s: &VertexSet) -> Vec<bool> {
    let mut blue = s.to_mask(g.n());
    while let Some(v) = g.vertices().find_map(|u| {
        let white: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !blue[w]).collect();
        (blue[u] && white.len() == 1).then(|| white[0])
    }) {
        blue[v] = true;
    }
    blue
}

fn is_fort(g: &Graph, f: &VertexSet) -> bool {
    !f.is_empty() && g.vertices().filter(|&v| !f.contains(v)).all(|v| g.neighbors(v).iter().filter(|&&w| f.contains(w)).count() != 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn make_nice_keeps_width_and_coverage(g in connected_graph(), seed in any::<u64>()) {
        let pd = ordering_decomposition(&g, seed);
        let nice = make_nice(&g, &pd).unwrap();
        prop_assert_eq!(nice.width(), pd.width());
        prop_assert_eq!(nice.k(), 2 * g.n() - 1);
        for (u, v) in g.edges() {
            prop_assert!(nice.bags().iter().any(|b| b.contains(u) && b.contains(v)));
        }
        for i in 1..=nice.k() + 1 {
            prop_assert_eq!(nice.bag(i).len().abs_diff(nice.bag(i - 1).len()), 1);
        }
    }

    #[test]
    fn bag_ranges_are_intervals(g in connected_graph(), seed in any::<u64>()) {
        let nice = make_nice(&g, &ordering_decomposition(&g, seed)).unwrap();
        let end = nice.k() + 1;
        for i in 0..=end {
            for j in i..=end {
                let naive: VertexSet = (i..=j).flat_map(|t| nice.bag(t).iter().collect::<Vec<_>>()).collect();
                prop_assert_eq!(nice.prefix_union(i, j).unwrap(), naive);
            }
        }
        // anything seen both before and after a bag is in it
        for t in 1..end {
            let before = nice.prefix_union(0, t).unwrap();
            let after = nice.prefix_union(t, end).unwrap();
            prop_assert!(before.intersection(&after).is_subset(nice.bag(t)));
        }
        prop_assert!(nice.prefix_union(3, 2).is_err());
        prop_assert!(nice.prefix_union(0, end + 1).is_err());
    }

    #[test]
    fn closure_matches_naive_process(g in any_graph(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.3)).collect();
        let c = closure(&g, &s);
        prop_assert_eq!(c.blue.to_mask(g.n()), naive_blue(&g, &s));
        // every recorded force is legal at the moment it happens
        let mut blue = s.to_mask(g.n());
        for &(u, v) in &c.history {
            prop_assert!(blue[u] && !blue[v]);
            prop_assert!(g.neighbors(u).iter().filter(|&&w| !blue[w]).count() == 1);
            blue[v] = true;
        }
        let white = white_set(&g, &s);
        prop_assert!(white.is_empty() || is_fort(&g, &white));
    }

    #[test]
    fn solving_is_deterministic(g in any_graph(), seed in any::<u64>()) {
        let pd = if g.n() == 0 { None } else { Some(ordering_decomposition(&g, seed)) };
        let source = match &pd {
            Some(pd) => DecompositionSource::Given(pd),
            None => DecompositionSource::Exact { max_n: 14 },
        };
        let a = solve(&g, source).unwrap();
        let b = solve(&g, source).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(Certificate::new(&g, &a).to_json(), Certificate::new(&g, &b).to_json());
    }

    #[test]
    fn forts_are_local_to_their_window(g in connected_graph(), seed in any::<u64>()) {
        let nice = make_nice(&g, &ordering_decomposition(&g, seed)).unwrap();
        let r = approximate_zero_forcing(&g, &nice).unwrap();
        for f in &r.packing.forts {
            prop_assert!(is_fort(&g, f));
            let inside = r.iterations.iter().any(|&(t, z)| {
                let window = nice.prefix_union(t, z).unwrap();
                f.is_subset(&window) && f.is_disjoint(&nice.bag(t).union(nice.bag(z)))
            });
            prop_assert!(inside, "fort {:?} is not inside any window", f);
        }
        let total: usize = r.packing.forts.iter().map(VertexSet::len).sum();
        let union: VertexSet = r.packing.forts.iter().flat_map(|f| f.iter().collect::<Vec<_>>()).collect();
        prop_assert_eq!(total, union.len());
        prop_assert!(common::naive_forces(&g, r.s.as_slice()));
    }
}
