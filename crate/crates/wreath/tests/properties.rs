//! Property tests for the structural invariants: closure behavior of posets,
//! serialization round trips, isomorphism witnesses, Cayley-graph shape, and
//! the group laws of the generalized wreath product.

use std::collections::HashSet;

use proptest::prelude::*;

use wreath::graph::Graph;
use wreath::group::{FiniteGroup, PermutationGroup};
use wreath::gwp::GwpGroupSpec;
use wreath::iso::{isomorphism, verify_witness};
use wreath::poset::Poset;
use wreath::products::GwpSpec;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

// covers oriented from smaller to larger declared index, so always acyclic
fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let names = labels(n);
            let covers: Vec<(String, String)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&(a, b), _)| (names[a].clone(), names[b].clone()))
                .collect();
            Poset::from_covers(&names, &covers).unwrap()
        })
    })
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let names = labels(n);
            let edges: Vec<(String, String)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&(a, b), _)| (names[a].clone(), names[b].clone()))
                .collect();
            Graph::new(names, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn transitive_closure_is_idempotent(p in arb_poset()) {
        let mut order_pairs = Vec::new();
        for a in 0..p.len() {
            for b in 0..p.len() {
                if p.above(a, b) {
                    order_pairs.push((p.elements()[a].clone(), p.elements()[b].clone()));
                }
            }
        }
        let q = Poset::from_covers(p.elements(), &order_pairs).unwrap();
        for a in 0..p.len() {
            for b in 0..p.len() {
                prop_assert_eq!(p.above(a, b), q.above(a, b));
            }
        }
    }

    #[test]
    fn ancestral_sets_are_ancestral(p in arb_poset()) {
        for label in p.elements() {
            for strict in [true, false] {
                let set = p.ancestral_set(label, strict).unwrap();
                prop_assert!(p.is_ancestral(&set).unwrap());
            }
        }
    }

    #[test]
    fn ancestral_family_is_a_lattice(p in arb_poset()) {
        let family: Vec<HashSet<String>> = p
            .ancestral_family()
            .unwrap()
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        prop_assert!(family.iter().any(|s| s.is_empty()));
        prop_assert!(family.iter().any(|s| s.len() == p.len()));
        for a in &family {
            for b in &family {
                let union: HashSet<String> = a.union(b).cloned().collect();
                let inter: HashSet<String> = a.intersection(b).cloned().collect();
                prop_assert!(family.contains(&union));
                prop_assert!(family.contains(&inter));
            }
        }
    }

    #[test]
    fn linear_extension_lists_ancestors_first(p in arb_poset()) {
        let order = p.linear_extension_idx();
        prop_assert_eq!(order.len(), p.len());
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[pos + 1..] {
                prop_assert!(!p.above(j, i));
            }
        }
    }

    #[test]
    fn graph_json_round_trip(g in arb_graph()) {
        let back = Graph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(back.vertices(), g.vertices());
        prop_assert_eq!(back.edges_idx(), g.edges_idx());
    }

    #[test]
    fn isomorphism_finds_relabelings(g in arb_graph(), seed in any::<u64>()) {
        // relabel by a permutation derived from the seed
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let vertices: Vec<String> = (0..n).map(|i| format!("r{}", perm[i])).collect();
        let edges: Vec<(String, String)> = g
            .edges_idx()
            .into_iter()
            .map(|(u, v)| (vertices[u].clone(), vertices[v].clone()))
            .collect();
        let relabeled = Graph::new(vertices, &edges).unwrap();

        let witness = isomorphism(&g, &relabeled).unwrap();
        prop_assert!(witness.is_some());
        prop_assert!(verify_witness(&g, &relabeled, &witness.unwrap()));
    }

    #[test]
    fn cayley_graphs_are_regular_and_connected(
        order in 2usize..=9,
        picks in proptest::collection::vec(any::<bool>(), 9),
    ) {
        let group = FiniteGroup::cyclic(order);
        // symmetrize a random subset and drop the identity
        let mut members: HashSet<usize> = (1..order).filter(|&i| picks[i]).collect();
        for m in members.clone() {
            members.insert(group.inv_idx(m));
        }
        let names: Vec<String> = members.iter().map(|&i| i.to_string()).collect();
        match group.validate_generating_set(&names) {
            Ok(genset) => {
                let graph = group.cayley_graph(&genset);
                prop_assert_eq!(graph.regular_degree(), Some(genset.len()));
                prop_assert!(graph.is_connected());
            }
            Err(_) => prop_assume!(false),
        }
    }

    #[test]
    fn gwp_group_laws(f_pick in 0usize..24, h_pick in 0usize..24, x_pick in 0usize..6) {
        let actions = vec![
            PermutationGroup::regular_representation(&FiniteGroup::cyclic(3)),
            PermutationGroup::regular_representation(&FiniteGroup::cyclic(2)),
        ];
        let poset = Poset::from_covers(&["1", "2"], &[("1", "2")]).unwrap();
        let spec = GwpGroupSpec::new(poset, actions).unwrap();
        let elements = spec.enumerate().unwrap();
        prop_assert_eq!(elements.len(), 24);
        let points: Vec<Vec<usize>> = spec.points().collect();

        let f = &elements[f_pick];
        let h = &elements[h_pick];
        let x = &points[x_pick];

        // action homomorphism
        let composed = spec.compose(f, h);
        prop_assert_eq!(
            spec.act(x, &composed).unwrap(),
            spec.act(&spec.act(x, f).unwrap(), h).unwrap()
        );
        // inverses cancel on both sides
        let identity = spec.identity();
        prop_assert_eq!(spec.compose(f, &spec.inverse(f)), identity.clone());
        prop_assert_eq!(spec.compose(&spec.inverse(f), f), identity);
    }

    #[test]
    fn sampled_degree_on_the_largest_instance(
        bits in proptest::collection::vec(0usize..2, 6),
        trits in proptest::collection::vec(0usize..3, 8),
    ) {
        // random vertices of the 419904-vertex four-index product have
        // exactly 1+1+1+2 neighbors, and the oracle is symmetric there
        let poset = Poset::from_covers(
            &["1", "2", "3", "4"],
            &[("1", "3"), ("2", "3"), ("3", "4")],
        )
        .unwrap();
        let edge = Graph::new(vec!["a".into(), "b".into()], &[("a", "b")]).unwrap();
        let triangle = Graph::complete(&["c", "d", "e"]);
        let spec = GwpSpec::new(poset, vec![edge.clone(), edge.clone(), edge, triangle]).unwrap();

        let ab = |x: usize| ["a", "b"][x].to_string();
        let cde = |x: usize| ["c", "d", "e"][x].to_string();
        let v = spec
            .vertex(&[
                vec![ab(bits[0])],
                vec![ab(bits[1])],
                bits[2..6].iter().map(|&x| ab(x)).collect(),
                trits.iter().map(|&x| cde(x)).collect(),
            ])
            .unwrap();
        let neighbors = spec.neighbors(&v);
        prop_assert_eq!(neighbors.len(), 5);
        for nb in &neighbors {
            prop_assert!(spec.neighbors(nb).contains(&v));
        }
    }

    #[test]
    fn gwp_neighbor_symmetry(digits in proptest::collection::vec(0usize..2, 7)) {
        // V poset over three K2 factors; a vertex has 1 + 2 + 4 table entries
        let poset = Poset::from_covers(&["1", "2", "3"], &[("1", "3"), ("2", "3")]).unwrap();
        let edge = Graph::new(vec!["a".into(), "b".into()], &[("a", "b")]).unwrap();
        let spec = GwpSpec::new(poset, vec![edge.clone(), edge.clone(), edge]).unwrap();
        let pick = |d: &[usize]| -> Vec<Vec<String>> {
            let name = |x: usize| if x == 0 { "a".to_string() } else { "b".to_string() };
            vec![
                vec![name(d[0])],
                vec![name(d[1])],
                d[2..7].iter().take(4).map(|&x| name(x)).collect(),
            ]
        };
        let v = spec.vertex(&pick(&digits)).unwrap();
        let neighbors = spec.neighbors(&v);
        prop_assert_eq!(neighbors.len(), 3);
        for nb in &neighbors {
            prop_assert!(spec.neighbors(nb).contains(&v));
        }
    }
}
