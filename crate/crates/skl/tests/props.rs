//! Property tests for the structural invariants: permutation algebra, group
//! closure, stable-set gaps, format round-trips, and automorphism closure
//! under composition.

mod common;

use proptest::prelude::*;

use skl::formats::{from_dimacs, from_graph6, to_dimacs, to_graph6};
use skl::graph::Graph;
use skl::group::PermutationGroup;
use skl::params::Params;
use skl::perm::Permutation;
use skl::stable::{enumerate_stable_sets, stable_set_count};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut index = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if bits[index] {
                        edges.push((i, j));
                    }
                    index += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn composition_is_associative(
        p in permutation(7),
        q in permutation(7),
        r in permutation(7),
    ) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn inverse_composes_to_identity(p in permutation(9)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn closure_is_a_group_and_idempotent(
        a in permutation(5),
        b in permutation(5),
    ) {
        let group = PermutationGroup::closure(5, &[a, b], 1000).unwrap();
        // Order divides 5! and the identity is present.
        prop_assert_eq!(120 % group.order(), 0);
        prop_assert!(group.contains(&Permutation::identity(5)));
        // Closed under inverse and composition.
        for p in group.elements() {
            prop_assert!(group.contains(&p.inverse()));
            for q in group.elements() {
                prop_assert!(group.contains(&p.compose(q)));
            }
        }
        // Closing the closure changes nothing.
        let again = PermutationGroup::closure(5, group.elements(), 1000).unwrap();
        prop_assert!(group.same_elements(&again).unwrap());
    }

    #[test]
    fn stable_set_gaps_are_large_and_sum_to_n(
        s in 2usize..=4,
        k in 1usize..=3,
        extra in 0usize..=5,
    ) {
        let n = s * k + extra;
        let p = Params::new(n, k, s).unwrap();
        let sets = enumerate_stable_sets(&p);
        prop_assert_eq!(sets.len() as u64, stable_set_count(&p).unwrap());
        for set in &sets {
            prop_assert_eq!(set.gaps().iter().sum::<usize>(), n);
            if k >= 2 {
                prop_assert!(set.gaps().iter().all(|&gap| gap >= s));
            }
        }
        // Lexicographic order by element sequences.
        for pair in sets.windows(2) {
            prop_assert!(pair[0].elements() < pair[1].elements());
        }
    }

    #[test]
    fn graph6_and_dimacs_round_trip(g in graph(24)) {
        prop_assert_eq!(&from_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&from_dimacs(&to_dimacs(&g)).unwrap(), &g);
    }

    #[test]
    fn automorphisms_compose_into_automorphisms(g in graph(6)) {
        let automorphisms = common::brute_force_automorphisms(&g);
        for p in &automorphisms {
            for q in &automorphisms {
                prop_assert_eq!(g.is_automorphism(&p.compose(q)), Ok(true));
            }
        }
    }
}
