mod common;

use proptest::prelude::*;

use cospectral::iso::{
    decide_pair_isomorphism_with, graph_isomorphic, has_interchanging_automorphism, invert,
    is_isomorphism, is_permutation, is_pet, non_pet_by_sums, partite_respecting_iso,
    perm_equivalent, property_eta_certificate, property_pi, respects_partite, DecidedBy,
    EtaCertificate, Strategy as IsoStrategy,
};
use cospectral::{construct_pair, BipartiteGraph, ZMatrix};

use common::*;

fn square_binary(max: usize) -> impl Strategy<Value = ZMatrix> {
    (1..=max).prop_flat_map(|n| binary(n, n))
}

/// A binary matrix together with a shuffled copy and the shuffle.
fn shuffled(max: usize) -> impl Strategy<Value = (ZMatrix, Vec<usize>, Vec<usize>)> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| (binary(r, c), perm(r), perm(c)))
}

/// Pairs small enough for the exhaustive search to stay quick in debug builds.
fn small_pair() -> impl Strategy<Value = (ZMatrix, ZMatrix)> {
    (valid_upto(3, 3), valid_upto(3, 3))
        .prop_filter("at most 18 vertices", |(v, b)| v.rows() * b.rows() + v.cols() * b.cols() <= 18)
}

proptest! {
    #[test]
    fn equivalence_witness_is_sound((a, s, t) in shuffled(5)) {
        let b = permute(&a, &s, &t);
        let w = perm_equivalent(&a, &b);
        prop_assert!(w.is_some());
        let w = w.unwrap();
        prop_assert!(is_permutation(&w.row_perm, a.rows()) && is_permutation(&w.col_perm, a.cols()));
        prop_assert!(w.verify(&a, &b));
        prop_assert_eq!(w.apply(&a), b);
    }

    #[test]
    fn equivalence_matches_brute_force(
        (a, b) in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (binary(r, c), binary(r, c))),
    ) {
        prop_assert_eq!(perm_equivalent(&a, &b).is_some(), brute_equivalent(&a, &b));
    }

    #[test]
    fn equivalence_is_symmetric_and_transitive(
        (a, s1, t1) in shuffled(5),
        seeds in (any::<u64>(), any::<u64>()),
    ) {
        let b = permute(&a, &s1, &t1);
        // a second shuffle derived from the first, so c ~ b ~ a
        let rot = |p: &[usize], k: u64| {
            let k = (k as usize) % p.len();
            p.iter().cycle().skip(k).take(p.len()).copied().collect::<Vec<_>>()
        };
        let c = permute(&b, &rot(&invert(&s1), seeds.0), &rot(&invert(&t1), seeds.1));
        prop_assert!(perm_equivalent(&b, &a).is_some());
        prop_assert!(perm_equivalent(&b, &c).is_some());
        prop_assert!(perm_equivalent(&a, &c).is_some());
        prop_assert!(perm_equivalent(&a, &a).is_some());
    }

    #[test]
    fn pet_matches_brute_force(a in square_binary(4)) {
        prop_assert_eq!(is_pet(&a), brute_pet(&a));
        if non_pet_by_sums(&a) {
            prop_assert!(!is_pet(&a));
        }
    }

    #[test]
    fn symmetric_and_shuffled_symmetric_are_pet(half in square_binary(5), s in any::<u64>()) {
        let n = half.rows();
        let sym = ZMatrix::from_fn(n, n, |i, j| if half[(i.min(j), i.max(j))] != 0.into() { 1.into() } else { 0.into() });
        prop_assert!(is_pet(&sym));
        let p: Vec<usize> = (0..n).map(|i| (i + s as usize) % n).collect();
        prop_assert!(is_pet(&permute(&sym, &p, &(0..n).collect::<Vec<_>>())));
    }

    #[test]
    fn interchanging_automorphism_matches_brute_force(g in graph_upto(3, 3)) {
        let a = g.full_adjacency();
        let k = g.left();
        let brute = automorphisms(&a)
            .into_iter()
            .any(|f| f[..k].iter().all(|&x| x >= k) && g.is_balanced());
        let found = has_interchanging_automorphism(&g);
        prop_assert_eq!(found.is_some(), brute);
        prop_assert_eq!(property_pi(&g), brute);
        if let Some(w) = found {
            let f = w.interchanging_automorphism();
            prop_assert!(is_isomorphism(&a, &a, &f));
            prop_assert!(f[..k].iter().all(|&x| x >= k));
        }
    }

    #[test]
    fn relabelled_graph_is_isomorphic((g, p) in graph_upto(5, 5).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), perm(n))
    })) {
        let a = g.full_adjacency();
        let b = permute(&a, &p, &p);
        let v = graph_isomorphic(&a, &b);
        prop_assert!(v.isomorphic);
        prop_assert!(is_isomorphism(&a, &b, v.witness.as_ref().unwrap()));
    }

    #[test]
    fn partite_iso_exists_iff_a_factor_is_pet((v, b) in small_pair()) {
        let p = construct_pair(&v, &b).unwrap();
        let iso = partite_respecting_iso(&p);
        prop_assert_eq!(iso.is_some(), brute_pet(&v) || brute_pet(&b));
        if let Some(f) = iso {
            let (a1, a2) = (p.g1().full_adjacency(), p.g2().full_adjacency());
            prop_assert!(is_isomorphism(&a1, &a2, &f.vertex_map));
            prop_assert!(respects_partite(p.g1(), p.g2(), &f.vertex_map));
        }
    }

    #[test]
    fn auto_and_exhaustive_agree((v, b) in small_pair()) {
        let p = construct_pair(&v, &b).unwrap();
        let auto = decide_pair_isomorphism_with(&p, IsoStrategy::Auto);
        let full = decide_pair_isomorphism_with(&p, IsoStrategy::Exhaustive);
        prop_assert_eq!(full.decided_by, DecidedBy::Exhaustive);
        prop_assert_eq!(auto.isomorphic, full.isomorphic);
        let (a1, a2) = (p.g1().full_adjacency(), p.g2().full_adjacency());
        for verdict in [&auto, &full] {
            match &verdict.witness {
                Some(f) => {
                    prop_assert!(verdict.isomorphic);
                    prop_assert!(is_isomorphism(&a1, &a2, f));
                    prop_assert_eq!(verdict.respects_partite, Some(respects_partite(p.g1(), p.g2(), f)));
                }
                None => prop_assert!(!verdict.isomorphic || verdict.decided_by == DecidedBy::Identity),
            }
        }
    }

    #[test]
    fn certified_pairs_follow_the_partite_characterization((v, b) in small_pair()) {
        let cert = property_eta_certificate(&v, &b);
        prop_assume!(cert != EtaCertificate::Undecided);
        let p = construct_pair(&v, &b).unwrap();
        let (gv, gb) = (BipartiteGraph::new(v.clone()).unwrap(), BipartiteGraph::new(b.clone()).unwrap());
        let expected = property_pi(&gv) || property_pi(&gb);
        let full = decide_pair_isomorphism_with(&p, IsoStrategy::Exhaustive);
        prop_assert_eq!(full.isomorphic, expected);
        let auto = decide_pair_isomorphism_with(&p, IsoStrategy::Auto);
        prop_assert!(auto.decided_by.is_theorem() || auto.decided_by == DecidedBy::Identity);
    }

    #[test]
    fn non_pet_by_sums_is_sound(b in valid_upto(4, 4)) {
        if non_pet_by_sums(&b) {
            prop_assert!(!brute_pet(&b));
        }
    }
}
