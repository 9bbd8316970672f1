//! Property tests for the constructive colorings, each verified through the
//! symmetry engine.

use proptest::prelude::*;

use posetdist_core::colorings::{
    boolean_coloring, chain_sum_comparability_graph_number,
    chain_sum_distinguishing_chromatic_number, dilworth_coloring, divisibility_coloring,
    divisibility_new_colors, gen_boolean, gen_divisibility, improved_qcoloring,
    linear_extension_coloring, rank_plus_qcoloring, ColorRole, DivisibilitySpec,
};
use posetdist_core::lattice::{birkhoff_check, downset_lattice, DEFAULT_SIZE_CAP};
use posetdist_core::poset::Poset;
use posetdist_core::symmetry::{
    automorphisms, distinguishing_chromatic_number_with_witness, is_chain_proper,
    is_distinguishing, is_proper,
};

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = (n * n).max(1);
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, flags)| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if flags[k % flags.len()] {
                        pairs.push((i, j));
                    }
                    k += 1;
                }
            }
            Poset::from_cover_pairs(n, &pairs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every linear extension of the irreducibles yields a distinguishing
    /// 2-coloring with exactly |Q_L| - 1 red points.
    #[test]
    fn extension_coloring_distinguishes(p in arb_poset(6)) {
        let l = downset_lattice(&p, DEFAULT_SIZE_CAP).unwrap().lattice;
        let (ok, map) = birkhoff_check(&l).unwrap();
        prop_assert!(ok);
        let q = map.unwrap().q;
        for ext in q.poset.linear_extensions().take(12) {
            let c = linear_extension_coloring(&l, &ext).unwrap();
            prop_assert!(is_distinguishing(&l, &c));
            let red = if c.num_colors() > 1 { c.classes()[1].len() } else { 0 };
            prop_assert_eq!(red, q.to_parent.len().saturating_sub(1));
        }
    }

    /// A distributive lattice is rigid exactly when its irreducibles are.
    #[test]
    fn rigidity_transfers_through_irreducibles(p in arb_poset(6)) {
        let l = downset_lattice(&p, DEFAULT_SIZE_CAP).unwrap().lattice;
        let q = birkhoff_check(&l).unwrap().1.unwrap().q;
        let rigid_l = automorphisms(&l).order == 1;
        let rigid_q = automorphisms(&q.poset).order == 1;
        prop_assert_eq!(rigid_l, rigid_q);
    }

    /// The rank-plus-irreducibles coloring never uses rank color 1, stays
    /// within chi_D(Q) + |Q| colors, and verifies.
    #[test]
    fn rank_plus_qcoloring_verifies(p in arb_poset(5)) {
        let l = downset_lattice(&p, DEFAULT_SIZE_CAP).unwrap().lattice;
        let q = birkhoff_check(&l).unwrap().1.unwrap().q;
        let cap = q.poset.n().max(1);
        let (d, qc) = distinguishing_chromatic_number_with_witness(&q.poset, cap).unwrap();
        let (c, roles) = rank_plus_qcoloring(&l, &qc).unwrap();
        prop_assert!(is_proper(&l, &c));
        prop_assert!(is_distinguishing(&l, &c));
        // the bound presumes rank-1 points exist; a trivial lattice needs 1
        prop_assert!(c.num_colors() <= (d + q.to_parent.len()).max(1));
        prop_assert!(!roles.contains(&ColorRole::Rank(1)));
    }

    /// The improved construction eliminates rank color 2 as well and stays
    /// within |Q| + d - 1 colors.
    #[test]
    fn improved_qcoloring_verifies(p in arb_poset(5)) {
        let l = downset_lattice(&p, DEFAULT_SIZE_CAP).unwrap().lattice;
        let q = birkhoff_check(&l).unwrap().1.unwrap().q;
        let cap = q.poset.n().max(1);
        let (d, qc) = distinguishing_chromatic_number_with_witness(&q.poset, cap).unwrap();
        if d >= 3 {
            let (c, roles) = improved_qcoloring(&l, &qc).unwrap();
            prop_assert!(is_proper(&l, &c));
            prop_assert!(is_distinguishing(&l, &c));
            let bound = q.to_parent.len() + d - 1;
            prop_assert!(c.num_colors() <= bound);
            prop_assert!(!roles.contains(&ColorRole::Rank(1)));
            prop_assert!(!roles.contains(&ColorRole::Rank(2)));
        }
    }

    /// Dilworth colorings use exactly width colors and always verify.
    #[test]
    fn dilworth_coloring_verifies(p in arb_poset(12)) {
        let c = dilworth_coloring(&p);
        prop_assert_eq!(c.num_colors(), p.rank_data().width);
        prop_assert!(is_chain_proper(&p, &c));
        prop_assert!(is_distinguishing(&p, &c));
    }
}

/// Boolean construction verifies for 1 <= n <= 6 with at most n + 3 colors
/// (the acceptance suite extends this to n = 8).
#[test]
fn boolean_coloring_small() {
    for n in 1..=6 {
        let b = gen_boolean(n, DEFAULT_SIZE_CAP).unwrap();
        let (c, _) = boolean_coloring(n);
        assert!(is_proper(&b, &c), "n={n}");
        assert!(is_distinguishing(&b, &c), "n={n}");
        assert!(c.num_colors() <= n + 3, "n={n}");
    }
}

/// Divisor lattices are rigid exactly when the exponents are distinct
/// (small sweep; the acceptance suite goes to 10000).
#[test]
fn divisor_lattice_rigidity() {
    for n in 2u64..=400 {
        let spec = DivisibilitySpec::factorize(n).unwrap();
        if spec.divisor_count() > 32 {
            continue;
        }
        let l = gen_divisibility(&spec, DEFAULT_SIZE_CAP).unwrap();
        let rigid = automorphisms(&l).order == 1;
        assert_eq!(rigid, spec.exponents_distinct(), "n={n}");
    }
}

/// The divisibility coloring verifies and uses rank colors plus the
/// computed number of fresh colors.
#[test]
fn divisibility_coloring_verifies() {
    for n in [6u64, 12, 30, 36, 60, 150, 210, 360, 2310] {
        let spec = DivisibilitySpec::factorize(n).unwrap();
        let l = gen_divisibility(&spec, DEFAULT_SIZE_CAP).unwrap();
        let (c, roles) = divisibility_coloring(&spec, DEFAULT_SIZE_CAP).unwrap();
        assert!(is_proper(&l, &c), "n={n}");
        assert!(is_distinguishing(&l, &c), "n={n}");
        let q_size: u32 = spec.exponents().iter().sum();
        let m = divisibility_new_colors(&spec);
        assert!(c.num_colors() <= m + q_size as usize + 1, "n={n}");
        let fresh = roles
            .iter()
            .filter(|r| matches!(r, ColorRole::NewColor(_)))
            .count();
        assert!(fresh <= m, "n={n}");
    }
    // two single-point chains: recolor one prime, keep the other
    let spec = DivisibilitySpec::factorize(15).unwrap();
    assert_eq!(divisibility_new_colors(&spec), 1);
    let (c, roles) = divisibility_coloring(&spec, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(roles.iter().filter(|r| matches!(r, ColorRole::NewColor(_))).count(), 1);
    let l = gen_divisibility(&spec, DEFAULT_SIZE_CAP).unwrap();
    assert!(is_proper(&l, &c) && is_distinguishing(&l, &c));
    // a single chain needs no fresh colors: pure rank coloring
    let spec = DivisibilitySpec::factorize(8).unwrap();
    assert_eq!(divisibility_new_colors(&spec), 0);
    let (c, roles) = divisibility_coloring(&spec, DEFAULT_SIZE_CAP).unwrap();
    assert!(roles.iter().all(|r| matches!(r, ColorRole::Rank(_))));
    assert_eq!(c.num_colors(), 4);
}

/// The gap between the poset and comparability-graph values on 20 disjoint
/// 3-chains: 4 versus 6.
#[test]
fn chain_sum_gap() {
    let blocks = [(20usize, 3usize)];
    assert_eq!(chain_sum_distinguishing_chromatic_number(&blocks), 4);
    assert_eq!(chain_sum_comparability_graph_number(&blocks), 6);
    // the graph formula matches the naive graph oracle at a small size
    use posetdist_core::colorings::gen_chain_sum;
    use posetdist_core::symmetry::naive;
    for (t, r) in [(2usize, 2usize), (3, 2), (2, 3)] {
        let p = gen_chain_sum(&[(t, r)]);
        let g = naive::Relation::comparability(&p);
        let expected = chain_sum_comparability_graph_number(&[(t, r)]);
        assert_eq!(naive::chromatic_distinguishing_number(&g, 8), Some(expected));
        assert_eq!(naive::distinguishing_number(&g, 8), Some(expected));
    }
}
