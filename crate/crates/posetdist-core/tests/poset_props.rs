//! Property tests for the poset layer: closure laws, rank, the Dilworth
//! chain partition against a brute-force antichain search, and linear
//! extensions against permutation filtering.

use proptest::prelude::*;

use posetdist_core::poset::Poset;

/// Random DAG on up to `max_n` points: edges only go up in index order, so
/// any pair set is acyclic.
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

fn max_antichain_brute(p: &Poset) -> usize {
    let n = p.n();
    assert!(n <= 16);
    let mut best = 0;
    for mask in 0u32..1 << n {
        let pts: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let ok = pts
            .iter()
            .all(|&x| pts.iter().all(|&y| x == y || !p.is_comparable(x, y)));
        if ok {
            best = best.max(pts.len());
        }
    }
    best
}

fn count_extensions_brute(p: &Poset) -> usize {
    let n = p.n();
    assert!(n <= 8);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permute(&mut perm, 0, &mut |order| {
        let mut pos = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        if p.covers().iter().all(|&(a, b)| pos[a] < pos[b]) {
            count += 1;
        }
    });
    count
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

proptest! {
    #[test]
    fn closure_transitive_and_antisymmetric(p in arb_poset(10)) {
        let n = p.n();
        for x in 0..n {
            prop_assert!(p.leq(x, x));
            for y in 0..n {
                if p.leq(x, y) && p.leq(y, x) {
                    prop_assert_eq!(x, y);
                }
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) {
                        prop_assert!(p.leq(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn comparability_agrees_with_closure(p in arb_poset(10)) {
        for x in 0..p.n() {
            for y in 0..p.n() {
                prop_assert_eq!(p.is_comparable(x, y), p.leq(x, y) || p.leq(y, x));
            }
        }
    }

    #[test]
    fn covers_are_transitively_reduced(p in arb_poset(10)) {
        for &(a, b) in p.covers() {
            prop_assert!(p.lt(a, b));
            for c in 0..p.n() {
                prop_assert!(!(p.lt(a, c) && p.lt(c, b)));
            }
        }
    }

    #[test]
    fn rank_is_minimal_strictly_increasing(p in arb_poset(10)) {
        for x in 0..p.n() {
            if p.lower_covers(x).is_empty() {
                prop_assert_eq!(p.rank(x), 0);
            } else {
                // rank is one more than the best lower cover: minimality
                let best = p.lower_covers(x).iter().map(|&y| p.rank(y)).max().unwrap();
                prop_assert_eq!(p.rank(x), best + 1);
            }
            for y in 0..p.n() {
                if p.lt(x, y) {
                    prop_assert!(p.rank(x) < p.rank(y));
                }
            }
        }
    }

    #[test]
    fn chain_partition_is_dilworth(p in arb_poset(12)) {
        let chains = p.chain_partition();
        let mut seen = vec![false; p.n()];
        for chain in &chains {
            for w in chain.windows(2) {
                prop_assert!(p.lt(w[0], w[1]));
            }
            for &x in chain {
                prop_assert!(!seen[x]);
                seen[x] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        prop_assert_eq!(chains.len(), max_antichain_brute(&p));
        prop_assert_eq!(p.rank_data().width, chains.len());
    }

    #[test]
    fn extensions_are_valid_and_counted(p in arb_poset(7)) {
        let exts: Vec<_> = p.linear_extensions().collect();
        for e in &exts {
            prop_assert!(p.respects_order(e));
        }
        // lexicographic and duplicate-free
        for w in exts.windows(2) {
            prop_assert!(w[0].order < w[1].order);
        }
        prop_assert_eq!(exts.len(), count_extensions_brute(&p));
    }

    #[test]
    fn dual_is_involution_and_reverses(p in arb_poset(10)) {
        let d = p.dual();
        prop_assert_eq!(&d.dual(), &p);
        for x in 0..p.n() {
            for y in 0..p.n() {
                prop_assert_eq!(p.leq(x, y), d.leq(y, x));
            }
        }
    }
}
