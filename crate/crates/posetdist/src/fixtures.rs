//! Named small posets used across the test suites: the pentagon M and its
//! variants, the standard 8-point non-lattice S4, a 10-point distributive
//! lattice whose irreducibles need three colors, grid lattices with their
//! standard diagrams, and a ranked planar lattice that is not rank-connected.

use posetdist_core::colorings::{gen_divisibility, DivisibilitySpec, Embedding};
use posetdist_core::poset::Poset;

/// The pentagon: z=0, w=1, y=2, x=3, v=4 with z < w < v and z < y < x < v.
/// A lattice, not ranked, not distributive, rigid.
pub fn poset_m() -> Poset {
    let mut p = Poset::from_cover_pairs(5, &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)]).unwrap();
    for (i, l) in ["z", "w", "y", "x", "v"].iter().enumerate() {
        p.set_label(i, l.to_string());
    }
    p
}

/// The pentagon with x removed: z=0, w=1, y=2, v=3; w and y become
/// interchangeable.
pub fn poset_m_minus_x() -> Poset {
    let mut p = Poset::from_cover_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    for (i, l) in ["z", "w", "y", "v"].iter().enumerate() {
        p.set_label(i, l.to_string());
    }
    p
}

/// Four minimal and four maximal points, minimal `i` below maximal `j`
/// exactly when `i != j`. Not a lattice; automorphism group of order 24.
pub fn poset_s4() -> Poset {
    let mut pairs = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                pairs.push((i, 4 + j));
            }
        }
    }
    let mut p = Poset::from_cover_pairs(8, &pairs).unwrap();
    for (i, l) in ["a", "b", "c", "d", "A", "B", "C", "D"].iter().enumerate() {
        p.set_label(i, l.to_string());
    }
    p
}

/// A 10-point distributive lattice whose join-irreducibles are
/// {a, d, ab, ac} with a < ab, a < ac and d isolated; the irreducibles need
/// three colors, so this exercises the improved rank construction. Points
/// are labeled by their irreducible sets.
pub fn ten_point_lattice() -> Poset {
    // 0=∅ 1=a 2=d 3=ad 4=ab 5=ac 6=abd 7=acd 8=abc 9=abcd
    let pairs = [
        (0, 1),
        (0, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 3),
        (3, 6),
        (3, 7),
        (4, 6),
        (4, 8),
        (5, 7),
        (5, 8),
        (6, 9),
        (7, 9),
        (8, 9),
    ];
    let mut p = Poset::from_cover_pairs(10, &pairs).unwrap();
    let labels = ["0", "a", "d", "ad", "ab", "ac", "abd", "acd", "abc", "abcd"];
    for (i, l) in labels.iter().enumerate() {
        p.set_label(i, l.to_string());
    }
    p
}

/// The divisor lattice of 150 = 2 * 3 * 5^2 (12 points).
pub fn l150() -> Poset {
    gen_divisibility(&DivisibilitySpec::factorize(150).unwrap(), 1 << 20).unwrap()
}

/// The divisor lattice of `2^a * 3^b`: an (a+1) x (b+1) grid lattice.
pub fn grid(a: u32, b: u32) -> Poset {
    gen_divisibility(&DivisibilitySpec::new(vec![2, 3], vec![a, b]).unwrap(), 1 << 20).unwrap()
}

/// Standard diagram of `grid(a, b)`: each rank left-to-right by descending
/// exponent of 2, which draws the grid as a diamond with no crossings.
pub fn grid_embedding(p: &Poset, a: u32, b: u32) -> Embedding {
    let index_of = |value: u64| -> usize {
        let label = value.to_string();
        (0..p.n())
            .find(|&i| p.label(i) == Some(label.as_str()))
            .expect("grid label present")
    };
    let height = (a + b) as usize + 1;
    let mut rows = Vec::with_capacity(height);
    for r in 0..=(a + b) {
        let mut row = Vec::new();
        let e1_hi = r.min(a);
        let e1_lo = r.saturating_sub(b);
        for e1 in (e1_lo..=e1_hi).rev() {
            let e2 = r - e1;
            row.push(index_of(2u64.pow(e1) * 3u64.pow(e2)));
        }
        rows.push(row);
    }
    Embedding { rows }
}

/// A chain of `n` points with its unique embedding.
pub fn chain_with_embedding(n: usize) -> (Poset, Embedding) {
    let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let p = Poset::from_cover_pairs(n, &pairs).unwrap();
    let rows = (0..n).map(|i| vec![i]).collect();
    (p, Embedding { rows })
}

/// The hexagon lattice: two parallel 2-chains between bottom and top.
/// Ranked and planar but not rank-connected (ranks 1 and 2 are disconnected).
pub fn hexagon() -> Poset {
    Poset::from_cover_pairs(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]).unwrap()
}

/// Natural embedding of the hexagon (passes the non-crossing certificate).
pub fn hexagon_embedding() -> Embedding {
    Embedding {
        rows: vec![vec![0], vec![1, 2], vec![3, 4], vec![5]],
    }
}
