//! Constructive colorings: chain sums, Boolean and divisibility lattices,
//! the linear-extension 2-coloring of a distributive lattice, the
//! rank-plus-irreducibles colorings, Dilworth chain colorings, and the
//! leftmost-chain coloring of embedded planar lattices.
//!
//! Every construction returns a `Coloring` the `symmetry` module can verify;
//! the rank-based ones also report which role each dense color id plays.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::lattice::{self, BirkhoffMap, LatticeError};
use crate::poset::{LinearExtension, Poset};
use crate::symmetry::{self, Coloring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ColoringError {
    NotALattice,
    NotDistributive,
    NotRanked,
    NotRankConnected { lower_rank: usize },
    HasTwins { pair: (usize, usize) },
    /// The embedding's rows do not partition the points by rank.
    BadEmbedding,
    /// Two cover edges cross between consecutive ranks.
    EmbeddingNotPlanar { lower_rank: usize },
    LeftmostNotAChain { lower_rank: usize },
    /// The supplied sequence is not a linear extension of the
    /// join-irreducible subposet.
    InvalidExtension,
    /// The supplied coloring of the join-irreducibles is not proper and
    /// distinguishing.
    BadQColoring,
    /// The coloring of the join-irreducibles uses fewer than three colors.
    NeedsThreeColors,
    TooLarge { cap: usize },
    /// Invalid divisibility data: repeated or composite primes, or a zero
    /// exponent.
    BadSpec,
}

impl core::fmt::Display for ColoringError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ColoringError::NotALattice => write!(f, "poset is not a lattice"),
            ColoringError::NotDistributive => write!(f, "lattice is not distributive"),
            ColoringError::NotRanked => write!(f, "poset is not ranked"),
            ColoringError::NotRankConnected { lower_rank } => {
                write!(f, "ranks {lower_rank} and {} are disconnected", lower_rank + 1)
            }
            ColoringError::HasTwins { pair } => {
                write!(f, "poset has twins ({}, {})", pair.0, pair.1)
            }
            ColoringError::BadEmbedding => {
                write!(f, "embedding rows do not partition the points by rank")
            }
            ColoringError::EmbeddingNotPlanar { lower_rank } => {
                write!(f, "cover edges cross between ranks {lower_rank} and {}", lower_rank + 1)
            }
            ColoringError::LeftmostNotAChain { lower_rank } => write!(
                f,
                "leftmost points of ranks {lower_rank} and {} are not a cover pair",
                lower_rank + 1
            ),
            ColoringError::InvalidExtension => {
                write!(f, "sequence is not a linear extension of the join-irreducibles")
            }
            ColoringError::BadQColoring => write!(
                f,
                "coloring of the join-irreducibles is not proper and distinguishing"
            ),
            ColoringError::NeedsThreeColors => write!(
                f,
                "construction needs a coloring of the join-irreducibles with at least 3 colors"
            ),
            ColoringError::TooLarge { cap } => {
                write!(f, "generated poset exceeds the size cap of {cap} points")
            }
            ColoringError::BadSpec => write!(f, "invalid divisibility data"),
        }
    }
}

impl From<LatticeError> for ColoringError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::NotALattice => ColoringError::NotALattice,
            LatticeError::TooLarge { cap } => ColoringError::TooLarge { cap },
        }
    }
}

/// What a dense color id stands for in a rank-based construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ColorRole {
    /// Rank color `j`, used on points of rank `j`.
    Rank(usize),
    /// The `i`-th color of the supplied irreducibles coloring.
    QColor(usize),
    /// The `i`-th fresh color of the divisibility recoloring.
    NewColor(usize),
    /// First marker color of the Boolean construction.
    MarkA,
    /// Second marker color of the Boolean construction.
    MarkB,
}

impl core::fmt::Display for ColorRole {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ColorRole::Rank(j) => write!(f, "rank{j}"),
            ColorRole::QColor(i) => write!(f, "q{i}"),
            ColorRole::NewColor(i) => write!(f, "new{i}"),
            ColorRole::MarkA => write!(f, "a"),
            ColorRole::MarkB => write!(f, "b"),
        }
    }
}

/// Compacts per-point roles into a dense coloring. Returns the coloring and
/// the role each dense id stands for, in first-use order.
fn compact_roles(raw: &[ColorRole]) -> (Coloring, Vec<ColorRole>) {
    let mut roles: Vec<ColorRole> = Vec::new();
    let mut color = Vec::with_capacity(raw.len());
    for r in raw {
        let id = match roles.iter().position(|x| x == r) {
            Some(id) => id,
            None => {
                roles.push(r.clone());
                roles.len() - 1
            }
        };
        color.push(id);
    }
    (Coloring::new(color), roles)
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Disjoint union of chains: for each `(t, r)` block, `t` chains of `r`
/// points. Chains are laid out consecutively, bottom to top.
pub fn gen_chain_sum(blocks: &[(usize, usize)]) -> Poset {
    let n: usize = blocks.iter().map(|&(t, r)| t * r).sum();
    let mut pairs = Vec::new();
    let mut labels = Vec::with_capacity(n);
    let mut base = 0;
    for (bi, &(t, r)) in blocks.iter().enumerate() {
        assert!(t >= 1 && r >= 1, "chain blocks need t >= 1 and r >= 1");
        for c in 0..t {
            for i in 0..r {
                labels.push(Some(alloc::format!("b{bi}c{c}p{i}")));
                if i + 1 < r {
                    pairs.push((base + i, base + i + 1));
                }
            }
            base += r;
        }
    }
    Poset::from_cover_pairs(n, &pairs)
        .expect("chains are acyclic")
        .with_labels(labels)
}

/// Point order of the subset lattice: masks sorted by (cardinality, value).
fn boolean_masks(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks
}

fn mask_label(mask: u32) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for e in 0..32 {
        if mask >> e & 1 == 1 {
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str(&alloc::format!("{}", e + 1));
        }
    }
    out.push('}');
    out
}

/// The lattice of subsets of `{1, …, n}` ordered by inclusion.
pub fn gen_boolean(n: usize, cap: usize) -> Result<Poset, ColoringError> {
    assert!(n >= 1);
    if n >= usize::BITS as usize || (1usize << n) > cap {
        return Err(ColoringError::TooLarge { cap });
    }
    let masks = boolean_masks(n);
    let mut index = vec![0usize; 1 << n];
    for (i, &m) in masks.iter().enumerate() {
        index[m as usize] = i;
    }
    let mut pairs = Vec::new();
    for (i, &m) in masks.iter().enumerate() {
        for e in 0..n {
            if m >> e & 1 == 0 {
                pairs.push((i, index[(m | 1 << e) as usize]));
            }
        }
    }
    let labels = masks.iter().map(|&m| Some(mask_label(m))).collect();
    Ok(Poset::from_cover_pairs(1 << n, &pairs)
        .expect("inclusion is acyclic")
        .with_labels(labels))
}

/// A factored integer `p1^a1 * p2^a2 * ...` with distinct primes and
/// positive exponents.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisibilitySpec {
    primes: Vec<u64>,
    exponents: Vec<u32>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl DivisibilitySpec {
    pub fn new(primes: Vec<u64>, exponents: Vec<u32>) -> Result<Self, ColoringError> {
        if primes.len() != exponents.len() {
            return Err(ColoringError::BadSpec);
        }
        if exponents.contains(&0) {
            return Err(ColoringError::BadSpec);
        }
        if primes.iter().any(|&p| !is_prime(p)) {
            return Err(ColoringError::BadSpec);
        }
        let mut sorted = primes.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != primes.len() {
            return Err(ColoringError::BadSpec);
        }
        Ok(DivisibilitySpec { primes, exponents })
    }

    /// Factorizes a positive integer by trial division.
    pub fn factorize(n: u64) -> Result<Self, ColoringError> {
        if n == 0 {
            return Err(ColoringError::BadSpec);
        }
        let mut primes = Vec::new();
        let mut exponents = Vec::new();
        let mut rest = n;
        let mut d = 2;
        while d * d <= rest {
            if rest.is_multiple_of(d) {
                let mut a = 0;
                while rest.is_multiple_of(d) {
                    rest /= d;
                    a += 1;
                }
                primes.push(d);
                exponents.push(a);
            }
            d += 1;
        }
        if rest > 1 {
            primes.push(rest);
            exponents.push(1);
        }
        Ok(DivisibilitySpec { primes, exponents })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn divisor_count(&self) -> u128 {
        self.exponents
            .iter()
            .map(|&a| a as u128 + 1)
            .product()
    }

    pub fn exponents_distinct(&self) -> bool {
        let mut e = self.exponents.clone();
        e.sort_unstable();
        e.windows(2).all(|w| w[0] != w[1])
    }
}

/// Exponent vectors of all divisors, sorted by (total degree, vector).
fn divisor_vectors(spec: &DivisibilitySpec) -> Vec<Vec<u32>> {
    let k = spec.primes.len();
    let mut out = vec![Vec::new()];
    for i in 0..k {
        let mut next = Vec::new();
        for v in &out {
            for e in 0..=spec.exponents[i] {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        out = next;
    }
    out.sort_by_key(|v| (v.iter().sum::<u32>(), v.clone()));
    out
}

fn divisor_label(spec: &DivisibilitySpec, v: &[u32]) -> String {
    let mut value: u128 = 1;
    for (i, &e) in v.iter().enumerate() {
        for _ in 0..e {
            value = match value.checked_mul(spec.primes[i] as u128) {
                Some(x) => x,
                None => {
                    // fall back to the factored form
                    let mut s = String::new();
                    for (j, &f) in v.iter().enumerate() {
                        if f > 0 {
                            if !s.is_empty() {
                                s.push('*');
                            }
                            s.push_str(&alloc::format!("{}^{}", spec.primes[j], f));
                        }
                    }
                    return s;
                }
            };
        }
    }
    alloc::format!("{value}")
}

/// The lattice of divisors of `p1^a1 * ... * pk^ak` ordered by divisibility.
pub fn gen_divisibility(spec: &DivisibilitySpec, cap: usize) -> Result<Poset, ColoringError> {
    if spec.divisor_count() > cap as u128 {
        return Err(ColoringError::TooLarge { cap });
    }
    let vectors = divisor_vectors(spec);
    let index: alloc::collections::BTreeMap<&Vec<u32>, usize> =
        vectors.iter().zip(0..).collect();
    let mut pairs = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        for c in 0..v.len() {
            if v[c] < spec.exponents[c] {
                let mut w = v.clone();
                w[c] += 1;
                pairs.push((i, index[&w]));
            }
        }
    }
    let labels = vectors.iter().map(|v| Some(divisor_label(spec, v))).collect();
    Ok(Poset::from_cover_pairs(vectors.len(), &pairs)
        .expect("divisibility is acyclic")
        .with_labels(labels))
}

// ---------------------------------------------------------------------------
// Closed forms for sums of chains
// ---------------------------------------------------------------------------

fn power(k: usize, r: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..r {
        acc = acc.saturating_mul(k as u128);
    }
    acc
}

/// Falling factorial `k (k-1) ... (k-r+1)`; zero when `k < r`.
pub fn falling_factorial(k: usize, r: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul((k as u128).saturating_sub(i as u128));
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn merge_blocks(blocks: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut by_r: alloc::collections::BTreeMap<usize, usize> = alloc::collections::BTreeMap::new();
    for &(t, r) in blocks {
        *by_r.entry(r).or_insert(0) += t;
    }
    by_r.into_iter().map(|(r, t)| (t, r)).collect()
}

/// Exact distinguishing number of a sum of chains: per uniform block the
/// least `k` with `k^r >= t`, maximized over blocks.
pub fn chain_sum_distinguishing_number(blocks: &[(usize, usize)]) -> usize {
    merge_blocks(blocks)
        .iter()
        .map(|&(t, r)| (1..).find(|&k| power(k, r) >= t as u128).unwrap())
        .max()
        .unwrap_or(0)
}

/// Exact distinguishing chromatic number of a sum of chains: per uniform
/// block the least `k` with `(k)_r >= t`, maximized over blocks.
pub fn chain_sum_distinguishing_chromatic_number(blocks: &[(usize, usize)]) -> usize {
    merge_blocks(blocks)
        .iter()
        .map(|&(t, r)| (1..).find(|&k| falling_factorial(k, r) >= t as u128).unwrap())
        .max()
        .unwrap_or(0)
}

/// Exact distinguishing (and distinguishing chromatic) number of the
/// comparability graph of a sum of chains, i.e. of disjoint complete
/// graphs: per block the least `k` with `C(k, r) >= t`.
pub fn chain_sum_comparability_graph_number(blocks: &[(usize, usize)]) -> usize {
    merge_blocks(blocks)
        .iter()
        .map(|&(t, r)| (1..).find(|&k| binomial(k, r) >= t as u128).unwrap())
        .max()
        .unwrap_or(0)
}

// ---------------------------------------------------------------------------
// Colorings of distributive lattices
// ---------------------------------------------------------------------------

fn verified_birkhoff(l: &Poset) -> Result<BirkhoffMap, ColoringError> {
    let (ok, map) = lattice::birkhoff_check(l)?;
    if !ok {
        return Err(ColoringError::NotDistributive);
    }
    Ok(map.expect("map present on success"))
}

/// The 2-coloring generated by a linear extension of the join-irreducibles:
/// the pullbacks of the proper prefixes of the extension are red (color 1),
/// everything else green (color 0). Exactly `|Q_L| - 1` points are red.
pub fn linear_extension_coloring(
    l: &Poset,
    ext: &LinearExtension,
) -> Result<Coloring, ColoringError> {
    let map = verified_birkhoff(l)?;
    let q = &map.q;
    let t = q.to_parent.len();
    if !q.poset.respects_order(ext) {
        return Err(ColoringError::InvalidExtension);
    }
    let mut color = vec![0usize; l.n()];
    let mut prefix = Bitset::new(t);
    for i in 0..t.saturating_sub(1) {
        prefix.insert(ext.order[i]);
        let w = map
            .backward(&prefix)
            .expect("extension prefixes are downsets of the irreducibles");
        color[w] = 1;
    }
    Ok(Coloring::new(color))
}

fn validate_q_coloring(q: &Poset, qc: &Coloring) -> Result<(), ColoringError> {
    if qc.len() != q.n()
        || !symmetry::is_proper(q, qc)
        || !symmetry::is_distinguishing(q, qc)
    {
        return Err(ColoringError::BadQColoring);
    }
    Ok(())
}

/// Rank colors on the lattice with a fresh proper distinguishing coloring on
/// the join-irreducibles: at most `chi_D(Q_L) + |Q_L|` colors in total (rank
/// color 1 is never used because all rank-1 points are join-irreducible).
pub fn rank_plus_qcoloring(
    l: &Poset,
    q_coloring: &Coloring,
) -> Result<(Coloring, Vec<ColorRole>), ColoringError> {
    let map = verified_birkhoff(l)?;
    let q = &map.q;
    validate_q_coloring(&q.poset, q_coloring)?;

    let mut q_pos = vec![None; l.n()];
    for (qi, &x) in q.to_parent.iter().enumerate() {
        q_pos[x] = Some(qi);
    }
    let roles: Vec<ColorRole> = (0..l.n())
        .map(|x| match q_pos[x] {
            Some(qi) => ColorRole::QColor(q_coloring.color(qi)),
            None => ColorRole::Rank(l.rank(x)),
        })
        .collect();
    Ok(compact_roles(&roles))
}

/// The improved rank-plus-irreducibles coloring: with `d >= 3` colors on the
/// join-irreducibles, rank color 2 is eliminated entirely, for a total of at
/// most `|Q_L| + d - 1` colors.
///
/// Three color classes of the supplied coloring (the largest three, largest
/// first) are partially recolored by rank, and each rank-2 point outside the
/// irreducibles is recolored by a rule on the colors of the two rank-1
/// points it covers.
pub fn improved_qcoloring(
    l: &Poset,
    q_coloring: &Coloring,
) -> Result<(Coloring, Vec<ColorRole>), ColoringError> {
    let map = verified_birkhoff(l)?;
    let q = &map.q;
    if q_coloring.num_colors() < 3 {
        return Err(ColoringError::NeedsThreeColors);
    }
    validate_q_coloring(&q.poset, q_coloring)?;

    let mut q_pos = vec![None; l.n()];
    for (qi, &x) in q.to_parent.iter().enumerate() {
        q_pos[x] = Some(qi);
    }

    // the three designated classes: largest first, ties by color id
    let mut by_size: Vec<(usize, usize)> = q_coloring
        .classes()
        .iter()
        .enumerate()
        .map(|(c, class)| (class.len(), c))
        .collect();
    by_size.sort_by_key(|&(size, c)| (core::cmp::Reverse(size), c));
    let a1 = by_size[0].1;
    let a2 = by_size[1].1;
    let a3 = by_size[2].1;

    let phi = |x: usize| q_coloring.color(q_pos[x].expect("point of Q"));
    let q_points = &q.to_parent;

    // rank-1 witnesses used by the membership tests
    let has_low_cover = |z: usize, color: usize| {
        q_points
            .iter()
            .any(|&y| l.rank(y) == 1 && phi(y) == color && l.lt(y, z))
    };

    let in_recolored = |x: usize| -> bool {
        let r = l.rank(x);
        if r < 3 {
            return false;
        }
        let c = phi(x);
        if c == a1 {
            true
        } else if c == a2 {
            has_low_cover(x, a1)
        } else if c == a3 {
            has_low_cover(x, a1) && has_low_cover(x, a2)
        } else {
            false
        }
    };

    let roles: Vec<ColorRole> = (0..l.n())
        .map(|x| {
            match q_pos[x] {
                Some(_) => {
                    if in_recolored(x) {
                        ColorRole::Rank(l.rank(x))
                    } else {
                        ColorRole::QColor(phi(x))
                    }
                }
                None => {
                    let r = l.rank(x);
                    if r == 2 {
                        let covered = l.lower_covers(x);
                        assert!(
                            covered.len() == 2 && covered.iter().all(|&y| l.rank(y) == 1),
                            "rank-2 point outside the irreducibles must cover exactly two rank-1 points"
                        );
                        let (cx, cy) = (phi(covered[0]), phi(covered[1]));
                        let g = if cx != a1 && cy != a1 {
                            a1
                        } else if cx != a2 && cy != a2 {
                            a2
                        } else {
                            a3
                        };
                        ColorRole::QColor(g)
                    } else {
                        // r == 0 or r >= 3; rank 1 points are all irreducible
                        ColorRole::Rank(r)
                    }
                }
            }
        })
        .collect();
    let out = compact_roles(&roles);
    debug_assert!(!out.1.contains(&ColorRole::Rank(1)));
    debug_assert!(!out.1.contains(&ColorRole::Rank(2)));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Divisibility lattices
// ---------------------------------------------------------------------------

/// Number of distinct recolorings of an `r`-chain with at most `m` fresh
/// colors: sum over `l` of `C(r, l) * (m)_l` (rook placements on an
/// `m x r` board).
pub fn rook_recoloring_count(r: usize, m: usize) -> u128 {
    (0..=r.min(m))
        .map(|l| binomial(r, l).saturating_mul(falling_factorial(m, l)))
        .sum()
}

/// Least `m` with `t <= rook_recoloring_count(r, m)`.
pub fn new_colors_for_block(t: usize, r: usize) -> usize {
    (0..).find(|&m| rook_recoloring_count(r, m) >= t as u128).unwrap()
}

/// The number of fresh colors the divisibility coloring uses: the maximum of
/// `new_colors_for_block` over the uniform chain blocks of the
/// join-irreducibles.
pub fn divisibility_new_colors(spec: &DivisibilitySpec) -> usize {
    let mut by_r: alloc::collections::BTreeMap<u32, usize> = alloc::collections::BTreeMap::new();
    for &a in spec.exponents() {
        *by_r.entry(a).or_insert(0) += 1;
    }
    by_r.into_iter()
        .map(|(r, t)| new_colors_for_block(t, r as usize))
        .max()
        .unwrap_or(0)
}

/// Recoloring pattern `j` for `r`-chains with `m` fresh colors: patterns are
/// enumerated with the recolored position count ascending, position subsets
/// lexicographic, and color injections lexicographic.
fn chain_pattern(r: usize, m: usize, j: usize) -> Vec<(usize, usize)> {
    let mut remaining = j;
    for l in 0..=r.min(m) {
        let per_subset = falling_factorial(m, l) as usize;
        let subsets = binomial(r, l) as usize;
        if remaining >= subsets * per_subset {
            remaining -= subsets * per_subset;
            continue;
        }
        let subset_idx = remaining / per_subset;
        let inj_idx = remaining % per_subset;
        let positions = kth_subset(r, l, subset_idx);
        let colors = kth_injection(m, l, inj_idx);
        return positions.into_iter().zip(colors).collect();
    }
    panic!("pattern index out of range");
}

/// The `k`-th `l`-subset of `0..r` in lexicographic order.
fn kth_subset(r: usize, l: usize, mut k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(l);
    let mut remaining = l;
    let mut candidate = 0;
    while remaining > 0 {
        debug_assert!(candidate < r);
        let with = binomial(r - candidate - 1, remaining - 1) as usize;
        if k < with {
            out.push(candidate);
            remaining -= 1;
        } else {
            k -= with;
        }
        candidate += 1;
    }
    out
}

/// The `k`-th injection of `l` slots into colors `0..m`, lexicographic.
fn kth_injection(m: usize, l: usize, mut k: usize) -> Vec<usize> {
    let mut available: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(l);
    for slot in 0..l {
        let rest = falling_factorial(m - slot - 1, l - slot - 1) as usize;
        let idx = k / rest;
        k %= rest;
        out.push(available.remove(idx));
    }
    out
}

/// The rank coloring of a divisibility lattice with the join-irreducible
/// chains recolored pairwise-distinctly using `m` fresh colors. Aligned with
/// the point indexing of `gen_divisibility`.
pub fn divisibility_coloring(
    spec: &DivisibilitySpec,
    cap: usize,
) -> Result<(Coloring, Vec<ColorRole>), ColoringError> {
    if spec.divisor_count() > cap as u128 {
        return Err(ColoringError::TooLarge { cap });
    }
    let vectors = divisor_vectors(spec);
    let index: alloc::collections::BTreeMap<&Vec<u32>, usize> =
        vectors.iter().zip(0..).collect();
    let k = spec.primes().len();
    let m = divisibility_new_colors(spec);

    let mut roles: Vec<ColorRole> = vectors
        .iter()
        .map(|v| ColorRole::Rank(v.iter().sum::<u32>() as usize))
        .collect();

    // group primes into blocks of equal exponent; assign each chain in a
    // block the next pattern
    let mut by_r: alloc::collections::BTreeMap<u32, Vec<usize>> =
        alloc::collections::BTreeMap::new();
    for i in 0..k {
        by_r.entry(spec.exponents()[i]).or_default().push(i);
    }
    for (r, prime_ids) in by_r {
        for (j, &pi) in prime_ids.iter().enumerate() {
            for (pos, color) in chain_pattern(r as usize, m, j) {
                // position `pos` on the chain is p_i^(pos+1)
                let mut v = vec![0u32; k];
                v[pi] = pos as u32 + 1;
                roles[index[&v]] = ColorRole::NewColor(color);
            }
        }
    }
    Ok(compact_roles(&roles))
}

// ---------------------------------------------------------------------------
// Boolean lattices
// ---------------------------------------------------------------------------

/// The two marker families of the Boolean construction, as element lists:
/// `S_i = {i, ..., 2i-1}` and `T_i = {n-2(i-1), ..., n-(i-1)}` for odd `n`;
/// an even `n` reuses the families of `n - 1`.
pub fn boolean_marker_sets(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    assert!(n >= 1);
    let m = if n.is_multiple_of(2) { n - 1 } else { n };
    let mut a_sets = Vec::new();
    let mut b_sets = Vec::new();
    for i in 1..=m.div_ceil(2) {
        a_sets.push((i..=2 * i - 1).collect());
        b_sets.push((m - 2 * (i - 1)..=m - (i - 1)).collect());
    }
    (a_sets, b_sets)
}

/// Rank colors on the subset lattice of `{1, …, n}` with the marker families
/// recolored: at most `n + 3` colors. Aligned with `gen_boolean(n)`.
pub fn boolean_coloring(n: usize) -> (Coloring, Vec<ColorRole>) {
    assert!((1..usize::BITS as usize).contains(&n));
    let masks = boolean_masks(n);
    let mut index = vec![0usize; 1 << n];
    for (i, &m) in masks.iter().enumerate() {
        index[m as usize] = i;
    }
    let mut roles: Vec<ColorRole> = masks
        .iter()
        .map(|&m| ColorRole::Rank(m.count_ones() as usize))
        .collect();
    let set_mask = |set: &[usize]| -> u32 {
        set.iter().map(|&e| 1u32 << (e - 1)).fold(0, |a, b| a | b)
    };
    let (a_sets, b_sets) = boolean_marker_sets(n);
    for s in &a_sets {
        roles[index[set_mask(s) as usize]] = ColorRole::MarkA;
    }
    // the second family overwrites the first where they collide
    for t in &b_sets {
        roles[index[set_mask(t) as usize]] = ColorRole::MarkB;
    }
    compact_roles(&roles)
}

// ---------------------------------------------------------------------------
// Dilworth and leftmost-chain colorings
// ---------------------------------------------------------------------------

/// One color per chain of a minimum chain partition: exactly `width` colors,
/// chain-proper, and distinguishing (points of a chain sit at distinct
/// heights, which automorphisms preserve).
pub fn dilworth_coloring(p: &Poset) -> Coloring {
    let chains = p.chain_partition();
    let mut color = vec![0usize; p.n()];
    for (i, chain) in chains.iter().enumerate() {
        for &x in chain {
            color[x] = i;
        }
    }
    Coloring::new(color)
}

/// Width plus a verification pass: builds the Dilworth coloring and asserts
/// it is chain-proper and distinguishing.
pub fn chain_proper_number_verified(p: &Poset) -> (usize, Coloring) {
    let c = dilworth_coloring(p);
    assert!(symmetry::is_chain_proper(p, &c));
    assert!(symmetry::is_distinguishing(p, &c));
    (c.num_colors(), c)
}

/// All incomparable pairs with identical relations to every other point.
pub fn twins(p: &Poset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..p.n() {
        for y in x + 1..p.n() {
            if p.is_comparable(x, y) {
                continue;
            }
            let mut ux = p.up_set(x).clone();
            ux.remove(x);
            ux.remove(y);
            let mut uy = p.up_set(y).clone();
            uy.remove(x);
            uy.remove(y);
            if ux != uy {
                continue;
            }
            let mut dx = p.down_set(x).clone();
            dx.remove(x);
            dx.remove(y);
            let mut dy = p.down_set(y).clone();
            dy.remove(x);
            dy.remove(y);
            if dx == dy {
                out.push((x, y));
            }
        }
    }
    out
}

/// A left-to-right order of the points of each rank, certifying a standard
/// diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Embedding {
    pub rows: Vec<Vec<usize>>,
}

/// True iff each consecutive-rank induced cover graph is connected. On
/// failure returns the lower rank of the disconnected pair.
pub fn is_rank_connected(p: &Poset) -> Result<(), usize> {
    use alloc::collections::BTreeSet;
    let levels = p.rank_levels();
    for i in 0..levels.len().saturating_sub(1) {
        let members: BTreeSet<usize> = levels[i].iter().chain(&levels[i + 1]).copied().collect();
        if members.len() <= 1 {
            continue;
        }
        // BFS from one point over the covers inside the rank pair
        let start = *members.iter().next().unwrap();
        let mut seen = BTreeSet::from([start]);
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &y in p.upper_covers(x).iter().chain(p.lower_covers(x)) {
                if members.contains(&y) && seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        if seen.len() != members.len() {
            return Err(i);
        }
    }
    Ok(())
}

fn validate_embedding(p: &Poset, emb: &Embedding) -> Result<Vec<usize>, ColoringError> {
    let levels = p.rank_levels();
    if emb.rows.len() != levels.len() {
        return Err(ColoringError::BadEmbedding);
    }
    let mut pos = vec![usize::MAX; p.n()];
    for (r, row) in emb.rows.iter().enumerate() {
        let mut sorted = row.clone();
        sorted.sort_unstable();
        if sorted != levels[r] {
            return Err(ColoringError::BadEmbedding);
        }
        for (i, &x) in row.iter().enumerate() {
            pos[x] = i;
        }
    }
    // non-crossing certificate between consecutive ranks
    for r in 0..levels.len().saturating_sub(1) {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for &a in &emb.rows[r] {
            for &b in p.upper_covers(a) {
                edges.push((pos[a], pos[b]));
            }
        }
        for (i, &(l1, r1)) in edges.iter().enumerate() {
            for &(l2, r2) in &edges[i + 1..] {
                if (l1 < l2 && r1 > r2) || (l1 > l2 && r1 < r2) {
                    return Err(ColoringError::EmbeddingNotPlanar { lower_rank: r });
                }
            }
        }
    }
    Ok(pos)
}

/// The 2-coloring of a twin-free rank-connected planar lattice from its
/// standard diagram: the leftmost point of each rank forms a maximal chain;
/// its interior is red (color 1), everything else green (color 0).
pub fn leftmost_chain_coloring(p: &Poset, emb: &Embedding) -> Result<Coloring, ColoringError> {
    let tables = lattice::meet_join(p);
    if !tables.is_lattice {
        return Err(ColoringError::NotALattice);
    }
    let rd = p.rank_data();
    if rd.is_ranked != Some(true) {
        return Err(ColoringError::NotRanked);
    }
    if let Err(lower_rank) = is_rank_connected(p) {
        return Err(ColoringError::NotRankConnected { lower_rank });
    }
    if let Some(&pair) = twins(p).first() {
        return Err(ColoringError::HasTwins { pair });
    }
    validate_embedding(p, emb)?;

    let leftmost: Vec<usize> = emb.rows.iter().map(|row| row[0]).collect();
    for (r, w) in leftmost.windows(2).enumerate() {
        if !p.upper_covers(w[0]).contains(&w[1]) {
            return Err(ColoringError::LeftmostNotAChain { lower_rank: r });
        }
    }

    let mut color = vec![0usize; p.n()];
    if leftmost.len() > 2 {
        for &x in &leftmost[1..leftmost.len() - 1] {
            color[x] = 1;
        }
    }
    Ok(Coloring::new(color))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{
        is_chain_proper, is_distinguishing, is_proper,
    };

    #[test]
    fn chain_sum_generator_shapes() {
        let p = gen_chain_sum(&[(3, 2)]);
        assert_eq!(p.n(), 6);
        assert_eq!(p.covers().len(), 3);
        let p = gen_chain_sum(&[(1, 5)]);
        assert_eq!(p.n(), 5);
        assert_eq!(p.height(), 5);
        assert_eq!(p.chain_partition().len(), 1);
    }

    #[test]
    fn chain_sum_formulas() {
        // 20 chains of 3: 2^3 < 20 <= 3^3
        assert_eq!(chain_sum_distinguishing_number(&[(20, 3)]), 3);
        // single chain
        assert_eq!(chain_sum_distinguishing_number(&[(1, 5)]), 1);
        assert_eq!(chain_sum_distinguishing_chromatic_number(&[(1, 5)]), 5);
        // gap example: 20 disjoint 3-chains
        assert_eq!(chain_sum_distinguishing_chromatic_number(&[(20, 3)]), 4);
        assert_eq!(chain_sum_comparability_graph_number(&[(20, 3)]), 6);
    }

    #[test]
    fn boolean_generator() {
        let b1 = gen_boolean(1, 1 << 20).unwrap();
        assert_eq!(b1.n(), 2);
        assert_eq!(b1.height(), 2);
        let b3 = gen_boolean(3, 1 << 20).unwrap();
        assert_eq!(b3.n(), 8);
        assert_eq!(b3.height(), 4);
        assert_eq!(b3.rank_data().is_ranked, Some(true));
        assert_eq!(b3.label(0), Some("{}"));
        assert_eq!(b3.label(7), Some("{1,2,3}"));
    }

    #[test]
    fn divisibility_generator() {
        let spec = DivisibilitySpec::factorize(150).unwrap();
        assert_eq!(spec.primes(), &[2, 3, 5]);
        assert_eq!(spec.exponents(), &[1, 1, 2]);
        let p = gen_divisibility(&spec, 1 << 20).unwrap();
        assert_eq!(p.n(), 12);
        let prime = DivisibilitySpec::factorize(7).unwrap();
        let p7 = gen_divisibility(&prime, 1 << 20).unwrap();
        assert_eq!(p7.n(), 2);
        assert_eq!(p7.height(), 2);
    }

    #[test]
    fn spec_validation() {
        assert!(DivisibilitySpec::new(vec![4], vec![1]).is_err());
        assert!(DivisibilitySpec::new(vec![2, 2], vec![1, 1]).is_err());
        assert!(DivisibilitySpec::new(vec![2], vec![0]).is_err());
        assert!(DivisibilitySpec::new(vec![2, 3], vec![2, 1]).is_ok());
    }

    #[test]
    fn rook_counts() {
        // r=5, t=31: m=2 new colors suffice, 1 + 10 + 20 = 31
        assert_eq!(rook_recoloring_count(5, 2), 31);
        assert_eq!(new_colors_for_block(31, 5), 2);
        assert_eq!(new_colors_for_block(1, 7), 0);
        assert_eq!(new_colors_for_block(2, 1), 1);
    }

    #[test]
    fn dilworth_on_m() {
        let m = Poset::from_cover_pairs(5, &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)]).unwrap();
        let c = dilworth_coloring(&m);
        assert_eq!(c.num_colors(), 2);
        assert!(is_chain_proper(&m, &c));
        assert!(is_distinguishing(&m, &c));
        assert!(!is_proper(&m, &c));
    }

    #[test]
    fn twins_detection() {
        let anti = Poset::from_cover_pairs(2, &[]).unwrap();
        assert_eq!(twins(&anti), vec![(0, 1)]);
        let chain = Poset::from_cover_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(twins(&chain).is_empty());
        // the subset lattice of {1,2,3} is twin-free
        let b3 = gen_boolean(3, 1 << 20).unwrap();
        assert!(twins(&b3).is_empty());
        // the diamond has twins at rank 1
        let spec = DivisibilitySpec::factorize(6).unwrap();
        let diamond = gen_divisibility(&spec, 1 << 20).unwrap();
        assert_eq!(twins(&diamond), vec![(1, 2)]);
    }
}
