//! Automorphism enumeration, coloring verification, and exact search for
//! distinguishing numbers.
//!
//! The engine is a partition-refinement backtracker. Points are first split
//! by invariant keys (rank, cover degrees, up/down set sizes, colors, pinned
//! markers) and the classes are refined by the multisets of neighbor classes
//! until stable; the backtracking then only maps points within matching
//! classes. The automorphism group is computed as a stabilizer chain: the
//! group order is the product of the orbit sizes discovered while fixing one
//! point per level, and the transversal elements found along the way form a
//! generating set.
//!
//! All searches are deterministic: classes, candidates, and colorings are
//! always visited in ascending index order.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::poset::Poset;

/// Automorphism groups up to this order are fully enumerated to drive the
/// coloring search; larger groups fall back to search-based pruning.
pub const GROUP_ENUM_CAP: usize = 4096;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchError {
    /// No distinguishing coloring with at most `cap` colors exists.
    CapExceeded { cap: usize },
    /// The poset admits no distinguishing 2-coloring.
    NotTwoDistinguishable,
}

impl core::fmt::Display for SearchError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SearchError::CapExceeded { cap } => {
                write!(f, "no distinguishing coloring with at most {cap} colors")
            }
            SearchError::NotTwoDistinguishable => {
                write!(f, "poset has no distinguishing 2-coloring")
            }
        }
    }
}

/// A total coloring of the points with dense color ids `0..num_colors`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    color: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Wraps a color vector. Every color id below the maximum must occur.
    pub fn new(color: Vec<usize>) -> Self {
        let num_colors = color.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; num_colors];
        for &c in &color {
            used[c] = true;
        }
        assert!(
            used.iter().all(|&u| u),
            "color ids must be dense: every id below the maximum must be used"
        );
        Coloring { color, num_colors }
    }

    /// All points the same color.
    pub fn monochrome(n: usize) -> Self {
        Coloring {
            color: vec![0; n],
            num_colors: if n == 0 { 0 } else { 1 },
        }
    }

    /// Relabels arbitrary class ids into dense ids in first-use order.
    pub fn compact<T: Ord + Clone>(raw: &[T]) -> Self {
        let mut map: BTreeMap<T, usize> = BTreeMap::new();
        let mut next = 0;
        let mut color = Vec::with_capacity(raw.len());
        for v in raw {
            let id = *map.entry(v.clone()).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            color.push(id);
        }
        Coloring {
            color,
            num_colors: next,
        }
    }

    pub fn len(&self) -> usize {
        self.color.len()
    }

    pub fn is_empty(&self) -> bool {
        self.color.is_empty()
    }

    pub fn color(&self, x: usize) -> usize {
        self.color[x]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Points grouped by color id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_colors];
        for (x, &c) in self.color.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

/// The automorphism group of a poset: a generating set, the exact order,
/// and the orbit partition.
#[derive(Clone, Debug)]
pub struct AutReport {
    pub generators: Vec<Permutation>,
    pub order: u128,
    pub orbits: Vec<Vec<usize>>,
}

impl AutReport {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

pub fn is_automorphism(p: &Poset, perm: &Permutation) -> bool {
    if perm.len() != p.n() {
        return false;
    }
    (0..p.n()).all(|x| {
        (0..p.n()).all(|y| p.leq(x, y) == p.leq(perm.apply(x), perm.apply(y)))
    })
}

/// The full automorphism group, computed without enumerating its elements.
pub fn automorphisms(p: &Poset) -> AutReport {
    aut_group(p, None)
}

/// The subgroup preserving a coloring.
pub fn color_preserving_automorphisms(p: &Poset, c: &Coloring) -> AutReport {
    assert_eq!(c.len(), p.n());
    aut_group(p, Some(c))
}

fn aut_group(p: &Poset, colors: Option<&Coloring>) -> AutReport {
    let n = p.n();
    let mut fixed: Vec<usize> = Vec::new();
    let mut order: u128 = 1;
    let mut generators: Vec<Permutation> = Vec::new();

    loop {
        let mut extra = base_extra(p, colors);
        for (i, &f) in fixed.iter().enumerate() {
            extra[f][1] = (i + 1) as u64;
        }
        let classes = match refine(p, p, &extra, &extra) {
            Some((ca, _)) => ca,
            None => unreachable!("self-refinement always matches"),
        };
        let mut class_size = BTreeMap::new();
        for &c in &classes {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        let Some(x) = (0..n).find(|&x| class_size[&classes[x]] >= 2) else {
            break;
        };
        let cell: Vec<usize> = (x + 1..n).filter(|&y| classes[y] == classes[x]).collect();
        let mut orbit_size: u128 = 1;
        let marker = (fixed.len() + 1) as u64;
        for y in cell {
            let mut extra_a = base_extra(p, colors);
            let mut extra_b = base_extra(p, colors);
            for (i, &f) in fixed.iter().enumerate() {
                extra_a[f][1] = (i + 1) as u64;
                extra_b[f][1] = (i + 1) as u64;
            }
            extra_a[x][1] = marker;
            extra_b[y][1] = marker;
            if let Some(sigma) = find_match(p, p, &extra_a, &extra_b, false) {
                orbit_size += 1;
                generators.push(sigma);
            }
        }
        order *= orbit_size;
        fixed.push(x);
    }

    let orbits = orbit_partition(n, &generators);
    AutReport {
        generators,
        order,
        orbits,
    }
}

fn orbit_partition(n: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for g in gens {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Finds an order isomorphism between two posets, if one exists.
pub fn find_isomorphism(a: &Poset, b: &Poset) -> Option<Permutation> {
    if a.n() != b.n() {
        return None;
    }
    let extra_a = base_extra(a, None);
    let extra_b = base_extra(b, None);
    find_match(a, b, &extra_a, &extra_b, false)
}

pub fn are_isomorphic(a: &Poset, b: &Poset) -> bool {
    find_isomorphism(a, b).is_some()
}

/// A non-identity automorphism preserving the coloring, if one exists.
pub fn distinguishing_violation(p: &Poset, c: &Coloring) -> Option<Permutation> {
    assert_eq!(c.len(), p.n());
    let extra = base_extra(p, Some(c));
    find_match(p, p, &extra, &extra, true)
}

/// True iff the only color-preserving automorphism is the identity.
pub fn is_distinguishing(p: &Poset, c: &Coloring) -> bool {
    distinguishing_violation(p, c).is_none()
}

/// A comparable same-colored pair, if any (properness witness).
pub fn proper_violation(p: &Poset, c: &Coloring) -> Option<(usize, usize)> {
    for x in 0..p.n() {
        for y in x + 1..p.n() {
            if c.color(x) == c.color(y) && p.is_comparable(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// True iff every color class is an antichain.
pub fn is_proper(p: &Poset, c: &Coloring) -> bool {
    proper_violation(p, c).is_none()
}

/// An incomparable same-colored pair, if any (chain-properness witness).
pub fn chain_proper_violation(p: &Poset, c: &Coloring) -> Option<(usize, usize)> {
    for x in 0..p.n() {
        for y in x + 1..p.n() {
            if c.color(x) == c.color(y) && !p.is_comparable(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// True iff every color class is a chain.
pub fn is_chain_proper(p: &Poset, c: &Coloring) -> bool {
    chain_proper_violation(p, c).is_none()
}

/// Points fixed by every color-preserving automorphism.
pub fn pinned_points(p: &Poset, c: &Coloring) -> Vec<usize> {
    color_preserving_automorphisms(p, c)
        .orbits
        .into_iter()
        .filter(|orbit| orbit.len() == 1)
        .map(|orbit| orbit[0])
        .collect()
}

/// Least number of colors (at most `cap`) admitting a distinguishing
/// coloring, with a witness.
pub fn distinguishing_number_with_witness(
    p: &Poset,
    cap: usize,
) -> Result<(usize, Coloring), SearchError> {
    for k in 0..=cap {
        if let Some(c) = exists_distinguishing_coloring(p, k, false) {
            return Ok((k, c));
        }
    }
    Err(SearchError::CapExceeded { cap })
}

pub fn distinguishing_number(p: &Poset, cap: usize) -> Result<usize, SearchError> {
    distinguishing_number_with_witness(p, cap).map(|(k, _)| k)
}

/// Least number of colors (at most `cap`) admitting a proper distinguishing
/// coloring, with a witness.
pub fn distinguishing_chromatic_number_with_witness(
    p: &Poset,
    cap: usize,
) -> Result<(usize, Coloring), SearchError> {
    for k in p.height()..=cap {
        if let Some(c) = exists_distinguishing_coloring(p, k, true) {
            return Ok((k, c));
        }
    }
    Err(SearchError::CapExceeded { cap })
}

pub fn distinguishing_chromatic_number(p: &Poset, cap: usize) -> Result<usize, SearchError> {
    distinguishing_chromatic_number_with_witness(p, cap).map(|(k, _)| k)
}

/// Least number of colors for a chain-proper distinguishing coloring; equals
/// the width, and every chain-proper coloring is automatically
/// distinguishing.
pub fn chain_proper_distinguishing_number(p: &Poset) -> usize {
    p.chain_partition().len()
}

/// Minimum size of the smaller class over all distinguishing 2-colorings.
pub fn min_color_class_size(p: &Poset) -> Result<usize, SearchError> {
    let n = p.n();
    let aut = automorphisms(p);
    if aut.order == 1 {
        return Ok(0);
    }
    // The smallest red point may be assumed minimal in its orbit: any
    // distinguishing set has an orbit image whose sorted form is lex-least,
    // and that image's minimum is its orbit's minimum.
    let mut is_rep = vec![false; n];
    for orbit in &aut.orbits {
        is_rep[orbit[0]] = true;
    }
    let mut subset: Vec<usize> = Vec::new();
    for size in 1..=n / 2 {
        if pick_red(p, &is_rep, &mut subset, 0, size) {
            return Ok(size);
        }
    }
    Err(SearchError::NotTwoDistinguishable)
}

fn pick_red(
    p: &Poset,
    is_rep: &[bool],
    subset: &mut Vec<usize>,
    from: usize,
    remaining: usize,
) -> bool {
    if remaining == 0 {
        let mut color = vec![0usize; p.n()];
        for &x in subset.iter() {
            color[x] = 1;
        }
        return is_distinguishing(p, &Coloring::new(color));
    }
    for x in from..p.n() {
        if subset.is_empty() && !is_rep[x] {
            continue;
        }
        subset.push(x);
        if pick_red(p, is_rep, subset, x + 1, remaining - 1) {
            subset.pop();
            return true;
        }
        subset.pop();
    }
    false
}

// ---------------------------------------------------------------------------
// Partition refinement and the backtracking matcher
// ---------------------------------------------------------------------------

/// Initial invariant key per point: [custom color slot, pin slot] is the
/// caller-controlled part; rank, degrees and set sizes are appended inside
/// `refine`.
fn base_extra(p: &Poset, colors: Option<&Coloring>) -> Vec<[u64; 2]> {
    (0..p.n())
        .map(|x| {
            let c = colors.map_or(0, |c| c.color(x) as u64 + 1);
            [c, 0]
        })
        .collect()
}

/// Jointly refines both posets' points into classes stable under the
/// neighbor-class multiset map. Returns `None` when the class sizes cannot
/// correspond (no isomorphism possible).
fn refine(
    a: &Poset,
    b: &Poset,
    extra_a: &[[u64; 2]],
    extra_b: &[[u64; 2]],
) -> Option<(Vec<usize>, Vec<usize>)> {
    let na = a.n();
    let nb = b.n();

    let initial = |p: &Poset, extra: &[[u64; 2]], x: usize| -> Vec<u64> {
        vec![
            extra[x][0],
            extra[x][1],
            p.rank(x) as u64,
            p.upper_covers(x).len() as u64,
            p.lower_covers(x).len() as u64,
            p.up_set(x).count() as u64,
            p.down_set(x).count() as u64,
        ]
    };

    let mut keys_a: Vec<Vec<u64>> = (0..na).map(|x| initial(a, extra_a, x)).collect();
    let mut keys_b: Vec<Vec<u64>> = (0..nb).map(|x| initial(b, extra_b, x)).collect();

    let mut class_a = vec![0usize; na];
    let mut class_b = vec![0usize; nb];
    let mut num_classes = 0usize;

    loop {
        let mut ids: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        for key in keys_a.iter().chain(keys_b.iter()) {
            let next = ids.len();
            ids.entry(key.clone()).or_insert(next);
        }
        for (x, key) in keys_a.iter().enumerate() {
            class_a[x] = ids[key];
        }
        for (x, key) in keys_b.iter().enumerate() {
            class_b[x] = ids[key];
        }

        // class sizes must agree between the two sides
        let mut count_a: BTreeMap<usize, usize> = BTreeMap::new();
        let mut count_b: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &class_a {
            *count_a.entry(c).or_insert(0) += 1;
        }
        for &c in &class_b {
            *count_b.entry(c).or_insert(0) += 1;
        }
        if count_a != count_b {
            return None;
        }

        if ids.len() == num_classes {
            return Some((class_a, class_b));
        }
        num_classes = ids.len();

        let rekey = |p: &Poset, class: &[usize], x: usize| -> Vec<u64> {
            let mut key = vec![class[x] as u64];
            let mut ups: Vec<u64> = p.upper_covers(x).iter().map(|&y| class[y] as u64).collect();
            ups.sort_unstable();
            let mut downs: Vec<u64> =
                p.lower_covers(x).iter().map(|&y| class[y] as u64).collect();
            downs.sort_unstable();
            key.push(ups.len() as u64);
            key.extend(ups);
            key.extend(downs);
            key
        };
        keys_a = (0..na).map(|x| rekey(a, &class_a, x)).collect();
        keys_b = (0..nb).map(|x| rekey(b, &class_b, x)).collect();
    }
}

/// Backtracking search for an order isomorphism `a -> b` respecting the
/// refined classes. With `forbid_identity` (meaningful when `a` and `b` are
/// the same poset) the identity map is not accepted.
fn find_match(
    a: &Poset,
    b: &Poset,
    extra_a: &[[u64; 2]],
    extra_b: &[[u64; 2]],
    forbid_identity: bool,
) -> Option<Permutation> {
    let n = a.n();
    if n != b.n() {
        return None;
    }
    if n == 0 {
        return if forbid_identity {
            None
        } else {
            Some(Permutation::identity(0))
        };
    }
    let (class_a, class_b) = refine(a, b, extra_a, extra_b)?;

    // candidates per a-point, ascending
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| class_b[y] == class_a[x]).collect())
        .collect();

    // process smallest candidate sets first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (candidates[x].len(), x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn go(
        a: &Poset,
        b: &Poset,
        order: &[usize],
        candidates: &[Vec<usize>],
        map: &mut [usize],
        used: &mut [bool],
        depth: usize,
        forbid_identity: bool,
    ) -> bool {
        if depth == order.len() {
            return !(forbid_identity && map.iter().enumerate().all(|(i, &v)| i == v));
        }
        let x = order[depth];
        'next: for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            for &u in &order[..depth] {
                let v = map[u];
                if a.leq(x, u) != b.leq(y, v) || a.leq(u, x) != b.leq(v, y) {
                    continue 'next;
                }
            }
            map[x] = y;
            used[y] = true;
            if go(a, b, order, candidates, map, used, depth + 1, forbid_identity) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if go(
        a,
        b,
        &order,
        &candidates,
        &mut map,
        &mut used,
        0,
        forbid_identity,
    ) {
        Permutation::new(map)
    } else {
        None
    }
}

/// Enumerates all group elements generated by `gens`, or `None` when the
/// group exceeds `cap` elements. The identity is included.
pub fn enumerate_group(n: usize, gens: &[Permutation], cap: usize) -> Option<Vec<Permutation>> {
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let id = Permutation::identity(n);
    seen.insert(id.image().to_vec(), ());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for g in gens {
            let next = g.compose(&cur);
            if !seen.contains_key(next.image()) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(next.image().to_vec(), ());
                queue.push(next);
            }
        }
    }
    queue.sort_by(|p, q| p.image().cmp(q.image()));
    Some(queue)
}

// ---------------------------------------------------------------------------
// Exact search for distinguishing colorings
// ---------------------------------------------------------------------------

/// Finds a distinguishing coloring with at most `k` colors (proper if
/// requested), or proves none exists. Colorings are enumerated canonically
/// (colors appear in first-use order, so each coloring is tried once per
/// color-permutation class); branches are cut as soon as some non-identity
/// automorphism is guaranteed to survive to every completion.
pub fn exists_distinguishing_coloring(p: &Poset, k: usize, proper: bool) -> Option<Coloring> {
    let n = p.n();
    if n == 0 {
        return Some(Coloring::monochrome(0));
    }
    if k == 0 {
        return None;
    }
    if proper && k < p.height() {
        return None;
    }
    let aut = automorphisms(p);
    if aut.order == 1 {
        if proper {
            return Some(Coloring::new(p.ranks().to_vec()));
        }
        return Some(Coloring::monochrome(n));
    }

    // component-major, then rank-major order keeps symmetric blocks adjacent
    let comp = p.components();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (comp[x], p.rank(x), x));

    // earlier comparable points (positions in `order`) per position
    let earlier_comparable: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..i)
                .filter(|&j| p.is_comparable(order[i], order[j]))
                .map(|j| order[j])
                .collect()
        })
        .collect();

    let group = if aut.order <= GROUP_ENUM_CAP as u128 {
        enumerate_group(n, &aut.generators, GROUP_ENUM_CAP)
    } else {
        None
    };

    match group {
        Some(elems) => {
            let mut search = GroupSearch::new(p, k, proper, order, earlier_comparable, elems);
            search.run()
        }
        None => {
            let mut search = PruneSearch::new(p, k, proper, order, earlier_comparable);
            search.run()
        }
    }
}

/// Runs both search backends regardless of group size and checks they agree
/// on existence; test support.
#[doc(hidden)]
pub fn search_backends_agree(p: &Poset, k: usize, proper: bool) -> bool {
    let n = p.n();
    if n == 0 || k == 0 || (proper && k < p.height()) {
        return true;
    }
    let aut = automorphisms(p);
    let comp = p.components();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (comp[x], p.rank(x), x));
    let earlier_comparable: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..i)
                .filter(|&j| p.is_comparable(order[i], order[j]))
                .map(|j| order[j])
                .collect()
        })
        .collect();
    let Some(elems) = enumerate_group(n, &aut.generators, GROUP_ENUM_CAP) else {
        return true;
    };
    let via_group = GroupSearch::new(
        p,
        k,
        proper,
        order.clone(),
        earlier_comparable.clone(),
        elems,
    )
    .run();
    let via_prune = PruneSearch::new(p, k, proper, order, earlier_comparable).run();
    match (&via_group, &via_prune) {
        (None, None) => true,
        (Some(a), Some(b)) => {
            // both must be valid witnesses; the colorings may differ
            let ok = |c: &Coloring| {
                c.num_colors() <= k
                    && is_distinguishing(p, c)
                    && (!proper || is_proper(p, c))
            };
            ok(a) && ok(b)
        }
        _ => false,
    }
}

const UNCOLORED: usize = usize::MAX;

/// Exhaustive search driven by the fully enumerated automorphism group.
/// Each non-identity element is "alive" while it still preserves the partial
/// coloring; a branch dies when an alive element has its entire support
/// colored, and a leaf succeeds when nothing is alive.
struct GroupSearch<'a> {
    p: &'a Poset,
    k: usize,
    proper: bool,
    order: Vec<usize>,
    earlier_comparable: Vec<Vec<usize>>,
    img: Vec<Vec<usize>>,
    inv: Vec<Vec<usize>>,
    support_size: Vec<usize>,
    alive: Vec<bool>,
    alive_count: usize,
    colored_support: Vec<usize>,
    color: Vec<usize>,
    used_colors: usize,
}

impl<'a> GroupSearch<'a> {
    fn new(
        p: &'a Poset,
        k: usize,
        proper: bool,
        order: Vec<usize>,
        earlier_comparable: Vec<Vec<usize>>,
        elems: Vec<Permutation>,
    ) -> Self {
        let non_id: Vec<&Permutation> = elems.iter().filter(|e| !e.is_identity()).collect();
        let img: Vec<Vec<usize>> = non_id.iter().map(|e| e.image().to_vec()).collect();
        let inv: Vec<Vec<usize>> = non_id
            .iter()
            .map(|e| e.inverse().image().to_vec())
            .collect();
        let support_size = img
            .iter()
            .map(|im| im.iter().enumerate().filter(|&(i, &v)| i != v).count())
            .collect();
        let m = img.len();
        GroupSearch {
            p,
            k,
            proper,
            order,
            earlier_comparable,
            img,
            inv,
            support_size,
            alive: vec![true; m],
            alive_count: m,
            colored_support: vec![0; m],
            color: vec![UNCOLORED; p.n()],
            used_colors: 0,
        }
    }

    fn run(&mut self) -> Option<Coloring> {
        if self.go(0) {
            Some(Coloring::new(self.color.clone()))
        } else {
            None
        }
    }

    fn go(&mut self, depth: usize) -> bool {
        let n = self.p.n();
        if depth == n {
            return self.alive_count == 0;
        }
        let x = self.order[depth];
        let cmax = core::cmp::min(self.used_colors, self.k - 1);
        'colors: for c in 0..=cmax {
            if self.proper {
                for &u in &self.earlier_comparable[depth] {
                    if self.color[u] == c {
                        continue 'colors;
                    }
                }
            }
            let new_color = c == self.used_colors;
            self.color[x] = c;
            if new_color {
                self.used_colors += 1;
            }

            let mut killed: Vec<usize> = Vec::new();
            let mut dead_end = false;
            for s in 0..self.img.len() {
                if !self.alive[s] {
                    continue;
                }
                let y = self.img[s][x];
                let z = self.inv[s][x];
                let conflict = (self.color[y] != UNCOLORED && self.color[y] != c)
                    || (self.color[z] != UNCOLORED && self.color[z] != c);
                if conflict {
                    self.alive[s] = false;
                    self.alive_count -= 1;
                    killed.push(s);
                } else if y != x {
                    self.colored_support[s] += 1;
                    if self.colored_support[s] == self.support_size[s] {
                        // survives to every completion of this branch
                        dead_end = true;
                    }
                }
            }

            if !dead_end && self.go(depth + 1) {
                return true;
            }

            for s in 0..self.img.len() {
                if self.alive[s] && self.img[s][x] != x {
                    self.colored_support[s] -= 1;
                }
            }
            for s in killed {
                self.alive[s] = true;
                self.alive_count += 1;
            }
            self.color[x] = UNCOLORED;
            if new_color {
                self.used_colors -= 1;
            }
        }
        false
    }
}

/// Exhaustive search for groups too large to enumerate. After each
/// assignment a constrained automorphism search asks for a non-identity
/// automorphism that preserves the colored points and fixes every uncolored
/// point; such an automorphism survives to every completion, so the branch
/// is cut. At a full coloring the same check is exactly the distinguishing
/// test.
struct PruneSearch<'a> {
    p: &'a Poset,
    k: usize,
    proper: bool,
    order: Vec<usize>,
    earlier_comparable: Vec<Vec<usize>>,
    color: Vec<usize>,
    used_colors: usize,
}

impl<'a> PruneSearch<'a> {
    fn new(
        p: &'a Poset,
        k: usize,
        proper: bool,
        order: Vec<usize>,
        earlier_comparable: Vec<Vec<usize>>,
    ) -> Self {
        PruneSearch {
            p,
            k,
            proper,
            order,
            earlier_comparable,
            color: vec![UNCOLORED; p.n()],
            used_colors: 0,
        }
    }

    fn run(&mut self) -> Option<Coloring> {
        if self.go(0) {
            Some(Coloring::new(self.color.clone()))
        } else {
            None
        }
    }

    fn surviving_automorphism(&self) -> bool {
        let n = self.p.n();
        let mut extra = vec![[0u64, 0u64]; n];
        for (x, slot) in extra.iter_mut().enumerate() {
            if self.color[x] == UNCOLORED {
                slot[1] = (x + 1) as u64;
            } else {
                slot[0] = (self.color[x] + 1) as u64;
            }
        }
        find_match(self.p, self.p, &extra, &extra, true).is_some()
    }

    fn go(&mut self, depth: usize) -> bool {
        let n = self.p.n();
        if depth == n {
            return true; // the last prune check already verified this leaf
        }
        let x = self.order[depth];
        let cmax = core::cmp::min(self.used_colors, self.k - 1);
        'colors: for c in 0..=cmax {
            if self.proper {
                for &u in &self.earlier_comparable[depth] {
                    if self.color[u] == c {
                        continue 'colors;
                    }
                }
            }
            let new_color = c == self.used_colors;
            self.color[x] = c;
            if new_color {
                self.used_colors += 1;
            }
            if !self.surviving_automorphism() && self.go(depth + 1) {
                return true;
            }
            self.color[x] = UNCOLORED;
            if new_color {
                self.used_colors -= 1;
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// Naive small-instance oracle
// ---------------------------------------------------------------------------

/// Brute-force oracle over an explicit relation matrix: enumerate every
/// k-coloring and hunt for a color-preserving relation automorphism among
/// all bijections. Independent of the engine above; intended for n <= 8.
pub mod naive {
    use alloc::vec;
    use alloc::vec::Vec;

    use crate::poset::Poset;

    /// An arbitrary binary relation on `0..n` given as a full matrix.
    #[derive(Clone, Debug)]
    pub struct Relation {
        n: usize,
        rel: Vec<bool>,
    }

    impl Relation {
        /// The order relation `x ⪯ y` of a poset.
        pub fn order(p: &Poset) -> Self {
            let n = p.n();
            let mut rel = vec![false; n * n];
            for x in 0..n {
                for y in 0..n {
                    rel[x * n + y] = p.leq(x, y);
                }
            }
            Relation { n, rel }
        }

        /// The comparability graph of a poset (symmetric, reflexive).
        pub fn comparability(p: &Poset) -> Self {
            let n = p.n();
            let mut rel = vec![false; n * n];
            for x in 0..n {
                for y in 0..n {
                    rel[x * n + y] = p.is_comparable(x, y);
                }
            }
            Relation { n, rel }
        }

        pub fn n(&self) -> usize {
            self.n
        }

        fn get(&self, x: usize, y: usize) -> bool {
            self.rel[x * self.n + y]
        }

        /// Adjacency for properness: related and distinct.
        fn adjacent(&self, x: usize, y: usize) -> bool {
            x != y && (self.get(x, y) || self.get(y, x))
        }
    }

    /// Is there a non-identity bijection preserving the relation and the
    /// colors? Plain backtracking over all images.
    fn violating_bijection(r: &Relation, color: &[usize]) -> bool {
        let n = r.n;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(r: &Relation, color: &[usize], map: &mut [usize], used: &mut [bool], x: usize) -> bool {
            let n = r.n;
            if x == n {
                return !map.iter().enumerate().all(|(i, &v)| i == v);
            }
            'next: for y in 0..n {
                if used[y] || color[x] != color[y] {
                    continue;
                }
                for (u, &v) in map.iter().enumerate().take(x) {
                    if r.get(x, u) != r.get(y, v) || r.get(u, x) != r.get(v, y) {
                        continue 'next;
                    }
                }
                map[x] = y;
                used[y] = true;
                if go(r, color, map, used, x + 1) {
                    return true;
                }
                map[x] = usize::MAX;
                used[y] = false;
            }
            false
        }
        go(r, color, &mut map, &mut used, 0)
    }

    fn is_proper(r: &Relation, color: &[usize]) -> bool {
        for x in 0..r.n {
            for y in x + 1..r.n {
                if color[x] == color[y] && r.adjacent(x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn exists_coloring(r: &Relation, k: usize, proper: bool) -> bool {
        let n = r.n;
        if n == 0 {
            return true;
        }
        if k == 0 {
            return false;
        }
        let mut color = vec![0usize; n];
        loop {
            if (!proper || is_proper(r, &color)) && !violating_bijection(r, &color) {
                return true;
            }
            // odometer over all k^n colorings
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                color[i] += 1;
                if color[i] < k {
                    break;
                }
                color[i] = 0;
                i += 1;
            }
        }
    }

    /// Smallest k <= cap with a distinguishing k-coloring of the relation.
    pub fn distinguishing_number(r: &Relation, cap: usize) -> Option<usize> {
        assert!(r.n <= 10, "naive oracle is for small instances");
        (if r.n == 0 { 0 } else { 1 }..=cap).find(|&k| exists_coloring(r, k, false))
    }

    /// Smallest k <= cap with a proper distinguishing k-coloring.
    pub fn chromatic_distinguishing_number(r: &Relation, cap: usize) -> Option<usize> {
        assert!(r.n <= 10, "naive oracle is for small instances");
        (if r.n == 0 { 0 } else { 1 }..=cap).find(|&k| exists_coloring(r, k, true))
    }

    /// Number of relation automorphisms, counted by filtering all bijections.
    pub fn automorphism_count(r: &Relation) -> u64 {
        assert!(r.n <= 8, "naive count is for small instances");
        let n = r.n;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(r: &Relation, map: &mut [usize], used: &mut [bool], x: usize) -> u64 {
            let n = r.n;
            if x == n {
                return 1;
            }
            let mut total = 0;
            'next: for y in 0..n {
                if used[y] {
                    continue;
                }
                for (u, &v) in map.iter().enumerate().take(x) {
                    if r.get(x, u) != r.get(y, v) || r.get(u, x) != r.get(v, y) {
                        continue 'next;
                    }
                }
                map[x] = y;
                used[y] = true;
                total += go(r, map, used, x + 1);
                map[x] = usize::MAX;
                used[y] = false;
            }
            total
        }
        go(r, &mut map, &mut used, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;

    fn poset_m() -> Poset {
        Poset::from_cover_pairs(5, &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)]).unwrap()
    }

    fn antichain(n: usize) -> Poset {
        Poset::from_cover_pairs(n, &[]).unwrap()
    }

    #[test]
    fn m_has_trivial_group() {
        let aut = automorphisms(&poset_m());
        assert_eq!(aut.order, 1);
        assert!(aut.generators.is_empty());
        assert_eq!(aut.orbits.len(), 5);
    }

    #[test]
    fn antichain_group_is_symmetric() {
        for n in 1..=6 {
            let aut = automorphisms(&antichain(n));
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(aut.order, fact);
            assert_eq!(aut.orbits.len(), 1);
            for g in &aut.generators {
                assert!(is_automorphism(&antichain(n), g));
            }
        }
    }

    /// The subset lattice of {1..n} has exactly the n! automorphisms
    /// induced by permuting the singletons (checked against the naive
    /// bijection count where feasible).
    #[test]
    fn subset_lattice_group_order() {
        for n in 1..=4usize {
            let b = crate::colorings::gen_boolean(n, 1 << 20).unwrap();
            let aut = automorphisms(&b);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(aut.order, fact, "n={n}");
            if b.n() <= 8 {
                let r = naive::Relation::order(&b);
                assert_eq!(aut.order as u64, naive::automorphism_count(&r));
            }
        }
    }

    #[test]
    fn monochrome_antichain_not_distinguishing() {
        let p = antichain(2);
        let c = Coloring::monochrome(2);
        assert!(!is_distinguishing(&p, &c));
        let v = distinguishing_violation(&p, &c).unwrap();
        assert!(is_automorphism(&p, &v));
        assert!(!v.is_identity());
        assert!(pinned_points(&p, &c).is_empty());
    }

    #[test]
    fn monochrome_m_is_distinguishing() {
        let p = poset_m();
        let c = Coloring::monochrome(5);
        assert!(is_distinguishing(&p, &c));
        assert_eq!(pinned_points(&p, &c), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn proper_and_chain_proper() {
        let p = poset_m();
        // z=0, w=1, y=2, x=3, v=4; the 4-color proper distinguishing witness
        let c = Coloring::new(vec![0, 1, 1, 2, 3]);
        assert!(is_proper(&p, &c));
        assert!(is_distinguishing(&p, &c));
        // chain-proper witness: {x,y,z} one color, {v,w} the other
        let cp = Coloring::new(vec![0, 1, 0, 0, 1]);
        assert!(is_chain_proper(&p, &cp));
        assert!(is_distinguishing(&p, &cp));
        assert!(!is_proper(&p, &cp));

        let two_chain = Poset::from_cover_pairs(2, &[(0, 1)]).unwrap();
        assert!(!is_proper(&two_chain, &Coloring::monochrome(2)));
        assert!(!is_chain_proper(&antichain(2), &Coloring::monochrome(2)));
    }

    #[test]
    fn distinguishing_numbers_of_small_posets() {
        assert_eq!(distinguishing_number(&poset_m(), 8), Ok(1));
        assert_eq!(distinguishing_number(&antichain(4), 8), Ok(4));
        assert_eq!(distinguishing_number(&antichain(4), 3).unwrap_err(),
            SearchError::CapExceeded { cap: 3 });
        // M - x: remove x; w and y become interchangeable
        let m_minus_x = Poset::from_cover_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(distinguishing_number(&m_minus_x, 8), Ok(2));
    }

    #[test]
    fn chromatic_distinguishing_of_m() {
        assert_eq!(distinguishing_chromatic_number(&poset_m(), 5), Ok(4));
        let (k, c) = distinguishing_chromatic_number_with_witness(&poset_m(), 5).unwrap();
        assert_eq!(k, 4);
        assert!(is_proper(&poset_m(), &c));
        assert!(is_distinguishing(&poset_m(), &c));
    }

    #[test]
    fn chain_proper_number_is_width() {
        assert_eq!(chain_proper_distinguishing_number(&poset_m()), 2);
        let chain = Poset::from_cover_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(chain_proper_distinguishing_number(&chain), 1);
        assert_eq!(chain_proper_distinguishing_number(&antichain(5)), 5);
    }

    #[test]
    fn min_class_size_trivial_group() {
        assert_eq!(min_color_class_size(&poset_m()), Ok(0));
    }

    #[test]
    fn min_class_size_antichain_fails() {
        assert_eq!(
            min_color_class_size(&antichain(3)),
            Err(SearchError::NotTwoDistinguishable)
        );
    }

    #[test]
    fn isomorphism_of_dual_chain() {
        let chain = Poset::from_cover_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(are_isomorphic(&chain, &chain.dual()));
        assert!(!are_isomorphic(&chain, &antichain(3)));
    }

    #[test]
    fn engine_matches_naive_on_small_posets() {
        let posets = [
            poset_m(),
            antichain(4),
            Poset::from_cover_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap(),
            Poset::from_cover_pairs(5, &[(0, 2), (1, 2), (3, 2)]).unwrap(),
            Poset::from_cover_pairs(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
        ];
        for p in &posets {
            let r = naive::Relation::order(p);
            let d_engine = distinguishing_number(p, p.n().max(1)).unwrap();
            assert_eq!(naive::distinguishing_number(&r, p.n().max(1)), Some(d_engine));
            let x_engine = distinguishing_chromatic_number(p, p.n().max(1)).unwrap();
            assert_eq!(
                naive::chromatic_distinguishing_number(&r, p.n().max(1)),
                Some(x_engine)
            );
        }
    }

    #[test]
    fn group_order_matches_naive_count() {
        let posets = [
            poset_m(),
            antichain(4),
            Poset::from_cover_pairs(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
            Poset::from_cover_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap(),
        ];
        for p in &posets {
            let r = naive::Relation::order(p);
            assert_eq!(automorphisms(p).order as u64, naive::automorphism_count(&r));
        }
    }
}
