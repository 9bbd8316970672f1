//! Meet/join structure, distributivity, join-irreducibles, and the downset
//! lattice construction with its canonical isomorphism.
//!
//! For a lattice `L`, `Q_L` denotes the induced subposet of join-irreducible
//! points (points with exactly one downward cover edge). For a distributive
//! `L`, the map `f(w) = {y in Q_L : y ⪯ w}` is an order isomorphism onto the
//! downset lattice of `Q_L`; `birkhoff_check` builds and verifies that map,
//! which doubles as the practical distributivity test for large lattices.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::poset::Poset;

/// Default guard on the number of downsets `downset_lattice` may produce.
pub const DEFAULT_SIZE_CAP: usize = 1 << 20;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LatticeError {
    NotALattice,
    /// The downset lattice would exceed the configured size cap.
    TooLarge { cap: usize },
}

impl core::fmt::Display for LatticeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LatticeError::NotALattice => write!(f, "poset is not a lattice"),
            LatticeError::TooLarge { cap } => {
                write!(f, "downset lattice exceeds the size cap of {cap} elements")
            }
        }
    }
}

/// Partial meet/join tables. An entry is present exactly when the pair has a
/// unique maximal lower bound (dually, minimal upper bound).
#[derive(Clone, Debug)]
pub struct MeetJoinTables {
    n: usize,
    meet: Vec<u32>,
    join: Vec<u32>,
    pub is_lattice: bool,
    pub is_distributive: bool,
}

const ABSENT: u32 = u32::MAX;

impl MeetJoinTables {
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.meet[x * self.n + y];
        (v != ABSENT).then_some(v as usize)
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.join[x * self.n + y];
        (v != ABSENT).then_some(v as usize)
    }
}

/// Computes meet and join for every pair, plus lattice/distributivity flags.
///
/// Distributivity is decided by the exhaustive triple check for `n <= 64`
/// and by Birkhoff reconstruction above that.
pub fn meet_join(p: &Poset) -> MeetJoinTables {
    let mut t = meet_join_tables(p);
    if t.is_lattice {
        t.is_distributive = if p.n() <= 64 {
            distributive_by_triples(&t)
        } else {
            birkhoff_check(p).map(|(ok, _)| ok).unwrap_or(false)
        };
    }
    t
}

fn meet_join_tables(p: &Poset) -> MeetJoinTables {
    let n = p.n();
    let mut meet = vec![ABSENT; n * n];
    let mut join = vec![ABSENT; n * n];
    let mut total = n > 0;
    for x in 0..n {
        for y in x..n {
            let lower = p.down_set(x).intersection(p.down_set(y));
            if let Some(m) = unique_maximal(p, &lower, true) {
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
            } else {
                total = false;
            }
            let upper = p.up_set(x).intersection(p.up_set(y));
            if let Some(j) = unique_maximal(p, &upper, false) {
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
            } else {
                total = false;
            }
        }
    }
    MeetJoinTables {
        n,
        meet,
        join,
        is_lattice: total,
        is_distributive: false,
    }
}

/// The unique maximal (or, with `maximal = false`, minimal) element of `set`,
/// if there is exactly one.
fn unique_maximal(p: &Poset, set: &Bitset, maximal: bool) -> Option<usize> {
    let mut found = None;
    for z in set.iter() {
        let extreme = if maximal {
            // no w in set strictly above z
            !set.iter().any(|w| w != z && p.lt(z, w))
        } else {
            !set.iter().any(|w| w != z && p.lt(w, z))
        };
        if extreme {
            if found.is_some() {
                return None;
            }
            found = Some(z);
        }
    }
    found
}

fn distributive_by_triples(t: &MeetJoinTables) -> bool {
    let n = t.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let a = t.join(t.meet(x, y).unwrap(), z).unwrap();
                let b = t
                    .meet(t.join(x, z).unwrap(), t.join(y, z).unwrap())
                    .unwrap();
                if a != b {
                    return false;
                }
                let c = t.meet(t.join(x, y).unwrap(), z).unwrap();
                let d = t
                    .join(t.meet(x, z).unwrap(), t.meet(y, z).unwrap())
                    .unwrap();
                if c != d {
                    return false;
                }
            }
        }
    }
    true
}

/// The induced subposet of join-irreducible points together with the map
/// back into the parent lattice: point `i` of `poset` is `to_parent[i]`.
#[derive(Clone, Debug)]
pub struct JoinIrreducibles {
    pub poset: Poset,
    pub to_parent: Vec<usize>,
}

/// Points of a lattice with exactly one downward cover edge, as an induced
/// subposet.
pub fn join_irreducibles(p: &Poset) -> Result<JoinIrreducibles, LatticeError> {
    if !meet_join_tables(p).is_lattice {
        return Err(LatticeError::NotALattice);
    }
    Ok(join_irreducibles_unchecked(p))
}

fn join_irreducibles_unchecked(p: &Poset) -> JoinIrreducibles {
    let points: Vec<usize> = (0..p.n()).filter(|&x| p.lower_covers(x).len() == 1).collect();
    JoinIrreducibles {
        poset: p.induced(&points),
        to_parent: points,
    }
}

/// The lattice of all downsets of a poset, ordered by inclusion, with one
/// source-point subset per element.
#[derive(Clone, Debug)]
pub struct DownsetLattice {
    pub lattice: Poset,
    pub elements: Vec<Bitset>,
}

/// Builds the downset lattice by closing the empty set under adding minimal
/// elements of the complement. Elements are indexed by (cardinality,
/// elements), so index 0 is the empty downset and ranks match cardinalities.
pub fn downset_lattice(p: &Poset, cap: usize) -> Result<DownsetLattice, LatticeError> {
    let n = p.n();
    let empty = Bitset::new(n);
    let mut seen: BTreeMap<Bitset, ()> = BTreeMap::new();
    seen.insert(empty.clone(), ());
    let mut frontier = vec![empty];
    while let Some(s) = frontier.pop() {
        for x in 0..n {
            if s.contains(x) {
                continue;
            }
            // x is addable iff everything strictly below it is already in
            let mut below = p.down_set(x).clone();
            below.remove(x);
            if !below.is_subset(&s) {
                continue;
            }
            let mut t = s.clone();
            t.insert(x);
            if seen.insert(t.clone(), ()).is_none() {
                if seen.len() > cap {
                    return Err(LatticeError::TooLarge { cap });
                }
                frontier.push(t);
            }
        }
    }

    let elements: Vec<Bitset> = seen.into_keys().collect();
    let index: BTreeMap<&Bitset, usize> = elements.iter().zip(0..).collect();
    let mut pairs = Vec::new();
    for (i, s) in elements.iter().enumerate() {
        // covers in the inclusion order add exactly one point
        for x in 0..n {
            if s.contains(x) {
                continue;
            }
            let mut t = s.clone();
            t.insert(x);
            if let Some(&j) = index.get(&t) {
                pairs.push((i, j));
            }
        }
    }
    let labels = elements
        .iter()
        .map(|s| Some(subset_label(p, s)))
        .collect::<Vec<_>>();
    let lattice = Poset::from_cover_pairs(elements.len(), &pairs)
        .expect("inclusion order is acyclic")
        .with_labels(labels);
    Ok(DownsetLattice { lattice, elements })
}

/// Renders a downset as `{a,c,d}` using the source poset's labels.
pub fn subset_label(p: &Poset, s: &Bitset) -> String {
    let mut out = String::from("{");
    for (k, x) in s.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&p.display_label(x));
    }
    out.push('}');
    out
}

/// The verified isomorphism between a distributive lattice and the downset
/// lattice of its join-irreducibles.
///
/// `forward[w]` is the set of `Q`-indices `{y : to_parent[y] ⪯ w}`.
#[derive(Clone, Debug)]
pub struct BirkhoffMap {
    pub q: JoinIrreducibles,
    pub downsets: DownsetLattice,
    pub forward: Vec<Bitset>,
    backward: BTreeMap<Bitset, usize>,
}

impl BirkhoffMap {
    /// The lattice point whose irreducible set is exactly `s`, if any.
    pub fn backward(&self, s: &Bitset) -> Option<usize> {
        self.backward.get(s).copied()
    }
}

/// Builds `Q_L` and `J(Q_L)`, constructs `f(w) = {y in Q_L : y ⪯ w}`, and
/// verifies it is an order isomorphism. Returns the distributivity verdict
/// and the verified map on success.
pub fn birkhoff_check(p: &Poset) -> Result<(bool, Option<BirkhoffMap>), LatticeError> {
    if !meet_join_tables(p).is_lattice {
        return Err(LatticeError::NotALattice);
    }
    let q = join_irreducibles_unchecked(p);
    let qn = q.to_parent.len();
    // J(Q_L) can never exceed |L| when the map is an isomorphism; a cap of
    // |L| + 1 detects failure without enumerating further.
    let downsets = match downset_lattice(&q.poset, p.n().saturating_add(1)) {
        Ok(d) => d,
        Err(LatticeError::TooLarge { .. }) => return Ok((false, None)),
        Err(e) => return Err(e),
    };
    if downsets.lattice.n() != p.n() {
        return Ok((false, None));
    }

    let forward: Vec<Bitset> = (0..p.n())
        .map(|w| {
            Bitset::from_iter(
                qn,
                (0..qn).filter(|&y| p.leq(q.to_parent[y], w)),
            )
        })
        .collect();

    // f must be injective onto the downsets and preserve order both ways.
    let mut backward: BTreeMap<Bitset, usize> = BTreeMap::new();
    for (w, s) in forward.iter().enumerate() {
        if backward.insert(s.clone(), w).is_some() {
            return Ok((false, None));
        }
    }
    let element_set: BTreeMap<&Bitset, ()> = downsets.elements.iter().map(|s| (s, ())).collect();
    if !forward.iter().all(|s| element_set.contains_key(s)) {
        return Ok((false, None));
    }
    for w1 in 0..p.n() {
        for w2 in 0..p.n() {
            if p.leq(w1, w2) != forward[w1].is_subset(&forward[w2]) {
                return Ok((false, None));
            }
        }
    }
    Ok((
        true,
        Some(BirkhoffMap {
            q,
            downsets,
            forward,
            backward,
        }),
    ))
}

/// The unique set of join-irreducibles whose join is `w`, as parent-lattice
/// points. Panics if the fold of joins does not reproduce `w`; that cannot
/// happen for a map produced by `birkhoff_check`.
pub fn join_decomposition(p: &Poset, map: &BirkhoffMap, w: usize) -> Vec<usize> {
    let parts: Vec<usize> = map.forward[w].iter().map(|y| map.q.to_parent[y]).collect();
    if parts.is_empty() {
        // empty join is the bottom element
        assert_eq!(Some(w), p.bottom(), "join of f(w) must reproduce w");
        return parts;
    }
    // w must be the least common upper bound of the parts
    let mut common = p.up_set(parts[0]).clone();
    for &z in &parts[1..] {
        common.intersect_with(p.up_set(z));
    }
    let is_join = common.contains(w) && common.iter().all(|z| p.leq(w, z));
    assert!(is_join, "join of f(w) must reproduce w");
    parts
}

/// Rank of `w` read off the Birkhoff map as `|f(w)|`.
pub fn rank_via_irreducibles(map: &BirkhoffMap, w: usize) -> usize {
    map.forward[w].count()
}
