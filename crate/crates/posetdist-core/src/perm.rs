//! Permutations of point indices.

use alloc::vec::Vec;

/// A bijection on `0..n`; `image[i]` is where point `i` goes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation, checking bijectivity.
    pub fn new(image: Vec<usize>) -> Option<Self> {
        let n = image.len();
        let mut seen = alloc::vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != v)
            .map(|(i, _)| i)
            .collect()
    }

    /// Cycle notation, e.g. `(0 2 1)(3 4)`; identity prints as `()`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.image[cur];
            }
            out.push(cyc);
        }
        out
    }
}

impl core::fmt::Display for Permutation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
