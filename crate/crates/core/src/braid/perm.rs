use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..m}`, stored 0-based in one-line notation.
///
/// Composition follows the left-action convention: `a.compose(&b)` is the map
/// `x -> a(b(x))`. The same type doubles as the simple elements (permutation
/// braids) of the classical Garside structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        if m > u8::MAX as usize {
            return Err(Error::InvalidStrands(m));
        }
        let mut seen = vec![false; m];
        let mut out = Vec::with_capacity(m);
        for &x in images {
            if x == 0 || x > m || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..{m}"
                )));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// The transposition exchanging `i` and `i+1` (1-based `i`).
    pub fn transposition(m: usize, i: usize) -> Self {
        let mut p = Self::identity(m);
        p.images.swap(i - 1, i);
        p
    }

    /// The order-reversing permutation `x -> m+1-x`, the image of the half twist.
    pub fn longest(m: usize) -> Self {
        Permutation {
            images: (0..m as u8).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_longest(&self) -> bool {
        let m = self.images.len();
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == m - 1 - i)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Conjugation by the longest element, `w0 ∘ self ∘ w0`.
    pub fn flip(&self) -> Permutation {
        let m = self.images.len();
        let mut out = vec![0u8; m];
        for (i, &x) in self.images.iter().enumerate() {
            out[m - 1 - i] = (m - 1 - x as usize) as u8;
        }
        Permutation { images: out }
    }

    /// Number of inversions, i.e. the length of the permutation braid.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Points not fixed by the permutation (1-based).
    pub fn moved_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Cycle lengths in nonincreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Image of a set of 1-based points.
    pub fn image_of_set<'a>(&'a self, set: impl IntoIterator<Item = &'a usize>) -> Vec<usize> {
        let mut out: Vec<usize> = set.into_iter().map(|&x| self.apply(x)).collect();
        out.sort_unstable();
        out
    }

    /// Left descents: generators `a_i` (1-based) that left-divide the permutation braid.
    pub fn starting_set(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..self.images.len().saturating_sub(1))
            .filter(|&i| inv.images[i] > inv.images[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// Right descents: generators `a_i` that right-divide the permutation braid.
    pub fn finishing_set(&self) -> Vec<usize> {
        (0..self.images.len().saturating_sub(1))
            .filter(|&i| self.images[i] > self.images[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// A positive word (1-based generator indices) for the permutation braid.
    pub fn braid_letters(&self) -> Vec<i32> {
        let mut letters = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        let mut inv = cur.inverse();
        loop {
            let n = cur.images.len();
            let Some(i) = (0..n.saturating_sub(1)).find(|&i| inv.images[i] > inv.images[i + 1])
            else {
                break;
            };
            letters.push(i as i32 + 1);
            // cur <- s_i ∘ cur swaps the values i and i+1.
            let (p, q) = (inv.images[i] as usize, inv.images[i + 1] as usize);
            cur.images.swap(p, q);
            inv.images.swap(i, i + 1);
        }
        letters
    }

    /// Generators `a_i` occurring in any reduced word of the permutation.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max_image = 0u8;
        for i in 0..self.images.len().saturating_sub(1) {
            max_image = max_image.max(self.images[i]);
            if max_image as usize > i {
                out.push(i + 1);
            }
        }
        out
    }

    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    pub(crate) fn swap_entries(&mut self, p: usize, q: usize) {
        self.images.swap(p, q);
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}
