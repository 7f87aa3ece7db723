//! The Artin action of `B_m` on `F_m`.
//!
//! The generator `a_i` acts by `x_i -> x_i x_{i+1} x_i⁻¹`, `x_{i+1} -> x_i`,
//! fixing the other `x_j`. Braid words act letter by letter from left to
//! right: the first letter acts first, so `apply(uv, w) = apply(v, apply(u, w))`.

use std::collections::BTreeSet;

use super::word::FreeWord;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// An automorphism of `F_m` stored by the images of the free generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinAutomorphism {
    images: Vec<FreeWord>,
}

impl ArtinAutomorphism {
    pub fn identity(rank: usize) -> Self {
        ArtinAutomorphism {
            images: (1..=rank as i32)
                .map(|j| FreeWord::from_reduced(rank, vec![j]))
                .collect(),
        }
    }

    /// The automorphism induced by a braid word.
    pub fn of(braid: &BraidWord) -> Self {
        let m = braid.strands();
        let mut table = Self::identity(m);
        // Φ_{c·rest} = Φ_rest ∘ φ_c, so precompose letter by letter from the right.
        for &c in braid.letters().iter().rev() {
            let i = c.unsigned_abs() as usize - 1;
            let (xi, xj) = (table.images[i].clone(), table.images[i + 1].clone());
            if c > 0 {
                table.images[i] = xi.mul(&xj).mul(&xi.inverse());
                table.images[i + 1] = xi;
            } else {
                table.images[i] = xj.clone();
                table.images[i + 1] = xj.inverse().mul(&xi).mul(&xj);
            }
        }
        table
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn image_of_generator(&self, j: usize) -> &FreeWord {
        &self.images[j - 1]
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut acc = FreeWord::identity(self.rank());
        for &l in w.letters() {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            acc = if l > 0 {
                acc.mul(img)
            } else {
                acc.mul(&img.inverse())
            };
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, w)| w.letters() == [j as i32 + 1])
    }
}

/// Image of `w` under the braid `b`.
pub fn artin_apply(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    if b.strands() != w.rank() {
        return Err(Error::StrandMismatch(b.strands(), w.rank()));
    }
    Ok(ArtinAutomorphism::of(b).apply(w))
}

/// Whether `b` acts trivially on `F_m`; by faithfulness, whether `b = 1` in `B_m`.
pub fn oracle_is_trivial(b: &BraidWord) -> bool {
    ArtinAutomorphism::of(b).is_identity()
}

/// Whether `u` and `v` induce the same automorphism, i.e. `u·v⁻¹` acts trivially.
pub fn oracle_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(ArtinAutomorphism::of(u) == ArtinAutomorphism::of(v))
}

/// All freely reduced words of length at most `max_len` fixed by `b`.
pub fn fixed_words_up_to(b: &BraidWord, max_len: usize) -> BTreeSet<FreeWord> {
    let phi = ArtinAutomorphism::of(b);
    let rank = phi.rank();
    let mut out = BTreeSet::new();
    let mut stack: Vec<(Vec<i32>, FreeWord)> = vec![(Vec::new(), FreeWord::identity(rank))];
    while let Some((word, image)) = stack.pop() {
        if image.letters() == word.as_slice() {
            out.insert(FreeWord::from_reduced(rank, word.clone()));
        }
        if word.len() == max_len {
            continue;
        }
        for j in 1..=rank as i32 {
            for l in [j, -j] {
                if word.last() == Some(&-l) {
                    continue;
                }
                let gen = phi.image_of_generator(j as usize);
                let step = if l > 0 { gen.clone() } else { gen.inverse() };
                let mut next = word.clone();
                next.push(l);
                stack.push((next, image.mul(&step)));
            }
        }
    }
    out
}
