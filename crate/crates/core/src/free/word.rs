use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A freely reduced word in the free group `F_m = ⟨x_1..x_m⟩`.
///
/// Letter `j > 0` stands for `x_j` and `-j` for `x_j⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl FreeWord {
    /// Validates the letters and freely reduces them.
    pub fn new(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut out = Vec::new();
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange {
                    index: l as i64,
                    strands: rank,
                });
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    pub(crate) fn from_reduced(rank: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] != -w[1]));
        FreeWord { rank, letters }
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, j: i32) -> Result<Self> {
        Self::new(rank, [j])
    }

    /// The boundary product `x_1 x_2 ⋯ x_k`.
    pub fn boundary(rank: usize, k: usize) -> Self {
        FreeWord {
            rank,
            letters: (1..=k.min(rank) as i32).collect(),
        }
    }

    /// Parses signed integers, optionally prefixed by `x` (`"x1 -x2"` or `"1 -2"`).
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            for token in line.split_whitespace() {
                let bad = |reason: &str| Error::Parse {
                    line: line_no + 1,
                    token: token.to_string(),
                    reason: reason.to_string(),
                };
                let (neg, body) = match token.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, token),
                };
                let body = body.strip_prefix('x').unwrap_or(body);
                let j: i32 = body.parse().map_err(|_| bad("expected a free generator"))?;
                if j <= 0 || j as usize > rank {
                    return Err(bad("generator index out of range"));
                }
                letters.push(if neg { -j } else { j });
            }
        }
        Self::new(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        FreeWord {
            rank: self.rank.max(other.rank),
            letters: out,
        }
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeWord::identity(self.rank);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Total exponent sum, the image in the abelianization `F_m -> Z` sending every `x_j` to 1.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Removes cancelling letters between the two ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j > i + 1 && l[i] == -l[j - 1] {
            i += 1;
            j -= 1;
        }
        FreeWord {
            rank: self.rank,
            letters: l[i..j].to_vec(),
        }
    }

    /// Whether the two words are conjugate in the free group.
    pub fn is_conjugate_to(&self, other: &FreeWord) -> bool {
        let a = self.cyclically_reduced();
        let b = other.cyclically_reduced();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let n = a.len();
        (0..n).any(|s| (0..n).all(|k| a.letters[(s + k) % n] == b.letters[k]))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Free reduction of an arbitrary letter sequence.
pub fn reduce(rank: usize, letters: &[i32]) -> Result<FreeWord> {
    FreeWord::new(rank, letters.iter().copied())
}
