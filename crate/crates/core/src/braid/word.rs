use std::fmt;

use serde::{Deserialize, Serialize};

use super::garside::NormalForm;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A word in the standard generators `a_1..a_{m-1}` of the braid group `B_m`.
///
/// Letter `i > 0` stands for `a_i` and `-i` for its inverse. The empty word is
/// the identity. Words are not reduced implicitly; equality of words is
/// spelling equality, group equality goes through [`BraidWord::equals`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 || strands > u8::MAX as usize {
            return Err(Error::InvalidStrands(strands));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange {
                    index: l as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The generator `a_i`, or its inverse for negative `i`.
    pub fn generator(strands: usize, i: i32) -> Result<Self> {
        Self::new(strands, vec![i])
    }

    /// Parses the whitespace-separated signed-integer format, e.g. `"3 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            for token in line.split_whitespace() {
                let value: i32 = token.parse().map_err(|_| Error::Parse {
                    line: line_no + 1,
                    token: token.to_string(),
                    reason: "expected a nonzero signed integer".into(),
                })?;
                if value == 0 || value.unsigned_abs() as usize >= strands {
                    return Err(Error::Parse {
                        line: line_no + 1,
                        token: token.to_string(),
                        reason: format!("generator index out of range for {strands} strands"),
                    });
                }
                letters.push(value);
            }
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            Err(Error::StrandMismatch(self.strands, other.strands))
        } else {
            Ok(())
        }
    }

    /// Concatenation `self·other`; no cancellation is performed.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub(crate) fn concat(parts: &[&BraidWord]) -> BraidWord {
        let strands = parts.first().map_or(1, |w| w.strands);
        let letters = parts.iter().flat_map(|w| w.letters.iter().copied()).collect();
        BraidWord { strands, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `g·self·g⁻¹`.
    pub fn conjugated_by(&self, g: &BraidWord) -> Result<BraidWord> {
        self.check_same(g)?;
        Ok(BraidWord::concat(&[g, self, &g.inverse()]))
    }

    /// Cancels adjacent `a_i a_i⁻¹` pairs.
    pub fn freely_reduced(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Index shift `a_j -> a_{j+offset}` into a braid group on `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (l.abs() + offset as i32))
            .collect();
        BraidWord::new(strands, letters)
    }

    /// Same letters read in a braid group with a different strand count.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image in the symmetric group, `a_i -> (i i+1)`, composed as a left action.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            p.swap_positions(l.unsigned_abs() as usize - 1);
        }
        p
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::from_word(self)
    }

    /// Group equality in `B_m`, decided by Garside normal forms.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        self.check_same(other)?;
        if self.exponent_sum() != other.exponent_sum() {
            return Ok(false);
        }
        Ok(self.normal_form() == other.normal_form())
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent_sum() == 0 && self.normal_form().is_identity()
    }
}

impl fmt::Display for BraidWord {
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

/// Concatenation `u·v`.
pub fn multiply(u: &BraidWord, v: &BraidWord) -> Result<BraidWord> {
    u.multiply(v)
}

/// Group equality of two words.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    u.equals(v)
}

pub fn exponent_sum(u: &BraidWord) -> i64 {
    u.exponent_sum()
}

pub fn permutation_of(u: &BraidWord) -> Permutation {
    u.permutation()
}
