//! Left-greedy Garside normal form for the classical Garside structure of `B_m`.
//!
//! An element is stored as `Δ^p · A_1 ⋯ A_r` where every `A_j` is a proper
//! simple element (a permutation braid other than `1` and `Δ`) and every pair
//! `(A_j, A_{j+1})` is left-weighted: each generator that starts `A_{j+1}`
//! already finishes `A_j`. Simple elements are represented by their
//! permutations; the half twist `Δ` maps to the order-reversing permutation and
//! conjugation by `Δ` acts on simple elements by [`Permutation::flip`].

use std::fmt;

use super::perm::Permutation;
use super::word::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

/// Letters of the half twist `(a_1⋯a_{m-1})⋯(a_1a_2)a_1`.
pub(crate) fn delta_letters(m: usize) -> Vec<i32> {
    let mut letters = Vec::with_capacity(m * (m.saturating_sub(1)) / 2);
    for top in (1..m).rev() {
        letters.extend(1..=top as i32);
    }
    letters
}

/// Slides generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let m = a.degree();
    let mut changed = false;
    loop {
        let binv = b.inverse();
        let (ar, br) = (a.raw(), binv.raw());
        let Some(i) = (0..m - 1).find(|&i| br[i] > br[i + 1] && ar[i] < ar[i + 1]) else {
            break;
        };
        let (p, q) = (br[i] as usize, br[i + 1] as usize);
        a.swap_positions(i);
        b.swap_entries(p, q);
        changed = true;
    }
    changed
}

fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    let fin = a.finishing_set();
    b.starting_set().iter().all(|i| fin.contains(i))
}

/// Incremental right multiplication of a left-weighted sequence by simple elements.
struct Normalizer {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl Normalizer {
    fn new(strands: usize, delta_power: i64) -> Self {
        Normalizer {
            strands,
            delta_power,
            factors: Vec::new(),
        }
    }

    fn with_factors(strands: usize, delta_power: i64, factors: Vec<Permutation>) -> Self {
        Normalizer {
            strands,
            delta_power,
            factors,
        }
    }

    fn push(&mut self, s: Permutation) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            let changed = make_left_weighted(&mut left[j - 1], &mut right[0]);
            if right[0].is_identity() {
                // only the newest factor can be absorbed completely
                self.factors.remove(j);
            }
            if !changed {
                break;
            }
            j -= 1;
        }
    }

    fn finish(mut self) -> NormalForm {
        let leading = self.factors.iter().take_while(|p| p.is_longest()).count();
        self.factors.drain(..leading);
        self.delta_power += leading as i64;
        while self.factors.last().is_some_and(|p| p.is_identity()) {
            self.factors.pop();
        }
        NormalForm {
            strands: self.strands,
            delta_power: self.delta_power,
            factors: self.factors,
        }
    }
}

fn flip_if(p: Permutation, odd: bool) -> Permutation {
    if odd {
        p.flip()
    } else {
        p
    }
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm {
            strands,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power_of(strands: usize, k: i64) -> Self {
        NormalForm {
            strands,
            delta_power: k,
            factors: Vec::new(),
        }
    }

    /// The element `Δ^p·A_1⋯A_r` for arbitrary simple elements `A_j`.
    pub fn from_simples(
        strands: usize,
        delta_power: i64,
        simples: impl IntoIterator<Item = Permutation>,
    ) -> Self {
        let mut n = Normalizer::new(strands, delta_power);
        for s in simples {
            n.push(s);
        }
        n.finish()
    }

    pub fn from_word(word: &BraidWord) -> Self {
        let m = word.strands();
        if m < 2 {
            return Self::identity(m);
        }
        let letters = word.letters();
        // Each a_i⁻¹ becomes Δ⁻¹·(Δa_i⁻¹); moving every Δ⁻¹ to the front
        // flips each simple once per inverse letter to its right.
        let mut negatives_after = vec![0u32; letters.len()];
        let mut count = 0u32;
        for (k, &l) in letters.iter().enumerate().rev() {
            negatives_after[k] = count;
            if l < 0 {
                count += 1;
            }
        }
        let w0 = Permutation::longest(m);
        let mut n = Normalizer::new(m, -(count as i64));
        for (k, &l) in letters.iter().enumerate() {
            let t = Permutation::transposition(m, l.unsigned_abs() as usize);
            let simple = if l > 0 { t } else { w0.compose(&t) };
            n.push(flip_if(simple, negatives_after[k] % 2 == 1));
        }
        n.finish()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.delta_power >= 0
    }

    /// Checks the structural invariants of a left-greedy normal form.
    pub fn is_well_formed(&self) -> bool {
        self.factors
            .iter()
            .all(|p| p.degree() == self.strands && !p.is_identity() && !p.is_longest())
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]))
    }

    pub fn to_word(&self) -> BraidWord {
        let m = self.strands;
        let delta = delta_letters(m);
        let mut letters = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<i32> = delta.iter().rev().map(|&l| -l).collect();
            for _ in 0..-self.delta_power {
                letters.extend_from_slice(&inv);
            }
        }
        for p in &self.factors {
            letters.extend(p.braid_letters());
        }
        BraidWord::from_letters_unchecked(m, letters)
    }

    /// The word `N⁻¹·P` of the left fraction; its letters lie in [`NormalForm::support`].
    pub fn to_fraction_word(&self) -> BraidWord {
        let (den, num) = self.left_fraction();
        let mut letters: Vec<i32> = den.to_word().letters().iter().rev().map(|&l| -l).collect();
        letters.extend_from_slice(num.to_word().letters());
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    pub fn permutation(&self) -> Permutation {
        let m = self.strands;
        let mut p = if self.delta_power.rem_euclid(2) == 1 {
            Permutation::longest(m)
        } else {
            Permutation::identity(m)
        };
        for f in &self.factors {
            p = p.compose(f);
        }
        p
    }

    /// `self·other`.
    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        debug_assert_eq!(self.strands, other.strands);
        let odd = other.delta_power.rem_euclid(2) == 1;
        let moved: Vec<Permutation> = self
            .factors
            .iter()
            .map(|p| flip_if(p.clone(), odd))
            .collect();
        let mut n = Normalizer::with_factors(
            self.strands,
            self.delta_power + other.delta_power,
            moved,
        );
        for s in &other.factors {
            n.push(s.clone());
        }
        n.finish()
    }

    pub fn inverse(&self) -> NormalForm {
        let m = self.strands;
        let r = self.factors.len() as i64;
        let w0 = Permutation::longest(m);
        // A⁻¹ = Δ⁻¹·B with B = Δ·A⁻¹, whose permutation is w0 ∘ A⁻¹.
        let simples = self.factors.iter().enumerate().rev().map(|(j, a)| {
            let b = w0.compose(&a.inverse());
            let shift = j as i64 + self.delta_power;
            flip_if(b, shift.rem_euclid(2) == 1)
        });
        NormalForm::from_simples(m, -r - self.delta_power, simples)
    }

    /// `c⁻¹·self·c`.
    pub fn conjugate(&self, c: &NormalForm) -> NormalForm {
        c.inverse().mul(self).mul(c)
    }

    /// Reduced left fraction `N⁻¹·P` with `N`, `P` positive.
    pub fn left_fraction(&self) -> (NormalForm, NormalForm) {
        let m = self.strands;
        if self.delta_power >= 0 {
            return (Self::identity(m), self.clone());
        }
        let q = (-self.delta_power) as usize;
        let r = self.factors.len();
        let s = q.min(r);
        let w0 = Permutation::longest(m);
        // Δ⁻¹A = (A⁻¹Δ)⁻¹, the right complement having permutation A⁻¹ ∘ w0.
        let complements: Vec<Permutation> = (0..s)
            .rev()
            .map(|j| {
                let c = self.factors[j].inverse().compose(&w0);
                flip_if(c, (q - 1 - j) % 2 == 1)
            })
            .collect();
        let extra = (q - s) as i64;
        let den = NormalForm::from_simples(m, extra, complements);
        let num = NormalForm::from_simples(m, 0, self.factors[s..].iter().cloned());
        (den, num)
    }

    /// Generators occurring in the element: the smallest `J` such that the
    /// element lies in the standard parabolic subgroup generated by `J`.
    pub fn support(&self) -> Vec<usize> {
        let (den, num) = self.left_fraction();
        let mut used = vec![false; self.strands];
        for part in [&den, &num] {
            if part.delta_power > 0 {
                return (1..self.strands).collect();
            }
            for f in &part.factors {
                for g in f.support() {
                    used[g] = true;
                }
            }
        }
        (1..self.strands).filter(|&g| used[g]).collect()
    }

    /// Bytes identifying the element; equal elements give equal encodings.
    pub fn encode(&self, out: &mut Vec<u8>) {
        out.push(self.strands as u8);
        out.extend_from_slice(&self.delta_power.to_le_bytes());
        out.extend_from_slice(&(self.factors.len() as u32).to_le_bytes());
        for f in &self.factors {
            out.extend_from_slice(f.raw());
        }
    }

    /// Parses `Δ^k | p_1 ; p_2 ; …` with permutations in 1-based one-line notation.
    pub fn parse(strands: usize, text: &str) -> Result<NormalForm> {
        let bad = |token: &str, reason: &str| Error::Parse {
            line: 1,
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let text = text.trim();
        let (head, tail) = text.split_once('|').ok_or_else(|| bad(text, "missing '|'"))?;
        let head = head.trim();
        let power = head
            .strip_prefix("Δ^")
            .or_else(|| head.strip_prefix("D^"))
            .ok_or_else(|| bad(head, "expected Δ^k"))?;
        let delta_power: i64 = power.trim().parse().map_err(|_| bad(power, "bad exponent"))?;
        let mut factors = Vec::new();
        for chunk in tail.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let images: Vec<usize> = chunk
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(t, "bad permutation image")))
                .collect::<Result<_>>()?;
            if images.len() != strands {
                return Err(bad(chunk, "permutation has wrong degree"));
            }
            factors.push(Permutation::from_images(&images).map_err(|_| bad(chunk, "not a permutation"))?);
        }
        let nf = NormalForm {
            strands,
            delta_power,
            factors,
        };
        if !nf.is_well_formed() {
            return Err(bad(text, "factors are not in left-greedy form"));
        }
        Ok(nf)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{} |", self.delta_power)?;
        for (k, p) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ;")?;
            }
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

pub fn normal_form(word: &BraidWord) -> NormalForm {
    NormalForm::from_word(word)
}
