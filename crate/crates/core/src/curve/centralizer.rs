use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// One candidate centralizer element and whether it commutes with `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerEntry {
    pub name: String,
    /// `printed` for the formula as stated, `corrected` for its index-consistent
    /// conjugation form, `cable` for the pure braid generator on 2-strand cables.
    pub variant: &'static str,
    pub word: BraidWord,
    pub commutes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    pub strands: usize,
    pub exponents: Vec<i64>,
    pub b: BraidWord,
    pub entries: Vec<CentralizerEntry>,
    /// Formulas naming a generator beyond `a_{m-1}`.
    pub not_constructible: Vec<String>,
}

impl CentralizerReport {
    /// Entries that fail to commute with `b`.
    pub fn discrepancies(&self) -> Vec<&CentralizerEntry> {
        self.entries.iter().filter(|e| !e.commutes).collect()
    }

    pub fn entry(&self, name: &str, variant: &str) -> Option<&CentralizerEntry> {
        self.entries.iter().find(|e| e.name == name && e.variant == variant)
    }
}

/// Letters `a_x a_y` for each index pair, concatenated.
fn pairs(list: impl IntoIterator<Item = (usize, usize)>) -> Vec<i32> {
    list.into_iter()
        .flat_map(|(x, y)| [x as i32, y as i32])
        .collect()
}

fn inverse(letters: &[i32]) -> Vec<i32> {
    letters.iter().rev().map(|&l| -l).collect()
}

/// The half twist exchanging the cables `(2j-1, 2j)` and `(2j+1, 2j+2)`.
fn cable_exchange(j: usize) -> Vec<i32> {
    [2 * j, 2 * j - 1, 2 * j + 1, 2 * j].iter().map(|&g| g as i32).collect()
}

/// `(H_{hi-1}⋯H_{lo+1}) H_lo² (H_{hi-1}⋯H_{lo+1})⁻¹` in the cable exchanges `H_j`.
fn cable_pure_generator(lo: usize, hi: usize) -> Vec<i32> {
    let pre: Vec<i32> = (lo + 1..hi).rev().flat_map(cable_exchange).collect();
    let mut w = pre.clone();
    w.extend(cable_exchange(lo).repeat(2));
    w.extend(inverse(&pre));
    w
}

/// Builds `b = a_1^{n_1} a_3^{n_2} ⋯ a_{2t-1}^{n_t}` and checks the listed
/// generators of its centralizer by exact word comparison.
pub fn verify_centralizer_generators(m: usize, exponents: &[i64]) -> Result<CentralizerReport> {
    let t = exponents.len();
    if t == 0 || 2 * t >= m {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= t and 2t < m, got t={t}, m={m}"
        )));
    }
    let mut b_letters = Vec::new();
    for (j, &n) in exponents.iter().enumerate() {
        let g = (2 * j + 1) as i32;
        let l = if n >= 0 { g } else { -g };
        b_letters.extend(std::iter::repeat_n(l, n.unsigned_abs() as usize));
    }
    let b = BraidWord::new(m, b_letters)?;
    let commutes = |w: &BraidWord| -> Result<bool> { b.multiply(w)?.equals(&w.multiply(&b)?) };
    let mut entries = Vec::new();
    let mut not_constructible = Vec::new();
    let mut push = |name: String, variant: &'static str, letters: Vec<i32>| -> Result<()> {
        if letters.iter().any(|&l| l == 0 || l.unsigned_abs() as usize >= m) {
            not_constructible.push(format!("{name} ({variant})"));
            return Ok(());
        }
        let word = BraidWord::new(m, letters)?;
        let ok = commutes(&word)?;
        entries.push(CentralizerEntry {
            name,
            variant,
            word,
            commutes: ok,
        });
        Ok(())
    };
    for i in 1..=t {
        push(format!("a{}", 2 * i - 1), "printed", vec![(2 * i - 1) as i32])?;
    }
    for l in 2 * t + 1..m {
        push(format!("a{l}"), "printed", vec![l as i32])?;
    }
    for i in 1..=t {
        let conj: Vec<i32> = (2 * i + 1..=2 * t).rev().map(|g| g as i32).collect();
        let (p, q) = ((2 * i) as i32, (2 * i - 1) as i32);
        let mut w = conj.clone();
        w.extend([p, q, q, p]);
        w.extend(inverse(&conj));
        push(format!("c{i}"), "printed", w)?;
    }
    for i in 1..=t {
        let twist: Vec<i32> = [2 * i, 2 * i - 1, 2 * i + 1, 2 * i]
            .iter()
            .map(|&g| g as i32)
            .collect::<Vec<_>>()
            .repeat(2);
        for l in (1..=t).filter(|&l| l != i) {
            if l < i {
                let pre = pairs((l..i).map(|j| (2 * j, 2 * j - 1)));
                let mut w = pre.clone();
                w.extend(&twist);
                w.extend(inverse(&pre));
                push(format!("d{i},{l}"), "printed", w.clone())?;
                push(format!("d{i},{l}"), "corrected", w)?;
            } else {
                let pre = pairs((i + 1..l).rev().map(|j| (2 * j, 2 * j + 1)));
                let post = inverse(&pairs((i..l).rev().map(|j| (2 * j, 2 * j + 1))));
                let mut w = pre.clone();
                w.extend(&twist);
                w.extend(&post);
                push(format!("d{i},{l}"), "printed", w)?;
                let full = pairs((i..l).rev().map(|j| (2 * j, 2 * j + 1)));
                let mut w = full.clone();
                w.extend(&twist);
                w.extend(inverse(&full));
                push(format!("d{i},{l}"), "corrected", w)?;
            }
            push(format!("d{i},{l}"), "cable", cable_pure_generator(i.min(l), i.max(l)))?;
        }
    }
    Ok(CentralizerReport {
        strands: m,
        exponents: exponents.to_vec(),
        b,
        entries,
        not_constructible,
    })
}
