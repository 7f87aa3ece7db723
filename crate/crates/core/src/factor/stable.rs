use crate::braid::{are_conjugate, BraidWord, Conjugacy};
use crate::budget::Budget;
use crate::error::{Error, Result};

use super::canonical::delta_squared_factorization;
use super::factorization::Factorization;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultisetMatch {
    /// `pairing[i]` is the factor of the second factorization matched with factor `i` of the first.
    Yes(Vec<usize>),
    No,
    Unknown,
}

/// Pairs the factors of `f1` with conjugate factors of `f2`.
pub fn conjugacy_multiset_match(
    f1: &Factorization,
    f2: &Factorization,
    budget: &Budget,
) -> Result<MultisetMatch> {
    if f1.strands() != f2.strands() {
        return Err(Error::StrandMismatch(f1.strands(), f2.strands()));
    }
    if f1.len() != f2.len() {
        return Ok(MultisetMatch::No);
    }
    let a1: Vec<BraidWord> = f1.factors().iter().map(|f| f.alpha()).collect();
    let a2: Vec<BraidWord> = f2.factors().iter().map(|f| f.alpha()).collect();
    let mut used = vec![false; a2.len()];
    let mut pairing = Vec::with_capacity(a1.len());
    let mut inconclusive = false;
    // conjugacy is an equivalence relation, so greedy matching is complete
    for x in &a1 {
        let mut hit = None;
        for (j, y) in a2.iter().enumerate() {
            if used[j] {
                continue;
            }
            match are_conjugate(x, y, budget)? {
                Conjugacy::Yes(_) => {
                    hit = Some(j);
                    break;
                }
                Conjugacy::No => {}
                Conjugacy::Unknown => inconclusive = true,
            }
        }
        match hit {
            Some(j) => {
                used[j] = true;
                pairing.push(j);
            }
            None if inconclusive => return Ok(MultisetMatch::Unknown),
            None => return Ok(MultisetMatch::No),
        }
    }
    Ok(MultisetMatch::Yes(pairing))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StableEquality {
    Yes,
    No,
    Unknown,
}

/// Stable equality: equal after appending a common power of `δ²`.
///
/// For unmarked factorizations this holds exactly when the factors match up
/// to conjugacy and the products agree. Marked inputs are only certified
/// unequal by a product mismatch.
pub fn stably_equal(f1: &Factorization, f2: &Factorization, budget: &Budget) -> Result<StableEquality> {
    if f1.strands() != f2.strands() {
        return Err(Error::StrandMismatch(f1.strands(), f2.strands()));
    }
    if !f1.alpha_product().equals(&f2.alpha_product())? {
        return Ok(StableEquality::No);
    }
    if f1.is_marked() || f2.is_marked() {
        return Ok(if f1.same_elements(f2) {
            StableEquality::Yes
        } else {
            StableEquality::Unknown
        });
    }
    Ok(match conjugacy_multiset_match(f1, f2, budget)? {
        MultisetMatch::Yes(_) => StableEquality::Yes,
        MultisetMatch::No => StableEquality::No,
        MultisetMatch::Unknown => StableEquality::Unknown,
    })
}

/// `f·(δ²)^n`.
pub fn stabilize(f: &Factorization, n: usize) -> Result<Factorization> {
    let d2 = delta_squared_factorization(f.strands())?;
    let mut out = f.clone();
    for _ in 0..n {
        out = out.concat(&d2)?;
    }
    Ok(out)
}
