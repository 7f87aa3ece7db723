use serde::Serialize;

use crate::braid::{delta_squared, BraidWord};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::free::{fixed_words_up_to, subgroup_membership_bounded, FreeWord, Membership};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Inseparability {
    /// `b^power = Δ_k^{2·twists}`, so only powers of `x_1⋯x_k` are fixed.
    InseparableCertified { power: usize, twists: i64 },
    /// No separating fixed word of length at most `bound` exists.
    InseparableUpTo { bound: usize },
    /// `witness` is fixed by `b` and is not a power of `x_1⋯x_k`.
    Separable { witness: FreeWord },
}

/// Decides whether `b ∈ B_{k,0}` fixes only powers of the boundary word, as far as
/// the power criterion and enumeration up to length `bound` can tell.
pub fn inseparability_certificate(b: &BraidWord, k: usize, bound: usize) -> Result<Inseparability> {
    let m = b.strands();
    if k == 0 || k > m {
        return Err(Error::InvalidArgument(format!("k={k} out of range for {m} strands")));
    }
    let nf = b.normal_form();
    if let Some(g) = nf.support().into_iter().find(|&g| g >= k) {
        return Err(Error::Precondition(format!("generator a{g} lies outside the first {k} strands")));
    }
    if k == 1 {
        // F_1 = ⟨x_1⟩ is generated by the boundary word
        return Ok(Inseparability::InseparableCertified { power: 1, twists: 0 });
    }
    let local = BraidWord::new(k, nf.to_fraction_word().letters().to_vec())?;
    let e = local.exponent_sum();
    let twist_len = (k * (k - 1)) as i64;
    let full = delta_squared(k)?;
    for j in 1..=k {
        let total = j as i64 * e;
        if total <= 0 || total % twist_len != 0 {
            continue;
        }
        let n = total / twist_len;
        if local.pow(j as i64).equals(&full.pow(n))? {
            return Ok(Inseparability::InseparableCertified { power: j, twists: n });
        }
    }
    let boundary = [FreeWord::boundary(k, k)];
    let mut fixed: Vec<FreeWord> = fixed_words_up_to(&local, bound).into_iter().collect();
    fixed.sort_by_key(|w| {
        let key: Vec<(u32, bool)> = w.letters().iter().map(|&l| (l.unsigned_abs(), l < 0)).collect();
        (w.len(), key)
    });
    for w in fixed {
        if subgroup_membership_bounded(&w, &boundary, &Budget::default()) == Membership::No {
            let witness = FreeWord::new(m, w.letters().iter().copied())?;
            return Ok(Inseparability::Separable { witness });
        }
    }
    Ok(Inseparability::InseparableUpTo { bound })
}
