use std::collections::BTreeSet;

use crate::braid::{are_conjugate, z_parts, BraidWord, Conjugacy, NormalForm};
use crate::budget::Budget;
use crate::error::{Error, Result};

use super::factorization::{Factor, Factorization, HurwitzMove};
use super::search::{search_orbit, SearchStats, State};

fn require_strands(m: usize) -> Result<()> {
    if !(2..=u8::MAX as usize).contains(&m) {
        Err(Error::InvalidStrands(m))
    } else {
        Ok(())
    }
}

/// `δ² = (a_1·…·a_{m-1})^m` as `m(m-1)` generator factors.
pub fn delta_squared_factorization(m: usize) -> Result<Factorization> {
    require_strands(m)?;
    let cores = (0..m)
        .flat_map(|_| 1..m as i32)
        .map(|i| BraidWord::generator(m, i))
        .collect::<Result<Vec<_>>>()?;
    Factorization::from_cores(m, cores)
}

/// `δ̃² = ∏_{l=m}^{2} ∏_{k=1}^{l-1} z_{k,l}²`, each factor stored as `(a_{l-1}⋯a_{k+1}, a_k²)`.
pub fn tilde_delta_squared(m: usize) -> Result<Factorization> {
    require_strands(m)?;
    let mut factors = Vec::new();
    for l in (2..=m).rev() {
        for k in 1..l {
            let (conj, core) = z_parts(k, l, m)?;
            factors.push(Factor::new(conj, core.pow(2))?);
        }
    }
    Factorization::new(m, factors)
}

/// Replaces each selected factor `(u, d·d)` by `(u, d)·(u, d)`.
pub fn re_degenerate(f: &Factorization, slots: &[usize]) -> Result<Factorization> {
    let slots: BTreeSet<usize> = slots.iter().copied().collect();
    if let Some(&bad) = slots.iter().find(|&&s| s >= f.len()) {
        return Err(Error::IndexOutOfRange {
            index: bad as i64,
            strands: f.len(),
        });
    }
    let mut out = Vec::with_capacity(f.len() + slots.len());
    for (k, factor) in f.factors().iter().enumerate() {
        if !slots.contains(&k) {
            out.push(factor.clone());
            continue;
        }
        let letters = factor.core().letters();
        let half = letters.len() / 2;
        if letters.is_empty() || letters.len() % 2 == 1 || letters[..half] != letters[half..] {
            return Err(Error::Precondition(format!(
                "factor {k} has core {} which is not spelled as a square d·d",
                factor.core()
            )));
        }
        if !factor.mark().is_empty() {
            return Err(Error::Precondition(format!("factor {k} carries a mark")));
        }
        let d = BraidWord::new(f.strands(), letters[..half].to_vec())?;
        let single = Factor::new(factor.conjugator().clone(), d)?;
        out.push(single.clone());
        out.push(single);
    }
    Factorization::new(f.strands(), out)
}

/// How much of the factorization must come from re-degenerated nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReDegenerationTarget {
    /// Every tangency-type factor is paired; the residual has none.
    Full,
    /// At least this many pairs.
    AtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReDegeneration {
    /// `f` is Hurwitz equivalent (by `path`) to `r(z1)·z2`.
    Yes {
        z1: Factorization,
        z2: Factorization,
        path: Vec<HurwitzMove>,
        stats: SearchStats,
    },
    NoCertified(String),
    Unknown(SearchStats),
}

impl ReDegeneration {
    pub fn is_yes(&self) -> bool {
        matches!(self, ReDegeneration::Yes { .. })
    }
}

fn exponent_sum_nf(x: &NormalForm) -> i64 {
    let m = x.strands() as i64;
    x.delta_power() * m * (m - 1) / 2 + x.factors().iter().map(|p| p.length() as i64).sum::<i64>()
}

/// Number of leading equal adjacent tangency-type pairs, and the tangency factors left after them.
fn paired_prefix(state: &State) -> (usize, usize) {
    let is_a0 = |k: usize| exponent_sum_nf(&state[k].alpha) == 1;
    let mut k = 0;
    while k + 1 < state.len() && is_a0(k) && state[k] == state[k + 1] {
        k += 2;
    }
    let rest = (k..state.len()).filter(|&j| is_a0(j)).count();
    (k / 2, rest)
}

/// Whether `f` (all factors conjugate to `a_1` or `a_1²`) is Hurwitz equivalent
/// to a partial re-degeneration `r(z1)·z2` meeting `target`.
pub fn is_partial_re_degeneration(
    f: &Factorization,
    target: ReDegenerationTarget,
    budget: &Budget,
) -> Result<ReDegeneration> {
    let m = f.strands();
    if m < 2 {
        return Err(Error::InvalidStrands(m));
    }
    let a1 = BraidWord::generator(m, 1)?;
    let a1_sq = a1.pow(2);
    let mut tangencies = 0;
    for (k, factor) in f.factors().iter().enumerate() {
        let core = factor.core().letters();
        let class = match core {
            [x] if *x > 0 => 1,
            [x, y] if x == y && *x > 0 => 2,
            _ => {
                let alpha = factor.alpha();
                let probe = match alpha.exponent_sum() {
                    1 => Some((1, &a1)),
                    2 => Some((2, &a1_sq)),
                    _ => None,
                };
                match probe.map(|(c, g)| (c, are_conjugate(&alpha, g, budget))) {
                    Some((c, Ok(Conjugacy::Yes(_)))) => c,
                    Some((_, Ok(Conjugacy::Unknown))) => {
                        return Ok(ReDegeneration::Unknown(SearchStats::default()))
                    }
                    _ => {
                        return Err(Error::Precondition(format!(
                            "factor {k} is not conjugate to a1 or a1^2"
                        )))
                    }
                }
            }
        };
        if class == 1 {
            tangencies += 1;
        }
    }
    let needed = match target {
        ReDegenerationTarget::Full => {
            if tangencies % 2 == 1 {
                return Ok(ReDegeneration::NoCertified(format!(
                    "{tangencies} tangency-type factors cannot all be paired"
                )));
            }
            tangencies / 2
        }
        ReDegenerationTarget::AtLeast(p) => {
            if tangencies < 2 * p {
                return Ok(ReDegeneration::NoCertified(format!(
                    "{tangencies} tangency-type factors cannot form {p} pairs"
                )));
            }
            p
        }
    };
    let full = target == ReDegenerationTarget::Full;
    let hit = search_orbit(f, budget, |s| {
        let (pairs, rest) = paired_prefix(s);
        pairs >= needed && (!full || rest == 0)
    });
    let Some(path) = hit.path else {
        return Ok(if hit.exhausted {
            ReDegeneration::NoCertified("no factorization in the orbit has the required pairs".into())
        } else {
            ReDegeneration::Unknown(hit.stats)
        });
    };
    let g = f.apply_moves(&path)?;
    let (pairs, _) = paired_prefix(&super::search::state_of(&g));
    let mut z1 = Vec::with_capacity(pairs);
    for t in 0..pairs {
        let x = &g.factors()[2 * t];
        z1.push(Factor::new(x.conjugator().clone(), x.core().pow(2))?);
    }
    let z2 = g.factors()[2 * pairs..].to_vec();
    Ok(ReDegeneration::Yes {
        z1: Factorization::new(m, z1)?,
        z2: Factorization::new(m, z2)?,
        path,
        stats: hit.stats,
    })
}
