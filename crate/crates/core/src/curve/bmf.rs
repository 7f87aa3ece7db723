use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::braid::{are_conjugate, delta_squared, BraidWord, Conjugacy, NormalForm};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::factor::{Factor, Factorization};

/// Whether the product of `f` is `Δ^{2N}`.
pub fn validate_bmf(f: &Factorization, n: u64) -> Result<bool> {
    let m = f.strands();
    if m < 2 {
        return Err(Error::InvalidStrands(m));
    }
    let target = NormalForm::delta_power_of(m, 2 * n as i64);
    Ok(f.alpha_product().normal_form() == target)
}

/// The local braid `α(germ)·Δ²` of the singularity associated with a germ.
pub fn associated_singularity_braid(germ: &Factorization) -> Result<BraidWord> {
    germ.alpha_product().multiply(&delta_squared(germ.strands())?)
}

/// A factor `q·a_1^r·q⁻¹`: a tangency (`r = 1`), node (`r = 2`) or cusp (`r = 3`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalFactor {
    pub conjugator: BraidWord,
    pub exponent: u8,
}

impl CuspidalFactor {
    pub fn new(conjugator: BraidWord, exponent: u8) -> Result<Self> {
        if !(1..=3).contains(&exponent) {
            return Err(Error::InvalidArgument(format!(
                "cuspidal exponent must be 1, 2 or 3, got {exponent}"
            )));
        }
        Ok(CuspidalFactor {
            conjugator,
            exponent,
        })
    }

    fn to_factor(&self, m: usize) -> Result<Factor> {
        if self.conjugator.strands() != m {
            return Err(Error::StrandMismatch(self.conjugator.strands(), m));
        }
        Factor::new(
            self.conjugator.clone(),
            BraidWord::generator(m, 1)?.pow(self.exponent as i64),
        )
    }
}

/// `∏ q_i a_1^{r_i} q_i⁻¹` with the `(q_i, a_1^{r_i})` structure recorded.
pub fn cuspidal_bmf(factors: &[CuspidalFactor], m: usize) -> Result<Factorization> {
    if m < 2 {
        return Err(Error::InvalidStrands(m));
    }
    let fs = factors
        .iter()
        .map(|c| {
            CuspidalFactor::new(c.conjugator.clone(), c.exponent)?;
            c.to_factor(m)
        })
        .collect::<Result<Vec<_>>>()?;
    Factorization::new(m, fs)
}

/// Conjugates `w·a_1^r·w⁻¹` for freely reduced `w` with `|w| ≤ max_len`, one conjugator per element.
fn conjugates_of_power(m: usize, r: u8, max_len: usize) -> Vec<(NormalForm, BraidWord)> {
    let core = BraidWord::generator(m, 1).expect("m ≥ 2").pow(r as i64);
    let mut seen: HashMap<NormalForm, usize> = HashMap::new();
    let mut out = Vec::new();
    let mut layer = vec![Vec::<i32>::new()];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            let word = BraidWord::new(m, w.clone()).expect("valid letters");
            let nf = core.conjugated_by(&word).expect("same strands").normal_form();
            if !seen.contains_key(&nf) {
                seen.insert(nf.clone(), out.len());
                out.push((nf, word));
            }
            if len < max_len {
                for g in 1..m as i32 {
                    for l in [g, -g] {
                        if w.last() != Some(&-l) {
                            let mut v = w.clone();
                            v.push(l);
                            next.push(v);
                        }
                    }
                }
            }
        }
        layer = next;
    }
    out
}

/// Searches for conjugators completing `prefix` by factors `q a_1^{r} q⁻¹`
/// (exponents from `remaining`, in order) to a factorization of `Δ^{2N}`.
///
/// Conjugators range over freely reduced words of length at most `max_len`.
pub fn cuspidal_completion_search(
    m: usize,
    prefix: &[CuspidalFactor],
    remaining: &[u8],
    n: u64,
    max_len: usize,
) -> Result<Option<Factorization>> {
    let base = cuspidal_bmf(prefix, m)?;
    if remaining.is_empty() {
        return Ok(validate_bmf(&base, n)?.then_some(base));
    }
    if let Some(&r) = remaining.iter().find(|&&r| !(1..=3).contains(&r)) {
        return Err(Error::InvalidArgument(format!("bad cuspidal exponent {r}")));
    }
    let target = base
        .alpha_product()
        .normal_form()
        .inverse()
        .mul(&NormalForm::delta_power_of(m, 2 * n as i64));
    let mut pools: HashMap<u8, Vec<(NormalForm, BraidWord)>> = HashMap::new();
    for &r in remaining {
        pools.entry(r).or_insert_with(|| conjugates_of_power(m, r, max_len));
    }
    let last = *remaining.last().expect("nonempty");
    let last_index: HashMap<&NormalForm, &BraidWord> = pools[&last].iter().map(|(nf, w)| (nf, w)).collect();
    let exps = &remaining[..remaining.len() - 1];
    let mut chosen: Vec<BraidWord> = Vec::new();
    let found = dfs(&pools, exps, &target, &last_index, &mut chosen);
    let Some(tail) = found else {
        return Ok(None);
    };
    let mut factors: Vec<CuspidalFactor> = prefix.to_vec();
    for (w, &r) in tail.iter().zip(remaining) {
        factors.push(CuspidalFactor::new(w.clone(), r)?);
    }
    let f = cuspidal_bmf(&factors, m)?;
    debug_assert!(validate_bmf(&f, n).unwrap_or(false));
    Ok(Some(f))
}

fn dfs(
    pools: &HashMap<u8, Vec<(NormalForm, BraidWord)>>,
    exps: &[u8],
    rest: &NormalForm,
    last: &HashMap<&NormalForm, &BraidWord>,
    chosen: &mut Vec<BraidWord>,
) -> Option<Vec<BraidWord>> {
    let Some((&r, more)) = exps.split_first() else {
        return last.get(rest).map(|&w| {
            let mut out = chosen.clone();
            out.push(w.clone());
            out
        });
    };
    for (nf, w) in &pools[&r] {
        let next = nf.inverse().mul(rest);
        chosen.push(w.clone());
        if let Some(found) = dfs(pools, more, &next, last, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Factor counts by singularity type; `unknown` counts inconclusive conjugacy tests.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityCensus {
    pub tangency: usize,
    pub node: usize,
    pub cusp: usize,
    pub other: usize,
    pub unknown: usize,
}

/// Classifies each factor by conjugacy of its housed element to `a_1`, `a_1²` or `a_1³`.
pub fn singularity_census(f: &Factorization, budget: &Budget) -> Result<SingularityCensus> {
    let m = f.strands();
    let mut census = SingularityCensus::default();
    if m < 2 {
        census.other = f.len();
        return Ok(census);
    }
    let a1 = BraidWord::generator(m, 1)?;
    for factor in f.factors() {
        let core = factor.core().letters();
        let direct = match core {
            [x, rest @ ..] if *x > 0 && rest.iter().all(|y| y == x) && core.len() <= 3 => Some(core.len()),
            _ => None,
        };
        let class = match direct {
            Some(r) => Some(r),
            None => {
                let alpha = factor.alpha();
                let r = alpha.exponent_sum();
                if (1..=3).contains(&r) {
                    match are_conjugate(&alpha, &a1.pow(r), budget)? {
                        Conjugacy::Yes(_) => Some(r as usize),
                        Conjugacy::No => None,
                        Conjugacy::Unknown => {
                            census.unknown += 1;
                            continue;
                        }
                    }
                } else {
                    None
                }
            }
        };
        match class {
            Some(1) => census.tangency += 1,
            Some(2) => census.node += 1,
            Some(3) => census.cusp += 1,
            _ => census.other += 1,
        }
    }
    Ok(census)
}
