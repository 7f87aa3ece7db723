use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::{Factor, Factorization};
use crate::free::{ArtinAutomorphism, FreeWord};

/// `⟨x_1, …, x_m : relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    /// Text export: a `gens: m` line followed by one `rel: <word>` line per relator.
    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.generators);
        for r in &self.relators {
            out.push_str(&format!("rel: {r}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generators": self.generators,
            "relators": self.relators.iter().map(|r| r.letters().to_vec()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<GroupPresentation> {
        #[derive(Deserialize)]
        struct Raw {
            generators: usize,
            relators: Vec<Vec<i32>>,
        }
        let raw: Raw = serde_json::from_value(value.clone()).map_err(|e| Error::Parse {
            line: e.line(),
            token: String::new(),
            reason: e.to_string(),
        })?;
        let relators = raw
            .relators
            .into_iter()
            .map(|r| FreeWord::new(raw.generators, r))
            .collect::<Result<_>>()?;
        Ok(GroupPresentation {
            generators: raw.generators,
            relators,
        })
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Strand intervals `(first, last)` of the blocks of a factor; `[m]` when none are recorded.
fn block_ranges(factor: &Factor) -> Vec<(usize, usize)> {
    let m = factor.strands();
    let sizes = factor.blocks().map(<[usize]>::to_vec).unwrap_or_else(|| vec![m]);
    let mut start = 1;
    sizes
        .into_iter()
        .map(|k| {
            let r = (start, start + k - 1);
            start += k;
            r
        })
        .collect()
}

/// Relators `q⁻¹(b(x_k))·q⁻¹(x_k)⁻¹` of one factor, for `k` interior to each block.
pub fn factor_relators(factor: &Factor) -> Result<Vec<FreeWord>> {
    let m = factor.strands();
    if !factor.core().is_positive() {
        return Err(Error::Precondition(format!(
            "core {} is not a positive word",
            factor.core()
        )));
    }
    let ranges = block_ranges(factor);
    for &l in factor.core().letters() {
        let l = l as usize;
        if !ranges.iter().any(|&(a, b)| a <= l && l < b) {
            return Err(Error::Precondition(format!(
                "letter a{l} of the core crosses the block split {:?}",
                factor.blocks().unwrap_or(&[m])
            )));
        }
    }
    let core = ArtinAutomorphism::of(factor.core());
    let q_inv = ArtinAutomorphism::of(&factor.conjugator().inverse());
    let mut out = Vec::new();
    for (a, b) in ranges {
        for k in a..b {
            let x = FreeWord::generator(m, k as i32)?;
            let lhs = q_inv.apply(&core.apply(&x));
            let rhs = q_inv.apply(&x);
            let rel = lhs.mul(&rhs.inverse());
            if !rel.is_empty() {
                out.push(rel);
            }
        }
    }
    Ok(out)
}

/// The van Kampen presentation of a braid monodromy factorization.
pub fn van_kampen(f: &Factorization) -> Result<GroupPresentation> {
    let mut relators = Vec::new();
    for factor in f.factors() {
        relators.extend(factor_relators(factor)?);
    }
    Ok(GroupPresentation {
        generators: f.strands(),
        relators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn fz(m: usize, s: &str) -> Factorization {
        Factorization::parse_shorthand(m, s).unwrap()
    }

    #[test]
    fn node_gives_commutator() {
        let p = van_kampen(&fz(2, "1 1")).unwrap();
        assert_eq!(p.relators.len(), 1);
        let comm = FreeWord::new(2, [1, 2, -1, -2]).unwrap();
        assert!(p.relators[0].is_conjugate_to(&comm) || p.relators[0].is_conjugate_to(&comm.inverse()));
    }

    #[test]
    fn tangency_identifies_generators() {
        let p = van_kampen(&fz(2, "1")).unwrap();
        assert_eq!(p.relators, vec![FreeWord::new(2, [1, 2, -1, -1]).unwrap()]);
        assert!(p.relators[0].is_conjugate_to(&FreeWord::new(2, [2, -1]).unwrap()));
    }

    #[test]
    fn empty_and_blocks() {
        let p = van_kampen(&Factorization::empty(3)).unwrap();
        assert!(p.relators.is_empty());
        assert_eq!(p.to_text(), "gens: 3\n");
        let f = Factor::plain(BraidWord::parse(4, "1 3").unwrap()).unwrap().with_blocks(vec![2, 2]).unwrap();
        let rels = factor_relators(&f).unwrap();
        assert_eq!(rels.len(), 2);
        let bad = Factor::plain(BraidWord::parse(4, "2").unwrap()).unwrap().with_blocks(vec![2, 2]).unwrap();
        assert!(factor_relators(&bad).is_err());
        let neg = Factorization::new(2, vec![Factor::plain(BraidWord::parse(2, "-1").unwrap()).unwrap()]).unwrap();
        assert!(van_kampen(&neg).is_err());
    }

    #[test]
    fn relators_are_abelian_trivial() {
        let f = crate::factor::tilde_delta_squared(4).unwrap();
        let p = van_kampen(&f).unwrap();
        assert!(p.relators.iter().all(|r| r.exponent_sum() == 0));
        let back = GroupPresentation::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }
}
