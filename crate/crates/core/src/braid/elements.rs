use super::garside::{delta_letters, NormalForm};
use super::word::BraidWord;
use crate::error::{Error, Result};

fn require_strands(m: usize) -> Result<()> {
    if !(2..=u8::MAX as usize).contains(&m) {
        Err(Error::InvalidStrands(m))
    } else {
        Ok(())
    }
}

/// The half twist `Δ = (a_1⋯a_{m-1})⋯(a_1a_2)a_1`.
pub fn delta(m: usize) -> Result<BraidWord> {
    require_strands(m)?;
    BraidWord::new(m, delta_letters(m))
}

/// The full twist `Δ² = (a_1⋯a_{m-1})^m`, generator of the center.
pub fn delta_squared(m: usize) -> Result<BraidWord> {
    require_strands(m)?;
    let row: Vec<i32> = (1..m as i32).collect();
    BraidWord::new(m, row.repeat(m))
}

/// Half twist on the strands `offset+1 ..= offset+k` of `B_m`.
pub fn block_delta(k: usize, offset: usize, m: usize) -> Result<BraidWord> {
    if k + offset > m {
        return Err(Error::InvalidArgument(format!(
            "block of {k} strands at offset {offset} does not fit in {m} strands"
        )));
    }
    BraidWord::new(k.max(1), delta_letters(k))?.shifted(offset, m)
}

/// `z_{k,l} = (a_{l-1}⋯a_{k+1}) a_k (a_{l-1}⋯a_{k+1})⁻¹` for `1 ≤ k < l ≤ m`.
pub fn z_generator(k: usize, l: usize, m: usize) -> Result<BraidWord> {
    let (conj, core) = z_parts(k, l, m)?;
    conj.multiply(&core)?.multiply(&conj.inverse())
}

/// Conjugator `a_{l-1}⋯a_{k+1}` and core `a_k` of `z_{k,l}`.
pub fn z_parts(k: usize, l: usize, m: usize) -> Result<(BraidWord, BraidWord)> {
    if k == 0 || k >= l || l > m {
        return Err(Error::InvalidArgument(format!(
            "z generator needs 1 <= k < l <= m, got k={k}, l={l}, m={m}"
        )));
    }
    let conj = BraidWord::new(m, ((k + 1) as i32..l as i32).rev().collect())?;
    let core = BraidWord::generator(m, k as i32)?;
    Ok((conj, core))
}

/// Writes `g = Δ^{2k}·r1` with `r1` positive and `k` as large as possible.
pub fn decompose_positive(g: &BraidWord) -> (i64, BraidWord) {
    let nf = g.normal_form();
    let k = nf.inf().div_euclid(2);
    let rest = NormalForm::from_simples(
        g.strands(),
        nf.inf() - 2 * k,
        nf.factors().iter().cloned(),
    );
    (k, rest.to_word())
}

/// Finds the least `p ≥ 1` with `g·r2 = Δ^{2p}` for a positive (possibly empty) `r2`.
pub fn complement_to_delta_power(g: &BraidWord) -> (u64, BraidWord) {
    let nf = g.normal_form();
    // g⁻¹Δ^{2p} is positive iff 2p ≥ sup(g).
    let p = ((nf.sup() + 1).div_euclid(2)).max(1);
    let r2 = nf
        .inverse()
        .mul(&NormalForm::delta_power_of(g.strands(), 2 * p));
    debug_assert!(r2.is_positive());
    (p as u64, r2.to_word())
}
