use serde::Serialize;

use super::interlacing::{interlacing_number, Interlacing};
use crate::braid::BraidWord;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::factor::{Direction, Factor, Factorization, Mark};

/// Applies an elementary Hurwitz move to a marked factorization; marks are
/// carried by `σ` of the conjugating element.
pub fn marked_hurwitz_move(f: &Factorization, index: usize, direction: Direction) -> Result<Factorization> {
    f.hurwitz_move(index, direction)
}

/// A core on strands `offset+1..offset+k` with mark `{offset+k+1, …, offset+n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TbmfForm {
    pub block_size: usize,
    pub offset: usize,
    pub k: usize,
    pub core: BraidWord,
    pub mark: Mark,
    /// `conjugator·b·conjugator⁻¹ = core`.
    pub conjugator: BraidWord,
    /// `k` is the interlacing number rather than an upper bound for it.
    pub exact: bool,
}

impl TbmfForm {
    /// The marked factor `(core, 𝟏_mark)`.
    pub fn to_factor(&self) -> Result<Factor> {
        Factor::marked(
            BraidWord::identity(self.core.strands()),
            self.core.clone(),
            self.mark.clone(),
        )
    }

    fn strand_range(&self) -> std::ops::RangeInclusive<usize> {
        self.offset + 1..=self.offset + self.block_size
    }
}

/// Brings `b ∈ B_{n,i}` to the standard form `(b̄, 𝟏_{i+k+1..i+n})`.
pub fn standard_tbmf_form(b: &BraidWord, block_size: usize, offset: usize, budget: &Budget) -> Result<TbmfForm> {
    let m = b.strands();
    if block_size == 0 || offset + block_size > m {
        return Err(Error::InvalidArgument(format!(
            "block ({block_size},{offset}) does not fit in {m} strands"
        )));
    }
    let nf = b.normal_form();
    if let Some(g) = nf.support().into_iter().find(|&g| g <= offset || g >= offset + block_size) {
        return Err(Error::Precondition(format!(
            "generator a{g} lies outside the block ({block_size},{offset})"
        )));
    }
    let local: Vec<i32> = nf
        .to_fraction_word()
        .letters()
        .iter()
        .map(|&l| l.signum() * (l.abs() - offset as i32))
        .collect();
    let local = BraidWord::new(block_size, local)?;
    let r = interlacing_number(&local, budget);
    let exact = matches!(r, Interlacing::Exact { .. });
    let k = r.upper();
    let lift = |w: &BraidWord| w.shifted(offset, m);
    Ok(TbmfForm {
        block_size,
        offset,
        k,
        core: lift(r.conjugate())?,
        mark: (offset + k + 1..=offset + block_size).collect(),
        conjugator: lift(r.witness())?,
        exact,
    })
}

/// Checks that adjacent forms over disjoint blocks commute by marked Hurwitz moves.
pub fn tbmf_block_commutation_check(forms: &[TbmfForm]) -> Result<bool> {
    let Some(first) = forms.first() else {
        return Ok(true);
    };
    let m = first.core.strands();
    for (a, x) in forms.iter().enumerate() {
        for y in &forms[a + 1..] {
            let (rx, ry) = (x.strand_range(), y.strand_range());
            if rx.start() <= ry.end() && ry.start() <= rx.end() {
                return Err(Error::Precondition(format!(
                    "blocks ({},{}) and ({},{}) overlap",
                    x.block_size, x.offset, y.block_size, y.offset
                )));
            }
        }
    }
    let factors = forms.iter().map(TbmfForm::to_factor).collect::<Result<Vec<_>>>()?;
    let f = Factorization::new(m, factors.clone())?;
    for t in 0..forms.len().saturating_sub(1) {
        let mut swapped = factors.clone();
        swapped.swap(t, t + 1);
        let target = Factorization::new(m, swapped)?;
        for dir in [Direction::R, Direction::L] {
            if !marked_hurwitz_move(&f, t, dir)?.same_elements(&target) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
