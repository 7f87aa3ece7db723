use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, NormalForm, Permutation};
use crate::error::{Error, Result};

/// A set of marked strands (1-based).
pub type Mark = BTreeSet<usize>;

/// One letter of a factorization: the conjugate `u·c·u⁻¹` of a core `c`,
/// paired with a mark `𝟏_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    conjugator: BraidWord,
    core: BraidWord,
    mark: Mark,
    blocks: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `(y_i, y_{i+1}) -> (y_{i+1}, α(y_{i+1})⁻¹ y_i α(y_{i+1}))`
    #[serde(rename = "r")]
    R,
    /// `(y_i, y_{i+1}) -> (α(y_i) y_{i+1} α(y_i)⁻¹, y_i)`
    #[serde(rename = "l")]
    L,
}

impl Direction {
    pub fn inverse(self) -> Direction {
        match self {
            Direction::R => Direction::L,
            Direction::L => Direction::R,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::R => "r",
            Direction::L => "l",
        })
    }
}

/// An elementary Hurwitz move at the 0-based position `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HurwitzMove {
    pub index: usize,
    pub direction: Direction,
}

impl HurwitzMove {
    pub fn inverse(self) -> HurwitzMove {
        HurwitzMove {
            index: self.index,
            direction: self.direction.inverse(),
        }
    }
}

impl fmt::Display for HurwitzMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.direction, self.index)
    }
}

/// Image of a mark under a permutation.
pub fn transport_mark(mark: &Mark, sigma: &Permutation) -> Mark {
    mark.iter().map(|&x| sigma.apply(x)).collect()
}

/// The shorter of the free reduction and the normal-form spelling.
pub(crate) fn simplify(word: &BraidWord) -> BraidWord {
    let reduced = word.freely_reduced();
    if reduced.len() <= 2 {
        return reduced;
    }
    let canonical = word.normal_form().to_word();
    if canonical.len() < reduced.len() {
        canonical
    } else {
        reduced
    }
}

impl Factor {
    /// A factor `u·c·u⁻¹` with an empty mark; the core must not be trivial.
    pub fn new(conjugator: BraidWord, core: BraidWord) -> Result<Self> {
        Self::marked(conjugator, core, Mark::new())
    }

    /// A core with trivial conjugator.
    pub fn plain(core: BraidWord) -> Result<Self> {
        let m = core.strands();
        Self::new(BraidWord::identity(m), core)
    }

    /// A factor carrying a mark; the core may be trivial only when the mark is not empty.
    pub fn marked(conjugator: BraidWord, core: BraidWord, mark: Mark) -> Result<Self> {
        let m = core.strands();
        if conjugator.strands() != m {
            return Err(Error::StrandMismatch(conjugator.strands(), m));
        }
        if let Some(&bad) = mark.iter().find(|&&x| x == 0 || x > m) {
            return Err(Error::IndexOutOfRange {
                index: bad as i64,
                strands: m,
            });
        }
        if mark.is_empty() && core.is_trivial() {
            return Err(Error::InvalidArgument(
                "factor core is the identity and carries no mark".into(),
            ));
        }
        Ok(Factor {
            conjugator,
            core,
            mark,
            blocks: None,
        })
    }

    /// Attaches block sizes splitting the core, as used by van Kampen presentations.
    pub fn with_blocks(mut self, blocks: Vec<usize>) -> Result<Self> {
        let m = self.strands();
        if blocks.iter().any(|&k| k < 2) || blocks.iter().sum::<usize>() > m {
            return Err(Error::InvalidArgument(format!(
                "block sizes {blocks:?} must be at least 2 and fit in {m} strands"
            )));
        }
        self.blocks = Some(blocks);
        Ok(self)
    }

    pub fn strands(&self) -> usize {
        self.core.strands()
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn core(&self) -> &BraidWord {
        &self.core
    }

    pub fn mark(&self) -> &Mark {
        &self.mark
    }

    pub fn blocks(&self) -> Option<&[usize]> {
        self.blocks.as_deref()
    }

    /// The housed element `u·c·u⁻¹`.
    pub fn alpha(&self) -> BraidWord {
        BraidWord::concat(&[&self.conjugator, &self.core, &self.conjugator.inverse()])
    }

    pub fn alpha_nf(&self) -> NormalForm {
        self.alpha().normal_form()
    }

    /// `g·(u c u⁻¹)·g⁻¹` with mark `σ(g)(I)`.
    pub fn conjugated_by(&self, g: &BraidWord) -> Result<Factor> {
        if g.strands() != self.strands() {
            return Err(Error::StrandMismatch(g.strands(), self.strands()));
        }
        let mark = if self.mark.is_empty() {
            Mark::new()
        } else {
            transport_mark(&self.mark, &g.permutation())
        };
        Ok(Factor {
            conjugator: simplify(&BraidWord::concat(&[g, &self.conjugator])),
            core: self.core.clone(),
            mark,
            blocks: self.blocks.clone(),
        })
    }

    /// Whether the two factors house equal elements with equal marks.
    pub fn same_element(&self, other: &Factor) -> bool {
        self.mark == other.mark && self.alpha_nf() == other.alpha_nf()
    }

    pub(crate) fn encode(&self, out: &mut Vec<u8>) {
        encode_entry(&self.alpha_nf(), &self.mark, out);
    }
}

pub(crate) fn encode_entry(alpha: &NormalForm, mark: &Mark, out: &mut Vec<u8>) {
    alpha.encode(out);
    out.push(mark.len() as u8);
    out.extend(mark.iter().map(|&x| x as u8));
}

/// An ordered product of factors in `B_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    strands: usize,
    factors: Vec<Factor>,
}

impl Factorization {
    pub fn new(strands: usize, factors: Vec<Factor>) -> Result<Self> {
        if strands == 0 || strands > u8::MAX as usize {
            return Err(Error::InvalidStrands(strands));
        }
        if let Some(f) = factors.iter().find(|f| f.strands() != strands) {
            return Err(Error::StrandMismatch(strands, f.strands()));
        }
        Ok(Factorization { strands, factors })
    }

    pub fn empty(strands: usize) -> Self {
        Factorization {
            strands,
            factors: Vec::new(),
        }
    }

    /// Factors with trivial conjugators from their cores.
    pub fn from_cores(strands: usize, cores: Vec<BraidWord>) -> Result<Self> {
        let factors = cores.into_iter().map(Factor::plain).collect::<Result<_>>()?;
        Self::new(strands, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_marked(&self) -> bool {
        self.factors.iter().any(|f| !f.mark.is_empty())
    }

    pub fn into_factors(self) -> Vec<Factor> {
        self.factors
    }

    /// Concatenation of two factorizations over the same strands.
    pub fn concat(&self, other: &Factorization) -> Result<Factorization> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(Factorization {
            strands: self.strands,
            factors,
        })
    }

    /// Left-to-right product of the housed elements.
    pub fn alpha_product(&self) -> BraidWord {
        let parts: Vec<BraidWord> = self.factors.iter().map(Factor::alpha).collect();
        let refs: Vec<&BraidWord> = parts.iter().collect();
        if refs.is_empty() {
            BraidWord::identity(self.strands)
        } else {
            BraidWord::concat(&refs)
        }
    }

    /// Applies an elementary Hurwitz move, transporting marks through `σ`.
    pub fn hurwitz_move(&self, index: usize, direction: Direction) -> Result<Factorization> {
        if index + 1 >= self.factors.len() {
            return Err(Error::IndexOutOfRange {
                index: index as i64,
                strands: self.factors.len(),
            });
        }
        let (a, b) = (&self.factors[index], &self.factors[index + 1]);
        let (first, second) = match direction {
            Direction::R => (b.clone(), a.conjugated_by(&b.alpha().inverse())?),
            Direction::L => (b.conjugated_by(&a.alpha())?, a.clone()),
        };
        let mut factors = self.factors.clone();
        factors[index] = first;
        factors[index + 1] = second;
        Ok(Factorization {
            strands: self.strands,
            factors,
        })
    }

    pub fn apply_moves(&self, moves: &[HurwitzMove]) -> Result<Factorization> {
        let mut cur = self.clone();
        for mv in moves {
            cur = cur.hurwitz_move(mv.index, mv.direction)?;
        }
        Ok(cur)
    }

    /// Simultaneous conjugation `λ(g)`: every factor conjugated by `g`.
    pub fn simultaneous_conjugate(&self, g: &BraidWord) -> Result<Factorization> {
        if g.strands() != self.strands {
            return Err(Error::StrandMismatch(g.strands(), self.strands));
        }
        let factors = self
            .factors
            .iter()
            .map(|f| f.conjugated_by(g))
            .collect::<Result<_>>()?;
        Ok(Factorization {
            strands: self.strands,
            factors,
        })
    }

    /// Normal-form encodings of the housed elements and marks.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut out = vec![self.strands as u8];
        for f in &self.factors {
            f.encode(&mut out);
        }
        out
    }

    pub fn canonical_key_hex(&self) -> String {
        self.canonical_key().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Factor-wise equality of housed elements and marks.
    pub fn same_elements(&self, other: &Factorization) -> bool {
        self.canonical_key() == other.canonical_key()
    }

    /// Parses the shorthand `"w1|w2|…"` of factors with trivial conjugators.
    pub fn parse_shorthand(strands: usize, text: &str) -> Result<Factorization> {
        if text.trim().is_empty() {
            return Ok(Factorization::empty(strands));
        }
        let cores = text
            .split('|')
            .map(|part| BraidWord::parse(strands, part))
            .collect::<Result<Vec<_>>>()?;
        Self::from_cores(strands, cores)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FactorizationJson::from(self)).expect("factorization serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Factorization> {
        let raw: FactorizationJson = serde_json::from_value(value.clone()).map_err(|e| {
            Error::Parse {
                line: e.line(),
                token: String::new(),
                reason: e.to_string(),
            }
        })?;
        raw.try_into()
    }

    /// Parses either JSON (`{"m":…,"factors":[…]}`) or the `|` shorthand.
    pub fn parse(strands: Option<usize>, text: &str) -> Result<Factorization> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let value: serde_json::Value =
                serde_json::from_str(text).map_err(|e| Error::Parse {
                    line: e.line(),
                    token: String::new(),
                    reason: e.to_string(),
                })?;
            let f = Self::from_json(&value)?;
            if let Some(m) = strands {
                if m != f.strands {
                    return Err(Error::StrandMismatch(m, f.strands));
                }
            }
            return Ok(f);
        }
        let m = strands.ok_or_else(|| {
            Error::InvalidArgument("strand count is required for the shorthand format".into())
        })?;
        Self::parse_shorthand(m, text)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " · ")?;
            }
            if factor.conjugator.is_empty() {
                write!(f, "({})", factor.core)?;
            } else {
                write!(f, "[{}]({})", factor.conjugator, factor.core)?;
            }
            if !factor.mark.is_empty() {
                write!(f, "{:?}", factor.mark)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct FactorJson {
    #[serde(default)]
    u: Vec<i32>,
    c: Vec<i32>,
    #[serde(rename = "I", default)]
    mark: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FactorizationJson {
    m: usize,
    factors: Vec<FactorJson>,
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        FactorizationJson {
            m: f.strands,
            factors: f
                .factors
                .iter()
                .map(|x| FactorJson {
                    u: x.conjugator.letters().to_vec(),
                    c: x.core.letters().to_vec(),
                    mark: x.mark.iter().copied().collect(),
                    blocks: x.blocks.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<FactorizationJson> for Factorization {
    type Error = Error;

    fn try_from(raw: FactorizationJson) -> Result<Factorization> {
        let m = raw.m;
        let factors = raw
            .factors
            .into_iter()
            .map(|x| {
                let f = Factor::marked(
                    BraidWord::new(m, x.u)?,
                    BraidWord::new(m, x.c)?,
                    x.mark.into_iter().collect(),
                )?;
                match x.blocks {
                    Some(b) => f.with_blocks(b),
                    None => Ok(f),
                }
            })
            .collect::<Result<_>>()?;
        Factorization::new(m, factors)
    }
}
