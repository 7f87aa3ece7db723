//! Conjugacy in `B_m` through super summit sets.
//!
//! Conjugators are tracked on the right: a pair `(y, c)` always satisfies
//! `y = c⁻¹·x·c` for the element `x` the computation started from.

use std::collections::{HashMap, VecDeque};

use super::garside::NormalForm;
use super::perm::Permutation;
use super::word::BraidWord;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Above this many simple elements the summit-set closure is not attempted.
const MAX_SIMPLE_CANDIDATES: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conjugacy {
    /// `w` with `w·u·w⁻¹ = v`.
    Yes(BraidWord),
    No,
    Unknown,
}

impl Conjugacy {
    pub fn is_yes(&self) -> bool {
        matches!(self, Conjugacy::Yes(_))
    }
}

fn flip_if(p: Permutation, odd: bool) -> Permutation {
    if odd {
        p.flip()
    } else {
        p
    }
}

/// Cycling `Δ^p A_1⋯A_r -> Δ^p A_2⋯A_r τ^p(A_1)`, with its conjugator `τ^p(A_1)`.
pub fn cycling(x: &NormalForm) -> (NormalForm, NormalForm) {
    let m = x.strands();
    let Some(first) = x.factors().first() else {
        return (x.clone(), NormalForm::identity(m));
    };
    let odd = x.inf().rem_euclid(2) == 1;
    let moved = flip_if(first.clone(), odd);
    let cycled = NormalForm::from_simples(
        m,
        x.inf(),
        x.factors()[1..].iter().cloned().chain(std::iter::once(moved.clone())),
    );
    (cycled, NormalForm::from_simples(m, 0, [moved]))
}

/// Decycling `Δ^p A_1⋯A_r -> A_r Δ^p A_1⋯A_{r-1}`, with its conjugator `A_r⁻¹`.
pub fn decycling(x: &NormalForm) -> (NormalForm, NormalForm) {
    let m = x.strands();
    let Some(last) = x.factors().last() else {
        return (x.clone(), NormalForm::identity(m));
    };
    let odd = x.inf().rem_euclid(2) == 1;
    let r = x.factors().len();
    let decycled = NormalForm::from_simples(
        m,
        x.inf(),
        std::iter::once(flip_if(last.clone(), odd)).chain(x.factors()[..r - 1].iter().cloned()),
    );
    let conj = NormalForm::from_simples(m, 0, [last.clone()]).inverse();
    (decycled, conj)
}

/// `s⁻¹·x·s` for a simple element `s`.
fn conjugate_by_simple(x: &NormalForm, s: &Permutation) -> NormalForm {
    let m = x.strands();
    // s⁻¹ = Δ⁻¹·B with B = Δs⁻¹.
    let b = Permutation::longest(m).compose(&s.inverse());
    let odd = x.inf().rem_euclid(2) == 1;
    NormalForm::from_simples(
        m,
        x.inf() - 1,
        std::iter::once(flip_if(b, odd))
            .chain(x.factors().iter().cloned())
            .chain(std::iter::once(s.clone())),
    )
}

/// Moves `x` into its super summit set by iterated cycling and decycling.
///
/// Returns `(y, c)` with `y = c⁻¹·x·c`.
pub fn to_super_summit(x: &NormalForm) -> (NormalForm, NormalForm) {
    let m = x.strands();
    let limit = m * m.saturating_sub(1) / 2;
    let mut cur = x.clone();
    let mut conj = NormalForm::identity(m);
    let mut stale = 0;
    while stale < limit && cur.canonical_length() > 0 {
        let (next, w) = cycling(&cur);
        stale = if next.inf() > cur.inf() { 0 } else { stale + 1 };
        conj = conj.mul(&w);
        cur = next;
    }
    stale = 0;
    while stale < limit && cur.canonical_length() > 0 {
        let (next, w) = decycling(&cur);
        stale = if next.sup() < cur.sup() { 0 } else { stale + 1 };
        conj = conj.mul(&w);
        cur = next;
    }
    (cur, conj)
}

fn all_simples(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (1..=m).collect();
    // Heap's algorithm
    let mut c = vec![0usize; m];
    out.push(Permutation::from_images(&images).unwrap());
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                images.swap(0, i);
            } else {
                images.swap(c[i], i);
            }
            out.push(Permutation::from_images(&images).unwrap());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out.retain(|p| !p.is_identity());
    out.sort();
    out
}

fn factorial_exceeds(m: usize, bound: usize) -> bool {
    let mut f: usize = 1;
    for k in 2..=m {
        f = f.saturating_mul(k);
        if f > bound {
            return true;
        }
    }
    false
}

/// A (possibly truncated) super summit set with conjugators from its seed.
#[derive(Debug, Clone)]
pub struct SummitSet {
    /// Pairs `(y, c)` with `y = c⁻¹·seed·c`, in discovery order.
    pub elements: Vec<(NormalForm, NormalForm)>,
    pub complete: bool,
}

/// Closure of `seed` (already in its super summit set) under simple conjugations.
///
/// Stops early once `target` is found or `limit` elements have been collected.
pub fn super_summit_set(
    seed: &NormalForm,
    limit: usize,
    target: Option<&NormalForm>,
) -> SummitSet {
    let m = seed.strands();
    if limit == 0 || m < 2 || factorial_exceeds(m, MAX_SIMPLE_CANDIDATES) {
        return SummitSet {
            elements: vec![(seed.clone(), NormalForm::identity(m))],
            complete: m < 2,
        };
    }
    let simples = all_simples(m);
    let (inf, sup) = (seed.inf(), seed.sup());
    let mut index: HashMap<NormalForm, usize> = HashMap::new();
    let mut elements = vec![(seed.clone(), NormalForm::identity(m))];
    index.insert(seed.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    if target == Some(seed) {
        return SummitSet {
            elements,
            complete: false,
        };
    }
    while let Some(at) = queue.pop_front() {
        let (y, c) = elements[at].clone();
        for s in &simples {
            let z = conjugate_by_simple(&y, s);
            if z.inf() != inf || z.sup() != sup || index.contains_key(&z) {
                continue;
            }
            if elements.len() >= limit {
                return SummitSet {
                    elements,
                    complete: false,
                };
            }
            let cz = c.mul(&NormalForm::from_simples(m, 0, [s.clone()]));
            index.insert(z.clone(), elements.len());
            let found = target == Some(&z);
            elements.push((z, cz));
            if found {
                return SummitSet {
                    elements,
                    complete: false,
                };
            }
            queue.push_back(elements.len() - 1);
        }
    }
    SummitSet {
        elements,
        complete: true,
    }
}

/// Decides conjugacy of `u` and `v` within the summit-set budget.
pub fn are_conjugate(u: &BraidWord, v: &BraidWord, budget: &Budget) -> Result<Conjugacy> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    if u.exponent_sum() != v.exponent_sum()
        || u.permutation().cycle_type() != v.permutation().cycle_type()
    {
        return Ok(Conjugacy::No);
    }
    Ok(conjugate_normal_forms(&u.normal_form(), &v.normal_form(), budget))
}

/// As [`are_conjugate`], on normal forms.
pub fn conjugate_normal_forms(u: &NormalForm, v: &NormalForm, budget: &Budget) -> Conjugacy {
    let (xu, cu) = to_super_summit(u);
    let (xv, cv) = to_super_summit(v);
    if xu.inf() != xv.inf() || xu.sup() != xv.sup() {
        return Conjugacy::No;
    }
    let witness = |t: &NormalForm| {
        // t⁻¹·xu·t = xv, xu = cu⁻¹·u·cu, xv = cv⁻¹·v·cv
        let w = cv.mul(&t.inverse()).mul(&cu.inverse());
        debug_assert!(w.mul(u).mul(&w.inverse()) == *v);
        Conjugacy::Yes(w.to_word().freely_reduced())
    };
    if xu == xv {
        return witness(&NormalForm::identity(u.strands()));
    }
    let sss = super_summit_set(&xu, budget.max_summit, Some(&xv));
    if let Some((_, t)) = sss.elements.iter().find(|(y, _)| *y == xv) {
        return witness(t);
    }
    if sss.complete {
        Conjugacy::No
    } else {
        Conjugacy::Unknown
    }
}
