//! Bounded Hurwitz orbit search.
//!
//! States are sequences of normal forms (with marks). The search expands
//! slide moves: one factor travels to another position through a run of
//! elementary moves of the same direction, either keeping its value and
//! conjugating the factors it passes, or being conjugated by each of them.
//! Every slide expands to elementary moves when a path is reported.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::factorization::{encode_entry, transport_mark, Direction, Factorization, HurwitzMove, Mark};
use super::stable::{conjugacy_multiset_match, MultisetMatch};
use crate::braid::NormalForm;
use crate::budget::Budget;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Entry {
    pub alpha: NormalForm,
    pub mark: Mark,
}

pub(crate) type State = Vec<Entry>;

pub(crate) fn state_of(f: &Factorization) -> State {
    f.factors()
        .iter()
        .map(|x| Entry {
            alpha: x.alpha_nf(),
            mark: x.mark().clone(),
        })
        .collect()
}

fn encode(state: &State) -> Vec<u8> {
    let mut out = Vec::new();
    for e in state {
        encode_entry(&e.alpha, &e.mark, &mut out);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlideKind {
    /// Leftward by r-moves; the passed factors are conjugated.
    LeftKeep,
    /// Leftward by l-moves; the travelling factor is conjugated.
    LeftConj,
    /// Rightward by l-moves.
    RightKeep,
    /// Rightward by r-moves.
    RightConj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slide {
    from: usize,
    to: usize,
    kind: SlideKind,
}

impl Slide {
    fn moves(self) -> Vec<HurwitzMove> {
        let (dir, range): (Direction, Vec<usize>) = match self.kind {
            SlideKind::LeftKeep => (Direction::R, (self.to..self.from).rev().collect()),
            SlideKind::LeftConj => (Direction::L, (self.to..self.from).rev().collect()),
            SlideKind::RightKeep => (Direction::L, (self.from..self.to).collect()),
            SlideKind::RightConj => (Direction::R, (self.from..self.to).collect()),
        };
        range
            .into_iter()
            .map(|index| HurwitzMove {
                index,
                direction: dir,
            })
            .collect()
    }
}

/// `g·e·g⁻¹` with the mark moved by `σ(g)`.
fn conj(e: &Entry, g: &NormalForm, g_inv: &NormalForm) -> Entry {
    Entry {
        alpha: g.mul(&e.alpha).mul(g_inv),
        mark: if e.mark.is_empty() {
            Mark::new()
        } else {
            transport_mark(&e.mark, &g.permutation())
        },
    }
}

fn assemble(parts: &[&[Entry]]) -> State {
    let mut out = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
    for p in parts {
        out.extend_from_slice(p);
    }
    out
}

/// Calls `emit` on every slide neighbour of `s`, in a fixed order, until it returns `true`.
fn for_each_child(s: &State, mut emit: impl FnMut(Slide, State) -> bool) -> bool {
    let n = s.len();
    let alpha: Vec<&NormalForm> = s.iter().map(|e| &e.alpha).collect();
    let inv: Vec<NormalForm> = alpha.iter().map(|a| a.inverse()).collect();
    for j in 0..n {
        // factor j moves left unchanged; passed factors conjugated by α_j⁻¹
        let mut passed: Vec<Entry> = Vec::new();
        for i in (0..j).rev() {
            passed.insert(0, conj(&s[i], &inv[j], alpha[j]));
            let child = assemble(&[&s[..i], std::slice::from_ref(&s[j]), &passed, &s[j + 1..]]);
            let slide = Slide { from: j, to: i, kind: SlideKind::LeftKeep };
            if emit(slide, child) {
                return true;
            }
        }
        // factor j moves left and is conjugated by each passed factor
        let mut y = s[j].clone();
        for i in (0..j).rev() {
            y = conj(&y, alpha[i], &inv[i]);
            let child = assemble(&[&s[..i], std::slice::from_ref(&y), &s[i..j], &s[j + 1..]]);
            let slide = Slide { from: j, to: i, kind: SlideKind::LeftConj };
            if emit(slide, child) {
                return true;
            }
        }
    }
    for i in 0..n {
        // single steps to the right coincide with single steps to the left
        let mut passed: Vec<Entry> = Vec::new();
        for j in i + 1..n {
            passed.push(conj(&s[j], alpha[i], &inv[i]));
            if j == i + 1 {
                continue;
            }
            let child = assemble(&[&s[..i], &passed, std::slice::from_ref(&s[i]), &s[j + 1..]]);
            let slide = Slide { from: i, to: j, kind: SlideKind::RightKeep };
            if emit(slide, child) {
                return true;
            }
        }
        let mut y = s[i].clone();
        for j in i + 1..n {
            y = conj(&y, &inv[j], alpha[j]);
            if j == i + 1 {
                continue;
            }
            let child = assemble(&[&s[..i], &s[i + 1..=j], std::slice::from_ref(&y), &s[j + 1..]]);
            let slide = Slide { from: i, to: j, kind: SlideKind::RightConj };
            if emit(slide, child) {
                return true;
            }
        }
    }
    false
}

/// Counters reported by the orbit searches.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Distinct states stored, both directions combined.
    pub states: usize,
    /// Slide levels expanded from the first factorization.
    pub forward_depth: usize,
    /// Slide levels expanded from the second factorization.
    pub backward_depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoReason {
    LengthMismatch,
    AlphaMismatch,
    ConjugacyMultiset,
    /// One side's orbit was enumerated completely without meeting the other.
    OrbitExhausted,
}

impl fmt::Display for NoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoReason::LengthMismatch => "length mismatch",
            NoReason::AlphaMismatch => "alpha mismatch",
            NoReason::ConjugacyMultiset => "conjugacy class multiset mismatch",
            NoReason::OrbitExhausted => "orbit exhausted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HurwitzEquivalence {
    /// Applying `path` to the first factorization gives the second factor-wise.
    Yes {
        path: Vec<HurwitzMove>,
        stats: SearchStats,
    },
    NoCertified(NoReason),
    Unknown(SearchStats),
}

impl HurwitzEquivalence {
    pub fn is_yes(&self) -> bool {
        matches!(self, HurwitzEquivalence::Yes { .. })
    }
}

struct Node {
    state: State,
    parent: Option<(usize, Slide)>,
}

struct Side {
    nodes: Vec<Node>,
    index: HashMap<Vec<u8>, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(root: State) -> Self {
        let key = encode(&root);
        Side {
            nodes: vec![Node {
                state: root,
                parent: None,
            }],
            index: HashMap::from([(key, 0)]),
            frontier: vec![0],
            depth: 0,
        }
    }

    fn slides_to(&self, mut at: usize) -> Vec<Slide> {
        let mut out = Vec::new();
        while let Some((parent, slide)) = self.nodes[at].parent {
            out.push(slide);
            at = parent;
        }
        out.reverse();
        out
    }
}

enum LevelResult {
    Met(usize, usize),
    OutOfStates,
    Done,
}

fn expand_level(side: &mut Side, other: &Side, other_total: usize, max_states: usize) -> LevelResult {
    let frontier = std::mem::take(&mut side.frontier);
    let mut next = Vec::new();
    for at in frontier {
        let state = side.nodes[at].state.clone();
        let mut result = None;
        let nodes = &mut side.nodes;
        let index = &mut side.index;
        for_each_child(&state, |slide, child| {
            let key = encode(&child);
            if index.contains_key(&key) {
                return false;
            }
            let id = nodes.len();
            if let Some(&there) = other.index.get(&key) {
                nodes.push(Node {
                    state: child,
                    parent: Some((at, slide)),
                });
                result = Some(LevelResult::Met(id, there));
                return true;
            }
            if id + other_total >= max_states {
                result = Some(LevelResult::OutOfStates);
                return true;
            }
            index.insert(key, id);
            nodes.push(Node {
                state: child,
                parent: Some((at, slide)),
            });
            next.push(id);
            false
        });
        if let Some(r) = result {
            return r;
        }
    }
    side.frontier = next;
    side.depth += 1;
    LevelResult::Done
}

fn expand_path(forward: &[Slide], backward: &[Slide]) -> Vec<HurwitzMove> {
    let mut path: Vec<HurwitzMove> = forward.iter().flat_map(|s| s.moves()).collect();
    for s in backward.iter().rev() {
        path.extend(s.moves().into_iter().rev().map(HurwitzMove::inverse));
    }
    path
}

/// Bidirectional slide search between two states.
fn bidirectional(a: State, b: State, budget: &Budget) -> (Option<Vec<HurwitzMove>>, bool, SearchStats) {
    let mut sides = [Side::new(a), Side::new(b)];
    let stats = |s: &[Side; 2]| SearchStats {
        states: s[0].nodes.len() + s[1].nodes.len(),
        forward_depth: s[0].depth,
        backward_depth: s[1].depth,
    };
    if sides[0].index.keys().next() == sides[1].index.keys().next() {
        return (Some(Vec::new()), false, stats(&sides));
    }
    if budget.max_states == 0 {
        return (None, false, stats(&sides));
    }
    loop {
        if sides.iter().any(|s| s.frontier.is_empty()) {
            return (None, true, stats(&sides));
        }
        let open: Vec<usize> = (0..2).filter(|&k| sides[k].depth < budget.max_depth).collect();
        let Some(&k) = open.iter().min_by_key(|&&k| sides[k].frontier.len()) else {
            return (None, false, stats(&sides));
        };
        let [s0, s1] = &mut sides;
        let (me, other) = if k == 0 { (s0, &*s1) } else { (s1, &*s0) };
        let other_total = other.nodes.len();
        match expand_level(me, other, other_total, budget.max_states) {
            LevelResult::Done => {}
            LevelResult::OutOfStates => return (None, false, stats(&sides)),
            LevelResult::Met(mine, theirs) => {
                let (fwd, bwd) = if k == 0 {
                    (sides[0].slides_to(mine), sides[1].slides_to(theirs))
                } else {
                    (sides[0].slides_to(theirs), sides[1].slides_to(mine))
                };
                if k == 0 {
                    sides[0].depth += 1;
                } else {
                    sides[1].depth += 1;
                }
                return (Some(expand_path(&fwd, &bwd)), false, stats(&sides));
            }
        }
    }
}

/// Searches for a Hurwitz path from `f1` to `f2` within the budget.
///
/// A certified negative comes from an invariant (length, product, conjugacy
/// classes of the factors) or from enumerating one orbit completely.
pub fn hurwitz_equivalent_bounded(
    f1: &Factorization,
    f2: &Factorization,
    budget: &Budget,
) -> Result<HurwitzEquivalence> {
    if f1.strands() != f2.strands() {
        return Err(Error::StrandMismatch(f1.strands(), f2.strands()));
    }
    if f1.len() != f2.len() {
        return Ok(HurwitzEquivalence::NoCertified(NoReason::LengthMismatch));
    }
    if !f1.alpha_product().equals(&f2.alpha_product())? {
        return Ok(HurwitzEquivalence::NoCertified(NoReason::AlphaMismatch));
    }
    let mut marks1: Vec<usize> = f1.factors().iter().map(|f| f.mark().len()).collect();
    let mut marks2: Vec<usize> = f2.factors().iter().map(|f| f.mark().len()).collect();
    marks1.sort_unstable();
    marks2.sort_unstable();
    if marks1 != marks2 {
        return Ok(HurwitzEquivalence::NoCertified(NoReason::ConjugacyMultiset));
    }
    if f1.same_elements(f2) {
        return Ok(HurwitzEquivalence::Yes {
            path: Vec::new(),
            stats: SearchStats::default(),
        });
    }
    if conjugacy_multiset_match(f1, f2, budget)? == MultisetMatch::No {
        return Ok(HurwitzEquivalence::NoCertified(NoReason::ConjugacyMultiset));
    }
    let (path, exhausted, stats) = bidirectional(state_of(f1), state_of(f2), budget);
    Ok(match path {
        Some(path) => {
            debug_assert!(f1.apply_moves(&path).is_ok_and(|g| g.same_elements(f2)));
            HurwitzEquivalence::Yes { path, stats }
        }
        None if exhausted => HurwitzEquivalence::NoCertified(NoReason::OrbitExhausted),
        None => HurwitzEquivalence::Unknown(stats),
    })
}

/// Outcome of a one-sided orbit search for a state with a given property.
#[derive(Debug, Clone)]
pub(crate) struct OrbitHit {
    pub path: Option<Vec<HurwitzMove>>,
    /// The whole orbit was enumerated.
    pub exhausted: bool,
    pub stats: SearchStats,
}

/// Breadth-first slide search from `f` for a state satisfying `goal`.
pub(crate) fn search_orbit(f: &Factorization, budget: &Budget, goal: impl Fn(&State) -> bool) -> OrbitHit {
    let root = state_of(f);
    if goal(&root) {
        return OrbitHit {
            path: Some(Vec::new()),
            exhausted: false,
            stats: SearchStats {
                states: 1,
                ..SearchStats::default()
            },
        };
    }
    let mut side = Side::new(root);
    let stats = |s: &Side| SearchStats {
        states: s.nodes.len(),
        forward_depth: s.depth,
        backward_depth: 0,
    };
    if budget.max_states == 0 {
        return OrbitHit { path: None, exhausted: false, stats: stats(&side) };
    }
    while side.depth < budget.max_depth {
        if side.frontier.is_empty() {
            return OrbitHit { path: None, exhausted: true, stats: stats(&side) };
        }
        let frontier = std::mem::take(&mut side.frontier);
        let mut next = Vec::new();
        for at in frontier {
            let state = side.nodes[at].state.clone();
            let mut found = None;
            let mut out_of_states = false;
            let nodes = &mut side.nodes;
            let index = &mut side.index;
            for_each_child(&state, |slide, child| {
                let key = encode(&child);
                if index.contains_key(&key) {
                    return false;
                }
                if nodes.len() >= budget.max_states {
                    out_of_states = true;
                    return true;
                }
                let hit = goal(&child);
                let id = nodes.len();
                index.insert(key, id);
                nodes.push(Node { state: child, parent: Some((at, slide)) });
                next.push(id);
                if hit {
                    found = Some(id);
                }
                hit
            });
            if let Some(id) = found {
                side.depth += 1;
                let path = expand_path(&side.slides_to(id), &[]);
                return OrbitHit { path: Some(path), exhausted: false, stats: stats(&side) };
            }
            if out_of_states {
                return OrbitHit { path: None, exhausted: false, stats: stats(&side) };
            }
        }
        side.frontier = next;
        side.depth += 1;
    }
    let exhausted = side.frontier.is_empty();
    OrbitHit { path: None, exhausted, stats: stats(&side) }
}
