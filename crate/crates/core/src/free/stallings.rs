//! Subgroup membership in free groups by Stallings folding.

use std::collections::HashMap;

use super::word::FreeWord;
use crate::budget::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }
}

/// The folded core graph of a finitely generated subgroup, based at vertex 0.
#[derive(Debug, Clone)]
pub struct FoldedGraph {
    transitions: HashMap<(usize, i32), usize>,
}

impl FoldedGraph {
    /// Folds the bouquet of `gens`; `None` when it would exceed `max_vertices`.
    pub fn build(gens: &[FreeWord], max_vertices: usize) -> Option<Self> {
        let mut vertices = 1usize;
        let mut edges: Vec<(usize, i32, usize)> = Vec::new();
        for g in gens {
            let letters = g.letters();
            if letters.is_empty() {
                continue;
            }
            vertices += letters.len() - 1;
            if vertices > max_vertices {
                return None;
            }
            let mut at = 0;
            for (k, &l) in letters.iter().enumerate() {
                let to = if k + 1 == letters.len() {
                    0
                } else {
                    vertices - letters.len() + 1 + k
                };
                edges.push((at, l, to));
                at = to;
            }
        }
        let mut uf = UnionFind::new(vertices);
        loop {
            let mut changed = false;
            let mut seen: HashMap<(usize, i32), usize> = HashMap::new();
            for &(u, l, v) in &edges {
                for (from, label, to) in [(u, l, v), (v, -l, u)] {
                    let (from, to) = (uf.find(from), uf.find(to));
                    match seen.get(&(from, label)) {
                        Some(&other) => changed |= uf.union(other, to),
                        None => {
                            seen.insert((from, label), to);
                        }
                    }
                }
            }
            if !changed {
                let transitions = seen
                    .into_iter()
                    .map(|((from, label), to)| ((uf.find(from), label), uf.find(to)))
                    .collect();
                return Some(FoldedGraph { transitions });
            }
        }
    }

    pub fn accepts(&self, w: &FreeWord) -> bool {
        let mut at = 0;
        for &l in w.letters() {
            match self.transitions.get(&(at, l)) {
                Some(&next) => at = next,
                None => return false,
            }
        }
        at == 0
    }
}

/// Whether `w` lies in the subgroup generated by `gens`.
///
/// The decision is exact; the budget only bounds the size of the folded graph.
pub fn subgroup_membership_bounded(w: &FreeWord, gens: &[FreeWord], budget: &Budget) -> Membership {
    if w.is_empty() {
        return Membership::Yes;
    }
    match FoldedGraph::build(gens, budget.max_states.max(1)) {
        Some(g) if g.accepts(w) => Membership::Yes,
        Some(_) => Membership::No,
        None => Membership::Unknown,
    }
}
