use serde::Serialize;

use crate::braid::{super_summit_set, to_super_summit, BraidWord, NormalForm, Permutation};
use crate::budget::Budget;

/// Bounds on the least `k` with `b` conjugate into `B_{k,0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Interlacing {
    /// `witness·b·witness⁻¹ = conjugate`, which lies in `B_{k,0}`.
    Exact {
        k: usize,
        witness: BraidWord,
        conjugate: BraidWord,
    },
    /// `lo ≤ l(b) ≤ hi`, the upper bound realised by the witness.
    Range {
        lo: usize,
        hi: usize,
        witness: BraidWord,
        conjugate: BraidWord,
    },
}

impl Interlacing {
    pub fn upper(&self) -> usize {
        match self {
            Interlacing::Exact { k, .. } => *k,
            Interlacing::Range { hi, .. } => *hi,
        }
    }

    pub fn witness(&self) -> &BraidWord {
        match self {
            Interlacing::Exact { witness, .. } | Interlacing::Range { witness, .. } => witness,
        }
    }

    pub fn conjugate(&self) -> &BraidWord {
        match self {
            Interlacing::Exact { conjugate, .. } | Interlacing::Range { conjugate, .. } => conjugate,
        }
    }
}

/// Maximal runs of consecutive generators in a support, as `(first, last)`.
fn runs(support: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &g in support {
        match out.last_mut() {
            Some((_, last)) if *last + 1 == g => *last = g,
            _ => out.push((g, g)),
        }
    }
    out
}

/// Strands needed once the runs are packed against strand 1.
fn packed_width(support: &[usize]) -> usize {
    runs(support).iter().map(|(a, b)| b - a + 2).sum::<usize>().max(1)
}

/// The permutation sending the strands touched by `support` to `1..k` and the rest
/// after them, both order-preservingly.
fn packing(m: usize, support: &[usize]) -> Permutation {
    let mut touched = vec![false; m + 1];
    for (a, b) in runs(support) {
        touched[a..=b + 1].fill(true);
    }
    let order: Vec<usize> = (1..=m)
        .filter(|&s| touched[s])
        .chain((1..=m).filter(|&s| !touched[s]))
        .collect();
    let mut images = vec![0; m];
    for (target, &s) in order.iter().enumerate() {
        images[s - 1] = target + 1;
    }
    Permutation::from_images(&images).expect("packing is a bijection")
}

fn within(nf: &NormalForm, k: usize) -> bool {
    nf.support().iter().all(|&g| g < k)
}

/// Lower bound from conjugacy invariants.
fn obstruction(b: &BraidWord) -> usize {
    let moved = b.permutation().moved_points().len();
    moved.max(2)
}

/// Bounds the interlacing number by a packing of the support of `b` and of
/// the elements of its super summit set.
pub fn interlacing_number(b: &BraidWord, budget: &Budget) -> Interlacing {
    let m = b.strands();
    let nf = b.normal_form();
    if nf.is_identity() {
        let id = BraidWord::identity(m);
        return Interlacing::Exact {
            k: 1,
            witness: id.clone(),
            conjugate: id,
        };
    }
    let lo = obstruction(b);
    let (seed, c0) = to_super_summit(&nf);
    let mut candidates: Vec<(NormalForm, NormalForm)> = vec![(nf.clone(), NormalForm::identity(m))];
    // y = c⁻¹·b·c for every candidate pair (y, c)
    for (y, c) in super_summit_set(&seed, budget.max_summit, None).elements {
        candidates.push((y, c0.mul(&c)));
    }
    let mut best: Option<(usize, NormalForm, NormalForm)> = None;
    for (y, c) in candidates {
        let support = y.support();
        let k = packed_width(&support);
        if best.as_ref().is_some_and(|(bk, _, _)| *bk <= k) {
            continue;
        }
        let beta = NormalForm::from_simples(m, 0, [packing(m, &support)]);
        let beta_inv = beta.inverse();
        for (g, g_inv) in [(&beta, &beta_inv), (&beta_inv, &beta)] {
            let z = g.mul(&y).mul(g_inv);
            if within(&z, k) {
                // z = g·c⁻¹·b·c·g⁻¹
                best = Some((k, z, g.mul(&c.inverse())));
                break;
            }
        }
        if best.as_ref().is_some_and(|(bk, _, _)| *bk == lo) {
            break;
        }
    }
    let (hi, z, w) = best.expect("the trivial packing always succeeds");
    let witness = w.to_fraction_word().freely_reduced();
    let conjugate = z.to_fraction_word();
    debug_assert!(witness
        .multiply(b)
        .and_then(|x| x.multiply(&witness.inverse()))
        .is_ok_and(|x| x.equals(&conjugate).unwrap_or(false)));
    if hi <= lo {
        Interlacing::Exact {
            k: hi,
            witness,
            conjugate,
        }
    } else {
        Interlacing::Range {
            lo,
            hi,
            witness,
            conjugate,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, s: &str) -> BraidWord {
        BraidWord::parse(m, s).unwrap()
    }

    fn check(b: &BraidWord, expected: usize) {
        let r = interlacing_number(b, &Budget::default());
        assert_eq!(r, Interlacing::Exact { k: expected, witness: r.witness().clone(), conjugate: r.conjugate().clone() });
        let lhs = r.witness().multiply(b).unwrap().multiply(&r.witness().inverse()).unwrap();
        assert!(lhs.equals(r.conjugate()).unwrap());
        assert!(r.conjugate().letters().iter().all(|l| (l.unsigned_abs() as usize) < expected));
    }

    #[test]
    fn examples() {
        check(&BraidWord::identity(3), 1);
        check(&w(3, "1 1"), 2);
        check(&w(3, "2"), 2);
        check(&w(5, "4 3 -4"), 2);
        check(&w(5, "1 4"), 4);
        check(&w(5, "4 3 -4 2 3"), 4);
        check(&w(4, "2 1 -2"), 2);
    }

    #[test]
    fn packing_preserves_run_order() {
        let p = packing(5, &[2, 4]);
        assert_eq!(p.images(), vec![5, 1, 2, 3, 4]);
        assert_eq!(packed_width(&[1, 2, 4]), 5);
    }
}
