//! Factorizations over `B_m`, Hurwitz moves and bounded orbit equivalence.

mod canonical;
mod factorization;
mod search;
mod stable;

pub use canonical::{
    delta_squared_factorization, is_partial_re_degeneration, re_degenerate, tilde_delta_squared,
    ReDegeneration, ReDegenerationTarget,
};
pub use factorization::{transport_mark, Direction, Factor, Factorization, HurwitzMove, Mark};
pub use search::{hurwitz_equivalent_bounded, HurwitzEquivalence, NoReason, SearchStats};
pub use stable::{conjugacy_multiset_match, stabilize, stably_equal, MultisetMatch, StableEquality};
