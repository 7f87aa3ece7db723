//! Free groups `F_m = ⟨x_1..x_m⟩` and the Artin action of `B_m` on them.

mod artin;
mod stallings;
mod word;

pub use artin::{artin_apply, fixed_words_up_to, oracle_equal, oracle_is_trivial, ArtinAutomorphism};
pub use stallings::{subgroup_membership_bounded, FoldedGraph, Membership};
pub use word::{reduce, FreeWord};
