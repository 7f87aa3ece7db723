//! Exact arithmetic in the braid groups `B_m`.

mod conjugacy;
mod elements;
mod garside;
mod perm;
mod word;

pub use conjugacy::{
    are_conjugate, conjugate_normal_forms, cycling, decycling, super_summit_set,
    to_super_summit, Conjugacy, SummitSet,
};
pub use elements::{
    block_delta, complement_to_delta_power, decompose_positive, delta, delta_squared,
    z_generator, z_parts,
};
pub use garside::{normal_form, NormalForm};
pub use perm::Permutation;
pub use word::{equal, exponent_sum, multiply, permutation_of, BraidWord};
