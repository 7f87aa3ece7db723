//! Factors with marked free strands, interlacing numbers and inseparability.

mod inseparable;
mod interlacing;
mod tbmf;

pub use inseparable::{inseparability_certificate, Inseparability};
pub use interlacing::{interlacing_number, Interlacing};
pub use tbmf::{marked_hurwitz_move, standard_tbmf_form, tbmf_block_commutation_check, TbmfForm};
