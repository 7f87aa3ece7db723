//! Braid monodromy factorizations of curves and their van Kampen presentations.

mod bmf;
mod centralizer;
mod vankampen;

pub use bmf::{
    associated_singularity_braid, cuspidal_bmf, cuspidal_completion_search, singularity_census,
    validate_bmf, CuspidalFactor, SingularityCensus,
};
pub use centralizer::{verify_centralizer_generators, CentralizerEntry, CentralizerReport};
pub use vankampen::{factor_relators, van_kampen, GroupPresentation};
