//! Combinatorics of Kottwitz–Rapoport strata for `GSp_{2g}` with Iwahori
//! level structure.
//!
//! Elements of the extended affine Weyl group live in [`weyl`], their
//! alcove coordinates in [`alcove`]. The admissible set and per-stratum
//! records come from [`admissible`], the `r_ij` invariants and the
//! superspecial classification from [`invariants`], and exact point and
//! component counts from [`point_counts`]. [`hermitian`] is a brute-force
//! check of the unitary flag count over small finite fields.

pub mod admissible;
pub mod alcove;
pub mod error;
pub mod hermitian;
pub mod invariants;
pub mod point_counts;
pub mod weyl;

pub use admissible::{enumerate_admissible, StratumRecord};
pub use alcove::ExtendedAlcove;
pub use error::{Error, Result};
pub use invariants::InvariantTable;
pub use point_counts::QPolynomial;
pub use weyl::{evaluate_word, ExtAffineElement, GroupContext, GroupKind, ReducedWord};
