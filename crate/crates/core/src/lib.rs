//! Special weights of classical involutions, Renner monoids of `Mat_n`, and
//! Borel orbits on symmetric and skew-symmetric matrices, checked against
//! exhaustive finite-field enumeration.
//!
//! Modules, bottom up:
//!
//! - [`linalg`]: exact rational linear algebra.
//! - [`root_weight`]: classical root systems, Weyl orbits and weight sets.
//! - [`involution`]: involutions on characters, restricted roots, special weights.
//! - [`renner`]: the rook monoid, Green's relations and the Bruhat-Chevalley order.
//! - [`finite_field`]: matrices over `F_q`, the Bruhat factorization, orbit enumeration.
//! - [`orbits`]: rank-control invariants and Borel congruence orbits.
//! - [`polytope`]: exact hulls and face counts of weight polytopes.
//! - [`cli`]: the `symvar` command line.

pub mod cli;
pub mod error;
pub mod finite_field;
pub mod involution;
pub mod linalg;
pub mod orbits;
pub mod polytope;
pub mod renner;
pub mod root_weight;

pub use error::{Error, Result};
pub use finite_field::{BorelFactorization, FqMatrix};
pub use involution::{InvolutionFamily, InvolutionSpec};
pub use orbits::{RankControl, SymForm, SymOrbitReport};
pub use polytope::{PolyhedralCone, RationalPolytope};
pub use renner::RookElement;
pub use root_weight::{Family, RootSystem, Weight};
