//! Finite generalized topological spaces: exact operators, separation
//! axioms, finite-range continuous functions, and exhaustive model search.
//!
//! A generalized topology on `Y` is a family of subsets containing `∅` and
//! closed under unions; `Y` itself need not be open. Everything here works
//! on at most 64 points, with each subset a single machine word.

pub mod axioms;
pub mod covers;
pub mod dyadic;
pub mod explorer;
pub mod fixtures;
pub mod realfn;
pub mod space;
pub mod subset;

pub use axioms::{classify, AxiomError, AxiomReport};
pub use dyadic::Dyadic;
pub use explorer::{
    canonical_form, enumerate_spaces, mine_counterexamples, verify_theorems, ExplorerError, Property,
    Status, TheoremReport, Witness,
};
pub use realfn::{DyadicFamily, DyadicFn, RealFnError};
pub use space::{make_space, GtSpace, SpaceError};
pub use subset::{GroundSet, SetFamily, Subset};
