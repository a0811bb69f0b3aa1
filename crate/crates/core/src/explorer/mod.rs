//! Exhaustive search over small spaces: enumeration up to relabeling,
//! instance-by-instance theorem checks, and counterexample mining.

mod canonical;
mod enumerate;
mod mine;
mod theorems;

pub use canonical::{canonical_form, canonical_permutation, is_canonical, CANONICAL_LIMIT};
pub use enumerate::{
    brute_force_masks, count_spaces, enumerate_spaces, enumerate_up_to, for_each_mask, sample_spaces,
    space_from_mask, union_closed_masks, MAX_ENUMERATION_POINTS,
};
pub use mine::{mine_counterexamples, Property, Witness};
pub use theorems::{
    summarize, urysohn_step_continuity, HARNESS_DEPTH, verify_population, verify_theorem, verify_theorems, HarnessSummary, Status, TheoremReport, TheoremTally,
    THEOREM_IDS,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExplorerError {
    #[error("{n} points requested; at most {max} are supported here")]
    TooLarge { n: usize, max: usize },
    #[error("at least one point is required")]
    NoPoints,
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}
