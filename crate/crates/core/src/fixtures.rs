//! Small named spaces used in examples and tests.

use crate::space::{make_space, GtSpace};

/// Two points, only the empty set open.
pub fn e0() -> GtSpace {
    make_space(["a", "b"], Vec::<Vec<&str>>::new()).expect("valid space")
}

/// Four points with opens `{a,b}`, `{b,c}`, `{a,b,c}`.
pub fn e1() -> GtSpace {
    make_space(
        ["a", "b", "c", "d"],
        [vec!["a", "b"], vec!["b", "c"], vec!["a", "b", "c"]],
    )
    .expect("valid space")
}

/// Three points with the single nonempty open `{a,b}`.
pub fn e2() -> GtSpace {
    make_space(["a", "b", "c"], [vec!["a", "b"]]).expect("valid space")
}

/// Every subset open.
pub fn discrete(n: usize) -> GtSpace {
    let ground = crate::subset::GroundSet::alphabetic(n).expect("valid size");
    let gamma = crate::subset::all_subsets(n).collect();
    GtSpace::new(std::sync::Arc::new(ground), gamma).expect("power set is union-closed")
}
