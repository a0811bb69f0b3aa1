//! Canonical representatives under relabeling of points.

use itertools::Itertools;

use super::ExplorerError;
use crate::space::{permute, GtSpace};
use crate::subset::Subset;

/// Largest ground set accepted by [`canonical_form`] (all `n!` relabelings
/// are tried).
pub const CANONICAL_LIMIT: usize = 8;

fn relabeled_members(space: &GtSpace, perm: &[usize]) -> Vec<Subset> {
    let mut members: Vec<Subset> = space.gamma().iter().map(|s| permute(s, perm)).collect();
    members.sort_unstable();
    members
}

/// The relabeling whose sorted member list is lexicographically least;
/// the first such in lexicographic permutation order.
pub fn canonical_permutation(space: &GtSpace) -> Result<Vec<usize>, ExplorerError> {
    let n = space.len();
    if n > CANONICAL_LIMIT {
        return Err(ExplorerError::TooLarge {
            n,
            max: CANONICAL_LIMIT,
        });
    }
    let best = (0..n)
        .permutations(n)
        .map(|perm| (relabeled_members(space, &perm), perm))
        .min()
        .map(|(_, perm)| perm)
        .unwrap_or_default();
    Ok(best)
}

/// The least relabeling of `space`; constant on relabeling orbits.
pub fn canonical_form(space: &GtSpace) -> Result<GtSpace, ExplorerError> {
    canonical_permutation(space).map(|perm| space.permuted(&perm))
}

/// No relabeling yields a smaller member list.
pub fn is_canonical(space: &GtSpace) -> bool {
    let n = space.len();
    let own = space.gamma().members();
    (0..n)
        .permutations(n)
        .all(|perm| relabeled_members(space, &perm).as_slice() >= own)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::e1;
    use crate::space::make_space;

    #[test]
    fn relabels_single_open_point() {
        let s = make_space(["a", "b"], [vec!["b"]]).unwrap();
        let c = canonical_form(&s).unwrap();
        assert_eq!(c, make_space(["a", "b"], [vec!["a"]]).unwrap());
        assert_eq!(canonical_form(&c).unwrap(), c);
        assert!(is_canonical(&c) && !is_canonical(&s));
    }

    #[test]
    fn constant_on_the_orbit_of_e1() {
        let s = e1();
        let c = canonical_form(&s).unwrap();
        for perm in (0..4).permutations(4) {
            assert_eq!(canonical_form(&s.permuted(&perm)).unwrap(), c);
        }
    }

    #[test]
    fn rejects_large_ground_sets() {
        let names: Vec<String> = (0..9).map(|i| format!("p{i}")).collect();
        let s = make_space(names, Vec::<Vec<String>>::new()).unwrap();
        assert_eq!(
            canonical_form(&s),
            Err(ExplorerError::TooLarge { n: 9, max: 8 })
        );
    }
}
