//! Union-closed families containing `∅` on `n ≤ 5` points.
//!
//! A family is a bitmask over subset indices: bit `s` is set when the subset
//! with bits `s` belongs to it. Families grow by canonical augmentation: add
//! a subset numerically larger than every earlier generator and close under
//! union. Every new union `j ∪ f` is at least `j`, so the smallest member not
//! yet reached must be the next generator, which makes the generating
//! sequence of each family unique.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::canonical::is_canonical;
use super::ExplorerError;
use crate::space::GtSpace;
use crate::subset::{GroundSet, SetFamily, Subset};

/// Largest ground set the enumerator accepts.
pub const MAX_ENUMERATION_POINTS: usize = 5;

fn check_size(n: usize) -> Result<(), ExplorerError> {
    if n == 0 {
        return Err(ExplorerError::NoPoints);
    }
    if n > MAX_ENUMERATION_POINTS {
        return Err(ExplorerError::TooLarge {
            n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    Ok(())
}

/// `family ∪ {j} ∪ {j ∪ f : f ∈ family}`; already union-closed since
/// `family` is.
fn add_generator(family: u32, j: u32) -> u32 {
    let mut out = family;
    let mut rest = family;
    while rest != 0 {
        let f = rest.trailing_zeros();
        rest &= rest - 1;
        out |= 1 << (f | j);
    }
    out
}

fn dfs(family: u32, last: u32, universe: u32, visit: &mut impl FnMut(u32)) {
    visit(family);
    for j in last + 1..universe {
        if family >> j & 1 == 1 {
            continue;
        }
        let next = add_generator(family, j);
        debug_assert_eq!((next & !family).trailing_zeros(), j);
        dfs(next, j, universe, visit);
    }
}

/// Calls `visit` once per union-closed family on `n` points, in generation
/// order.
pub fn for_each_mask(n: usize, mut visit: impl FnMut(u32)) -> Result<(), ExplorerError> {
    check_size(n)?;
    dfs(1, 0, 1 << n, &mut visit);
    Ok(())
}

fn sort_key(mask: u32) -> (u32, Vec<u32>) {
    (mask.count_ones(), members(mask).collect())
}

fn members(mask: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |s| mask >> s & 1 == 1)
}

/// All families on `n` points, ordered by size then member list.
pub fn union_closed_masks(n: usize) -> Result<Vec<u32>, ExplorerError> {
    let mut out = Vec::new();
    for_each_mask(n, |m| out.push(m))?;
    out.sort_by_cached_key(|m| sort_key(*m));
    Ok(out)
}

/// Independent oracle: test every family of nonempty subsets for closure
/// under pairwise union. Feasible up to `n = 4`.
pub fn brute_force_masks(n: usize) -> Result<Vec<u32>, ExplorerError> {
    check_size(n)?;
    if n > 4 {
        return Err(ExplorerError::TooLarge { n, max: 4 });
    }
    let nonempty = (1u32 << n) - 1;
    let mut out = Vec::new();
    for choice in 0u32..1 << nonempty {
        let mask = (choice << 1) | 1;
        let sets: Vec<u32> = members(mask).collect();
        if sets
            .iter()
            .all(|a| sets.iter().all(|b| mask >> (a | b) & 1 == 1))
        {
            out.push(mask);
        }
    }
    out.sort_by_cached_key(|m| sort_key(*m));
    Ok(out)
}

pub fn space_from_mask(n: usize, mask: u32) -> GtSpace {
    let ground = Arc::new(GroundSet::alphabetic(n).expect("small ground set"));
    space_on(&ground, mask)
}

fn space_on(ground: &Arc<GroundSet>, mask: u32) -> GtSpace {
    let gamma = SetFamily::from_sorted_unchecked(members(mask).map(|s| Subset::from_bits(s as u64)).collect());
    GtSpace::new_unchecked(ground.clone(), gamma)
}

/// Number of families on `n` points, without materializing spaces.
pub fn count_spaces(n: usize) -> Result<usize, ExplorerError> {
    let mut count = 0;
    for_each_mask(n, |_| count += 1)?;
    Ok(count)
}

/// All spaces on `n` points in canonical order; with `dedup`, only the
/// canonical representative of each relabeling orbit.
pub fn enumerate_spaces(n: usize, dedup: bool) -> Result<Vec<GtSpace>, ExplorerError> {
    let ground = Arc::new(GroundSet::alphabetic(n).map_err(|_| ExplorerError::NoPoints)?);
    let spaces = union_closed_masks(n)?
        .into_iter()
        .map(|m| space_on(&ground, m))
        .filter(|s| !dedup || is_canonical(s));
    Ok(spaces.collect())
}

/// Spaces on `1..=n` points, smaller ground sets first.
pub fn enumerate_up_to(n: usize, dedup: bool) -> Result<Vec<GtSpace>, ExplorerError> {
    check_size(n)?;
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_spaces(k, dedup)?);
    }
    Ok(out)
}

/// A uniform sample of `size` spaces on `n` points, drawn by reservoir
/// sampling over the generation stream with a seeded ChaCha8 generator and
/// returned in canonical order. When the population is no larger than
/// `size`, the whole population is returned.
pub fn sample_spaces(n: usize, size: usize, seed: u64) -> Result<Vec<GtSpace>, ExplorerError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reservoir: Vec<u32> = Vec::with_capacity(size.min(1 << 20));
    let mut seen = 0usize;
    for_each_mask(n, |m| {
        if reservoir.len() < size {
            reservoir.push(m);
        } else {
            let k = rng.gen_range(0..=seen);
            if k < size {
                reservoir[k] = m;
            }
        }
        seen += 1;
    })?;
    reservoir.sort_by_cached_key(|m| sort_key(*m));
    let ground = Arc::new(GroundSet::alphabetic(n).expect("small ground set"));
    Ok(reservoir.into_iter().map(|m| space_on(&ground, m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_spaces(1), Ok(2));
        assert_eq!(count_spaces(2), Ok(7));
        assert_eq!(enumerate_spaces(2, true).unwrap().len(), 5);
        assert_eq!(count_spaces(0), Err(ExplorerError::NoPoints));
        assert_eq!(count_spaces(6), Err(ExplorerError::TooLarge { n: 6, max: 5 }));
    }

    #[test]
    fn generation_matches_brute_force() {
        for n in 1..=4 {
            assert_eq!(union_closed_masks(n).unwrap(), brute_force_masks(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn every_generated_family_is_a_valid_space() {
        for s in enumerate_up_to(3, false).unwrap() {
            assert!(s.gamma().contains(Subset::EMPTY));
            assert!(s.gamma().is_union_closed());
        }
    }

    #[test]
    fn one_point_spaces() {
        let spaces = enumerate_spaces(1, false).unwrap();
        assert_eq!(spaces[0].gamma().len(), 1);
        assert_eq!(spaces[1].gamma().len(), 2);
    }

    #[test]
    fn sampler_is_deterministic_and_sorted() {
        let a = sample_spaces(3, 10, 7).unwrap();
        let b = sample_spaces(3, 10, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        let all = enumerate_spaces(3, false).unwrap();
        let positions: Vec<usize> = a.iter().map(|s| all.iter().position(|t| t == s).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(sample_spaces(3, 1000, 0).unwrap(), all);
    }
}
