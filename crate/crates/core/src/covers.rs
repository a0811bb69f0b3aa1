//! Covers, refinements, local finiteness, the finite intersection property
//! and compactness-style predicates.
//!
//! On a finite space every cover is finite, so compactness and its relatives
//! always hold. The predicates are still computed from their definitions:
//! they exercise subcover extraction and the subspace construction that the
//! hereditary checks rely on.

use crate::space::GtSpace;
use crate::subset::{SetFamily, Subset};

/// Families with at most this many members have every subfamily searched.
const EXHAUSTIVE_MEMBERS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("members do not cover the target; {0:?} is missed")]
    DoesNotCover(Subset),
}

/// A family whose union contains `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    members: SetFamily,
    target: Subset,
}

impl Cover {
    pub fn new(members: SetFamily, target: Subset) -> Result<Self, CoverError> {
        let missed = target.difference(members.union_all());
        if missed.is_empty() {
            Ok(Cover { members, target })
        } else {
            Err(CoverError::DoesNotCover(missed))
        }
    }

    pub fn members(&self) -> &SetFamily {
        &self.members
    }

    pub fn target(&self) -> Subset {
        self.target
    }
}

/// Each member of `fine` lies inside some member of `coarse`.
pub fn is_refinement(fine: &SetFamily, coarse: &SetFamily) -> bool {
    fine.iter().all(|b| coarse.iter().any(|f| b.is_subset_of(f)))
}

/// Every point has a neighbourhood meeting only finitely many members.
/// Families are finite here, so this reduces to every point having some
/// neighbourhood.
pub fn is_locally_finite(space: &GtSpace, _family: &SetFamily) -> bool {
    let open = space.s_lambda_open();
    (0..space.len()).all(|p| open.iter().any(|u| u.contains(p)))
}

/// Every subcollection has nonempty intersection. Subcollections are tried
/// by increasing size so a failure is found early.
pub fn has_fip(family: &SetFamily) -> bool {
    let members = family.members();
    if members.iter().any(|m| m.is_empty()) {
        return false;
    }
    if members.len() > 20 {
        // The whole intersection is contained in every partial one.
        return family.intersection_all().is_none_or(|s| !s.is_empty());
    }
    for size in 2..=members.len() {
        for combo in itertools::Itertools::combinations(members.iter(), size) {
            let meet = combo.iter().fold(Subset::from_bits(u64::MAX), |acc, m| acc.intersection(**m));
            if meet.is_empty() {
                return false;
            }
        }
    }
    true
}

/// A smallest subfamily still covering the target, first in canonical
/// order among those of that size.
pub fn extract_finite_subcover(cover: &Cover) -> SetFamily {
    let members = cover.members.members();
    let target = cover.target;
    if target.is_empty() {
        return SetFamily::new();
    }
    if members.len() <= EXHAUSTIVE_MEMBERS + 4 {
        for size in 1..=members.len() {
            for combo in itertools::Itertools::combinations(members.iter().copied(), size) {
                let union = combo.iter().fold(Subset::EMPTY, |acc, m| acc.union(*m));
                if target.is_subset_of(union) {
                    return combo.into_iter().collect();
                }
            }
        }
        unreachable!("a cover covers its target");
    }
    // Drop redundant members one at a time.
    let mut kept: Vec<Subset> = members.to_vec();
    let mut i = 0;
    while i < kept.len() {
        let rest = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(Subset::EMPTY, |acc, (_, m)| acc.union(*m));
        if target.is_subset_of(rest) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept.into_iter().collect()
}

/// Subfamilies of `family` searched by the compactness predicates: all of
/// them for small families, otherwise the family itself and its
/// subfamilies of at most three members.
fn subfamilies(family: &SetFamily) -> Vec<SetFamily> {
    let members = family.members();
    if members.len() <= EXHAUSTIVE_MEMBERS {
        return (0u32..1 << members.len())
            .map(|mask| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, m)| *m)
                    .collect()
            })
            .collect();
    }
    let mut out = vec![family.clone()];
    for size in 0..=3 {
        out.extend(
            itertools::Itertools::combinations(members.iter().copied(), size)
                .map(|c| c.into_iter().collect::<SetFamily>()),
        );
    }
    out
}

/// Lambda-open covers of `target` among the searched subfamilies.
fn open_covers(space: &GtSpace, target: Subset) -> impl Iterator<Item = Cover> {
    subfamilies(space.s_lambda_open())
        .into_iter()
        .filter_map(move |f| Cover::new(f, target).ok())
}

/// Every lambda-open cover of the space has a finite subcover.
pub fn is_compact(space: &GtSpace) -> bool {
    open_covers(space, space.full()).all(|c| {
        let sub = extract_finite_subcover(&c);
        sub.is_subfamily_of(c.members()) && space.full().is_subset_of(sub.union_all())
    })
}

/// Every family of lambda-closed sets with the finite intersection property
/// has nonempty intersection.
pub fn fip_compact(space: &GtSpace) -> bool {
    subfamilies(space.s_lambda_closed())
        .into_iter()
        .filter(|f| !f.is_empty() && has_fip(f))
        .all(|f| f.intersection_all().is_some_and(|s| !s.is_empty()))
}

/// Every open cover has a countable subcover; on a finite space this is
/// compactness.
pub fn is_lindelof(space: &GtSpace) -> bool {
    is_compact(space)
}

/// Every countable open cover has a finite subcover; on a finite space
/// every cover is countable, so this is compactness.
pub fn is_countably_compact(space: &GtSpace) -> bool {
    is_compact(space)
}

/// Every lambda-open cover has a locally finite lambda-open refinement
/// covering the space. The extracted subcover serves as the refinement.
pub fn is_paracompact(space: &GtSpace) -> bool {
    open_covers(space, space.full()).all(|c| {
        let refinement = extract_finite_subcover(&c);
        is_refinement(&refinement, c.members())
            && is_locally_finite(space, &refinement)
            && refinement.union_all() == space.full()
    })
}

/// First nonempty lambda-closed set whose subspace is not compact.
pub fn closed_subspace_not_compact(space: &GtSpace) -> Option<Subset> {
    space
        .s_lambda_closed()
        .iter()
        .filter(|d| !d.is_empty())
        .find(|d| !space.subspace(*d).is_ok_and(|sub| is_compact(&sub) && fip_compact(&sub)))
}

/// For a generalized lambda-closed `d`: cover `d` by the minimal
/// neighbourhoods of its points, add the complement of its closure, extract a
/// finite subcover of the space, and check that the members taken from the
/// original cover contain the closure of `d`.
pub fn sg_closed_cover_trace(space: &GtSpace, d: Subset) -> bool {
    let full = space.full();
    let open = space.s_lambda_open();
    let cl = space.lambda_closure(d);
    let original: SetFamily = d
        .points()
        .flat_map(|p| open.minimal_supersets_of(Subset::singleton(p)))
        .collect();
    let outside = cl.complement_in(full);
    let mut extended = original.clone();
    extended.insert(outside);
    let Ok(cover) = Cover::new(extended, full) else {
        return false;
    };
    let sub = extract_finite_subcover(&cover);
    let traced = sub
        .iter()
        .filter(|m| original.contains(*m))
        .fold(Subset::EMPTY, |acc, m| acc.union(m));
    cl.is_subset_of(traced)
}

/// First generalized lambda-closed set for which the cover trace fails.
pub fn sg_closed_trace_failure(space: &GtSpace) -> Option<Subset> {
    space
        .sg_lambda_closed()
        .iter()
        .find(|d| !sg_closed_cover_trace(space, *d))
}
