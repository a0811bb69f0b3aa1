//! Separation axioms decided exhaustively on the lambda-open / lambda-closed
//! structure of a finite space.
//!
//! Conventions:
//! * a neighbourhood of `y` is a lambda-open set containing `y`;
//! * `T0` asks that one of any two distinct points has a neighbourhood
//!   missing the other;
//! * a predicate whose hypothesis never fires (no disjoint closed pair, say)
//!   holds vacuously.
//!
//! Two readings of regularity are kept apart: `regular_strong` separates by
//! open sets with disjoint closures, `regular_weak` only by disjoint open
//! sets. Normality likewise.

use crate::realfn;
use crate::space::GtSpace;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum AxiomError {
    #[error("separation arguments must be nonempty")]
    EmptyArgument,
}

fn nonempty(g: Subset, h: Subset) -> Result<(), AxiomError> {
    if g.is_empty() || h.is_empty() {
        Err(AxiomError::EmptyArgument)
    } else {
        Ok(())
    }
}

/// Neither set meets the other's lambda-closure.
pub fn weakly_separated(space: &GtSpace, g: Subset, h: Subset) -> Result<bool, AxiomError> {
    nonempty(g, h)?;
    Ok(weak(space, g, h))
}

pub(crate) fn weak(space: &GtSpace, g: Subset, h: Subset) -> bool {
    !g.meets(space.lambda_closure(h)) && !h.meets(space.lambda_closure(g))
}

/// The sets have disjoint lambda-open supersets.
pub fn strongly_separated(space: &GtSpace, g: Subset, h: Subset) -> Result<bool, AxiomError> {
    nonempty(g, h)?;
    Ok(strong(space, g, h))
}

/// Searching minimal open supersets is enough: shrinking either side keeps
/// the pair disjoint.
pub(crate) fn strong(space: &GtSpace, g: Subset, h: Subset) -> bool {
    if g.meets(h) {
        return false;
    }
    let open = space.s_lambda_open();
    let us = open.minimal_supersets_of(g);
    let vs = open.minimal_supersets_of(h);
    us.iter().any(|u| vs.iter().any(|v| !u.meets(*v)))
}

/// Lambda-open `U ⊇ g`, `V ⊇ h` lying in disjoint lambda-closed `P ⊇ U`,
/// `Q ⊇ V`.
pub fn separated_by_closed_neighborhoods(
    space: &GtSpace,
    g: Subset,
    h: Subset,
) -> Result<bool, AxiomError> {
    nonempty(g, h)?;
    Ok(closed_neighborhoods(space, g, h))
}

/// The smallest closed set around `U` is its closure, so the closed pair
/// exists exactly when the closures are disjoint.
pub(crate) fn closed_neighborhoods(space: &GtSpace, g: Subset, h: Subset) -> bool {
    if g.meets(h) {
        return false;
    }
    let open = space.s_lambda_open();
    let us: Vec<Subset> = open
        .minimal_supersets_of(g)
        .into_iter()
        .map(|u| space.lambda_closure(u))
        .collect();
    let vs: Vec<Subset> = open
        .minimal_supersets_of(h)
        .into_iter()
        .map(|v| space.lambda_closure(v))
        .collect();
    us.iter().any(|u| vs.iter().any(|v| !u.meets(*v)))
}

/// Pairs of distinct points `(p, q)`, both orders.
fn distinct_pairs(space: &GtSpace) -> impl Iterator<Item = (usize, usize)> {
    let n = space.len();
    (0..n).flat_map(move |p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
}

/// Lambda-closed `P` and points outside it.
fn closed_point_pairs(space: &GtSpace) -> impl Iterator<Item = (Subset, usize)> + '_ {
    let full = space.full();
    space
        .s_lambda_closed()
        .iter()
        .flat_map(move |c| c.complement_in(full).points().map(move |p| (c, p)))
}

/// Ordered pairs of disjoint lambda-closed sets (empty sets included).
pub fn disjoint_closed_pairs(space: &GtSpace) -> Vec<(Subset, Subset)> {
    let closed = space.s_lambda_closed();
    closed
        .iter()
        .flat_map(|a| closed.iter().filter(move |b| !a.meets(*b)).map(move |b| (a, b)))
        .collect()
}

/// Ordered pairs of nonempty disjoint subsets.
pub fn nonempty_disjoint_pairs(space: &GtSpace) -> impl Iterator<Item = (Subset, Subset)> + '_ {
    let full = space.full();
    space
        .all_subsets()
        .filter(|g| !g.is_empty())
        .flat_map(move |g| {
            g.complement_in(full)
                .submasks()
                .filter(|h| !h.is_empty())
                .map(move |h| (g, h))
        })
}

pub fn is_t0(space: &GtSpace) -> bool {
    let open = space.s_lambda_open();
    distinct_pairs(space)
        .filter(|(p, q)| p < q)
        .all(|(p, q)| open.iter().any(|u| u.contains(p) != u.contains(q)))
}

/// Every singleton is lambda-closed.
pub fn is_t1(space: &GtSpace) -> bool {
    (0..space.len()).all(|p| space.is_lambda_closed(Subset::singleton(p)))
}

/// Each of two distinct points has a neighbourhood missing the other.
pub fn is_t1_by_definition(space: &GtSpace) -> bool {
    let open = space.s_lambda_open();
    distinct_pairs(space).all(|(p, q)| open.iter().any(|u| u.contains(p) && !u.contains(q)))
}

pub fn is_t2(space: &GtSpace) -> bool {
    distinct_pairs(space)
        .filter(|(p, q)| p < q)
        .all(|(p, q)| strong(space, Subset::singleton(p), Subset::singleton(q)))
}

pub fn is_urysohn(space: &GtSpace) -> bool {
    distinct_pairs(space)
        .filter(|(p, q)| p < q)
        .all(|(p, q)| closed_neighborhoods(space, Subset::singleton(p), Subset::singleton(q)))
}

pub fn is_completely_hausdorff(space: &GtSpace) -> bool {
    distinct_pairs(space).all(|(p, q)| {
        realfn::clopen_separator(space, Subset::singleton(p), Subset::singleton(q)).is_some()
    })
}

/// Every lambda-open set contains the closure of each of its points.
pub fn is_r0(space: &GtSpace) -> bool {
    space.s_lambda_open().iter().all(|u| {
        u.points()
            .all(|p| space.lambda_closure(Subset::singleton(p)).is_subset_of(u))
    })
}

/// Points outside each other's point-closure are strongly separated.
pub fn is_r1(space: &GtSpace) -> bool {
    distinct_pairs(space).all(|(p, q)| {
        space.lambda_closure(Subset::singleton(q)).contains(p)
            || strong(space, Subset::singleton(p), Subset::singleton(q))
    })
}

/// Closed set and outside point lie in open sets with disjoint closures.
pub fn is_regular_strong(space: &GtSpace) -> bool {
    closed_point_pairs(space).all(|(c, p)| closed_neighborhoods(space, c, Subset::singleton(p)))
}

/// Closed set and outside point lie in disjoint open sets.
pub fn is_regular_weak(space: &GtSpace) -> bool {
    closed_point_pairs(space).all(|(c, p)| strong(space, c, Subset::singleton(p)))
}

/// Closed set and outside point are separated by a continuous function.
/// An empty closed set is separated by the constant zero function.
pub fn is_completely_regular(space: &GtSpace) -> bool {
    closed_point_pairs(space).all(|(c, p)| {
        c.is_empty() || realfn::clopen_separator(space, Subset::singleton(p), c).is_some()
    })
}

pub fn is_t3(space: &GtSpace) -> bool {
    is_t1(space) && is_regular_weak(space)
}

pub fn is_tychonoff(space: &GtSpace) -> bool {
    is_t1(space) && is_completely_regular(space)
}

/// Disjoint closed sets lie in open sets with disjoint closures.
pub fn is_normal_strong(space: &GtSpace) -> bool {
    disjoint_closed_pairs(space)
        .into_iter()
        .all(|(a, b)| closed_neighborhoods(space, a, b))
}

/// Disjoint closed sets are strongly separated.
pub fn is_normal_weak(space: &GtSpace) -> bool {
    disjoint_closed_pairs(space)
        .into_iter()
        .all(|(a, b)| strong(space, a, b))
}

/// Weakly separated sets lie in open sets with disjoint closures.
pub fn is_completely_normal(space: &GtSpace) -> bool {
    nonempty_disjoint_pairs(space)
        .filter(|&(g, h)| weak(space, g, h))
        .all(|(g, h)| closed_neighborhoods(space, g, h))
}

/// Weakly separated sets are strongly separated.
pub fn weak_separation_is_strong(space: &GtSpace) -> bool {
    nonempty_disjoint_pairs(space)
        .filter(|&(g, h)| weak(space, g, h))
        .all(|(g, h)| strong(space, g, h))
}

pub fn is_t4(space: &GtSpace) -> bool {
    is_t1(space) && is_normal_weak(space)
}

pub fn is_t5(space: &GtSpace) -> bool {
    is_t1(space) && weak_separation_is_strong(space)
}

/// Finite intersections of lambda-open sets are lambda-open. Pairs suffice
/// by induction.
pub fn condition_a(space: &GtSpace) -> bool {
    space.s_lambda_open().is_intersection_closed()
}

/// `cl(E ∪ F) = cl(E) ∪ cl(F)` for all `E`, `F`.
pub fn closure_additive(space: &GtSpace) -> bool {
    first_non_additive_pair(space).is_none()
}

pub fn first_non_additive_pair(space: &GtSpace) -> Option<(Subset, Subset)> {
    let subsets: Vec<Subset> = space.all_subsets().collect();
    for (i, &e) in subsets.iter().enumerate() {
        for &f in &subsets[i + 1..] {
            if space.lambda_closure(e.union(f)) != space.lambda_closure(e).union(space.lambda_closure(f)) {
                return Some((e, f));
            }
        }
    }
    None
}

/// The union of any two lambda-closures is lambda-closed.
pub fn closure_unions_closed(space: &GtSpace) -> bool {
    let closures: crate::subset::SetFamily =
        space.all_subsets().map(|d| space.lambda_closure(d)).collect();
    closures
        .iter()
        .all(|a| closures.iter().all(|b| space.is_lambda_closed(a.union(b))))
}

/// Every named predicate, decided once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub urysohn: bool,
    pub completely_hausdorff: bool,
    pub r0: bool,
    pub r1: bool,
    pub regular_strong: bool,
    pub regular_weak: bool,
    pub completely_regular: bool,
    pub t3: bool,
    pub tychonoff: bool,
    pub normal_strong: bool,
    pub normal_weak: bool,
    pub completely_normal: bool,
    pub t4: bool,
    pub t5: bool,
    pub perfectly_normal: bool,
    pub condition_a: bool,
    pub closure_additive: bool,
}

impl AxiomReport {
    /// `(name, value)` in report order; names match the CLI output.
    pub fn entries(&self) -> [(&'static str, bool); 20] {
        [
            ("T0", self.t0),
            ("T1", self.t1),
            ("T2", self.t2),
            ("urysohn", self.urysohn),
            ("completelyHausdorff", self.completely_hausdorff),
            ("R0", self.r0),
            ("R1", self.r1),
            ("regularStrong", self.regular_strong),
            ("regularWeak", self.regular_weak),
            ("completelyRegular", self.completely_regular),
            ("T3", self.t3),
            ("tychonoff", self.tychonoff),
            ("normalStrong", self.normal_strong),
            ("normalWeak", self.normal_weak),
            ("completelyNormal", self.completely_normal),
            ("T4", self.t4),
            ("T5", self.t5),
            ("perfectlyNormal", self.perfectly_normal),
            ("conditionA", self.condition_a),
            ("closureAdditive", self.closure_additive),
        ]
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.entries().into_iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

pub fn classify(space: &GtSpace) -> AxiomReport {
    let t1 = is_t1(space);
    let regular_weak = is_regular_weak(space);
    let completely_regular = is_completely_regular(space);
    let normal_weak = is_normal_weak(space);
    AxiomReport {
        t0: is_t0(space),
        t1,
        t2: is_t2(space),
        urysohn: is_urysohn(space),
        completely_hausdorff: is_completely_hausdorff(space),
        r0: is_r0(space),
        r1: is_r1(space),
        regular_strong: is_regular_strong(space),
        regular_weak,
        completely_regular,
        t3: t1 && regular_weak,
        tychonoff: t1 && completely_regular,
        normal_strong: is_normal_strong(space),
        normal_weak,
        completely_normal: is_completely_normal(space),
        t4: t1 && normal_weak,
        t5: t1 && weak_separation_is_strong(space),
        perfectly_normal: realfn::perfectly_normal_check(space).holds,
        condition_a: condition_a(space),
        closure_additive: closure_additive(space),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e0, e1, e2};

    fn set(space: &GtSpace, names: &str) -> Subset {
        space.subset(names.split_whitespace()).unwrap()
    }

    #[test]
    fn weak_separation_examples() {
        let s = e1();
        assert_eq!(weakly_separated(&s, set(&s, "a"), set(&s, "c")), Ok(true));
        let a = set(&s, "a b");
        assert_eq!(weakly_separated(&s, a, a), Ok(false));
        let s2 = e2();
        assert_eq!(weakly_separated(&s2, set(&s2, "a"), set(&s2, "b")), Ok(false));
        assert_eq!(
            weakly_separated(&s2, Subset::EMPTY, set(&s2, "b")),
            Err(AxiomError::EmptyArgument)
        );
    }

    #[test]
    fn strong_separation_examples() {
        let s0 = e0();
        assert_eq!(strongly_separated(&s0, set(&s0, "a"), set(&s0, "b")), Ok(true));
        let s2 = e2();
        assert_eq!(strongly_separated(&s2, set(&s2, "a"), set(&s2, "b")), Ok(false));
        assert_eq!(strongly_separated(&s2, set(&s2, "a b"), set(&s2, "b")), Ok(false));
    }

    #[test]
    fn closed_neighborhood_examples() {
        let s0 = e0();
        assert_eq!(
            separated_by_closed_neighborhoods(&s0, set(&s0, "a"), set(&s0, "b")),
            Ok(true)
        );
        // Brute force over the four lambda-open sets of the three-point
        // space: {a,b} and {c} are clopen, so they separate a from c.
        let s2 = e2();
        let open = s2.s_lambda_open();
        let closed = s2.s_lambda_closed();
        let (a, c) = (set(&s2, "a"), set(&s2, "c"));
        let brute = open.supersets_of(a).any(|u| {
            open.supersets_of(c).any(|v| {
                closed.supersets_of(u).any(|p| closed.supersets_of(v).any(|q| !p.meets(q)))
            })
        });
        assert!(brute);
        assert_eq!(separated_by_closed_neighborhoods(&s2, a, c), Ok(brute));
        assert_eq!(
            separated_by_closed_neighborhoods(&s2, set(&s2, "a b"), set(&s2, "b c")),
            Ok(false)
        );
    }

    #[test]
    fn classify_examples() {
        let r0 = classify(&e0());
        assert!(r0.t0 && r0.t1 && r0.t2);
        let r2 = classify(&e2());
        assert!(!r2.t0);
        let r1 = classify(&e1());
        assert!(r1.t1);
        assert_eq!(r1.t1, is_t1_by_definition(&e1()));
    }

    #[test]
    fn report_names_are_unique() {
        let r = classify(&e1());
        let mut names: Vec<&str> = r.entries().iter().map(|(n, _)| *n).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 20);
        assert_eq!(r.get("T1"), Some(true));
        assert_eq!(r.get("nope"), None);
    }

    #[test]
    fn union_of_closed_singletons_breaks_additivity() {
        let s = e1();
        assert!(!closure_unions_closed(&s));
        assert!(!condition_a(&s));
    }
}
