//! Finite generalized topological spaces and their exact operators.
//!
//! A space is a ground set together with a family `gamma` that contains the
//! empty set and is closed under unions. The whole set need not belong to
//! `gamma`. From `gamma` we derive, lazily and exactly:
//!
//! * semi-open sets: `D` with `V ⊆ D ⊆ cl(V)` for some `V` in `gamma`;
//! * the semi-kernel of a set: the intersection of its semi-open supersets;
//! * lambda-closed sets: `D = M ∩ N` with `M` equal to its own semi-kernel
//!   and `N` semi-closed, equivalently `D = sker(D) ∩ scl(D)`;
//! * generalized lambda-closed sets: `D` whose lambda-closure lies inside
//!   every lambda-open superset of `D`;
//! * lambda-G-delta sets: intersections of lambda-open sets.
//!
//! Every derived family enumerates subsets of the ground set, so the cost
//! grows as `2^n`; the engine targets spaces of a handful of points.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use crate::subset::{all_subsets, GroundSet, GroundSetError, SetFamily, Subset};

/// Largest ground set on which derived families may be computed.
pub const DERIVED_LIMIT: usize = 24;

/// Spaces up to this size precompute the lambda-closure of every subset.
const CLOSURE_TABLE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("ground set must contain at least one point")]
    EmptyGround,
    #[error("ground set has {0} points; at most 64 are supported")]
    TooManyPoints(usize),
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("open sets are not closed under union: {left} ∪ {right} = {union} is missing")]
    NotUnionClosed {
        left: String,
        right: String,
        union: String,
    },
    #[error("subspace carrier must be nonempty")]
    EmptyCarrier,
    #[error("set {0:?} is not contained in the ground set")]
    OutOfRange(Subset),
}

impl From<GroundSetError> for SpaceError {
    fn from(e: GroundSetError) -> Self {
        match e {
            GroundSetError::Empty => SpaceError::EmptyGround,
            GroundSetError::TooManyPoints(n) => SpaceError::TooManyPoints(n),
            GroundSetError::DuplicatePoint(p) => SpaceError::DuplicatePoint(p),
        }
    }
}

#[derive(Default)]
struct Derived {
    s_gamma_open: OnceLock<SetFamily>,
    s_gamma_closed: OnceLock<SetFamily>,
    kernel_fixed: OnceLock<SetFamily>,
    s_lambda_closed: OnceLock<SetFamily>,
    s_lambda_open: OnceLock<SetFamily>,
    sg_lambda_closed: OnceLock<SetFamily>,
    sg_lambda_open: OnceLock<SetFamily>,
    s_lambda_gdelta: OnceLock<SetFamily>,
    lambda_closure: OnceLock<Vec<Subset>>,
    empty_kernels: AtomicUsize,
}

impl Clone for Derived {
    fn clone(&self) -> Self {
        Derived {
            s_gamma_open: self.s_gamma_open.clone(),
            s_gamma_closed: self.s_gamma_closed.clone(),
            kernel_fixed: self.kernel_fixed.clone(),
            s_lambda_closed: self.s_lambda_closed.clone(),
            s_lambda_open: self.s_lambda_open.clone(),
            sg_lambda_closed: self.sg_lambda_closed.clone(),
            sg_lambda_open: self.sg_lambda_open.clone(),
            s_lambda_gdelta: self.s_lambda_gdelta.clone(),
            lambda_closure: self.lambda_closure.clone(),
            empty_kernels: AtomicUsize::new(self.empty_kernels.load(Ordering::Relaxed)),
        }
    }
}

/// A finite generalized topological space.
///
/// Immutable after construction apart from one-shot cache fills. Concurrent
/// fills compute identical values, so sharing across threads is safe.
#[derive(Clone)]
pub struct GtSpace {
    ground: Arc<GroundSet>,
    gamma: SetFamily,
    derived: Derived,
}

impl PartialEq for GtSpace {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.gamma == other.gamma
    }
}

impl Eq for GtSpace {}

impl fmt::Debug for GtSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opens: Vec<String> = self.gamma.iter().map(|s| self.render(s)).collect();
        f.debug_struct("GtSpace")
            .field("points", &self.ground.labels())
            .field("gamma", &opens)
            .finish()
    }
}

/// Builds and validates a space from point names and open sets given as
/// lists of point names. The empty set is added to `gamma` if absent; a
/// family that is not union-closed is rejected, never repaired.
pub fn make_space<P, O, S>(points: P, opens: O) -> Result<GtSpace, SpaceError>
where
    P: IntoIterator,
    P::Item: Into<String>,
    O: IntoIterator<Item = S>,
    S: IntoIterator,
    S::Item: AsRef<str>,
{
    let ground = GroundSet::new(points)?;
    let mut members = Vec::new();
    for open in opens {
        let mut s = Subset::EMPTY;
        for name in open {
            let name = name.as_ref();
            let p = ground
                .position(name)
                .ok_or_else(|| SpaceError::UnknownPoint(name.to_string()))?;
            s = s.with(p);
        }
        members.push(s);
    }
    GtSpace::new(Arc::new(ground), members.into_iter().collect())
}

impl GtSpace {
    /// Validates `gamma` against `ground`, inserting the empty set.
    pub fn new(ground: Arc<GroundSet>, mut gamma: SetFamily) -> Result<Self, SpaceError> {
        let full = ground.full();
        if let Some(bad) = gamma.iter().find(|s| !s.is_subset_of(full)) {
            return Err(SpaceError::OutOfRange(bad));
        }
        gamma.insert(Subset::EMPTY);
        if let Some((a, b)) = gamma.first_union_gap() {
            return Err(SpaceError::NotUnionClosed {
                left: ground.render(a),
                right: ground.render(b),
                union: ground.render(a.union(b)),
            });
        }
        Ok(GtSpace {
            ground,
            gamma,
            derived: Derived::default(),
        })
    }

    /// Skips validation; callers guarantee `gamma` holds the empty set, is
    /// union-closed and lies inside the ground set.
    pub fn new_unchecked(ground: Arc<GroundSet>, gamma: SetFamily) -> Self {
        debug_assert!(gamma.contains(Subset::EMPTY) && gamma.is_union_closed());
        GtSpace {
            ground,
            gamma,
            derived: Derived::default(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ground_arc(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn gamma(&self) -> &SetFamily {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    pub fn render(&self, s: Subset) -> String {
        self.ground.render(s)
    }

    /// Builds a subset from point names.
    pub fn subset<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<Subset, SpaceError> {
        self.ground.subset(names).map_err(SpaceError::UnknownPoint)
    }

    pub fn all_subsets(&self) -> impl Iterator<Item = Subset> {
        assert!(
            self.len() <= DERIVED_LIMIT,
            "derived families are limited to {DERIVED_LIMIT} points"
        );
        all_subsets(self.len())
    }

    /// Intersection of all gamma-closed supersets of `d`, i.e. the complement
    /// of the union of the gamma-open sets missing `d`. The whole set is
    /// always gamma-closed, so the intersection is over a nonempty collection.
    pub fn gamma_closure(&self, d: Subset) -> Subset {
        let missing = self
            .gamma
            .iter()
            .filter(|v| !v.meets(d))
            .fold(Subset::EMPTY, Subset::union);
        missing.complement_in(self.full())
    }

    pub fn gamma_closed(&self) -> SetFamily {
        self.gamma.complements(self.full())
    }

    /// All semi-open sets: every `D` squeezed between some open `V` and its
    /// gamma-closure.
    pub fn s_gamma_open(&self) -> &SetFamily {
        self.derived.s_gamma_open.get_or_init(|| {
            let fam: SetFamily = self
                .gamma
                .iter()
                .flat_map(|v| {
                    let slack = self.gamma_closure(v).difference(v);
                    slack.submasks().map(move |extra| v.union(extra))
                })
                .collect();
            debug_assert!(fam.is_union_closed());
            fam
        })
    }

    pub fn s_gamma_closed(&self) -> &SetFamily {
        self.derived
            .s_gamma_closed
            .get_or_init(|| self.s_gamma_open().complements(self.full()))
    }

    pub fn is_s_gamma_open(&self, d: Subset) -> bool {
        self.s_gamma_open().contains(d)
    }

    /// Semi-kernel together with a flag that is `true` when no semi-open
    /// superset existed and the whole set was returned by convention.
    pub fn sker_checked(&self, d: Subset) -> (Subset, bool) {
        match self
            .s_gamma_open()
            .supersets_of(d)
            .reduce(Subset::intersection)
        {
            Some(k) => (k, false),
            None => {
                self.derived.empty_kernels.fetch_add(1, Ordering::Relaxed);
                (self.full(), true)
            }
        }
    }

    /// Intersection of all semi-open supersets of `d`.
    pub fn sker(&self, d: Subset) -> Subset {
        self.sker_checked(d).0
    }

    /// How many kernel evaluations fell back to the empty-intersection
    /// convention on this space.
    pub fn empty_kernel_count(&self) -> usize {
        self.derived.empty_kernels.load(Ordering::Relaxed)
    }

    pub fn s_gamma_closure(&self, d: Subset) -> Subset {
        closure_in_family(self.s_gamma_open(), d, &self.ground)
    }

    pub fn s_gamma_interior(&self, d: Subset) -> Subset {
        interior_in_family(self.s_gamma_open(), d, &self.ground)
    }

    /// Sets equal to their own semi-kernel.
    pub fn kernel_fixed(&self) -> &SetFamily {
        self.derived.kernel_fixed.get_or_init(|| {
            self.all_subsets()
                .filter(|&m| self.sker(m) == m)
                .collect()
        })
    }

    /// Lambda-closed sets via the characterization `D = sker(D) ∩ scl(D)`.
    pub fn s_lambda_closed(&self) -> &SetFamily {
        self.derived.s_lambda_closed.get_or_init(|| {
            let fam: SetFamily = self
                .all_subsets()
                .filter(|&d| self.sker(d).intersection(self.s_gamma_closure(d)) == d)
                .collect();
            debug_assert_eq!(fam, self.s_lambda_closed_by_definition());
            debug_assert!(fam.is_intersection_closed());
            fam
        })
    }

    /// Lambda-closed sets straight from the definition: every `M ∩ N` with
    /// `M = sker(M)` and `N` semi-closed.
    pub fn s_lambda_closed_by_definition(&self) -> SetFamily {
        let kernels = self.kernel_fixed();
        let closed = self.s_gamma_closed();
        kernels
            .iter()
            .flat_map(|m| closed.iter().map(move |n| m.intersection(n)))
            .collect()
    }

    pub fn s_lambda_open(&self) -> &SetFamily {
        self.derived.s_lambda_open.get_or_init(|| {
            let fam = self.s_lambda_closed().complements(self.full());
            debug_assert!(fam.is_union_closed());
            fam
        })
    }

    pub fn is_lambda_open(&self, d: Subset) -> bool {
        self.s_lambda_open().contains(d)
    }

    pub fn is_lambda_closed(&self, d: Subset) -> bool {
        self.s_lambda_closed().contains(d)
    }

    fn closure_table(&self) -> Option<&[Subset]> {
        if self.len() > CLOSURE_TABLE_LIMIT {
            return None;
        }
        Some(self.derived.lambda_closure.get_or_init(|| {
            let open = self.s_lambda_open();
            all_subsets(self.len())
                .map(|d| closure_in_family(open, d, &self.ground))
                .collect()
        }))
    }

    /// Lambda-closure: points every lambda-open neighbourhood of which
    /// meets `d`.
    pub fn lambda_closure(&self, d: Subset) -> Subset {
        match self.closure_table() {
            Some(t) => t[d.bits() as usize],
            None => closure_in_family(self.s_lambda_open(), d, &self.ground),
        }
    }

    /// Lambda-interior: union of the lambda-open sets inside `d`.
    pub fn lambda_interior(&self, d: Subset) -> Subset {
        interior_in_family(self.s_lambda_open(), d, &self.ground)
    }

    /// Intersection of the lambda-open supersets of `d`. The whole set is
    /// always lambda-open, so this is never empty-indexed.
    pub fn lambda_kernel(&self, d: Subset) -> Subset {
        self.s_lambda_open()
            .supersets_of(d)
            .fold(self.full(), Subset::intersection)
    }

    /// Sets whose lambda-closure sits inside each lambda-open superset.
    pub fn sg_lambda_closed(&self) -> &SetFamily {
        self.derived.sg_lambda_closed.get_or_init(|| {
            let open = self.s_lambda_open();
            self.all_subsets()
                .filter(|&d| {
                    let cl = self.lambda_closure(d);
                    open.supersets_of(d).all(|v| cl.is_subset_of(v))
                })
                .collect()
        })
    }

    pub fn sg_lambda_open(&self) -> &SetFamily {
        self.derived
            .sg_lambda_open
            .get_or_init(|| self.sg_lambda_closed().complements(self.full()))
    }

    pub fn is_sg_open(&self, d: Subset) -> bool {
        self.sg_lambda_open().contains(d)
    }

    pub fn is_sg_closed(&self, d: Subset) -> bool {
        self.sg_lambda_closed().contains(d)
    }

    /// Intersections of nonempty subfamilies of the lambda-open family.
    pub fn s_lambda_gdelta(&self) -> &SetFamily {
        self.derived
            .s_lambda_gdelta
            .get_or_init(|| intersection_closure(self.s_lambda_open()))
    }

    /// The subspace on `carrier`, with open sets `{carrier ∩ V : V ∈ gamma}`
    /// re-indexed onto the carrier's points in order.
    pub fn subspace(&self, carrier: Subset) -> Result<GtSpace, SpaceError> {
        if carrier.is_empty() {
            return Err(SpaceError::EmptyCarrier);
        }
        if !carrier.is_subset_of(self.full()) {
            return Err(SpaceError::OutOfRange(carrier));
        }
        if carrier == self.full() {
            return Ok(GtSpace::new_unchecked(self.ground.clone(), self.gamma.clone()));
        }
        let ground = GroundSet::new(carrier.points().map(|p| self.ground.label(p).to_string()))?;
        let gamma = self
            .gamma
            .iter()
            .map(|v| compress(carrier, v.intersection(carrier)))
            .collect();
        Ok(GtSpace::new_unchecked(Arc::new(ground), gamma))
    }

    /// Relabels points: point `i` moves to position `perm[i]`. Labels stay
    /// in place, only membership moves.
    pub fn permuted(&self, perm: &[usize]) -> GtSpace {
        assert_eq!(perm.len(), self.len());
        let gamma = self.gamma.iter().map(|s| permute(s, perm)).collect();
        GtSpace::new_unchecked(self.ground.clone(), gamma)
    }
}

/// Closure of `d` when `family` is read as the open sets: the points `y` such
/// that every member containing `y` meets `d`.
pub fn closure_in_family(family: &SetFamily, d: Subset, ground: &GroundSet) -> Subset {
    let full = ground.full();
    let avoiding = family
        .iter()
        .filter(|v| !v.meets(d))
        .fold(Subset::EMPTY, Subset::union);
    avoiding.complement_in(full)
}

/// Pointwise adherence test, kept separate from [`closure_in_family`] so the
/// two formulations can be checked against each other.
pub fn closure_by_adherence(family: &SetFamily, d: Subset, ground: &GroundSet) -> Subset {
    let mut out = Subset::EMPTY;
    for y in ground.full().points() {
        if family.iter().filter(|v| v.contains(y)).all(|v| v.meets(d)) {
            out = out.with(y);
        }
    }
    out
}

/// Intersection of the closed supersets of `d` (complements of members).
pub fn closure_by_closed_supersets(family: &SetFamily, d: Subset, ground: &GroundSet) -> Subset {
    let full = ground.full();
    family
        .iter()
        .map(|v| v.complement_in(full))
        .filter(|c| d.is_subset_of(*c))
        .fold(full, Subset::intersection)
}

/// Union of the members contained in `d`.
pub fn interior_in_family(family: &SetFamily, d: Subset, _ground: &GroundSet) -> Subset {
    family
        .iter()
        .filter(|v| v.is_subset_of(d))
        .fold(Subset::EMPTY, Subset::union)
}

/// Closes a family under pairwise (hence finite) intersection.
pub fn intersection_closure(family: &SetFamily) -> SetFamily {
    let mut out = family.clone();
    let mut frontier: Vec<Subset> = family.iter().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for b in family.iter() {
                let c = a.intersection(b);
                if out.insert(c) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Maps the points of `s ⊆ carrier` onto `0..|carrier|` in order.
pub fn compress(carrier: Subset, s: Subset) -> Subset {
    let mut out = Subset::EMPTY;
    for (i, p) in carrier.points().enumerate() {
        if s.contains(p) {
            out = out.with(i);
        }
    }
    out
}

/// Inverse of [`compress`].
pub fn expand(carrier: Subset, s: Subset) -> Subset {
    let mut out = Subset::EMPTY;
    for (i, p) in carrier.points().enumerate() {
        if s.contains(i) {
            out = out.with(p);
        }
    }
    out
}

pub fn permute(s: Subset, perm: &[usize]) -> Subset {
    s.points().fold(Subset::EMPTY, |acc, p| acc.with(perm[p]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e0, e1, e2};

    fn set(space: &GtSpace, names: &str) -> Subset {
        space.subset(names.split_whitespace()).unwrap()
    }

    fn family(space: &GtSpace, sets: &[&str]) -> SetFamily {
        sets.iter().map(|s| set(space, s)).collect()
    }

    #[test]
    fn make_space_inserts_empty_set() {
        let s = make_space(["a", "b"], Vec::<Vec<&str>>::new()).unwrap();
        assert_eq!(s.gamma().members(), &[Subset::EMPTY]);
    }

    #[test]
    fn make_space_rejects_bad_input() {
        let err = make_space(["a", "b"], [vec![], vec!["a"], vec!["b"]]).unwrap_err();
        assert_eq!(
            err,
            SpaceError::NotUnionClosed {
                left: "{a}".into(),
                right: "{b}".into(),
                union: "{a,b}".into()
            }
        );
        assert_eq!(
            make_space(["a", "a"], Vec::<Vec<&str>>::new()).unwrap_err(),
            SpaceError::DuplicatePoint("a".into())
        );
        assert_eq!(
            make_space(["a"], [vec!["q"]]).unwrap_err(),
            SpaceError::UnknownPoint("q".into())
        );
    }

    #[test]
    fn gamma_closure_examples() {
        let s = e1();
        assert_eq!(s.gamma_closure(Subset::EMPTY), set(&s, "d"));
        assert_eq!(s.gamma_closure(set(&s, "b")), s.full());
        assert_eq!(s.gamma_closure(s.full()), s.full());
    }

    #[test]
    fn semi_open_sets_of_the_worked_example() {
        let s = e1();
        let expected = family(
            &s,
            &["", "a b", "b c", "a b c", "d", "a b d", "b c d", "a b c d"],
        );
        assert_eq!(s.s_gamma_open(), &expected);
        let e0 = e0();
        assert_eq!(e0.s_gamma_open().len(), 4);
    }

    #[test]
    fn discrete_space_is_all_semi_open() {
        let s = make_space(["a", "b", "c"], [vec!["a"], vec!["b"], vec!["c"], vec!["a", "b"], vec!["a", "c"], vec!["b", "c"], vec!["a", "b", "c"]]).unwrap();
        assert_eq!(s.s_gamma_open().len(), 8);
    }

    #[test]
    fn semi_kernel_examples() {
        let s = e1();
        assert_eq!(s.sker(set(&s, "a")), set(&s, "a b"));
        assert_eq!(s.sker(set(&s, "a c")), set(&s, "a b c"));
        assert_eq!(s.sker(s.full()), s.full());
        assert_eq!(s.empty_kernel_count(), 0);
    }

    #[test]
    fn semi_closure_examples() {
        let s = e1();
        assert_eq!(s.s_gamma_closure(set(&s, "a")), set(&s, "a"));
        assert_eq!(s.s_gamma_closure(set(&s, "a c")), set(&s, "a b c"));
        assert_eq!(s.s_gamma_closure(s.full()), s.full());
        let ac = set(&s, "a c");
        assert_eq!(s.sker(ac).intersection(s.s_gamma_closure(ac)), set(&s, "a b c"));
    }

    #[test]
    fn closure_routes_agree_on_worked_example() {
        let s = e1();
        for d in s.all_subsets() {
            let fam = s.s_gamma_open();
            let a = closure_in_family(fam, d, s.ground());
            assert_eq!(a, closure_by_adherence(fam, d, s.ground()));
            assert_eq!(a, closure_by_closed_supersets(fam, d, s.ground()));
        }
    }

    #[test]
    fn interior_examples() {
        let s = e1();
        let open = s.s_lambda_open();
        let ab = set(&s, "a b");
        let direct = interior_in_family(open, ab, s.ground());
        let dual = closure_in_family(open, ab.complement_in(s.full()), s.ground()).complement_in(s.full());
        assert_eq!(direct, dual);
        assert_eq!(direct, ab);
        assert_eq!(interior_in_family(open, Subset::EMPTY, s.ground()), Subset::EMPTY);
        let disc = make_space(["a", "b"], [vec!["a"], vec!["b"], vec!["a", "b"]]).unwrap();
        for d in disc.all_subsets() {
            assert_eq!(interior_in_family(disc.gamma(), d, disc.ground()), d);
        }
    }

    #[test]
    fn lambda_closed_examples() {
        let s = e1();
        let closed = s.s_lambda_closed();
        for yes in ["a", "b", "c", "d"] {
            assert!(closed.contains(set(&s, yes)), "{yes}");
        }
        assert!(!closed.contains(set(&s, "a c")));
        assert_eq!(s.s_lambda_closed_by_definition(), *closed);
        assert_eq!(e0().s_lambda_closed().len(), 4);
        let e2 = e2();
        assert_eq!(e2.s_lambda_closed(), &family(&e2, &["", "c", "a b", "a b c"]));
    }

    #[test]
    fn generalized_closed_examples() {
        let s = e2();
        let a = set(&s, "a");
        assert!(s.is_sg_closed(a));
        assert!(!s.is_lambda_closed(a));
        assert_eq!(s.lambda_closure(a), set(&s, "a b"));
        let e1 = e1();
        assert!(e1.s_lambda_closed().is_subfamily_of(e1.sg_lambda_closed()));
        assert!(e1.is_sg_closed(e1.full()));
    }

    #[test]
    fn subspace_examples() {
        let s = e1();
        let sub = s.subspace(set(&s, "a b")).unwrap();
        assert_eq!(sub.ground().labels(), &["a", "b"]);
        assert_eq!(sub.gamma(), &family(&sub, &["", "a b", "b"]));
        assert_eq!(s.subspace(s.full()).unwrap(), s);
        let d = s.subspace(set(&s, "d")).unwrap();
        assert_eq!(d.gamma().members(), &[Subset::EMPTY]);
        assert_eq!(s.subspace(Subset::EMPTY).unwrap_err(), SpaceError::EmptyCarrier);
    }

    #[test]
    fn compress_expand_round_trip() {
        let carrier = Subset::from_bits(0b10110);
        for s in carrier.submasks() {
            assert_eq!(expand(carrier, compress(carrier, s)), s);
        }
    }

    #[test]
    fn gdelta_of_small_spaces() {
        assert_eq!(e0().s_lambda_gdelta().len(), 4);
        let e2 = e2();
        assert_eq!(e2.s_lambda_gdelta(), e2.s_lambda_open());
    }
}
