//! Finite-range `[0,1]`-valued functions on a space, kept exact as dyadic
//! rationals.
//!
//! A function is continuous when the preimage of every open subset of the
//! reals is lambda-open. With finitely many values, any real open set pulls
//! back to a union of fibers, and each single value can be isolated by a
//! small interval. Because the lambda-open family is union-closed,
//! continuity is therefore equivalent to every fiber being lambda-open.
//! [`is_continuous`] uses the fiber test and
//! [`is_continuous_by_intervals`] checks preimages of intervals directly.

use std::collections::BTreeMap;

use crate::axioms;
use crate::dyadic::Dyadic;
use crate::space::GtSpace;
use crate::subset::{SetFamily, Subset};

/// Deepest bisection accepted by [`urysohn_construct`].
pub const MAX_DEPTH: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealFnError {
    #[error("arguments must be nonempty")]
    EmptyArgument,
    #[error("arguments must be disjoint")]
    NotDisjoint,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("no open E with {lower:?} ⊆ E and cl(E) ⊆ {upper:?}")]
    ShrinkFailed { lower: Subset, upper: Subset },
    #[error("zero set is not an intersection of lambda-open sets")]
    NotGDelta,
    #[error("depth must lie in 1..={MAX_DEPTH}, got {0}")]
    InvalidDepth(u32),
    #[error("function has {got} values for {expected} points")]
    WrongLength { expected: usize, got: usize },
    #[error("value {0} lies outside [0,1]")]
    OutOfRange(Dyadic),
}

/// A `[0,1]`-valued function, one exact value per point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicFn {
    values: Vec<Dyadic>,
}

impl DyadicFn {
    pub fn new(values: Vec<Dyadic>) -> Result<Self, RealFnError> {
        if let Some(v) = values.iter().find(|v| **v > Dyadic::ONE) {
            return Err(RealFnError::OutOfRange(*v));
        }
        Ok(DyadicFn { values })
    }

    pub fn constant(n: usize, v: Dyadic) -> Self {
        DyadicFn { values: vec![v; n] }
    }

    /// `lo` on `low`, `hi` elsewhere.
    fn two_valued(n: usize, low: Subset, lo: Dyadic, hi: Dyadic) -> Self {
        DyadicFn {
            values: (0..n).map(|p| if low.contains(p) { lo } else { hi }).collect(),
        }
    }

    pub fn values(&self) -> &[Dyadic] {
        &self.values
    }

    pub fn value(&self, point: usize) -> Dyadic {
        self.values[point]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Points where the function takes value `v`.
    pub fn fiber(&self, v: Dyadic) -> Subset {
        self.preimage(|x| x == v)
    }

    pub fn preimage(&self, mut pred: impl FnMut(Dyadic) -> bool) -> Subset {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| pred(**v))
            .fold(Subset::EMPTY, |acc, (p, _)| acc.with(p))
    }

    /// Distinct values with their fibers, ascending by value.
    pub fn fibers(&self) -> Vec<(Dyadic, Subset)> {
        let mut map: BTreeMap<Dyadic, Subset> = BTreeMap::new();
        for (p, v) in self.values.iter().enumerate() {
            let e = map.entry(*v).or_default();
            *e = e.with(p);
        }
        map.into_iter().collect()
    }

    pub fn zero_set(&self) -> Subset {
        self.fiber(Dyadic::ZERO)
    }

    fn check_len(&self, space: &GtSpace) -> Result<(), RealFnError> {
        if self.len() != space.len() {
            return Err(RealFnError::WrongLength {
                expected: space.len(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

/// Every fiber is lambda-open.
pub fn is_continuous(space: &GtSpace, f: &DyadicFn) -> bool {
    assert_eq!(f.len(), space.len(), "function must be total on the ground set");
    f.fibers().iter().all(|(_, fiber)| space.is_lambda_open(*fiber))
}

/// Checks the preimage of every open interval `(lo, hi)` whose endpoints
/// come from the values, the midpoints between consecutive values, and one
/// point beyond each end. Every real open interval has the same preimage as
/// one of these, and every open set is a union of intervals.
pub fn is_continuous_by_intervals(space: &GtSpace, f: &DyadicFn) -> bool {
    assert_eq!(f.len(), space.len(), "function must be total on the ground set");
    // Work on doubled numerators at a common exponent so midpoints stay exact.
    let exp = f.values.iter().map(|v| v.exponent()).max().unwrap_or(0) + 1;
    let scale = |v: Dyadic| (v.numerator() << (exp - v.exponent())) as i128;
    let mut vals: Vec<i128> = f.values.iter().map(|v| scale(*v)).collect();
    vals.sort_unstable();
    vals.dedup();
    let mut cuts: Vec<i128> = vec![vals[0] - 1, vals[vals.len() - 1] + 1];
    cuts.extend(&vals);
    cuts.extend(vals.windows(2).map(|w| (w[0] + w[1]) / 2));
    cuts.sort_unstable();
    cuts.dedup();
    let point_vals: Vec<i128> = f.values.iter().map(|v| scale(*v)).collect();
    for (i, &lo) in cuts.iter().enumerate() {
        for &hi in &cuts[i + 1..] {
            let pre = point_vals
                .iter()
                .enumerate()
                .filter(|(_, v)| lo < **v && **v < hi)
                .fold(Subset::EMPTY, |acc, (p, _)| acc.with(p));
            if !space.is_lambda_open(pre) {
                return false;
            }
        }
    }
    true
}

/// Smallest lambda-clopen `U` with `a ⊆ U` and `U ∩ b = ∅`.
///
/// A separating function partitions the space into open fibers. Merging
/// every fiber other than the zero fiber into the one-fiber keeps all fibers
/// open (the family is union-closed), so a separating function exists
/// exactly when a clopen set sits between `a` and the complement of `b`.
pub(crate) fn clopen_separator(space: &GtSpace, a: Subset, b: Subset) -> Option<Subset> {
    if a.meets(b) {
        return None;
    }
    let full = space.full();
    space
        .s_lambda_open()
        .supersets_of(a)
        .find(|u| !u.meets(b) && space.is_lambda_open(u.complement_in(full)))
}

/// A continuous `f` with `f(a) = {0}` and `f(b) = {1}`, or `None` when no
/// such function exists. Deterministic: the zero fiber is the smallest
/// admissible one in canonical order and every other point maps to 1.
pub fn separated_by_function(
    space: &GtSpace,
    a: Subset,
    b: Subset,
) -> Result<Option<DyadicFn>, RealFnError> {
    if a.is_empty() || b.is_empty() {
        return Err(RealFnError::EmptyArgument);
    }
    if a.meets(b) {
        return Err(RealFnError::NotDisjoint);
    }
    Ok(clopen_separator(space, a, b)
        .map(|u| DyadicFn::two_valued(space.len(), u, Dyadic::ZERO, Dyadic::ONE)))
}

/// Labelled open sets `V(r/2^depth)` between a closed set `lower` and the
/// open set `top = V(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicFamily {
    pub depth: u32,
    pub lower: Subset,
    pub top: Subset,
    pub levels: BTreeMap<Dyadic, Subset>,
}

/// A broken family invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyViolation {
    pub invariant: &'static str,
    pub labels: Vec<Dyadic>,
}

impl DyadicFamily {
    /// `V(q)` for proper labels, `top` for `q = 1`.
    pub fn get(&self, q: Dyadic) -> Option<Subset> {
        if q == Dyadic::ONE {
            Some(self.top)
        } else {
            self.levels.get(&q).copied()
        }
    }

    /// Checks: every `V(q)` is lambda-open; (a) `lower ⊆ V(q)`;
    /// (b) `cl V(q) ⊆ top`; (c) `q < q'` implies `cl V(q) ⊆ V(q')`, with
    /// `V(1) = top` allowed as `q'`.
    pub fn check_invariants(&self, space: &GtSpace) -> Result<(), FamilyViolation> {
        let fail = |invariant, labels| Err(FamilyViolation { invariant, labels });
        for (&q, &v) in &self.levels {
            if !space.is_lambda_open(v) {
                return fail("open", vec![q]);
            }
            if !self.lower.is_subset_of(v) {
                return fail("a", vec![q]);
            }
            if !space.lambda_closure(v).is_subset_of(self.top) {
                return fail("b", vec![q]);
            }
        }
        let mut labels: Vec<(Dyadic, Subset)> = self.levels.iter().map(|(q, v)| (*q, *v)).collect();
        labels.push((Dyadic::ONE, self.top));
        for (i, &(q, v)) in labels.iter().enumerate() {
            let cl = space.lambda_closure(v);
            for &(q2, v2) in &labels[i + 1..] {
                if q < Dyadic::ONE && !cl.is_subset_of(v2) {
                    return fail("c", vec![q, q2]);
                }
            }
        }
        Ok(())
    }

    /// `0` on `V(2^-depth)`, otherwise the least label whose set contains
    /// the point, otherwise `1`.
    pub fn function(&self, n: usize) -> DyadicFn {
        let values = (0..n)
            .map(|p| {
                self.levels
                    .iter()
                    .find(|(_, v)| v.contains(p))
                    .map(|(q, _)| *q)
                    .map(|q| if q == Dyadic::new(1, self.depth) { Dyadic::ZERO } else { q })
                    .unwrap_or(Dyadic::ONE)
            })
            .collect();
        DyadicFn { values }
    }
}

/// Among lambda-open `E` with `lower ⊆ E` and `cl E ⊆ upper`, the one with
/// the smallest closure (by size, then canonical order), ties broken by the
/// canonical order of `E`.
pub fn shrink(space: &GtSpace, lower: Subset, upper: Subset) -> Option<Subset> {
    space
        .s_lambda_open()
        .supersets_of(lower)
        .filter_map(|e| {
            let cl = space.lambda_closure(e);
            cl.is_subset_of(upper).then_some((cl.len(), cl, e))
        })
        .min()
        .map(|(_, _, e)| e)
}

fn require_closed(space: &GtSpace, s: Subset, name: &str) -> Result<(), RealFnError> {
    if space.is_lambda_closed(s) {
        Ok(())
    } else {
        Err(RealFnError::HypothesisViolated(format!(
            "{name} = {} is not lambda-closed",
            space.render(s)
        )))
    }
}

fn require_normal_with_condition_a(space: &GtSpace) -> Result<(), RealFnError> {
    if !axioms::is_normal_weak(space) {
        return Err(RealFnError::HypothesisViolated("space is not normal".into()));
    }
    if !axioms::condition_a(space) {
        return Err(RealFnError::HypothesisViolated(
            "lambda-open sets are not closed under finite intersection".into(),
        ));
    }
    Ok(())
}

/// Bisects between `a` and `Y − b` down to labels `r/2^depth`, then reads off
/// the step function. Needs `a`, `b` disjoint, nonempty and lambda-closed in a
/// normal space whose lambda-open sets are closed under finite intersection.
pub fn urysohn_construct(
    space: &GtSpace,
    a: Subset,
    b: Subset,
    depth: u32,
) -> Result<(DyadicFamily, DyadicFn), RealFnError> {
    if a.is_empty() || b.is_empty() {
        return Err(RealFnError::EmptyArgument);
    }
    if a.meets(b) {
        return Err(RealFnError::NotDisjoint);
    }
    if depth == 0 || depth > MAX_DEPTH {
        return Err(RealFnError::InvalidDepth(depth));
    }
    require_closed(space, a, "A")?;
    require_closed(space, b, "B")?;
    require_normal_with_condition_a(space)?;
    let family = build_family(space, a, b.complement_in(space.full()), depth)?;
    let f = family.function(space.len());
    Ok((family, f))
}

fn build_family(space: &GtSpace, lower: Subset, top: Subset, depth: u32) -> Result<DyadicFamily, RealFnError> {
    let mut levels: BTreeMap<Dyadic, Subset> = BTreeMap::new();
    for k in 1..=depth {
        // Endpoints of the current subdivision: 0 (the closed set itself),
        // existing labels, and 1 (the top open set).
        let mut points: Vec<(Dyadic, Subset, Subset)> = vec![(Dyadic::ZERO, lower, lower)];
        points.extend(levels.iter().map(|(q, v)| (*q, *v, space.lambda_closure(*v))));
        points.push((Dyadic::ONE, top, top));
        for w in points.windows(2) {
            let (q0, _, cl0) = w[0];
            let (_, v1, _) = w[1];
            let mid = q0.checked_add(Dyadic::new(1, k)).expect("label fits");
            let e = shrink(space, cl0, v1).ok_or(RealFnError::ShrinkFailed { lower: cl0, upper: v1 })?;
            levels.insert(mid, e);
        }
    }
    Ok(DyadicFamily {
        depth,
        lower,
        top,
        levels,
    })
}

/// Intersections of nonempty subfamilies of the lambda-open family.
pub fn s_lambda_g_delta_family(space: &GtSpace) -> SetFamily {
    space.s_lambda_gdelta().clone()
}

/// The decreasing chain `V_1 ⊋ V_2 ⊋ ... ⊋ V_s = m` of lambda-open sets,
/// starting from `Y − n` and intersecting in the open supersets of `m` in
/// canonical order, keeping only steps that shrink the set.
pub fn gdelta_chain(space: &GtSpace, m: Subset, n: Subset) -> Result<Vec<Subset>, RealFnError> {
    let full = space.full();
    let mut current = n.complement_in(full);
    let mut chain = vec![current];
    for u in space.s_lambda_open().supersets_of(m) {
        if current == m {
            break;
        }
        let next = current.intersection(u);
        if next != current {
            current = next;
            chain.push(current);
        }
    }
    if current != m {
        return Err(RealFnError::NotGDelta);
    }
    Ok(chain)
}

/// A continuous function with zero set exactly `m` and value 1 on `n`.
///
/// Each chain member `V_k` yields `f_k` from [`urysohn_construct`] on the
/// pair `(m, Y − V_k)`; the series `Σ 2^-k f_k` is summed exactly, with the
/// tail past the stabilization index `s` folded into `2^-s f_s`.
pub fn gdelta_zero_set_function(
    space: &GtSpace,
    m: Subset,
    n: Subset,
    depth: u32,
) -> Result<DyadicFn, RealFnError> {
    if m.is_empty() {
        return Err(RealFnError::HypothesisViolated("M must be nonempty".into()));
    }
    if m.meets(n) {
        return Err(RealFnError::NotDisjoint);
    }
    require_closed(space, m, "M")?;
    require_closed(space, n, "N")?;
    require_normal_with_condition_a(space)?;
    if !space.s_lambda_gdelta().contains(m) {
        return Err(RealFnError::NotGDelta);
    }
    let chain = gdelta_chain(space, m, n)?;
    let full = space.full();
    let parts: Vec<DyadicFn> = chain
        .iter()
        .map(|v| {
            let outside = v.complement_in(full);
            if outside.is_empty() {
                Ok(DyadicFn::constant(space.len(), Dyadic::ZERO))
            } else {
                urysohn_construct(space, m, outside, depth).map(|(_, f)| f)
            }
        })
        .collect::<Result<_, _>>()?;
    let s = parts.len() as u32;
    let values = (0..space.len())
        .map(|p| {
            let head = parts
                .iter()
                .zip(1u32..)
                .map(|(f, k)| f.value(p).halved(k))
                .fold(Dyadic::ZERO, |acc, x| acc.checked_add(x).expect("dyadic sum"));
            let tail = parts[parts.len() - 1].value(p).halved(s);
            head.checked_add(tail).expect("dyadic sum")
        })
        .collect();
    DyadicFn::new(values)
}

/// Outcome of the perfect-normality search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectNormality {
    pub holds: bool,
    /// No pair of disjoint nonempty closed sets exists.
    pub vacuous: bool,
    pub pairs_checked: usize,
    /// First pair with no exact separating function.
    pub witness: Option<(Subset, Subset)>,
}

/// A continuous `f` with `f⁻¹(0) = m` and `f⁻¹(1) = n` exactly. Its fibers
/// are `m`, `n` and (merged into one fiber at 1/2) the rest, so it exists
/// exactly when those three sets are lambda-open.
pub fn exact_separator(space: &GtSpace, m: Subset, n: Subset) -> Option<DyadicFn> {
    if m.meets(n) {
        return None;
    }
    let rest = m.union(n).complement_in(space.full());
    if !(space.is_lambda_open(m) && space.is_lambda_open(n) && space.is_lambda_open(rest)) {
        return None;
    }
    let half = Dyadic::new(1, 1);
    let values = (0..space.len())
        .map(|p| {
            if m.contains(p) {
                Dyadic::ZERO
            } else if n.contains(p) {
                Dyadic::ONE
            } else {
                half
            }
        })
        .collect();
    Some(DyadicFn { values })
}

/// Every pair of disjoint nonempty lambda-closed sets is the exact zero set
/// and one set of some continuous function.
pub fn perfectly_normal_check(space: &GtSpace) -> PerfectNormality {
    let mut pairs_checked = 0;
    for (m, n) in axioms::disjoint_closed_pairs(space) {
        if m.is_empty() || n.is_empty() {
            continue;
        }
        pairs_checked += 1;
        if exact_separator(space, m, n).is_none() {
            return PerfectNormality {
                holds: false,
                vacuous: false,
                pairs_checked,
                witness: Some((m, n)),
            };
        }
    }
    PerfectNormality {
        holds: true,
        vacuous: pairs_checked == 0,
        pairs_checked,
        witness: None,
    }
}

/// Checks that a function is total on the space.
pub fn check_total(space: &GtSpace, f: &DyadicFn) -> Result<(), RealFnError> {
    f.check_len(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e0, e1, e2};
    use crate::space::make_space;

    fn set(space: &GtSpace, names: &str) -> Subset {
        space.subset(names.split_whitespace()).unwrap()
    }

    fn f(vals: &[(u128, u32)]) -> DyadicFn {
        DyadicFn::new(vals.iter().map(|&(n, e)| Dyadic::new(n, e)).collect()).unwrap()
    }

    #[test]
    fn continuity_examples() {
        let s = e2();
        let g = f(&[(0, 0), (0, 0), (1, 0)]);
        assert!(is_continuous(&s, &g));
        let h = f(&[(0, 0), (1, 0), (1, 0)]);
        assert!(!is_continuous(&s, &h));
        let c = f(&[(1, 1), (1, 1), (1, 1)]);
        assert!(is_continuous(&s, &c));
        for x in [&g, &h, &c] {
            assert_eq!(is_continuous(&s, x), is_continuous_by_intervals(&s, x));
        }
    }

    #[test]
    fn out_of_range_values_are_rejected() {
        assert_eq!(
            DyadicFn::new(vec![Dyadic::new(3, 1)]),
            Err(RealFnError::OutOfRange(Dyadic::new(3, 1)))
        );
    }

    #[test]
    fn separation_examples() {
        let s0 = e0();
        let g = separated_by_function(&s0, set(&s0, "a"), set(&s0, "b")).unwrap().unwrap();
        assert_eq!(g.values(), &[Dyadic::ZERO, Dyadic::ONE]);
        let s2 = e2();
        let g = separated_by_function(&s2, set(&s2, "a"), set(&s2, "c")).unwrap().unwrap();
        assert_eq!(g.values(), &[Dyadic::ZERO, Dyadic::ZERO, Dyadic::ONE]);
        assert_eq!(separated_by_function(&s2, set(&s2, "a"), set(&s2, "b")), Ok(None));
        assert_eq!(
            separated_by_function(&s2, set(&s2, "a b"), set(&s2, "b")),
            Err(RealFnError::NotDisjoint)
        );
        assert_eq!(
            separated_by_function(&s2, Subset::EMPTY, set(&s2, "b")),
            Err(RealFnError::EmptyArgument)
        );
    }

    #[test]
    fn urysohn_on_discrete_pair() {
        let s = make_space(["a", "b"], [vec!["a"], vec!["b"], vec!["a", "b"]]).unwrap();
        let (fam, g) = urysohn_construct(&s, set(&s, "a"), set(&s, "b"), 1).unwrap();
        assert_eq!(fam.levels.get(&Dyadic::new(1, 1)), Some(&set(&s, "a")));
        assert_eq!(g.values(), &[Dyadic::ZERO, Dyadic::ONE]);
        fam.check_invariants(&s).unwrap();
    }

    #[test]
    fn urysohn_rejects_bad_input() {
        let s = e0();
        assert_eq!(
            urysohn_construct(&s, set(&s, "a"), set(&s, "a b"), 2),
            Err(RealFnError::NotDisjoint)
        );
        assert_eq!(
            urysohn_construct(&s, set(&s, "a"), set(&s, "b"), 0),
            Err(RealFnError::InvalidDepth(0))
        );
        let e1 = e1();
        assert!(matches!(
            urysohn_construct(&e1, set(&e1, "a"), set(&e1, "c"), 2),
            Err(RealFnError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn urysohn_depth_two_on_indiscrete_pair() {
        let s = e0();
        let (fam, g) = urysohn_construct(&s, set(&s, "a"), set(&s, "b"), 2).unwrap();
        assert_eq!(fam.levels.len(), 3);
        fam.check_invariants(&s).unwrap();
        assert_eq!(g.value(0), Dyadic::ZERO);
        assert_eq!(g.value(1), Dyadic::ONE);
    }

    #[test]
    fn gdelta_zero_set_on_indiscrete_pair() {
        let s = e0();
        let (m, n) = (set(&s, "a"), set(&s, "b"));
        let g = gdelta_zero_set_function(&s, m, n, 3).unwrap();
        assert_eq!(g.zero_set(), m);
        assert_eq!(g.value(1), Dyadic::ONE);
        assert_eq!(
            gdelta_zero_set_function(&s, Subset::EMPTY, n, 3),
            Err(RealFnError::HypothesisViolated("M must be nonempty".into()))
        );
        let e1 = e1();
        assert!(matches!(
            gdelta_zero_set_function(&e1, set(&e1, "a"), set(&e1, "c"), 3),
            Err(RealFnError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn perfect_normality_examples() {
        assert!(perfectly_normal_check(&e0()).holds);
        let one = make_space(["a"], Vec::<Vec<&str>>::new()).unwrap();
        let r = perfectly_normal_check(&one);
        assert!(r.holds && r.vacuous);
        let s2 = e2();
        assert!(exact_separator(&s2, set(&s2, "c"), set(&s2, "a b")).is_some());
    }
}
