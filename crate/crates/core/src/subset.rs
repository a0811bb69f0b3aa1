//! Word-sized subsets of an indexed ground set, and canonically ordered
//! families of them.

use std::collections::HashMap;
use std::fmt;

/// Largest supported ground set.
pub const MAX_POINTS: usize = 64;

/// A subset of a ground set of at most 64 points, one bit per point.
///
/// The derived `Ord` is numeric order on the bit vector, which is the
/// canonical order used everywhere families are sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full set on `n` points.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(point: usize) -> Self {
        Subset(1u64 << point)
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn contains(self, point: usize) -> bool {
        point < 64 && self.0 >> point & 1 == 1
    }

    #[inline]
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to `universe`.
    #[inline]
    pub const fn complement_in(self, universe: Subset) -> Subset {
        Subset(universe.0 & !self.0)
    }

    #[inline]
    pub fn with(self, point: usize) -> Subset {
        Subset(self.0 | 1u64 << point)
    }

    /// Points in increasing index order.
    pub fn points(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `self`, in increasing numeric order.
    pub fn submasks(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }

    /// The smallest point, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

pub struct Points(u64);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

/// Iterator over the submasks of a mask, ascending.
pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // Standard "increment inside the mask" trick.
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// Every subset of an `n`-point ground set, ascending. Only sensible for
/// small `n`.
pub fn all_subsets(n: usize) -> Submasks {
    Subset::full(n).submasks()
}

/// The ordered, named points of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroundSetError {
    #[error("ground set must contain at least one point")]
    Empty,
    #[error("ground set has {0} points; at most {MAX_POINTS} are supported")]
    TooManyPoints(usize),
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self, GroundSetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(GroundSetError::Empty);
        }
        if labels.len() > MAX_POINTS {
            return Err(GroundSetError::TooManyPoints(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GroundSetError::DuplicatePoint(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Points named `a`, `b`, `c`, ... (then `p26`, `p27`, ... past `z`).
    pub fn alphabetic(n: usize) -> Result<Self, GroundSetError> {
        GroundSet::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("p{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, point: usize) -> &str {
        &self.labels[point]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Builds a subset from point names, failing on the first unknown name.
    pub fn subset<'a, I>(&self, names: I) -> Result<Subset, String>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut s = Subset::EMPTY;
        for name in names {
            match self.position(name) {
                Some(p) => s = s.with(p),
                None => return Err(name.to_string()),
            }
        }
        Ok(s)
    }

    pub fn names(&self, s: Subset) -> Vec<&str> {
        s.points().map(|p| self.label(p)).collect()
    }

    /// Renders as `{a,b}`; the empty set is `{}`.
    pub fn render(&self, s: Subset) -> String {
        format!("{{{}}}", self.names(s).join(","))
    }
}

/// A deduplicated family of subsets in canonical (numeric) order, so two
/// families are equal exactly when their member lists are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFamily {
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new() -> Self {
        SetFamily::default()
    }

    pub fn from_sorted_unchecked(members: Vec<Subset>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily { members }
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, Subset>> {
        self.members.iter().copied()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn insert(&mut self, s: Subset) -> bool {
        match self.members.binary_search(&s) {
            Ok(_) => false,
            Err(i) => {
                self.members.insert(i, s);
                true
            }
        }
    }

    /// Every union of two members is a member. For a finite family this is
    /// closure under arbitrary nonempty unions.
    pub fn first_union_gap(&self) -> Option<(Subset, Subset)> {
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                if !self.contains(a.union(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_union_closed(&self) -> bool {
        self.first_union_gap().is_none()
    }

    pub fn first_intersection_gap(&self) -> Option<(Subset, Subset)> {
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                if !self.contains(a.intersection(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.first_intersection_gap().is_none()
    }

    /// Member-wise complements relative to `universe`.
    pub fn complements(&self, universe: Subset) -> SetFamily {
        self.iter().map(|s| s.complement_in(universe)).collect()
    }

    /// Union of all members.
    pub fn union_all(&self) -> Subset {
        self.iter().fold(Subset::EMPTY, Subset::union)
    }

    /// Intersection of all members, `None` for the empty family.
    pub fn intersection_all(&self) -> Option<Subset> {
        self.iter().reduce(Subset::intersection)
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// Members that contain `s`.
    pub fn supersets_of(&self, s: Subset) -> impl Iterator<Item = Subset> + '_ {
        self.iter().filter(move |m| s.is_subset_of(*m))
    }

    /// Inclusion-minimal members containing `s`.
    pub fn minimal_supersets_of(&self, s: Subset) -> Vec<Subset> {
        let sup: Vec<Subset> = self.supersets_of(s).collect();
        sup.iter()
            .copied()
            .filter(|&m| !sup.iter().any(|&o| o != m && o.is_subset_of(m)))
            .collect()
    }
}

impl FromIterator<Subset> for SetFamily {
    fn from_iter<T: IntoIterator<Item = Subset>>(iter: T) -> Self {
        let mut members: Vec<Subset> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SetFamily { members }
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = Subset;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Subset>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_cover_every_subset_once() {
        let mask = Subset::from_bits(0b1011);
        let subs: Vec<u64> = mask.submasks().map(Subset::bits).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(all_subsets(3).count(), 8);
        assert_eq!(Subset::EMPTY.submasks().count(), 1);
    }

    #[test]
    fn full_handles_word_width() {
        assert_eq!(Subset::full(64).bits(), u64::MAX);
        assert_eq!(Subset::full(3).bits(), 7);
        assert!(!Subset::full(3).contains(3));
    }

    #[test]
    fn ground_set_rejects_duplicates() {
        assert_eq!(
            GroundSet::new(["a", "b", "a"]),
            Err(GroundSetError::DuplicatePoint("a".into()))
        );
        assert_eq!(GroundSet::new(Vec::<String>::new()), Err(GroundSetError::Empty));
        let too_many: Vec<String> = (0..65).map(|i| format!("x{i}")).collect();
        assert_eq!(GroundSet::new(too_many), Err(GroundSetError::TooManyPoints(65)));
    }

    #[test]
    fn render_and_lookup() {
        let g = GroundSet::alphabetic(4).unwrap();
        let s = g.subset(["c", "a"]).unwrap();
        assert_eq!(g.render(s), "{a,c}");
        assert_eq!(g.render(Subset::EMPTY), "{}");
        assert_eq!(g.subset(["z"]), Err("z".to_string()));
    }

    #[test]
    fn family_is_sorted_and_deduplicated() {
        let f: SetFamily = [3u64, 1, 3, 0].into_iter().map(Subset::from_bits).collect();
        assert_eq!(f.members().iter().map(|s| s.bits()).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert!(f.is_union_closed());
        let g: SetFamily = [1u64, 2].into_iter().map(Subset::from_bits).collect();
        assert_eq!(g.first_union_gap(), Some((Subset::from_bits(1), Subset::from_bits(2))));
    }

    #[test]
    fn minimal_supersets() {
        let f: SetFamily = [0b011u64, 0b110, 0b111, 0b001].into_iter().map(Subset::from_bits).collect();
        assert_eq!(
            f.minimal_supersets_of(Subset::from_bits(0b001)),
            vec![Subset::from_bits(0b001)]
        );
        assert_eq!(
            f.minimal_supersets_of(Subset::from_bits(0b010)),
            vec![Subset::from_bits(0b011), Subset::from_bits(0b110)]
        );
    }
}
