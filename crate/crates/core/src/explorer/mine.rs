//! Minimal witnesses for phenomena that separate the lambda structure from
//! ordinary topology.

use std::fmt;
use std::str::FromStr;

use super::enumerate::enumerate_spaces;
use super::theorems::{verify_theorem, Status};
use super::ExplorerError;
use crate::space::GtSpace;
use crate::subset::Subset;

/// Largest ground set scanned by [`mine_counterexamples`].
pub const MINE_LIMIT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// Two lambda-closed sets whose union is not lambda-closed.
    UnionOfClosedNotClosed,
    /// Two lambda-open sets whose intersection is not lambda-open.
    IntersectionOfOpenNotOpen,
    /// A generalized lambda-closed set that is not lambda-closed.
    SgClosedNotClosed,
}

impl Property {
    pub const ALL: [Property; 3] = [
        Property::UnionOfClosedNotClosed,
        Property::IntersectionOfOpenNotOpen,
        Property::SgClosedNotClosed,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Property::UnionOfClosedNotClosed => "union-of-sλ-closed-not-closed",
            Property::IntersectionOfOpenNotOpen => "intersection-of-sλ-open-not-open",
            Property::SgClosedNotClosed => "sgλ-closed-not-sλ-closed",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            Property::UnionOfClosedNotClosed => &["union-of-slambda-closed-not-closed", "union-of-closed-not-closed"],
            Property::IntersectionOfOpenNotOpen => &["intersection-of-slambda-open-not-open", "intersection-of-open-not-open"],
            Property::SgClosedNotClosed => &["sglambda-closed-not-slambda-closed", "sg-closed-not-closed"],
        }
    }

    /// Set names used in witnesses of this property.
    pub fn names(self) -> &'static [&'static str] {
        match self {
            Property::UnionOfClosedNotClosed => &["P", "Q"],
            Property::IntersectionOfOpenNotOpen => &["U", "V"],
            Property::SgClosedNotClosed => &["D"],
        }
    }

    /// First instance on `space` in canonical order.
    pub fn find(self, space: &GtSpace) -> Option<Vec<Subset>> {
        match self {
            Property::UnionOfClosedNotClosed => first_pair(space.s_lambda_closed().members(), |p, q| {
                !space.is_lambda_closed(p.union(q))
            }),
            Property::IntersectionOfOpenNotOpen => first_pair(space.s_lambda_open().members(), |u, v| {
                !space.is_lambda_open(u.intersection(v))
            }),
            Property::SgClosedNotClosed => space
                .sg_lambda_closed()
                .iter()
                .find(|d| !space.is_lambda_closed(*d))
                .map(|d| vec![d]),
        }
    }

    /// Whether `sets` exhibit the property on `space`.
    pub fn holds_for(self, space: &GtSpace, sets: &[Subset]) -> bool {
        match (self, sets) {
            (Property::UnionOfClosedNotClosed, [p, q]) => {
                space.is_lambda_closed(*p) && space.is_lambda_closed(*q) && !space.is_lambda_closed(p.union(*q))
            }
            (Property::IntersectionOfOpenNotOpen, [u, v]) => {
                space.is_lambda_open(*u) && space.is_lambda_open(*v) && !space.is_lambda_open(u.intersection(*v))
            }
            (Property::SgClosedNotClosed, [d]) => space.is_sg_closed(*d) && !space.is_lambda_closed(*d),
            _ => false,
        }
    }

    fn describe(self, space: &GtSpace, sets: &[Subset]) -> String {
        let r = |s: Subset| space.render(s);
        match (self, sets) {
            (Property::UnionOfClosedNotClosed, [p, q]) => format!(
                "{} and {} are sλ-closed, their union {} is not",
                r(*p),
                r(*q),
                r(p.union(*q))
            ),
            (Property::IntersectionOfOpenNotOpen, [u, v]) => format!(
                "{} and {} are sλ-open, their intersection {} is not",
                r(*u),
                r(*v),
                r(u.intersection(*v))
            ),
            (Property::SgClosedNotClosed, [d]) => format!("{} is sgλ-closed but not sλ-closed", r(*d)),
            _ => String::new(),
        }
    }

    /// A witness for `sets`, if they exhibit the property.
    pub fn witness(self, space: &GtSpace, sets: &[Subset]) -> Option<Witness> {
        if !self.holds_for(space, sets) {
            return None;
        }
        Some(Witness {
            kind: format!("property {}", self.id()),
            space: space.clone(),
            subsets: self.names().iter().map(|n| n.to_string()).zip(sets.iter().copied()).collect(),
            description: self.describe(space, sets),
        })
    }
}

fn first_pair(members: &[Subset], mut pred: impl FnMut(Subset, Subset) -> bool) -> Option<Vec<Subset>> {
    members.iter().enumerate().find_map(|(i, a)| {
        members[i + 1..]
            .iter()
            .find(|b| pred(*a, **b))
            .map(|b| vec![*a, *b])
    })
}

impl FromStr for Property {
    type Err = ExplorerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.id() == s || p.aliases().contains(&s))
            .ok_or_else(|| ExplorerError::UnknownProperty(s.to_string()))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A space with named subsets demonstrating a property or a failed check.
/// `kind` is `property <id>` or `theorem <id>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: String,
    pub space: GtSpace,
    pub subsets: Vec<(String, Subset)>,
    pub description: String,
}

impl Witness {
    /// Re-checks the phenomenon from scratch. Property witnesses re-test
    /// their sets; theorem witnesses re-run the check and expect a failure.
    pub fn replay(&self) -> bool {
        let fresh = GtSpace::new(self.space.ground_arc().clone(), self.space.gamma().clone());
        let Ok(space) = fresh else {
            return false;
        };
        match self.kind.split_once(' ') {
            Some(("property", id)) => id.parse::<Property>().is_ok_and(|p| {
                let sets: Vec<Subset> = self.subsets.iter().map(|(_, s)| *s).collect();
                p.holds_for(&space, &sets)
            }),
            Some(("theorem", id)) => verify_theorem(id, &space).is_some_and(|r| r.status == Status::Failed),
            _ => false,
        }
    }
}

/// Scans spaces on `1..=n` points, smallest first (point count, then number
/// of open sets, then canonical order), one representative per relabeling
/// orbit, and returns up to `limit` witnesses of `property`.
pub fn mine_counterexamples(n: usize, property: Property, limit: usize) -> Result<Vec<Witness>, ExplorerError> {
    if n > MINE_LIMIT {
        return Err(ExplorerError::TooLarge { n, max: MINE_LIMIT });
    }
    let mut out = Vec::new();
    for k in 1..=n {
        for space in enumerate_spaces(k, true)? {
            if out.len() >= limit {
                return Ok(out);
            }
            if let Some(sets) = property.find(&space) {
                out.extend(property.witness(&space, &sets));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e1, e2};

    #[test]
    fn parses_ids_and_aliases() {
        for p in Property::ALL {
            assert_eq!(p.id().parse::<Property>(), Ok(p));
            for a in p.aliases() {
                assert_eq!(a.parse::<Property>(), Ok(p));
            }
        }
        assert_eq!(
            "nope".parse::<Property>(),
            Err(ExplorerError::UnknownProperty("nope".into()))
        );
    }

    #[test]
    fn e1_union_of_a_and_c() {
        let s = e1();
        let a = s.subset(["a"]).unwrap();
        let c = s.subset(["c"]).unwrap();
        let w = Property::UnionOfClosedNotClosed.witness(&s, &[a, c]).unwrap();
        assert!(w.replay());
    }

    #[test]
    fn e2_point_a_is_sg_closed_only() {
        let s = e2();
        let a = s.subset(["a"]).unwrap();
        assert!(Property::SgClosedNotClosed.holds_for(&s, &[a]));
        assert!(Property::SgClosedNotClosed.witness(&s, &[a]).unwrap().replay());
    }

    #[test]
    fn mining_finds_replayable_witnesses() {
        for p in Property::ALL {
            let found = mine_counterexamples(4, p, 1).unwrap();
            assert_eq!(found.len(), 1, "{p}");
            assert!(found[0].replay());
        }
        assert!(mine_counterexamples(5, Property::SgClosedNotClosed, 1).is_err());
    }
}
