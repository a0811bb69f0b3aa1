//! Instance-by-instance checks of implications and equivalences between
//! the operators and axioms.
//!
//! Every check reports whether its hypotheses held on the space and whether
//! its conclusion did. A conclusion that fails under holding hypotheses is
//! `FAILED` and carries the first failing instance; hypotheses that never
//! hold make the report `vacuous`, and the conclusion is then not evaluated
//! (it is reported as held). Equivalences always have holding hypotheses and
//! conclude that all statements agree.

use std::cell::OnceCell;
use std::fmt;

use rayon::prelude::*;

use super::mine::Witness;
use crate::axioms::{self, AxiomReport};
use crate::covers;
use crate::realfn;
use crate::space::{
    closure_by_adherence, closure_by_closed_supersets, closure_in_family, interior_in_family, GtSpace,
};
use crate::subset::Subset;

/// Depth used by the dyadic constructions in the harness.
pub const HARNESS_DEPTH: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Verified,
    Vacuous,
    Failed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Vacuous => "vacuous",
            Status::Failed => "FAILED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: &'static str,
    pub hypotheses_held: bool,
    pub conclusion_held: bool,
    pub status: Status,
    pub witness: Option<Witness>,
}

/// A failing instance: named sets and what went wrong.
#[derive(Debug, Clone)]
struct Failure {
    sets: Vec<(&'static str, Subset)>,
    detail: String,
}

type Check = Result<(), Failure>;

fn fail(sets: Vec<(&'static str, Subset)>, detail: impl Into<String>) -> Check {
    Err(Failure {
        sets,
        detail: detail.into(),
    })
}

fn ensure(ok: bool, sets: Vec<(&'static str, Subset)>, detail: &str) -> Check {
    if ok {
        Ok(())
    } else {
        fail(sets, detail)
    }
}

struct Outcome {
    hyp: bool,
    concl: Check,
}

fn always(concl: Check) -> Outcome {
    Outcome { hyp: true, concl }
}

fn implies(hyp: bool, concl: impl FnOnce() -> Check) -> Outcome {
    if hyp {
        Outcome { hyp, concl: concl() }
    } else {
        Outcome { hyp, concl: Ok(()) }
    }
}

/// Statements that must all have the same truth value.
fn agree(statements: &[bool]) -> Outcome {
    if statements.iter().all(|v| *v == statements[0]) {
        return always(Ok(()));
    }
    let listing: Vec<String> = statements
        .iter()
        .enumerate()
        .map(|(i, v)| format!("({})={}", i + 1, v))
        .collect();
    always(fail(vec![], format!("statements disagree: {}", listing.join(" "))))
}

/// Checks every instance satisfying the per-instance hypothesis; vacuous
/// when the space hypothesis fails or no instance exists.
fn each<T>(space_hyp: bool, instances: impl IntoIterator<Item = T>, mut check: impl FnMut(T) -> Check) -> Outcome {
    if !space_hyp {
        return Outcome { hyp: false, concl: Ok(()) };
    }
    let mut any = false;
    for item in instances {
        any = true;
        if let Err(f) = check(item) {
            return Outcome { hyp: true, concl: Err(f) };
        }
    }
    Outcome { hyp: any, concl: Ok(()) }
}

fn first_failure(items: impl IntoIterator<Item = Check>) -> Check {
    items.into_iter().find(|c| c.is_err()).unwrap_or(Ok(()))
}

/// Per-space data shared by the checks.
struct Ctx<'a> {
    s: &'a GtSpace,
    ax: AxiomReport,
    full: Subset,
    open: Vec<Subset>,
    closed: Vec<Subset>,
    sg_open: Vec<Subset>,
    sg_closed: Vec<Subset>,
    nested: OnceCell<Check>,
    subspaces: OnceCell<Vec<(Subset, GtSpace, AxiomReport)>>,
}

impl<'a> Ctx<'a> {
    fn new(s: &'a GtSpace) -> Self {
        Ctx {
            s,
            ax: axioms::classify(s),
            full: s.full(),
            open: s.s_lambda_open().iter().collect(),
            closed: s.s_lambda_closed().iter().collect(),
            sg_open: s.sg_lambda_open().iter().collect(),
            sg_closed: s.sg_lambda_closed().iter().collect(),
            nested: OnceCell::new(),
            subspaces: OnceCell::new(),
        }
    }

    fn cl(&self, d: Subset) -> Subset {
        self.s.lambda_closure(d)
    }

    fn int(&self, d: Subset) -> Subset {
        self.s.lambda_interior(d)
    }

    fn subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        self.s.all_subsets()
    }

    fn points(&self) -> impl Iterator<Item = usize> {
        0..self.s.len()
    }

    /// Nonempty proper and full subspaces with their classification.
    fn subspaces(&self) -> &[(Subset, GtSpace, AxiomReport)] {
        self.subspaces.get_or_init(|| {
            self.subsets()
                .filter(|d| !d.is_empty())
                .map(|d| {
                    let sub = self.s.subspace(d).expect("nonempty carrier");
                    let report = axioms::classify(&sub);
                    (d, sub, report)
                })
                .collect()
        })
    }

    fn weak_pairs(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        axioms::nonempty_disjoint_pairs(self.s).filter(|&(a, b)| {
            axioms::weakly_separated(self.s, a, b).expect("nonempty arguments")
        })
    }

    /// Nested separation of weakly separated pairs by generalized open `U`,
    /// `V` and open `E`, `F`.
    fn nested_separation(&self) -> Check {
        self.nested
            .get_or_init(|| {
                first_failure(self.weak_pairs().map(|(a, b)| {
                    ensure(self.nested_pair(a, b), vec![("A", a), ("B", b)], "no nested separation")
                }))
            })
            .clone()
    }

    fn nested_pair(&self, a: Subset, b: Subset) -> bool {
        let us: Vec<(Subset, Subset)> = self
            .sg_open
            .iter()
            .filter(|u| a.is_subset_of(**u))
            .map(|u| (*u, self.cl(*u)))
            .collect();
        let vs: Vec<(Subset, Subset)> = self
            .sg_open
            .iter()
            .filter(|v| b.is_subset_of(**v))
            .map(|v| (*v, self.cl(*v)))
            .collect();
        let between = |inner: Subset, avoid: Subset| {
            self.open
                .iter()
                .any(|e| inner.is_subset_of(*e) && !self.cl(*e).meets(avoid))
        };
        us.iter().any(|&(_, clu)| {
            vs.iter()
                .any(|&(_, clv)| between(clu, clv) && between(clv, clu))
        })
    }

    /// Closed `P` inside open `G` has a generalized open `E` with
    /// `P ⊆ E ⊆ cl E ⊆ G`.
    fn sg_shrink_of_closed(&self) -> Check {
        first_failure(self.closed_in_open().map(|(p, g)| {
            ensure(
                self.sg_open.iter().any(|e| p.is_subset_of(*e) && self.cl(*e).is_subset_of(g)),
                vec![("P", p), ("G", g)],
                "no generalized open E with P ⊆ E ⊆ cl E ⊆ G",
            )
        }))
    }

    fn closed_in_open(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.closed
            .iter()
            .flat_map(move |p| self.open.iter().filter(move |g| p.is_subset_of(**g)).map(move |g| (*p, *g)))
    }

    fn closed_point_pairs(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.closed
            .iter()
            .flat_map(move |p| p.complement_in(self.full).points().map(move |y| (*p, y)))
    }

    fn nonempty_disjoint_closed(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        axioms::disjoint_closed_pairs(self.s)
            .into_iter()
            .filter(|(a, b)| !a.is_empty() && !b.is_empty())
    }
}

// Operators and derived families.

fn closure_interior_duality(c: &Ctx) -> Outcome {
    let ground = c.s.ground();
    let fams = [c.s.s_gamma_open(), c.s.s_lambda_open()];
    always(first_failure(c.subsets().flat_map(|d| {
        fams.into_iter().map(move |fam| {
            let cl = closure_in_family(fam, d, ground);
            let ok = cl == closure_by_adherence(fam, d, ground)
                && cl == closure_by_closed_supersets(fam, d, ground)
                && interior_in_family(fam, d, ground)
                    == closure_in_family(fam, d.complement_in(c.full), ground).complement_in(c.full)
                && d.is_subset_of(cl)
                && closure_in_family(fam, cl, ground) == cl;
            ensure(ok, vec![("D", d)], "closure formulas or interior duality disagree")
        })
    })))
}

fn sker_idempotent(c: &Ctx) -> Outcome {
    always(first_failure(c.subsets().map(|d| {
        let k = c.s.sker(d);
        ensure(c.s.sker(k) == k && d.is_subset_of(k), vec![("D", d)], "sker(sker D) ≠ sker D")
    })))
}

fn lemma_matches_definition(c: &Ctx) -> Outcome {
    let lemma = c.s.s_lambda_closed();
    let def = c.s.s_lambda_closed_by_definition();
    let diff = c.subsets().find(|d| lemma.contains(*d) != def.contains(*d));
    always(match diff {
        None => Ok(()),
        Some(d) => fail(vec![("D", d)], "lemma formula and definition disagree"),
    })
}

fn family_inclusions(c: &Ctx) -> Outcome {
    let s = c.s;
    let checks = [
        (s.gamma().is_subfamily_of(s.s_gamma_open()), "gamma ⊄ semi-open"),
        (s.s_gamma_open().is_subfamily_of(s.s_lambda_open()), "semi-open ⊄ lambda-open"),
        (s.s_lambda_open().is_subfamily_of(s.sg_lambda_open()), "lambda-open ⊄ sg-open"),
        (s.s_lambda_closed().is_subfamily_of(s.sg_lambda_closed()), "lambda-closed ⊄ sg-closed"),
        (s.s_gamma_open().is_union_closed(), "semi-open not union-closed"),
        (s.s_lambda_open().is_union_closed(), "lambda-open not union-closed"),
        (s.s_lambda_closed().is_intersection_closed(), "lambda-closed not intersection-closed"),
    ];
    always(match checks.iter().find(|(ok, _)| !ok) {
        None => Ok(()),
        Some((_, what)) => fail(vec![], *what),
    })
}

fn sg_open_characterization(c: &Ctx) -> Outcome {
    always(first_failure(c.subsets().map(|d| {
        let int = c.int(d);
        let dual = c.closed.iter().filter(|p| p.is_subset_of(d)).all(|p| p.is_subset_of(int));
        ensure(c.s.is_sg_open(d) == dual, vec![("D", d)], "characterization disagrees")
    })))
}

// Low separation.

fn t1_iff_singletons_closed(c: &Ctx) -> Outcome {
    agree(&[axioms::is_t1_by_definition(c.s), c.ax.t1])
}

fn r1_implies_r0(c: &Ctx) -> Outcome {
    implies(c.ax.r1, || ensure(c.ax.r0, vec![], "R1 but not R0"))
}

fn regular_implies_r1(c: &Ctx) -> Outcome {
    implies(c.ax.regular_strong, || ensure(c.ax.r1, vec![], "regular but not R1"))
}

fn t2_iff_r1_and_t1(c: &Ctx) -> Outcome {
    agree(&[c.ax.t2, c.ax.r1 && c.ax.t1])
}

fn regularity_equivalence(c: &Ctx) -> Outcome {
    let open = &c.open;
    let s2 = open
        .iter()
        .all(|g| g.points().all(|y| open.iter().any(|e| e.contains(y) && c.cl(*e).is_subset_of(*g))));
    let s3 = c.closed.iter().all(|p| {
        open.iter()
            .filter(|f| p.is_subset_of(**f))
            .fold(c.full, |acc, f| acc.intersection(c.cl(*f)))
            == *p
    });
    let s4 = c.subsets().all(|d| {
        open.iter()
            .filter(|e| d.meets(**e))
            .all(|e| open.iter().any(|f| d.meets(*f) && c.cl(*f).is_subset_of(*e)))
    });
    let set_closed_pairs = || {
        c.subsets()
            .filter(|d| !d.is_empty())
            .flat_map(|d| c.closed.iter().filter(move |p| !p.meets(d)).map(move |p| (d, *p)))
    };
    let s5 = set_closed_pairs().all(|(d, p)| {
        open.iter()
            .filter(|m| d.meets(**m))
            .any(|m| open.iter().any(|n| p.is_subset_of(*n) && !m.meets(*n)))
    });
    let s6 = c.closed_point_pairs().all(|(p, y)| {
        open.iter()
            .filter(|e| e.contains(y))
            .any(|e| c.sg_open.iter().any(|f| p.is_subset_of(*f) && !e.meets(*f)))
    });
    let s7 = set_closed_pairs().all(|(d, p)| {
        open.iter()
            .filter(|e| d.meets(**e))
            .any(|e| c.sg_open.iter().any(|f| p.is_subset_of(*f) && !e.meets(*f)))
    });
    agree(&[c.ax.regular_strong, s2, s3, s4, s5, s6, s7, c.ax.regular_weak])
}

// Compactness and closure additivity.

fn compactness_routes_agree(c: &Ctx) -> Outcome {
    agree(&[covers::is_compact(c.s), covers::fip_compact(c.s)])
}

fn closed_subset_of_compact_is_compact(c: &Ctx) -> Outcome {
    implies(covers::is_compact(c.s), || match covers::closed_subspace_not_compact(c.s) {
        None => Ok(()),
        Some(d) => fail(vec![("D", d)], "closed subspace not compact"),
    })
}

fn sg_closed_subset_of_compact_is_compact(c: &Ctx) -> Outcome {
    implies(covers::is_compact(c.s), || match covers::sg_closed_trace_failure(c.s) {
        None => Ok(()),
        Some(d) => fail(vec![("D", d)], "cover trace misses the closure"),
    })
}

fn finite_closure_union_additivity(c: &Ctx) -> Outcome {
    implies(axioms::closure_unions_closed(c.s), || {
        match axioms::first_non_additive_pair(c.s) {
            None => Ok(()),
            Some((e, f)) => fail(vec![("E", e), ("F", f)], "cl(E ∪ F) ≠ cl E ∪ cl F"),
        }
    })
}

fn compact_subset_of_regular_is_sg_closed(c: &Ctx) -> Outcome {
    let hyp = c.ax.regular_strong && axioms::closure_unions_closed(c.s) && covers::is_compact(c.s);
    implies(hyp, || match c.subsets().find(|d| !c.s.is_sg_closed(*d)) {
        None => Ok(()),
        Some(d) => fail(vec![("D", d)], "compact subset not sg-closed"),
    })
}

/// With finite intersections of open sets open, closure distributes over
/// unions. Every family is finite and locally finite here, and pairs
/// suffice by induction.
fn condition_a_closure_additivity(c: &Ctx) -> Outcome {
    implies(c.ax.condition_a, || match axioms::first_non_additive_pair(c.s) {
        None => Ok(()),
        Some((e, f)) => fail(vec![("E", e), ("F", f)], "cl(E ∪ F) ≠ cl E ∪ cl F"),
    })
}

// Normality.

fn normality_equivalence(c: &Ctx) -> Outcome {
    let s2 = c.open.iter().all(|e| {
        c.open.iter().filter(|f| e.union(**f) == c.full).all(|f| {
            c.closed.iter().filter(|a| a.is_subset_of(*e)).any(|a| {
                c.closed
                    .iter()
                    .any(|b| b.is_subset_of(*f) && a.union(*b) == c.full)
            })
        })
    });
    let s3 = c
        .closed_in_open()
        .all(|(a, g)| c.open.iter().any(|e| a.is_subset_of(*e) && c.cl(*e).is_subset_of(g)));
    agree(&[c.ax.normal_strong, s2, s3, c.ax.normal_weak])
}

fn sg_normality_equivalence(c: &Ctx) -> Outcome {
    let fits = |family: &[Subset], lower: Subset, upper: Subset| {
        family.iter().any(|e| lower.is_subset_of(*e) && c.cl(*e).is_subset_of(upper))
    };
    let closed_in_sg_open = || {
        c.closed
            .iter()
            .flat_map(|p| c.sg_open.iter().filter(move |g| p.is_subset_of(**g)).map(move |g| (*p, *g)))
    };
    let sg_closed_in_open = || {
        c.sg_closed
            .iter()
            .flat_map(|p| c.open.iter().filter(move |g| p.is_subset_of(**g)).map(move |g| (*p, *g)))
    };
    let s2 = c.closed_in_open().all(|(p, g)| fits(&c.sg_open, p, g));
    let s3 = closed_in_sg_open().all(|(p, g)| fits(&c.sg_open, p, c.int(g)));
    let s4 = sg_closed_in_open().all(|(p, g)| fits(&c.open, c.cl(p), g));
    let s5 = closed_in_sg_open().all(|(p, g)| fits(&c.open, p, c.int(g)));
    let s6 = sg_closed_in_open().all(|(p, g)| fits(&c.sg_open, c.cl(p), g));
    agree(&[c.ax.normal_strong, s2, s3, s4, s5, s6])
}

fn paracompact_hausdorff_implies_normal(c: &Ctx) -> Outcome {
    let hyp = c.ax.t2 && c.ax.condition_a && covers::is_paracompact(c.s);
    implies(hyp, || ensure(c.ax.normal_strong, vec![], "not normal"))
}

// Function separation.

fn function_separation_implies_closed_neighborhoods(c: &Ctx) -> Outcome {
    let separated = axioms::nonempty_disjoint_pairs(c.s)
        .filter(|&(a, b)| realfn::separated_by_function(c.s, a, b).is_ok_and(|f| f.is_some()));
    each(true, separated, |(a, b)| {
        ensure(
            axioms::separated_by_closed_neighborhoods(c.s, a, b).unwrap_or(false),
            vec![("A", a), ("B", b)],
            "separated by a function but not by closed neighbourhoods",
        )
    })
}

fn closed_pairs_function_separated(c: &Ctx) -> Check {
    first_failure(c.nonempty_disjoint_closed().map(|(a, b)| {
        ensure(
            realfn::separated_by_function(c.s, a, b).is_ok_and(|f| f.is_some()),
            vec![("A", a), ("B", b)],
            "closed pair not separated by a function",
        )
    }))
}

fn function_separation_implies_normal(c: &Ctx) -> Outcome {
    implies(closed_pairs_function_separated(c).is_ok(), || {
        ensure(c.ax.normal_strong, vec![], "not normal")
    })
}

fn normal_condition_a_function_separation(c: &Ctx) -> Outcome {
    implies(c.ax.normal_weak && c.ax.condition_a, || closed_pairs_function_separated(c))
}

fn completely_hausdorff_implies_urysohn(c: &Ctx) -> Outcome {
    implies(c.ax.completely_hausdorff, || ensure(c.ax.urysohn, vec![], "not Urysohn"))
}

fn urysohn_implies_hausdorff(c: &Ctx) -> Outcome {
    implies(c.ax.urysohn, || ensure(c.ax.t2, vec![], "not Hausdorff"))
}

fn urysohn_normal_implies_completely_hausdorff(c: &Ctx) -> Outcome {
    implies(c.ax.urysohn && c.ax.normal_strong && c.ax.condition_a, || {
        ensure(c.ax.completely_hausdorff, vec![], "not completely Hausdorff")
    })
}

fn completely_hausdorff_sg_separation(c: &Ctx) -> Outcome {
    implies(c.ax.completely_hausdorff, || {
        let distinct = c.points().flat_map(|p| c.points().filter(move |q| *q != p).map(move |q| (p, q)));
        let first = first_failure(distinct.map(|(p, q)| {
            let ok = c.open.iter().filter(|e| e.contains(p)).any(|e| {
                let outside = c.cl(*e).complement_in(c.full);
                c.sg_open
                    .iter()
                    .any(|f| f.contains(q) && c.cl(*f).is_subset_of(outside))
            });
            ensure(
                ok,
                vec![("p", Subset::singleton(p)), ("q", Subset::singleton(q))],
                "item 1: no open E ∋ p and sg-open F ∋ q with cl F ⊆ Y − cl E",
            )
        }));
        first?;
        let set_point = c
            .subsets()
            .filter(|d| !d.is_empty())
            .flat_map(|d| d.complement_in(c.full).points().map(move |q| (d, q)));
        first_failure(set_point.map(|(d, q)| {
            let ok = c.sg_open.iter().filter(|e| e.meets(d)).any(|e| {
                c.open.iter().any(|f| f.contains(q) && !f.meets(*e))
            });
            ensure(
                ok,
                vec![("D", d), ("q", Subset::singleton(q))],
                "item 2: no sg-open E meeting D and open F ∋ q disjoint from E",
            )
        }))
    })
}

fn regular_t1_implies_urysohn(c: &Ctx) -> Outcome {
    implies(c.ax.regular_strong && c.ax.t1, || ensure(c.ax.urysohn, vec![], "not Urysohn"))
}

// Tychonoff and complete regularity.

fn t4_condition_a_implies_tychonoff(c: &Ctx) -> Outcome {
    implies(c.ax.t4 && c.ax.condition_a, || ensure(c.ax.tychonoff, vec![], "not Tychonoff"))
}

fn tychonoff_implies_completely_regular(c: &Ctx) -> Outcome {
    implies(c.ax.tychonoff, || ensure(c.ax.completely_regular, vec![], "not completely regular"))
}

fn completely_regular_implies_regular(c: &Ctx) -> Outcome {
    implies(c.ax.completely_regular, || ensure(c.ax.regular_strong, vec![], "not regular"))
}

fn tychonoff_implies_t3(c: &Ctx) -> Outcome {
    implies(c.ax.tychonoff, || ensure(c.ax.t3, vec![], "not T3"))
}

fn tychonoff_implies_completely_hausdorff(c: &Ctx) -> Outcome {
    implies(c.ax.tychonoff, || ensure(c.ax.completely_hausdorff, vec![], "not completely Hausdorff"))
}

fn regular_normal_implies_completely_regular(c: &Ctx) -> Outcome {
    implies(c.ax.regular_strong && c.ax.normal_strong && c.ax.condition_a, || {
        ensure(c.ax.completely_regular, vec![], "not completely regular")
    })
}

/// Points whose singleton is lambda-closed, paired with generalized open
/// sets containing them.
fn closed_point_sg_shrink(c: &Ctx) -> Check {
    let instances = c
        .points()
        .filter(|y| c.s.is_lambda_closed(Subset::singleton(*y)))
        .flat_map(|y| c.sg_open.iter().filter(move |g| g.contains(y)).map(move |g| (y, *g)));
    first_failure(instances.map(|(y, g)| {
        let int = c.int(g);
        ensure(
            c.sg_open.iter().any(|e| e.contains(y) && c.cl(*e).is_subset_of(int)),
            vec![("y", Subset::singleton(y)), ("G", g)],
            "no sg-open E with y ∈ E ⊆ cl E ⊆ int G",
        )
    }))
}

fn completely_regular_sg_shrink(c: &Ctx) -> Outcome {
    implies(c.ax.completely_regular, || closed_point_sg_shrink(c))
}

fn sg_shrink_implies_interior_shrink(c: &Ctx) -> Outcome {
    implies(closed_point_sg_shrink(c).is_ok(), || {
        let instances = c
            .points()
            .filter(|y| c.s.is_lambda_closed(Subset::singleton(*y)))
            .flat_map(|y| c.open.iter().filter(move |g| g.contains(y)).map(move |g| (y, *g)));
        first_failure(instances.map(|(y, g)| {
            ensure(
                c.sg_open
                    .iter()
                    .any(|e| c.int(*e).contains(y) && c.cl(*e).is_subset_of(g)),
                vec![("y", Subset::singleton(y)), ("G", g)],
                "no sg-open E with y ∈ int E and cl E ⊆ G",
            )
        }))
    })
}

fn sg_closed_point_shrink(c: &Ctx, family: &[Subset]) -> Check {
    let instances = c
        .points()
        .filter(|y| c.s.is_sg_closed(Subset::singleton(*y)))
        .flat_map(|y| c.open.iter().filter(move |g| g.contains(y)).map(move |g| (y, *g)));
    first_failure(instances.map(|(y, g)| {
        let cly = c.cl(Subset::singleton(y));
        ensure(
            family.iter().any(|e| cly.is_subset_of(*e) && c.cl(*e).is_subset_of(g)),
            vec![("y", Subset::singleton(y)), ("G", g)],
            "no E with cl{y} ⊆ E ⊆ cl E ⊆ G",
        )
    }))
}

fn normal_sg_closed_point_sg_shrink(c: &Ctx) -> Outcome {
    implies(c.ax.normal_strong, || sg_closed_point_shrink(c, &c.sg_open))
}

fn normal_sg_closed_point_open_shrink(c: &Ctx) -> Outcome {
    implies(c.ax.normal_strong, || sg_closed_point_shrink(c, &c.open))
}

// Complete and perfect normality.

fn subspace_of_completely_normal_is_normal(c: &Ctx) -> Outcome {
    implies(c.ax.completely_normal, || {
        first_failure(c.subspaces().iter().map(|(d, _, r)| {
            ensure(r.normal_weak, vec![("D", *d)], "subspace not normal")
        }))
    })
}

fn hereditarily_normal_implies_t5_separation(c: &Ctx) -> Outcome {
    let hyp = c.ax.condition_a && c.subspaces().iter().all(|(_, _, r)| r.normal_strong);
    implies(hyp, || {
        first_failure(c.weak_pairs().map(|(a, b)| {
            ensure(
                axioms::strongly_separated(c.s, a, b).unwrap_or(false),
                vec![("G", a), ("H", b)],
                "weakly but not strongly separated",
            )
        }))
    })
}

fn closed_hereditarily_normal_implies_completely_normal(c: &Ctx) -> Outcome {
    let hyp = c.ax.condition_a
        && c.subspaces()
            .iter()
            .all(|(d, _, r)| c.s.is_lambda_closed(*d) && r.normal_strong);
    implies(hyp, || ensure(c.ax.completely_normal, vec![], "not completely normal"))
}

fn completely_normal_implies_normal(c: &Ctx) -> Outcome {
    implies(c.ax.completely_normal, || ensure(c.ax.normal_strong, vec![], "not normal"))
}

fn t5_implies_t4(c: &Ctx) -> Outcome {
    implies(c.ax.t5, || ensure(c.ax.t4, vec![], "not T4"))
}

fn t5_implies_hereditarily_t4(c: &Ctx) -> Outcome {
    implies(c.ax.t5, || {
        first_failure(c.subspaces().iter().map(|(d, _, r)| ensure(r.t4, vec![("D", *d)], "subspace not T4")))
    })
}

fn perfectly_normal_implies_normal(c: &Ctx) -> Outcome {
    implies(c.ax.perfectly_normal, || ensure(c.ax.normal_strong, vec![], "not normal"))
}

fn perfectly_normal_implies_t5_separation(c: &Ctx) -> Outcome {
    let hyp = c.ax.perfectly_normal
        && c.ax.condition_a
        && c.s.s_lambda_closed().is_subfamily_of(c.s.s_lambda_gdelta());
    implies(hyp, || {
        ensure(
            axioms::weak_separation_is_strong(c.s),
            vec![],
            "some weakly separated pair is not strongly separated",
        )
    })
}

// Nested separation.

fn completely_normal_implies_nested_separation(c: &Ctx) -> Outcome {
    implies(c.ax.completely_normal, || c.nested_separation())
}

/// The closed-pair form: `A ⊆ P`, `B ⊆ Q` with `P`, `Q` lambda-closed,
/// `A ∩ Q = ∅` and `B ∩ P = ∅`. Taking closures, such `P`, `Q` exist
/// exactly when the pair is weakly separated.
fn nested_separation_implies_closed_pair_form(c: &Ctx) -> Outcome {
    implies(c.nested_separation().is_ok(), || {
        let instances = axioms::nonempty_disjoint_pairs(c.s).filter(|&(a, b)| {
            c.closed.iter().filter(|p| a.is_subset_of(**p) && !p.meets(b)).any(|_| {
                c.closed.iter().any(|q| b.is_subset_of(*q) && !q.meets(a))
            })
        });
        first_failure(instances.map(|(a, b)| {
            ensure(c.nested_pair(a, b), vec![("A", a), ("B", b)], "no nested separation")
        }))
    })
}

fn nested_separation_implies_sg_shrink(c: &Ctx) -> Outcome {
    implies(c.nested_separation().is_ok(), || c.sg_shrink_of_closed())
}

// Constructions.

fn gdelta_zero_set(c: &Ctx) -> Outcome {
    let gdelta = c.s.s_lambda_gdelta();
    let eligible = c.nonempty_disjoint_closed().filter(|(m, _)| gdelta.contains(*m));
    each(c.ax.normal_weak && c.ax.condition_a, eligible, |(m, n)| {
        let sets = vec![("M", m), ("N", n)];
        match realfn::gdelta_zero_set_function(c.s, m, n, HARNESS_DEPTH) {
            Ok(f) => ensure(
                f.zero_set() == m && n.points().all(|p| f.value(p) == crate::Dyadic::ONE),
                sets,
                "zero set differs from M or f ≠ 1 on N",
            ),
            Err(e) => fail(sets, format!("construction failed: {e}")),
        }
    })
}

fn urysohn_construction(c: &Ctx) -> Outcome {
    each(c.ax.normal_weak && c.ax.condition_a, c.nonempty_disjoint_closed(), |(a, b)| {
        let sets = vec![("A", a), ("B", b)];
        match realfn::urysohn_construct(c.s, a, b, HARNESS_DEPTH) {
            Ok((family, f)) => {
                if let Err(v) = family.check_invariants(c.s) {
                    return fail(sets, format!("invariant ({}) fails at {:?}", v.invariant, v.labels));
                }
                ensure(
                    a.points().all(|p| f.value(p).is_zero())
                        && b.points().all(|p| f.value(p) == crate::Dyadic::ONE),
                    sets,
                    "f is not 0 on A and 1 on B",
                )
            }
            Err(e) => fail(sets, format!("construction failed: {e}")),
        }
    })
}

type TheoremFn = fn(&Ctx) -> Outcome;

const THEOREMS: &[(&str, TheoremFn)] = &[
    ("closure-interior-duality", closure_interior_duality),
    ("sker-idempotent", sker_idempotent),
    ("sl-closed-lemma-matches-definition", lemma_matches_definition),
    ("family-inclusions", family_inclusions),
    ("sg-open-characterization", sg_open_characterization),
    ("t1-iff-singletons-closed", t1_iff_singletons_closed),
    ("r1-implies-r0", r1_implies_r0),
    ("regular-implies-r1", regular_implies_r1),
    ("t2-iff-r1-and-t1", t2_iff_r1_and_t1),
    ("regularity-equivalence", regularity_equivalence),
    ("compactness-routes-agree", compactness_routes_agree),
    ("closed-subset-of-compact-is-compact", closed_subset_of_compact_is_compact),
    ("sg-closed-subset-of-compact-is-compact", sg_closed_subset_of_compact_is_compact),
    ("finite-closure-union-additivity", finite_closure_union_additivity),
    ("compact-subset-of-regular-is-sg-closed", compact_subset_of_regular_is_sg_closed),
    ("condition-a-closure-additivity", condition_a_closure_additivity),
    ("normality-equivalence", normality_equivalence),
    ("sg-normality-equivalence", sg_normality_equivalence),
    ("paracompact-hausdorff-implies-normal", paracompact_hausdorff_implies_normal),
    ("function-separation-implies-closed-neighborhoods", function_separation_implies_closed_neighborhoods),
    ("function-separation-implies-normal", function_separation_implies_normal),
    ("normal-condition-a-function-separation", normal_condition_a_function_separation),
    ("completely-hausdorff-implies-urysohn", completely_hausdorff_implies_urysohn),
    ("urysohn-implies-hausdorff", urysohn_implies_hausdorff),
    ("urysohn-normal-implies-completely-hausdorff", urysohn_normal_implies_completely_hausdorff),
    ("completely-hausdorff-sg-separation", completely_hausdorff_sg_separation),
    ("regular-t1-implies-urysohn", regular_t1_implies_urysohn),
    ("t4-condition-a-implies-tychonoff", t4_condition_a_implies_tychonoff),
    ("tychonoff-implies-completely-regular", tychonoff_implies_completely_regular),
    ("completely-regular-implies-regular", completely_regular_implies_regular),
    ("tychonoff-implies-t3", tychonoff_implies_t3),
    ("tychonoff-implies-completely-hausdorff", tychonoff_implies_completely_hausdorff),
    ("regular-normal-implies-completely-regular", regular_normal_implies_completely_regular),
    ("completely-regular-sg-shrink", completely_regular_sg_shrink),
    ("sg-shrink-implies-interior-shrink", sg_shrink_implies_interior_shrink),
    ("normal-sg-closed-point-sg-shrink", normal_sg_closed_point_sg_shrink),
    ("normal-sg-closed-point-open-shrink", normal_sg_closed_point_open_shrink),
    ("subspace-of-completely-normal-is-normal", subspace_of_completely_normal_is_normal),
    ("hereditarily-normal-implies-t5-separation", hereditarily_normal_implies_t5_separation),
    (
        "closed-hereditarily-normal-implies-completely-normal",
        closed_hereditarily_normal_implies_completely_normal,
    ),
    ("completely-normal-implies-normal", completely_normal_implies_normal),
    ("t5-implies-t4", t5_implies_t4),
    ("t5-implies-hereditarily-t4", t5_implies_hereditarily_t4),
    ("perfectly-normal-implies-normal", perfectly_normal_implies_normal),
    ("perfectly-normal-implies-t5-separation", perfectly_normal_implies_t5_separation),
    ("completely-normal-implies-nested-separation", completely_normal_implies_nested_separation),
    ("nested-separation-implies-closed-pair-form", nested_separation_implies_closed_pair_form),
    ("nested-separation-implies-sg-shrink", nested_separation_implies_sg_shrink),
    ("gdelta-zero-set", gdelta_zero_set),
    ("urysohn-construction", urysohn_construction),
];

/// Theorem ids in report order.
pub const THEOREM_IDS: [&str; 50] = {
    let mut ids = [""; 50];
    let mut i = 0;
    while i < THEOREMS.len() {
        ids[i] = THEOREMS[i].0;
        i += 1;
    }
    ids
};

fn report(id: &'static str, space: &GtSpace, outcome: Outcome) -> TheoremReport {
    let (conclusion_held, witness) = match outcome.concl {
        Ok(()) => (true, None),
        Err(f) => (
            false,
            Some(Witness {
                kind: format!("theorem {id}"),
                space: space.clone(),
                subsets: f.sets.into_iter().map(|(n, s)| (n.to_string(), s)).collect(),
                description: f.detail,
            }),
        ),
    };
    let status = match (outcome.hyp, conclusion_held) {
        (false, _) => Status::Vacuous,
        (true, true) => Status::Verified,
        (true, false) => Status::Failed,
    };
    TheoremReport {
        id,
        hypotheses_held: outcome.hyp,
        conclusion_held,
        status,
        witness: if status == Status::Failed { witness } else { None },
    }
}

/// Every check on one space, in [`THEOREM_IDS`] order.
pub fn verify_theorems(space: &GtSpace) -> Vec<TheoremReport> {
    let ctx = Ctx::new(space);
    THEOREMS
        .iter()
        .map(|(id, check)| report(id, space, check(&ctx)))
        .collect()
}

/// One check by id.
pub fn verify_theorem(id: &str, space: &GtSpace) -> Option<TheoremReport> {
    let (id, check) = THEOREMS.iter().find(|(t, _)| *t == id)?;
    let ctx = Ctx::new(space);
    Some(report(id, space, check(&ctx)))
}

/// Reports for many spaces, computed in parallel and returned in input
/// order.
pub fn verify_population(spaces: &[GtSpace]) -> Vec<Vec<TheoremReport>> {
    spaces.par_iter().map(verify_theorems).collect()
}

/// Counts for one theorem over a population.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremTally {
    pub id: &'static str,
    pub verified: usize,
    pub vacuous: usize,
    pub failed: usize,
    /// First failure in population order.
    pub first_failure: Option<Witness>,
}

impl TheoremTally {
    pub fn status(&self) -> Status {
        if self.failed > 0 {
            Status::Failed
        } else if self.verified > 0 {
            Status::Verified
        } else {
            Status::Vacuous
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessSummary {
    pub spaces: usize,
    pub tallies: Vec<TheoremTally>,
    /// Spaces on which some semi-kernel fell back to the whole set.
    pub empty_kernel_spaces: usize,
    /// `(continuous, total)` counts of depth-limited step functions from the
    /// dyadic construction.
    pub urysohn_continuity: (usize, usize),
}

impl HarnessSummary {
    pub fn failed(&self) -> usize {
        self.tallies.iter().map(|t| t.failed).sum()
    }

    pub fn tally(&self, id: &str) -> Option<&TheoremTally> {
        self.tallies.iter().find(|t| t.id == id)
    }
}

/// Continuity of the depth-limited dyadic step function over all eligible
/// closed pairs of a space, as `(continuous, total)`.
pub fn urysohn_step_continuity(space: &GtSpace, depth: u32) -> (usize, usize) {
    if !(axioms::is_normal_weak(space) && axioms::condition_a(space)) {
        return (0, 0);
    }
    let mut counts = (0, 0);
    for (a, b) in axioms::disjoint_closed_pairs(space) {
        if a.is_empty() || b.is_empty() {
            continue;
        }
        if let Ok((_, f)) = realfn::urysohn_construct(space, a, b, depth) {
            counts.1 += 1;
            if realfn::is_continuous(space, &f) {
                counts.0 += 1;
            }
        }
    }
    counts
}

/// Verifies a population and folds the reports into per-theorem tallies.
pub fn summarize(spaces: &[GtSpace]) -> HarnessSummary {
    let reports = verify_population(spaces);
    let mut tallies: Vec<TheoremTally> = THEOREM_IDS
        .iter()
        .map(|id| TheoremTally {
            id,
            verified: 0,
            vacuous: 0,
            failed: 0,
            first_failure: None,
        })
        .collect();
    for space_reports in reports {
        for (tally, r) in tallies.iter_mut().zip(space_reports) {
            match r.status {
                Status::Verified => tally.verified += 1,
                Status::Vacuous => tally.vacuous += 1,
                Status::Failed => {
                    tally.failed += 1;
                    if tally.first_failure.is_none() {
                        tally.first_failure = r.witness;
                    }
                }
            }
        }
    }
    let empty_kernel_spaces = spaces
        .par_iter()
        .filter(|s| {
            s.all_subsets().for_each(|d| {
                s.sker(d);
            });
            s.empty_kernel_count() > 0
        })
        .count();
    let urysohn_continuity = spaces
        .par_iter()
        .map(|s| urysohn_step_continuity(s, HARNESS_DEPTH))
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    HarnessSummary {
        spaces: spaces.len(),
        tallies,
        empty_kernel_spaces,
        urysohn_continuity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e0, e1, e2};
    use crate::space::make_space;

    fn status_of(reports: &[TheoremReport], id: &str) -> Status {
        reports.iter().find(|r| r.id == id).unwrap().status
    }

    #[test]
    fn ids_are_unique_and_complete() {
        assert_eq!(THEOREM_IDS.len(), THEOREMS.len());
        let mut ids = THEOREM_IDS.to_vec();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), THEOREMS.len());
    }

    #[test]
    fn e0_has_no_failures() {
        let reports = verify_theorems(&e0());
        assert!(reports.iter().all(|r| r.status != Status::Failed), "{reports:#?}");
    }

    #[test]
    fn one_point_space_has_no_failures() {
        let s = make_space(["a"], Vec::<Vec<&str>>::new()).unwrap();
        assert!(verify_theorems(&s).iter().all(|r| r.status != Status::Failed));
    }

    #[test]
    fn e1_hausdorff_report_matches_classification() {
        let s = e1();
        let ax = axioms::classify(&s);
        let reports = verify_theorems(&s);
        let expected = if ax.t2 == (ax.r1 && ax.t1) { Status::Verified } else { Status::Failed };
        assert_eq!(status_of(&reports, "t2-iff-r1-and-t1"), expected);
    }

    #[test]
    fn report_invariants_hold() {
        for s in [e0(), e1(), e2()] {
            for r in verify_theorems(&s) {
                assert_eq!(r.status == Status::Failed, r.hypotheses_held && !r.conclusion_held);
                assert_eq!(r.status == Status::Vacuous, !r.hypotheses_held);
                assert_eq!(r.witness.is_some(), r.status == Status::Failed);
            }
        }
    }

    #[test]
    fn single_theorem_lookup() {
        let r = verify_theorem("r1-implies-r0", &e2()).unwrap();
        assert_eq!(r.id, "r1-implies-r0");
        assert!(verify_theorem("no-such-theorem", &e2()).is_none());
    }
}
