//! Verification suites, counterexample search and serialization helpers.
//!
//! The suites replay the crate's headline invariants as exhaustive or
//! seeded-random sweeps and report every violated case with a serialized
//! witness. Searches scan enumeration streams (tournaments up to
//! isomorphism, or block spaces) for conjunctions of named predicates.
//! Identical invocations produce byte-identical reports: randomized parts
//! are driven by a seed echoed in the result, and wall time stays out of
//! the machine output.

pub mod dot;

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::blockspace::{kind_catalog, BlockSpace};
use crate::lexsum::PartitionedSelection;
use crate::seltopo::selection_topology;
use crate::topology::enumerate_topologies;
use crate::tournament::{enumerate_canonical, enumerate_labeled, Tournament};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabError {
    #[error("unknown suite {0:?}; known suites: {}", SUITE_NAMES.join(", "))]
    UnknownSuite(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("predicate {0:?} used with a malformed or missing argument")]
    BadPredicateArg(String),
    #[error("predicate {atom:?} is not supported over {domain}")]
    UnsupportedPredicate { atom: String, domain: String },
    #[error("unsupported export format {0:?}")]
    UnsupportedFormat(String),
    #[error("empty predicate")]
    EmptyPredicate,
}

pub const SUITE_NAMES: [&str; 7] = [
    "landau",
    "transitivity-collapse",
    "emperor-unique",
    "discreteness",
    "sum-continuity",
    "blockmodel-oracle",
    "blockmodel-compactness",
];

/// Optional overrides for the per-suite default bounds.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub max_n: Option<usize>,
    pub random_cases: Option<u64>,
    pub random_max_n: Option<usize>,
    pub seed: Option<u64>,
    pub max_blocks: Option<usize>,
    pub density: Option<usize>,
}

/// Outcome of one suite run. Serializes deterministically; the wall clock
/// is kept out of the machine report.
#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub params: Value,
    pub cases: u64,
    pub failures: Vec<Value>,
    #[serde(skip)]
    pub wall: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct SuiteRun {
    cases: u64,
    failures: Vec<Value>,
}

impl SuiteRun {
    fn new() -> Self {
        SuiteRun {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failures.push(witness());
        }
    }
}

/// Runs the named invariant sweep with the given bound overrides.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteResult, LabError> {
    let started = Instant::now();
    let (params, run) = match name {
        "landau" => suite_landau(opts),
        "transitivity-collapse" => suite_transitivity_collapse(opts),
        "emperor-unique" => suite_emperor_unique(opts),
        "discreteness" => suite_discreteness(opts),
        "sum-continuity" => suite_sum_continuity(opts),
        "blockmodel-oracle" => suite_blockmodel_oracle(opts),
        "blockmodel-compactness" => suite_blockmodel_compactness(opts),
        other => return Err(LabError::UnknownSuite(other.to_string())),
    };
    Ok(SuiteResult {
        suite: name.to_string(),
        params,
        cases: run.cases,
        failures: run.failures,
        wall: started.elapsed(),
    })
}

/// Every tournament has at least one king: exhaustively over isomorphism
/// classes, then on seeded random tournaments.
fn suite_landau(opts: &SuiteOptions) -> (Value, SuiteRun) {
    let max_n = opts.max_n.unwrap_or(6);
    let random_cases = opts.random_cases.unwrap_or(10_000);
    let random_max_n = opts.random_max_n.unwrap_or(64);
    let seed = opts.seed.unwrap_or(0xFEED);
    let mut run = SuiteRun::new();
    for n in 1..=max_n {
        for t in enumerate_canonical(n).expect("bound within enumeration limit") {
            let report = t.king_report();
            run.check(!report.kings.is_empty() && !report.quasi_kings.is_empty(), || {
                json!({"tournament": t})
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_cases {
        let n = rng.gen_range(1..=random_max_n);
        let t = Tournament::random(n, &mut rng);
        let report = t.king_report();
        run.check(!report.kings.is_empty() && !report.quasi_kings.is_empty(), || {
            json!({"tournament": t})
        });
    }
    let params = json!({
        "max_n": max_n,
        "random_cases": random_cases,
        "random_max_n": random_max_n,
        "seed": seed,
    });
    (params, run)
}

/// The one-step relation equals its two-step or chain saturation exactly
/// when it is transitive, over all labeled tournaments.
fn suite_transitivity_collapse(opts: &SuiteOptions) -> (Value, SuiteRun) {
    let max_n = opts.max_n.unwrap_or(5);
    let mut run = SuiteRun::new();
    for n in 1..=max_n {
        for t in enumerate_labeled(n).expect("bound within enumeration limit") {
            let triple = t.relation_closures();
            let transitive = triple.leq.is_transitive();
            let ok = (transitive == (triple.two_step == triple.leq))
                && (transitive == (triple.reach == triple.leq));
            run.check(ok, || json!({"tournament": t}));
        }
    }
    (json!({ "max_n": max_n }), run)
}

/// Exactly one king exists exactly when that king is an emperor, over all
/// isomorphism classes.
fn suite_emperor_unique(opts: &SuiteOptions) -> (Value, SuiteRun) {
    let max_n = opts.max_n.unwrap_or(6);
    let mut run = SuiteRun::new();
    for n in 1..=max_n {
        for t in enumerate_canonical(n).expect("bound within enumeration limit") {
            let report = t.king_report();
            run.check(
                (report.kings.len() == 1) == report.emperor.is_some(),
                || json!({"tournament": t, "report": report}),
            );
        }
    }
    (json!({ "max_n": max_n }), run)
}

/// The induced topology of every finite selection is discrete:
/// exhaustively on labeled tournaments, then on seeded random ones.
fn suite_discreteness(opts: &SuiteOptions) -> (Value, SuiteRun) {
    let max_n = opts.max_n.unwrap_or(6);
    let random_cases = opts.random_cases.unwrap_or(200);
    let random_max_n = opts.random_max_n.unwrap_or(40);
    let seed = opts.seed.unwrap_or(0xFEED);
    let mut run = SuiteRun::new();
    for n in 1..=max_n {
        for t in enumerate_labeled(n).expect("bound within enumeration limit") {
            run.check(selection_topology(&t).is_discrete(), || {
                json!({"tournament": t})
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_cases {
        let n = rng.gen_range(1..=random_max_n);
        let t = Tournament::random(n, &mut rng);
        run.check(selection_topology(&t).is_discrete(), || {
            json!({"tournament": t})
        });
    }
    let params = json!({
        "max_n": max_n,
        "random_cases": random_cases,
        "random_max_n": random_max_n,
        "seed": seed,
    });
    (params, run)
}

/// Separate and Vietoris continuity pass from the parts to the sum, over
/// every two-part split with parts of at most three points, every choice
/// of per-part selections and every pair of part topologies.
fn suite_sum_continuity(opts: &SuiteOptions) -> (Value, SuiteRun) {
    let max_n = opts.max_n.unwrap_or(5);
    let max_part = 3;
    let mut run = SuiteRun::new();
    for n in 2..=max_n {
        for mask in 1u64..(1 << n) - 1 {
            let part0: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let part1: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
            if part0.len() > max_part || part1.len() > max_part {
                continue;
            }
            let etas0: Vec<Tournament> = enumerate_labeled(part0.len()).unwrap().collect();
            let etas1: Vec<Tournament> = enumerate_labeled(part1.len()).unwrap().collect();
            let tops0: Vec<_> = enumerate_topologies(part0.len()).unwrap().collect();
            let tops1: Vec<_> = enumerate_topologies(part1.len()).unwrap().collect();
            for eta0 in &etas0 {
                for eta1 in &etas1 {
                    let p = PartitionedSelection::new(
                        vec![part0.clone(), part1.clone()],
                        Tournament::chain(2),
                        vec![eta0.clone(), eta1.clone()],
                    )
                    .expect("split is a partition");
                    for t0 in &tops0 {
                        for t1 in &tops1 {
                            let report = p
                                .sum_continuity_report(&[t0.clone(), t1.clone()])
                                .expect("sizes agree");
                            run.check(report.both_implications_hold(), || {
                                json!({
                                    "parts": [part0, part1],
                                    "etas": [eta0, eta1],
                                    "report": report,
                                })
                            });
                        }
                    }
                }
            }
        }
    }
    (json!({ "max_n": max_n, "max_part": max_part }), run)
}

/// All block spaces of a given arity, swept over the kind catalog, every
/// glue tournament and every orientation assignment.
fn block_space_sweep(max_blocks: usize) -> impl Iterator<Item = BlockSpace> {
    (1..=max_blocks).flat_map(|b| {
        (0..b)
            .map(|_| kind_catalog().to_vec())
            .multi_cartesian_product()
            .flat_map(move |kinds| {
                enumerate_labeled(b)
                    .expect("block sweep bound is small")
                    .flat_map(move |gamma| {
                        let kinds = kinds.clone();
                        (0u64..1 << b).map(move |m| {
                            let flags = (0..b).map(|i| m >> i & 1 == 1).collect();
                            BlockSpace::new(kinds.clone(), gamma.clone(), flags)
                                .expect("catalog kinds are valid")
                        })
                    })
            })
    })
}

/// The block-level report agrees with the finite-skeleton oracle on every
/// block space of at most `max_blocks` blocks.
fn suite_blockmodel_oracle(opts: &SuiteOptions) -> (Value, SuiteRun) {
    let max_blocks = opts.max_blocks.unwrap_or(3);
    let density = opts.density.unwrap_or(3);
    let mut run = SuiteRun::new();
    for bs in block_space_sweep(max_blocks) {
        let symbolic = bs.symbolic_king_report();
        let view = bs
            .finite_skeleton(density)
            .expect("density is at least 3")
            .king_view();
        let ok = match &view {
            Ok(v) => *v == symbolic,
            Err(_) => false,
        };
        run.check(ok, || {
            json!({
                "blockspace": bs,
                "symbolic": symbolic,
                "skeleton": match view { Ok(v) => json!(v), Err(e) => json!({"error": e}) },
            })
        });
    }
    (json!({ "max_blocks": max_blocks, "density": density }), run)
}

/// Over transitive glues: the family quasi-king property implies a compact
/// glued order, and a compact glued order implies a quasi-king.
fn suite_blockmodel_compactness(opts: &SuiteOptions) -> (Value, SuiteRun) {
    let max_blocks = opts.max_blocks.unwrap_or(4);
    let mut run = SuiteRun::new();
    for b in 1..=max_blocks {
        for kinds in (0..b)
            .map(|_| kind_catalog().to_vec())
            .multi_cartesian_product()
        {
            let family_quasi = BlockSpace::standard(kinds.clone(), Tournament::chain(b))
                .expect("catalog kinds are valid")
                .is_block_quasi_king_space()
                .expect("within the family bound");
            for gamma in enumerate_labeled(b).unwrap().filter(Tournament::is_transitive) {
                for m in 0u64..1 << b {
                    let flags = (0..b).map(|i| m >> i & 1 == 1).collect();
                    let bs = BlockSpace::new(kinds.clone(), gamma.clone(), flags)
                        .expect("catalog kinds are valid");
                    let compact = bs.is_order_compact().expect("transitive glue");
                    let quasi = bs.symbolic_king_report().has_quasi_king();
                    run.check(!family_quasi || compact, || {
                        json!({"blockspace": bs, "violated": "family-quasi-king implies compact"})
                    });
                    run.check(!compact || quasi, || {
                        json!({"blockspace": bs, "violated": "compact implies quasi-king"})
                    });
                }
            }
        }
    }
    (json!({ "max_blocks": max_blocks }), run)
}

/// One named atomic predicate, possibly carrying a count argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    HasEmperor,
    HasKing,
    HasQuasiKing,
    KingsEqQuasiKings,
    QuasiKingsExceedKings,
    IsTransitive,
    KingCount(usize),
    QuasiKingCount(usize),
    CondensationClasses(usize),
}

impl Atom {
    fn parse(token: &str) -> Result<Atom, LabError> {
        let (name, arg) = match token.split_once('=') {
            Some((n, a)) => (n.trim(), Some(a.trim())),
            None => (token.trim(), None),
        };
        let needs_count = |arg: Option<&str>| -> Result<usize, LabError> {
            arg.and_then(|a| a.parse().ok())
                .ok_or_else(|| LabError::BadPredicateArg(name.to_string()))
        };
        let atom = match name {
            "has_emperor" => Atom::HasEmperor,
            "has_king" => Atom::HasKing,
            "has_quasi_king" => Atom::HasQuasiKing,
            "kings_eq_quasi_kings" => Atom::KingsEqQuasiKings,
            "quasi_kings_gt_kings" => Atom::QuasiKingsExceedKings,
            "is_transitive" => Atom::IsTransitive,
            "king_count" => Atom::KingCount(needs_count(arg)?),
            "quasi_king_count" => Atom::QuasiKingCount(needs_count(arg)?),
            "condensation_classes" => Atom::CondensationClasses(needs_count(arg)?),
            other => return Err(LabError::UnknownPredicate(other.to_string())),
        };
        if arg.is_some()
            && !matches!(
                atom,
                Atom::KingCount(_) | Atom::QuasiKingCount(_) | Atom::CondensationClasses(_)
            )
        {
            return Err(LabError::BadPredicateArg(name.to_string()));
        }
        Ok(atom)
    }

    fn eval_tournament(&self, t: &Tournament, r: &crate::tournament::KingReport) -> bool {
        match *self {
            Atom::HasEmperor => r.emperor.is_some(),
            Atom::HasKing => !r.kings.is_empty(),
            Atom::HasQuasiKing => !r.quasi_kings.is_empty(),
            Atom::KingsEqQuasiKings => r.kings == r.quasi_kings,
            Atom::QuasiKingsExceedKings => r.quasi_kings.len() > r.kings.len(),
            Atom::IsTransitive => t.is_transitive(),
            Atom::KingCount(k) => r.kings.len() == k,
            Atom::QuasiKingCount(k) => r.quasi_kings.len() == k,
            Atom::CondensationClasses(k) => r.condensation.len() == k,
        }
    }

    fn eval_block_space(
        &self,
        bs: &BlockSpace,
        r: &crate::blockspace::SymbolicKingReport,
    ) -> Result<bool, LabError> {
        Ok(match *self {
            Atom::HasEmperor => r.emperor.is_some(),
            Atom::HasKing => r.has_king(),
            Atom::HasQuasiKing => r.has_quasi_king(),
            Atom::IsTransitive => bs.gamma().is_transitive(),
            _ => {
                return Err(LabError::UnsupportedPredicate {
                    atom: format!("{self:?}"),
                    domain: "block spaces".to_string(),
                })
            }
        })
    }
}

/// A conjunction of possibly negated named atoms, as parsed from
/// `"quasi_kings_gt_kings & !has_emperor"` (`,` also separates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchPredicate {
    terms: Vec<(Atom, bool)>,
}

impl SearchPredicate {
    pub fn parse(text: &str) -> Result<Self, LabError> {
        let mut terms = Vec::new();
        for raw in text.split(['&', ',']) {
            let token = raw.trim();
            if token.is_empty() {
                continue;
            }
            let (negated, token) = match token.strip_prefix('!') {
                Some(rest) => (true, rest.trim()),
                None => (false, token),
            };
            terms.push((Atom::parse(token)?, negated));
        }
        if terms.is_empty() {
            return Err(LabError::EmptyPredicate);
        }
        Ok(SearchPredicate { terms })
    }

    pub fn eval_tournament(&self, t: &Tournament) -> bool {
        let report = t.king_report();
        self.terms
            .iter()
            .all(|(atom, neg)| atom.eval_tournament(t, &report) != *neg)
    }

    pub fn eval_block_space(&self, bs: &BlockSpace) -> Result<bool, LabError> {
        let report = bs.symbolic_king_report();
        for (atom, neg) in &self.terms {
            if atom.eval_block_space(bs, &report)? == *neg {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Copy, Debug)]
pub enum SearchDomain {
    /// Canonical representatives, smallest size first.
    Tournaments { min_points: usize, max_points: usize },
    /// Catalog kinds crossed with every glue and orientation.
    BlockSpaces { min_blocks: usize, max_blocks: usize },
}

#[derive(Debug, Serialize)]
pub struct SearchOutcome {
    pub witnesses: Vec<Value>,
    pub scanned: u64,
}

/// Scans the domain in its deterministic enumeration order, collecting
/// every witness (or only the first).
pub fn search(
    pred: &SearchPredicate,
    domain: SearchDomain,
    first_only: bool,
) -> Result<SearchOutcome, LabError> {
    let mut outcome = SearchOutcome {
        witnesses: Vec::new(),
        scanned: 0,
    };
    match domain {
        SearchDomain::Tournaments {
            min_points,
            max_points,
        } => {
            for n in min_points.max(1)..=max_points {
                for t in enumerate_canonical(n).map_err(|_| {
                    LabError::BadPredicateArg(format!("enumeration bound exceeded at n={n}"))
                })? {
                    outcome.scanned += 1;
                    if pred.eval_tournament(&t) {
                        let report = t.king_report();
                        outcome
                            .witnesses
                            .push(json!({"n": n, "tournament": t, "report": report}));
                        if first_only {
                            return Ok(outcome);
                        }
                    }
                }
            }
        }
        SearchDomain::BlockSpaces {
            min_blocks,
            max_blocks,
        } => {
            for b in min_blocks.max(1)..=max_blocks {
                for bs in block_space_sweep(b).filter(|bs| bs.block_count() == b) {
                    outcome.scanned += 1;
                    if pred.eval_block_space(&bs)? {
                        let report = bs.symbolic_king_report();
                        outcome
                            .witnesses
                            .push(json!({"blocks": b, "blockspace": bs, "report": report}));
                        if first_only {
                            return Ok(outcome);
                        }
                    }
                }
            }
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournament::cycle_with_spur;

    #[test]
    fn unknown_suite_is_an_error() {
        assert_eq!(
            run_suite("nosuch", &SuiteOptions::default()).unwrap_err(),
            LabError::UnknownSuite("nosuch".to_string())
        );
    }

    #[test]
    fn landau_suite_passes_small() {
        let opts = SuiteOptions {
            max_n: Some(5),
            random_cases: Some(50),
            random_max_n: Some(32),
            ..Default::default()
        };
        let result = run_suite("landau", &opts).unwrap();
        assert!(result.passed());
        // 1 + 1 + 2 + 4 + 12 classes plus the random cases.
        assert_eq!(result.cases, 20 + 50);
    }

    #[test]
    fn suite_reports_are_deterministic() {
        let opts = SuiteOptions {
            max_n: Some(4),
            random_cases: Some(25),
            ..Default::default()
        };
        let a = serde_json::to_string(&run_suite("landau", &opts).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("landau", &opts).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn transitivity_and_emperor_suites_pass_small() {
        let opts = SuiteOptions {
            max_n: Some(4),
            ..Default::default()
        };
        assert!(run_suite("transitivity-collapse", &opts).unwrap().passed());
        assert!(run_suite("emperor-unique", &opts).unwrap().passed());
    }

    #[test]
    fn discreteness_suite_passes_small() {
        let opts = SuiteOptions {
            max_n: Some(4),
            random_cases: Some(20),
            random_max_n: Some(16),
            ..Default::default()
        };
        assert!(run_suite("discreteness", &opts).unwrap().passed());
    }

    #[test]
    fn sum_continuity_suite_passes_small() {
        let opts = SuiteOptions {
            max_n: Some(3),
            ..Default::default()
        };
        assert!(run_suite("sum-continuity", &opts).unwrap().passed());
    }

    #[test]
    fn blockmodel_suites_pass_small() {
        let opts = SuiteOptions {
            max_blocks: Some(2),
            ..Default::default()
        };
        assert!(run_suite("blockmodel-oracle", &opts).unwrap().passed());
        assert!(run_suite("blockmodel-compactness", &opts).unwrap().passed());
    }

    #[test]
    fn predicate_parsing() {
        let p = SearchPredicate::parse("quasi_kings_gt_kings & !has_emperor").unwrap();
        assert_eq!(
            p.terms,
            vec![(Atom::QuasiKingsExceedKings, false), (Atom::HasEmperor, true)]
        );
        assert_eq!(
            SearchPredicate::parse("king_count=3").unwrap().terms,
            vec![(Atom::KingCount(3), false)]
        );
        assert!(matches!(
            SearchPredicate::parse("king_count"),
            Err(LabError::BadPredicateArg(_))
        ));
        assert!(matches!(
            SearchPredicate::parse("has_emperor=2"),
            Err(LabError::BadPredicateArg(_))
        ));
        assert!(matches!(
            SearchPredicate::parse("nonsense"),
            Err(LabError::UnknownPredicate(_))
        ));
        assert!(matches!(
            SearchPredicate::parse("  "),
            Err(LabError::EmptyPredicate)
        ));
    }

    #[test]
    fn predicate_evaluation_on_spur_example() {
        let t = cycle_with_spur();
        for (text, expected) in [
            ("quasi_kings_gt_kings", true),
            ("has_emperor", false),
            ("king_count=3", true),
            ("quasi_king_count=4", true),
            ("condensation_classes=1", true),
            ("is_transitive", false),
            ("kings_eq_quasi_kings", false),
            ("has_king & has_quasi_king", true),
        ] {
            let p = SearchPredicate::parse(text).unwrap();
            assert_eq!(p.eval_tournament(&t), expected, "{text}");
        }
    }

    #[test]
    fn smallest_quasi_king_gap_is_at_four_points() {
        let pred = SearchPredicate::parse("quasi_kings_gt_kings").unwrap();
        let empty = search(
            &pred,
            SearchDomain::Tournaments {
                min_points: 1,
                max_points: 3,
            },
            false,
        )
        .unwrap();
        assert!(empty.witnesses.is_empty());
        assert_eq!(empty.scanned, 4);

        let found = search(
            &pred,
            SearchDomain::Tournaments {
                min_points: 1,
                max_points: 4,
            },
            true,
        )
        .unwrap();
        assert_eq!(found.witnesses.len(), 1);
        assert_eq!(found.witnesses[0]["n"], 4);
    }

    #[test]
    fn emperor_with_multiple_kings_never_exists() {
        let pred = SearchPredicate::parse("has_emperor & !king_count=1").unwrap();
        let outcome = search(
            &pred,
            SearchDomain::Tournaments {
                min_points: 1,
                max_points: 6,
            },
            false,
        )
        .unwrap();
        assert!(outcome.witnesses.is_empty());
        assert_eq!(outcome.scanned, 76);
    }

    #[test]
    fn transitive_tournaments_have_no_quasi_king_gap() {
        let pred = SearchPredicate::parse("is_transitive & !kings_eq_quasi_kings").unwrap();
        let outcome = search(
            &pred,
            SearchDomain::Tournaments {
                min_points: 1,
                max_points: 5,
            },
            false,
        )
        .unwrap();
        assert!(outcome.witnesses.is_empty());
    }

    #[test]
    fn block_space_search_supports_flag_atoms() {
        let pred = SearchPredicate::parse("has_quasi_king & !has_king").unwrap();
        let outcome = search(
            &pred,
            SearchDomain::BlockSpaces {
                min_blocks: 1,
                max_blocks: 1,
            },
            true,
        )
        .unwrap();
        assert_eq!(outcome.witnesses.len(), 1);

        let bad = SearchPredicate::parse("king_count=1").unwrap();
        assert!(matches!(
            search(
                &bad,
                SearchDomain::BlockSpaces {
                    min_blocks: 1,
                    max_blocks: 1,
                },
                true,
            ),
            Err(LabError::UnsupportedPredicate { .. })
        ));
    }
}
