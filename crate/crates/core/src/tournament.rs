//! Finite weak selections as tournaments.
//!
//! A weak selection on a finite set picks one point out of every one- or
//! two-point subset; on labeled points `0..n` it is the same thing as a
//! tournament: a complete antisymmetric orientation of all pairs. The
//! induced order-like relation is total, antisymmetric and reflexive but
//! not necessarily transitive, so "maximal" comes in three strengths:
//!
//! * an *emperor* sits above every point in one step,
//! * a *king* is reached from every point in at most two steps,
//! * a *quasi-king* is reached from every point by some finite chain.
//!
//! The module computes all three, the associated relation matrices, the
//! condensation into strongly connected classes, and enumerates tournaments
//! either labeled or up to isomorphism.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pointset::PointSet;

/// Practical cap for exhaustive enumeration (labeled and up to isomorphism).
pub const MAX_ENUMERATION_POINTS: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TournamentError {
    #[error("pair ({0}, {1}) is listed twice (possibly in both directions)")]
    DuplicatePair(usize, usize),
    #[error("pair ({0}, {1}) is missing an orientation")]
    MissingPair(usize, usize),
    #[error("pair ({0}, {0}) relates a point to itself")]
    SelfPair(usize),
    #[error("point {point} is out of range for ground set of size {n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("ground set of size {n} exceeds the supported maximum {max}")]
    TooManyPoints { n: usize, max: usize },
    #[error("size {n} exceeds the enumeration bound {max}")]
    SizeLimit { n: usize, max: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

/// A binary relation on `0..n`, one row bitset per point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    n: usize,
    rows: Vec<PointSet>,
}

impl Relation {
    pub fn new(n: usize, rows: Vec<PointSet>) -> Self {
        debug_assert_eq!(rows.len(), n);
        Relation { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `{y : x R y}`.
    pub fn row(&self, x: usize) -> PointSet {
        self.rows[x]
    }

    /// `{x : x R y}`.
    pub fn column(&self, y: usize) -> PointSet {
        (0..self.n).filter(|&x| self.rows[x].contains(y)).collect()
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.n == other.n
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(*b))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|x| {
            self.rows[x]
                .iter()
                .all(|y| self.rows[y].is_subset(self.rows[x]))
        })
    }

    /// Composition `self ; other`: `x (R∘S) y` iff `x R z` and `z S y` for some `z`.
    pub fn compose(&self, other: &Relation) -> Relation {
        let rows = (0..self.n)
            .map(|x| {
                let mut acc = PointSet::EMPTY;
                for z in self.rows[x].iter() {
                    acc |= other.rows[z];
                }
                acc
            })
            .collect();
        Relation { n: self.n, rows }
    }

    /// Reflexive-transitive closure via bitset Warshall.
    pub fn transitive_closure(&self) -> Relation {
        let mut rows = self.rows.clone();
        for k in 0..self.n {
            let row_k = rows[k];
            for x in 0..self.n {
                if rows[x].contains(k) {
                    rows[x] |= row_k;
                }
            }
        }
        Relation { n: self.n, rows }
    }
}

/// The three relation matrices induced by one weak selection: the reflexive
/// one-step relation, its two-step composition, and the full chain closure.
#[derive(Clone, Debug)]
pub struct RelationTriple {
    /// Reflexive one-step relation (`x` equals or is selected against `y`).
    pub leq: Relation,
    /// Two-step dominance: one intermediate point allowed.
    pub two_step: Relation,
    /// Chain dominance: transitive closure of `leq`.
    pub reach: Relation,
}

/// Kings, quasi-kings, emperor and condensation of one tournament.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KingReport {
    /// Points reached from everywhere in at most two steps, sorted.
    pub kings: Vec<usize>,
    /// Points reached from everywhere by a finite chain, sorted.
    pub quasi_kings: Vec<usize>,
    /// The unique point above everything in one step, if it exists.
    pub emperor: Option<usize>,
    /// Strongly connected classes, each sorted, ordered so that every edge
    /// points from an earlier class to a later one.
    pub condensation: Vec<Vec<usize>>,
}

/// A tournament on `n` labeled points: `lt(x, y)` holds for exactly one
/// orientation of every pair `x != y`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TournamentWire", into = "TournamentWire")]
pub struct Tournament {
    n: usize,
    /// `above[x]` = `{y : x < y}` in the induced order-like relation.
    above: Vec<PointSet>,
}

/// JSON shape: `{"n": 4, "edges": [[x, y], ...]}`, an edge meaning `x < y`.
#[derive(Serialize, Deserialize)]
struct TournamentWire {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<TournamentWire> for Tournament {
    type Error = TournamentError;
    fn try_from(w: TournamentWire) -> Result<Self, Self::Error> {
        Tournament::from_pairs(w.n, &w.edges)
    }
}

impl From<Tournament> for TournamentWire {
    fn from(t: Tournament) -> Self {
        TournamentWire {
            n: t.n,
            edges: t.edges(),
        }
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Tournament {
    /// Builds a tournament from the list of oriented pairs `(x, y)` meaning
    /// `x < y`. Every unordered pair must appear exactly once.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, TournamentError> {
        if n > PointSet::MAX_POINTS {
            return Err(TournamentError::TooManyPoints {
                n,
                max: PointSet::MAX_POINTS,
            });
        }
        let mut above = vec![PointSet::EMPTY; n];
        let mut seen = vec![PointSet::EMPTY; n];
        for &(x, y) in pairs {
            if x == y {
                return Err(TournamentError::SelfPair(x));
            }
            for p in [x, y] {
                if p >= n {
                    return Err(TournamentError::PointOutOfRange { point: p, n });
                }
            }
            let (a, b) = (x.min(y), x.max(y));
            if seen[a].contains(b) {
                return Err(TournamentError::DuplicatePair(x, y));
            }
            seen[a].insert(b);
            above[x].insert(y);
        }
        for a in 0..n {
            for b in a + 1..n {
                if !seen[a].contains(b) {
                    return Err(TournamentError::MissingPair(a, b));
                }
            }
        }
        Ok(Tournament { n, above })
    }

    /// The transitive chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1 && n <= PointSet::MAX_POINTS);
        let above = (0..n)
            .map(|x| ((x + 1)..n).collect())
            .collect();
        Tournament { n, above }
    }

    /// Uniformly random orientation of every pair.
    pub fn random<R: rand::Rng>(n: usize, rng: &mut R) -> Self {
        assert!(n >= 1 && n <= PointSet::MAX_POINTS);
        let mut above = vec![PointSet::EMPTY; n];
        for x in 0..n {
            for y in x + 1..n {
                if rng.gen::<bool>() {
                    above[x].insert(y);
                } else {
                    above[y].insert(x);
                }
            }
        }
        Tournament { n, above }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strict relation: `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// Reflexive relation: `x <= y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    /// `{y : x < y}`, the open interval to the right of `x`.
    pub fn successors(&self, x: usize) -> PointSet {
        self.above[x]
    }

    /// `{y : y < x}`, the open interval to the left of `x`.
    pub fn predecessors(&self, x: usize) -> PointSet {
        let mut all = PointSet::full(self.n);
        all.remove(x);
        all - self.above[x]
    }

    /// Oriented edges `(x, y)` with `x < y`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|x| self.above[x].iter().map(move |y| (x, y)))
            .collect();
        e.sort_unstable();
        e
    }

    /// The reflexive one-step relation as a matrix.
    pub fn leq_relation(&self) -> Relation {
        let rows = (0..self.n)
            .map(|x| self.above[x] | PointSet::singleton(x))
            .collect();
        Relation::new(self.n, rows)
    }

    /// Whether the strict relation is transitive (a linear order).
    pub fn is_transitive(&self) -> bool {
        self.leq_relation().is_transitive()
    }

    /// The three relation matrices: one-step, two-step, and chain closure.
    pub fn relation_closures(&self) -> RelationTriple {
        let leq = self.leq_relation();
        let two_step = leq.compose(&leq);
        let reach = leq.transitive_closure();
        RelationTriple {
            leq,
            two_step,
            reach,
        }
    }

    /// Kings, quasi-kings, emperor and condensation, each computed from its
    /// own defining property.
    pub fn king_report(&self) -> KingReport {
        let triple = self.relation_closures();
        let full = PointSet::full(self.n);
        let kings: Vec<usize> = (0..self.n)
            .filter(|&q| triple.two_step.column(q) == full)
            .collect();
        let quasi_kings: Vec<usize> = (0..self.n)
            .filter(|&q| triple.reach.column(q) == full)
            .collect();
        let emperor = (0..self.n).find(|&q| triple.leq.column(q) == full);
        KingReport {
            kings,
            quasi_kings,
            emperor,
            condensation: self.condensation(),
        }
    }

    /// Strongly connected classes of the strict relation, ordered so every
    /// edge points from an earlier class to a later one. For a tournament
    /// the classes are totally ordered, so the ordering is unique.
    pub fn condensation(&self) -> Vec<Vec<usize>> {
        let mut state = TarjanState {
            next_index: 0,
            stack: Vec::new(),
            on_stack: vec![false; self.n],
            index: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            classes: Vec::new(),
        };
        for v in 0..self.n {
            if state.index[v] == usize::MAX {
                self.strongconnect(v, &mut state);
            }
        }
        let mut classes = state.classes;
        for class in &mut classes {
            class.sort_unstable();
        }
        // Between two classes all edges share one direction; order by it.
        classes.sort_by(|a, b| {
            if a[0] == b[0] {
                std::cmp::Ordering::Equal
            } else if self.lt(a[0], b[0]) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        classes
    }

    fn strongconnect(&self, v: usize, state: &mut TarjanState) {
        state.index[v] = state.next_index;
        state.low[v] = state.next_index;
        state.next_index += 1;
        state.stack.push(v);
        state.on_stack[v] = true;

        for w in self.above[v].iter() {
            if state.index[w] == usize::MAX {
                self.strongconnect(w, state);
                state.low[v] = state.low[v].min(state.low[w]);
            } else if state.on_stack[w] {
                state.low[v] = state.low[v].min(state.index[w]);
            }
        }

        if state.low[v] == state.index[v] {
            let mut class = Vec::new();
            loop {
                let w = state.stack.pop().expect("tarjan stack underflow");
                state.on_stack[w] = false;
                class.push(w);
                if w == v {
                    break;
                }
            }
            state.classes.push(class);
        }
    }

    /// Shortest strict chain `from = p0 < p1 < .. < pm = to`, if any.
    pub fn dominance_chain(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from == to {
            return Some(vec![from]);
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut frontier = vec![from];
        let mut visited = PointSet::singleton(from);
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for y in (self.above[x] - visited).iter() {
                    visited.insert(y);
                    parent[y] = x;
                    if y == to {
                        let mut chain = vec![to];
                        let mut cur = to;
                        while cur != from {
                            cur = parent[cur];
                            chain.push(cur);
                        }
                        chain.reverse();
                        return Some(chain);
                    }
                    next.push(y);
                }
            }
            frontier = next;
        }
        None
    }

    /// Finds a quasi-king by the chain-family procedure: collect the upward
    /// reachability set of every point, verify the family is a chain under
    /// inclusion, intersect the closures of its members in the selection
    /// topology, and promote the picked point one step if it is not maximal.
    ///
    /// Ties break toward the smallest label so the output is deterministic.
    pub fn quasi_king_via_upsets(&self) -> Result<usize, TournamentError> {
        let reach = self.leq_relation().transitive_closure();
        let upsets: Vec<PointSet> = (0..self.n).map(|x| reach.row(x)).collect();

        for (i, &a) in upsets.iter().enumerate() {
            for &b in &upsets[i + 1..] {
                if !a.is_subset(b) && !b.is_subset(a) {
                    return Err(TournamentError::InternalInvariantViolation(format!(
                        "upset family is not a chain: {a:?} vs {b:?}"
                    )));
                }
            }
        }

        // Closures are taken in the selection topology; on a finite ground
        // set that topology is discrete, so this is the identity, but the
        // procedure keeps the generic closure step.
        let topo = crate::seltopo::selection_topology(self);
        let mut meet = PointSet::full(self.n);
        for &k in &upsets {
            meet = meet & topo.closure(k);
        }
        let p = meet.first().ok_or_else(|| {
            TournamentError::InternalInvariantViolation(
                "closure intersection of the upset family is empty".into(),
            )
        })?;

        if (0..self.n).all(|x| self.le(x, p)) {
            return Ok(p);
        }
        let q = self.above[p].first().expect("non-maximal point has a successor");
        if upsets.iter().any(|k| !k.contains(q)) {
            return Err(TournamentError::InternalInvariantViolation(format!(
                "promoted point {q} escapes some upset"
            )));
        }
        Ok(q)
    }

    /// Applies a relabeling: point `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        debug_assert_eq!(perm.len(), self.n);
        let mut above = vec![PointSet::EMPTY; self.n];
        for x in 0..self.n {
            for y in self.above[x].iter() {
                above[perm[x]].insert(perm[y]);
            }
        }
        Tournament { n: self.n, above }
    }

    /// Bit encoding of the orientations of pairs `(i, j)`, `i < j`, in
    /// lexicographic pair order, packed most significant first so that
    /// comparing encodings lexicographically compares the bit strings.
    pub fn encoding(&self) -> Vec<u64> {
        let m = self.n * (self.n - 1) / 2;
        let mut words = vec![0u64; m.div_ceil(64)];
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.lt(i, j) {
                    words[bit / 64] |= 1u64 << (63 - bit % 64);
                }
                bit += 1;
            }
        }
        words
    }

    fn from_encoding(n: usize, words: &[u64]) -> Tournament {
        let mut above = vec![PointSet::EMPTY; n];
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if words[bit / 64] >> (63 - bit % 64) & 1 == 1 {
                    above[i].insert(j);
                } else {
                    above[j].insert(i);
                }
                bit += 1;
            }
        }
        Tournament { n, above }
    }

    /// The isomorphism-class representative: the relabeling whose encoding
    /// is minimal over all permutations. Idempotent, and constant on
    /// isomorphism orbits. Cost grows factorially; intended for small `n`.
    pub fn canonical_form(&self) -> Tournament {
        let ids: Vec<usize> = (0..self.n).collect();
        let mut best: Option<(Vec<u64>, Tournament)> = None;
        permute(&mut ids.clone(), 0, &mut |perm| {
            let cand = self.relabel(perm);
            let enc = cand.encoding();
            match &best {
                Some((b, _)) if *b <= enc => {}
                _ => best = Some((enc, cand)),
            }
        });
        best.expect("at least the identity permutation").1
    }
}

struct TarjanState {
    next_index: usize,
    stack: Vec<usize>,
    on_stack: Vec<bool>,
    index: Vec<usize>,
    low: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

/// Heap's algorithm, calling `f` on every permutation of `items`.
fn permute<F: FnMut(&[usize])>(items: &mut [usize], k: usize, f: &mut F) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// All labeled tournaments on `n` points, in encoding order.
pub fn enumerate_labeled(
    n: usize,
) -> Result<impl Iterator<Item = Tournament>, TournamentError> {
    if n == 0 || n > MAX_ENUMERATION_POINTS {
        return Err(TournamentError::SizeLimit {
            n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    let m = n * (n - 1) / 2;
    Ok((0u64..1 << m).map(move |mask| {
        // Spread the mask into the MSB-first word layout of `encoding`.
        let mut words = vec![0u64; m.div_ceil(64)];
        for bit in 0..m {
            if mask >> bit & 1 == 1 {
                words[bit / 64] |= 1u64 << (63 - bit % 64);
            }
        }
        Tournament::from_encoding(n, &words)
    }))
}

/// One canonical representative per isomorphism class, sorted by encoding.
///
/// Built by extending the representatives on `n - 1` points with every
/// orientation pattern for a new point and canonicalizing, which covers all
/// classes because deleting the last point of any tournament lands in some
/// smaller class.
pub fn enumerate_canonical(n: usize) -> Result<Vec<Tournament>, TournamentError> {
    if n == 0 || n > MAX_ENUMERATION_POINTS {
        return Err(TournamentError::SizeLimit {
            n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    let mut reps = vec![Tournament {
        n: 1,
        above: vec![PointSet::EMPTY],
    }];
    for k in 1..n {
        let mut seen: HashSet<Tournament> = HashSet::new();
        for t in &reps {
            for mask in 0u64..1 << k {
                let mut above = t.above.clone();
                above.push(PointSet::EMPTY);
                for v in 0..k {
                    if mask >> v & 1 == 1 {
                        above[v].insert(k);
                    } else {
                        above[k].insert(v);
                    }
                }
                let ext = Tournament { n: k + 1, above };
                seen.insert(ext.canonical_form());
            }
        }
        reps = seen.into_iter().collect();
    }
    reps.sort_by_key(|t| t.encoding());
    Ok(reps)
}

/// All tournaments on `n` points, labeled or one per isomorphism class.
pub fn enumerate_tournaments(
    n: usize,
    up_to_iso: bool,
) -> Result<Box<dyn Iterator<Item = Tournament>>, TournamentError> {
    if up_to_iso {
        Ok(Box::new(enumerate_canonical(n)?.into_iter()))
    } else {
        Ok(Box::new(enumerate_labeled(n)?))
    }
}

/// The four-point tournament with a three-cycle `a < b < c < a` and a
/// fourth point above `c` but below `a` and `b`. Its fourth point is a
/// quasi-king without being a king, the smallest size where that happens.
pub fn cycle_with_spur() -> Tournament {
    Tournament::from_pairs(4, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 0), (3, 1)])
        .expect("fixed example is valid")
}

/// The three-cycle `0 < 1 < 2 < 0`.
pub fn three_cycle() -> Tournament {
    Tournament::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).expect("fixed example is valid")
}
