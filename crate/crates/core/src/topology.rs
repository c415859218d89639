//! Finite topological spaces.
//!
//! A topology on a finite ground set is stored by the minimal open
//! neighborhood of each point; the open sets are exactly the unions of
//! minimal neighborhoods. This is the classical correspondence between
//! finite spaces and preorders, and it keeps generation, coarseness
//! comparison, closure and interior cheap. Full open-set families are
//! materialized only on demand.
//!
//! The spaces here are deliberately allowed to be non-Hausdorff: a finite
//! Hausdorff space is discrete, so insisting on the separation axiom would
//! collapse every continuity question. Reports carry an explicit
//! Hausdorff/discreteness flag instead.

use thiserror::Error;

use crate::pointset::PointSet;

/// Practical cap for enumerating all topologies on a ground set.
pub const MAX_TOPOLOGY_ENUMERATION_POINTS: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("point {point} is out of range for ground set of size {n}")]
    OutOfRangePoint { point: usize, n: usize },
    #[error("ground sets differ in size: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("ground set of size {n} exceeds the supported maximum {max}")]
    TooManyPoints { n: usize, max: usize },
    #[error("size {n} exceeds the enumeration bound {max}")]
    SizeLimit { n: usize, max: usize },
    #[error("open family is not closed under union/intersection (missing {missing:?})")]
    NotATopology { missing: Vec<usize> },
    #[error("parts do not partition the ground set: {0}")]
    InvalidPartition(String),
}

/// A topology on `{0, .., n-1}`, stored via minimal open neighborhoods.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct FiniteTopology {
    n: usize,
    min_nbhd: Vec<PointSet>,
}

impl FiniteTopology {
    /// The topology whose only opens are the empty set and the whole space.
    pub fn indiscrete(n: usize) -> Self {
        FiniteTopology {
            n,
            min_nbhd: vec![PointSet::full(n); n],
        }
    }

    pub fn discrete(n: usize) -> Self {
        FiniteTopology {
            n,
            min_nbhd: (0..n).map(PointSet::singleton).collect(),
        }
    }

    /// Smallest topology containing every set of `subbase`: the minimal
    /// neighborhood of `x` is the intersection of the subbase sets that
    /// contain `x` (the whole space when none does).
    pub fn generate_from_subbase(
        n: usize,
        subbase: &[PointSet],
    ) -> Result<Self, TopologyError> {
        if n > PointSet::MAX_POINTS {
            return Err(TopologyError::TooManyPoints {
                n,
                max: PointSet::MAX_POINTS,
            });
        }
        let full = PointSet::full(n);
        for s in subbase {
            if !s.is_subset(full) {
                let point = (*s - full).first().expect("nonempty difference");
                return Err(TopologyError::OutOfRangePoint { point, n });
            }
        }
        let min_nbhd = (0..n)
            .map(|x| {
                subbase
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(full, |acc, s| acc & *s)
            })
            .collect();
        Ok(FiniteTopology { n, min_nbhd })
    }

    /// Builds a topology from an explicit family of open sets.
    ///
    /// Returns the generated topology together with a flag telling whether
    /// the family already was one (contains the empty set and the whole
    /// space, closed under pairwise union and intersection). With
    /// `strict` the non-closed case is an error instead.
    pub fn from_open_family(
        n: usize,
        opens: &[PointSet],
        strict: bool,
    ) -> Result<(Self, bool), TopologyError> {
        let topo = Self::generate_from_subbase(n, opens)?;
        let family: std::collections::HashSet<PointSet> = opens.iter().copied().collect();
        let mut missing = None;
        for probe in [PointSet::EMPTY, PointSet::full(n)] {
            if !family.contains(&probe) {
                missing = Some(probe);
            }
        }
        'check: for a in &family {
            for b in &family {
                for combined in [*a | *b, *a & *b] {
                    if !family.contains(&combined) {
                        missing = Some(combined);
                        break 'check;
                    }
                }
            }
        }
        if let Some(witness) = missing {
            if strict {
                return Err(TopologyError::NotATopology {
                    missing: witness.to_vec(),
                });
            }
            return Ok((topo, false));
        }
        Ok((topo, true))
    }

    /// Disjoint sum: each part carries its own topology and is open in the
    /// result. `parts[i]` lists the global points of part `i` in increasing
    /// order; `tops[i]` is a topology on `parts[i].len()` local points.
    pub fn disjoint_sum(
        n: usize,
        parts: &[Vec<usize>],
        tops: &[FiniteTopology],
    ) -> Result<Self, TopologyError> {
        if parts.len() != tops.len() {
            return Err(TopologyError::InvalidPartition(format!(
                "{} parts but {} topologies",
                parts.len(),
                tops.len()
            )));
        }
        let mut covered = PointSet::EMPTY;
        for (part, top) in parts.iter().zip(tops) {
            if part.len() != top.n() {
                return Err(TopologyError::SizeMismatch {
                    left: part.len(),
                    right: top.n(),
                });
            }
            for &p in part {
                if p >= n {
                    return Err(TopologyError::OutOfRangePoint { point: p, n });
                }
                if covered.contains(p) {
                    return Err(TopologyError::InvalidPartition(format!(
                        "point {p} appears in two parts"
                    )));
                }
                covered.insert(p);
            }
        }
        if covered != PointSet::full(n) {
            return Err(TopologyError::InvalidPartition(
                "parts do not cover the ground set".into(),
            ));
        }
        let mut min_nbhd = vec![PointSet::EMPTY; n];
        for (part, top) in parts.iter().zip(tops) {
            for (local, &global) in part.iter().enumerate() {
                min_nbhd[global] = top.min_nbhd[local].iter().map(|q| part[q]).collect();
            }
        }
        Ok(FiniteTopology { n, min_nbhd })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal open neighborhood of `x`.
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    /// Whether `a` is open: it must contain the minimal neighborhood of
    /// each of its points.
    pub fn is_open(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.min_nbhd[x].is_subset(a))
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.is_open(a.complement(self.n))
    }

    pub fn is_clopen(&self, a: PointSet) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    /// Every open of `self` is an open of `other`. Equivalent to the
    /// minimal neighborhoods of `other` refining those of `self`.
    pub fn is_coarser(&self, other: &FiniteTopology) -> Result<bool, TopologyError> {
        if self.n != other.n {
            return Err(TopologyError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok((0..self.n).all(|x| other.min_nbhd[x].is_subset(self.min_nbhd[x])))
    }

    /// Smallest closed superset: a point belongs to the closure exactly
    /// when its minimal neighborhood meets the set.
    pub fn closure(&self, a: PointSet) -> PointSet {
        (0..self.n)
            .filter(|&x| !(self.min_nbhd[x] & a).is_empty())
            .collect()
    }

    /// Largest open subset.
    pub fn interior(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.min_nbhd[x].is_subset(a)).collect()
    }

    /// All open sets, materialized. Exponential in `n`; intended for small
    /// ground sets. Sorted by size then contents.
    pub fn opens(&self) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = subsets(self.n).filter(|&a| self.is_open(a)).collect();
        out.sort_by_key(|s| (s.len(), s.to_vec()));
        out
    }

    /// All sets that are simultaneously open and closed. Exponential in
    /// `n`; intended for small ground sets.
    pub fn clopen_sets(&self) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = subsets(self.n).filter(|&a| self.is_clopen(a)).collect();
        out.sort_by_key(|s| (s.len(), s.to_vec()));
        out
    }

    /// Maximal connected subsets, as a partition sorted by smallest member.
    ///
    /// Two points land in one component when they are linked by a chain of
    /// neighborhood containments (`y` in the minimal neighborhood of `x` or
    /// vice versa); such a chain prevents any clopen split from separating
    /// them, and blocks of the resulting partition are clopen.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut class = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if class[start] != usize::MAX {
                continue;
            }
            let mut frontier = vec![start];
            class[start] = next;
            while let Some(x) = frontier.pop() {
                let mut adjacent = self.min_nbhd[x];
                for y in 0..self.n {
                    if self.min_nbhd[y].contains(x) {
                        adjacent.insert(y);
                    }
                }
                for y in adjacent.iter() {
                    if class[y] == usize::MAX {
                        class[y] = next;
                        frontier.push(y);
                    }
                }
            }
            next += 1;
        }
        let mut parts = vec![Vec::new(); next];
        for (p, &c) in class.iter().enumerate() {
            parts[c].push(p);
        }
        parts
    }

    /// Quasi-components, straight from the definition: the quasi-component
    /// of `x` is the intersection of all clopen sets containing `x`.
    /// Exponential in `n`; intended for small ground sets.
    pub fn quasi_components(&self) -> Vec<Vec<usize>> {
        let clopens = self.clopen_sets();
        let full = PointSet::full(self.n);
        let mut reps: Vec<PointSet> = Vec::new();
        let mut seen = PointSet::EMPTY;
        for x in 0..self.n {
            if seen.contains(x) {
                continue;
            }
            let q = clopens
                .iter()
                .filter(|c| c.contains(x))
                .fold(full, |acc, c| acc & *c);
            seen |= q;
            reps.push(q);
        }
        reps.sort_by_key(|s| s.first());
        reps.iter().map(|s| s.to_vec()).collect()
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.min_nbhd[x] == PointSet::singleton(x))
    }

    /// Finite Hausdorff spaces are exactly the discrete ones.
    pub fn is_hausdorff(&self) -> bool {
        self.is_discrete()
    }

    /// Subspace topology on the points of `z`, relabeled to `0..z.len()`
    /// in increasing order of the original labels.
    pub fn subspace(&self, z: PointSet) -> FiniteTopology {
        let points = z.to_vec();
        let rank = |p: usize| points.iter().position(|&q| q == p).expect("member");
        let min_nbhd = points
            .iter()
            .map(|&p| (self.min_nbhd[p] & z).iter().map(rank).collect())
            .collect();
        FiniteTopology {
            n: points.len(),
            min_nbhd,
        }
    }
}

/// All subsets of `{0, .., n-1}`.
fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    assert!(n <= 32, "subset enumeration is exponential");
    (0u64..1 << n).map(|mask| (0..n).filter(move |i| mask >> i & 1 == 1).collect())
}

/// All topologies on `n` labeled points, enumerated as the transitive
/// reflexive neighborhood relations (finite spaces are preorders).
pub fn enumerate_topologies(
    n: usize,
) -> Result<impl Iterator<Item = FiniteTopology>, TopologyError> {
    if n > MAX_TOPOLOGY_ENUMERATION_POINTS {
        return Err(TopologyError::SizeLimit {
            n,
            max: MAX_TOPOLOGY_ENUMERATION_POINTS,
        });
    }
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let m = off_diag.len();
    Ok((0u64..1 << m).filter_map(move |mask| {
        let mut rows: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (bit, &(x, y)) in off_diag.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[x].insert(y);
            }
        }
        let transitive = (0..n).all(|x| rows[x].iter().all(|y| rows[y].is_subset(rows[x])));
        transitive.then(|| FiniteTopology { n, min_nbhd: rows })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> FiniteTopology {
        // Opens: {}, {0}, {0,1}.
        FiniteTopology::generate_from_subbase(2, &[PointSet::singleton(0)]).unwrap()
    }

    fn set(points: &[usize]) -> PointSet {
        points.iter().copied().collect()
    }

    #[test]
    fn empty_subbase_gives_indiscrete() {
        let t = FiniteTopology::generate_from_subbase(3, &[]).unwrap();
        assert_eq!(t, FiniteTopology::indiscrete(3));
        assert_eq!(t.opens(), vec![PointSet::EMPTY, PointSet::full(3)]);
    }

    #[test]
    fn sierpinski_opens() {
        assert_eq!(
            sierpinski().opens(),
            vec![PointSet::EMPTY, set(&[0]), set(&[0, 1])]
        );
    }

    #[test]
    fn subbase_closure_under_ops() {
        let t =
            FiniteTopology::generate_from_subbase(3, &[set(&[0]), set(&[1]), set(&[0, 1])])
                .unwrap();
        assert_eq!(
            t.opens(),
            vec![
                PointSet::EMPTY,
                set(&[0]),
                set(&[1]),
                set(&[0, 1]),
                set(&[0, 1, 2])
            ]
        );
    }

    #[test]
    fn out_of_range_subbase_point() {
        assert_eq!(
            FiniteTopology::generate_from_subbase(2, &[set(&[3])]),
            Err(TopologyError::OutOfRangePoint { point: 3, n: 2 })
        );
    }

    #[test]
    fn generation_is_idempotent() {
        for t in enumerate_topologies(3).unwrap() {
            let regenerated =
                FiniteTopology::generate_from_subbase(t.n(), &t.opens()).unwrap();
            assert_eq!(regenerated, t);
        }
    }

    #[test]
    fn coarseness_comparisons() {
        let ind = FiniteTopology::indiscrete(2);
        let disc = FiniteTopology::discrete(2);
        assert!(ind.is_coarser(&disc).unwrap());
        assert!(!disc.is_coarser(&ind).unwrap());
        let left = FiniteTopology::generate_from_subbase(2, &[set(&[0])]).unwrap();
        let right = FiniteTopology::generate_from_subbase(2, &[set(&[1])]).unwrap();
        assert!(!left.is_coarser(&right).unwrap());
        assert!(ind.is_coarser(&FiniteTopology::indiscrete(3)).is_err());
    }

    #[test]
    fn coarser_agrees_with_open_family_inclusion() {
        let all: Vec<FiniteTopology> = enumerate_topologies(3).unwrap().collect();
        for s in &all {
            for t in &all {
                let by_family = s.opens().iter().all(|o| t.is_open(*o));
                assert_eq!(s.is_coarser(t).unwrap(), by_family);
            }
        }
    }

    #[test]
    fn closure_and_interior() {
        let disc = FiniteTopology::discrete(3);
        assert_eq!(disc.closure(set(&[1])), set(&[1]));
        let ind = FiniteTopology::indiscrete(3);
        assert_eq!(ind.closure(set(&[1])), PointSet::full(3));
        assert_eq!(ind.interior(set(&[0, 1])), PointSet::EMPTY);
        let s = sierpinski();
        assert_eq!(s.closure(set(&[0])), set(&[0, 1]));
        assert_eq!(s.interior(set(&[1])), PointSet::EMPTY);
        assert_eq!(s.closure(PointSet::EMPTY), PointSet::EMPTY);
        assert_eq!(s.interior(PointSet::full(2)), PointSet::full(2));
    }

    #[test]
    fn de_morgan_duality() {
        for t in enumerate_topologies(4).unwrap() {
            for a in subsets(4) {
                assert_eq!(t.closure(a), t.interior(a.complement(4)).complement(4));
            }
        }
    }

    #[test]
    fn clopen_families() {
        assert_eq!(
            FiniteTopology::indiscrete(3).clopen_sets(),
            vec![PointSet::EMPTY, PointSet::full(3)]
        );
        assert_eq!(FiniteTopology::discrete(2).clopen_sets().len(), 4);
        assert_eq!(
            sierpinski().clopen_sets(),
            vec![PointSet::EMPTY, PointSet::full(2)]
        );
    }

    #[test]
    fn components_extremes() {
        let disc = FiniteTopology::discrete(3);
        assert_eq!(disc.components(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(disc.quasi_components(), vec![vec![0], vec![1], vec![2]]);
        let ind = FiniteTopology::indiscrete(3);
        assert_eq!(ind.components(), vec![vec![0, 1, 2]]);
        assert_eq!(ind.quasi_components(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn two_singletons_and_a_coarse_point_is_connected() {
        // Opens {}, {0}, {1}, {0,1}, X: the only clopens are {} and X, and
        // the whole space is connected through the coarse point 2.
        let t =
            FiniteTopology::generate_from_subbase(3, &[set(&[0]), set(&[1])]).unwrap();
        assert_eq!(
            t.opens(),
            vec![
                PointSet::EMPTY,
                set(&[0]),
                set(&[1]),
                set(&[0, 1]),
                set(&[0, 1, 2])
            ]
        );
        assert_eq!(t.clopen_sets(), vec![PointSet::EMPTY, PointSet::full(3)]);
        assert_eq!(t.components(), vec![vec![0, 1, 2]]);
        assert_eq!(t.quasi_components(), vec![vec![0, 1, 2]]);
    }

    /// Definitional connectedness of a subspace: no split into two
    /// nonempty relatively open sets.
    fn is_connected_subspace(t: &FiniteTopology, a: PointSet) -> bool {
        if a.is_empty() {
            return true;
        }
        let sub = t.subspace(a);
        sub.opens()
            .iter()
            .all(|&u| u.is_empty() || u == PointSet::full(sub.n()) || !sub.is_closed(u))
    }

    #[test]
    fn components_are_maximal_connected_exhaustively() {
        for t in enumerate_topologies(4).unwrap() {
            let comps = t.components();
            for comp in &comps {
                let c: PointSet = comp.iter().copied().collect();
                assert!(is_connected_subspace(&t, c), "{t:?} component {c:?}");
                // Maximality: adding any outside point disconnects.
                for extra in c.complement(4).iter() {
                    let mut bigger = c;
                    bigger.insert(extra);
                    assert!(!is_connected_subspace(&t, bigger));
                }
            }
        }
    }

    #[test]
    fn components_refine_quasi_components_exhaustively() {
        for t in enumerate_topologies(4).unwrap() {
            let comps = t.components();
            let quasis = t.quasi_components();
            for comp in &comps {
                let c: PointSet = comp.iter().copied().collect();
                let q: PointSet = quasis
                    .iter()
                    .find(|q| q.contains(&comp[0]))
                    .unwrap()
                    .iter()
                    .copied()
                    .collect();
                assert!(c.is_subset(q));
            }
        }
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_topologies(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
        assert!(enumerate_topologies(6).is_err());
    }

    #[test]
    fn open_family_auto_completion() {
        // {0,1} and {1,2} on three points: intersection {1} is missing.
        let fam = [set(&[0, 1]), set(&[1, 2])];
        let (t, was_closed) = FiniteTopology::from_open_family(3, &fam, false).unwrap();
        assert!(!was_closed);
        assert!(t.is_open(set(&[1])));
        assert!(FiniteTopology::from_open_family(3, &fam, true).is_err());

        let full = [
            PointSet::EMPTY,
            set(&[0]),
            set(&[0, 1, 2]),
        ];
        let (t, was_closed) = FiniteTopology::from_open_family(3, &full, true).unwrap();
        assert!(was_closed);
        assert_eq!(t.opens(), full.to_vec());
    }

    #[test]
    fn subspace_of_sierpinski() {
        let s = sierpinski();
        assert_eq!(s.subspace(set(&[1])), FiniteTopology::discrete(1));
        assert_eq!(s.subspace(set(&[0, 1])), s);
    }

    #[test]
    fn disjoint_sum_makes_parts_open() {
        let t = FiniteTopology::disjoint_sum(
            3,
            &[vec![0, 2], vec![1]],
            &[FiniteTopology::indiscrete(2), FiniteTopology::discrete(1)],
        )
        .unwrap();
        assert!(t.is_open(set(&[0, 2])));
        assert!(t.is_open(set(&[1])));
        assert!(!t.is_open(set(&[0])));
    }
}
