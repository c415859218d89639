//! Lexicographical sums of weak selections over a finite partition.
//!
//! Given a partition of the ground set, a tournament on the parts and one
//! selection per part, the sum acts like the per-part selection inside each
//! part and like the part tournament across parts. Parts are explicit point
//! sets, not contiguous ranges, so arbitrary embeddings can be built.

use serde::Serialize;
use thiserror::Error;

use crate::pointset::PointSet;
use crate::seltopo::{selection_topology, SelectionOnSpace};
use crate::topology::FiniteTopology;
use crate::tournament::Tournament;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LexsumError {
    #[error("invalid partition: {0}")]
    PartitionInvalid(String),
}

/// A partition of `0..n` with a tournament on part indices and one
/// selection per part. Local point `i` of a part is its `i`-th smallest
/// global label.
#[derive(Clone, Debug)]
pub struct PartitionedSelection {
    parts: Vec<Vec<usize>>,
    gamma: Tournament,
    etas: Vec<Tournament>,
    n: usize,
}

impl PartitionedSelection {
    pub fn new(
        parts: Vec<Vec<usize>>,
        gamma: Tournament,
        etas: Vec<Tournament>,
    ) -> Result<Self, LexsumError> {
        if parts.is_empty() {
            return Err(LexsumError::PartitionInvalid("no parts".into()));
        }
        if gamma.n() != parts.len() {
            return Err(LexsumError::PartitionInvalid(format!(
                "part tournament has {} points but there are {} parts",
                gamma.n(),
                parts.len()
            )));
        }
        if etas.len() != parts.len() {
            return Err(LexsumError::PartitionInvalid(format!(
                "{} parts but {} per-part selections",
                parts.len(),
                etas.len()
            )));
        }
        let mut covered = PointSet::EMPTY;
        let mut n = 0;
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(LexsumError::PartitionInvalid(format!("part {i} is empty")));
            }
            if etas[i].n() != part.len() {
                return Err(LexsumError::PartitionInvalid(format!(
                    "part {i} has {} points but its selection has {}",
                    part.len(),
                    etas[i].n()
                )));
            }
            for &p in part {
                if covered.contains(p) {
                    return Err(LexsumError::PartitionInvalid(format!(
                        "point {p} appears in two parts"
                    )));
                }
                covered.insert(p);
                n = n.max(p + 1);
            }
        }
        if covered != PointSet::full(n) {
            let gap = covered.complement(n).first().expect("some point missing");
            return Err(LexsumError::PartitionInvalid(format!(
                "point {gap} is covered by no part"
            )));
        }
        let mut parts = parts;
        for part in &mut parts {
            part.sort_unstable();
        }
        Ok(PartitionedSelection {
            parts,
            gamma,
            etas,
            n,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn gamma(&self) -> &Tournament {
        &self.gamma
    }

    pub fn etas(&self) -> &[Tournament] {
        &self.etas
    }

    /// The summed selection: within a part the per-part selection decides,
    /// across parts the part tournament does.
    pub fn lexsum(&self) -> Tournament {
        let mut part_of = vec![usize::MAX; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for &p in part {
                part_of[p] = i;
            }
        }
        let mut pairs = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for x in 0..self.n {
            for y in x + 1..self.n {
                let (px, py) = (part_of[x], part_of[y]);
                let x_below = if px == py {
                    let part = &self.parts[px];
                    let lx = part.binary_search(&x).expect("member");
                    let ly = part.binary_search(&y).expect("member");
                    self.etas[px].lt(lx, ly)
                } else {
                    self.gamma.lt(px, py)
                };
                pairs.push(if x_below { (x, y) } else { (y, x) });
            }
        }
        Tournament::from_pairs(self.n, &pairs).expect("sum orients every pair once")
    }

    /// Checks the two sum-continuity implications against per-part
    /// topologies: if every part selection is separately continuous on its
    /// part, the sum is separately continuous on the disjoint-sum topology,
    /// and the same with Vietoris continuity.
    pub fn sum_continuity_report(
        &self,
        tops: &[FiniteTopology],
    ) -> Result<SumContinuityReport, LexsumError> {
        if tops.len() != self.parts.len() {
            return Err(LexsumError::PartitionInvalid(format!(
                "{} parts but {} topologies",
                self.parts.len(),
                tops.len()
            )));
        }
        let sum_topology = FiniteTopology::disjoint_sum(self.n, &self.parts, tops)
            .map_err(|e| LexsumError::PartitionInvalid(e.to_string()))?;
        let total = SelectionOnSpace::new(self.lexsum(), sum_topology)
            .expect("sum topology lives on the same ground set");

        let part_pairing = |i: usize| {
            SelectionOnSpace::new(self.etas[i].clone(), tops[i].clone())
                .expect("validated above")
        };
        let parts_separately =
            (0..self.parts.len()).all(|i| part_pairing(i).is_separately_continuous());
        let parts_vietoris =
            (0..self.parts.len()).all(|i| part_pairing(i).is_vietoris_continuous());
        let sum_separately = total.is_separately_continuous();
        let sum_vietoris = total.is_vietoris_continuous();
        Ok(SumContinuityReport {
            parts_separately,
            sum_separately,
            separate_implication_holds: !parts_separately || sum_separately,
            parts_vietoris,
            sum_vietoris,
            vietoris_implication_holds: !parts_vietoris || sum_vietoris,
        })
    }
}

/// Outcome of the sum-continuity check; each implication is vacuously true
/// when its hypothesis fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumContinuityReport {
    pub parts_separately: bool,
    pub sum_separately: bool,
    pub separate_implication_holds: bool,
    pub parts_vietoris: bool,
    pub sum_vietoris: bool,
    pub vietoris_implication_holds: bool,
}

impl SumContinuityReport {
    pub fn both_implications_hold(&self) -> bool {
        self.separate_implication_holds && self.vietoris_implication_holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::enumerate_topologies;
    use crate::tournament::{enumerate_labeled, three_cycle, Tournament};

    fn single() -> Tournament {
        Tournament::from_pairs(1, &[]).unwrap()
    }

    #[test]
    fn singleton_parts_recover_the_part_tournament() {
        let p = PartitionedSelection::new(
            vec![vec![0], vec![1], vec![2]],
            three_cycle(),
            vec![single(), single(), single()],
        )
        .unwrap();
        assert_eq!(p.lexsum(), three_cycle());
    }

    #[test]
    fn one_part_returns_eta_unchanged() {
        let eta = crate::tournament::cycle_with_spur();
        let p = PartitionedSelection::new(
            vec![vec![0, 1, 2, 3]],
            single(),
            vec![eta.clone()],
        )
        .unwrap();
        assert_eq!(p.lexsum(), eta);
    }

    #[test]
    fn two_chains_glued_by_a_chain_give_a_chain() {
        let p = PartitionedSelection::new(
            vec![vec![0, 1], vec![2, 3]],
            Tournament::chain(2),
            vec![Tournament::chain(2), Tournament::chain(2)],
        )
        .unwrap();
        assert_eq!(p.lexsum(), Tournament::chain(4));
    }

    #[test]
    fn scattered_parts_follow_global_labels() {
        // Parts {0,2} and {1}: local order of part 0 is 0 < 2.
        let p = PartitionedSelection::new(
            vec![vec![2, 0], vec![1]],
            Tournament::chain(2),
            vec![Tournament::chain(2), single()],
        )
        .unwrap();
        let t = p.lexsum();
        assert!(t.lt(0, 2) && t.lt(0, 1) && t.lt(2, 1));
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(PartitionedSelection::new(vec![], single(), vec![]).is_err());
        // Overlap.
        assert!(PartitionedSelection::new(
            vec![vec![0, 1], vec![1]],
            Tournament::chain(2),
            vec![Tournament::chain(2), single()],
        )
        .is_err());
        // Hole: {0, 2} with nothing covering 1.
        assert!(PartitionedSelection::new(
            vec![vec![0], vec![2]],
            Tournament::chain(2),
            vec![single(), single()],
        )
        .is_err());
        // Eta size mismatch.
        assert!(PartitionedSelection::new(
            vec![vec![0, 1]],
            single(),
            vec![single()],
        )
        .is_err());
    }

    #[test]
    fn sum_continuity_with_discrete_parts() {
        let p = PartitionedSelection::new(
            vec![vec![0, 1], vec![2]],
            Tournament::chain(2),
            vec![Tournament::chain(2), single()],
        )
        .unwrap();
        let report = p
            .sum_continuity_report(&[FiniteTopology::discrete(2), FiniteTopology::discrete(1)])
            .unwrap();
        assert!(report.parts_separately && report.sum_separately);
        assert!(report.both_implications_hold());
    }

    #[test]
    fn sum_continuity_vacuous_when_hypothesis_fails() {
        // An indiscrete part makes the chain selection non-continuous there.
        let p = PartitionedSelection::new(
            vec![vec![0, 1], vec![2]],
            Tournament::chain(2),
            vec![Tournament::chain(2), single()],
        )
        .unwrap();
        let report = p
            .sum_continuity_report(&[
                FiniteTopology::indiscrete(2),
                FiniteTopology::discrete(1),
            ])
            .unwrap();
        assert!(!report.parts_separately);
        assert!(report.both_implications_hold());
    }

    #[test]
    fn sum_continuity_sweep_small() {
        // Both implications across every two-part split of 3 points with
        // parts of size <= 2, every selection and every part topology.
        for split in [vec![vec![0], vec![1, 2]], vec![vec![0, 1], vec![2]]] {
            let sizes: Vec<usize> = split.iter().map(Vec::len).collect();
            for gamma in enumerate_labeled(2).unwrap() {
                for eta0 in enumerate_labeled(sizes[0]).unwrap() {
                    for eta1 in enumerate_labeled(sizes[1]).unwrap() {
                        let p = PartitionedSelection::new(
                            split.clone(),
                            gamma.clone(),
                            vec![eta0.clone(), eta1.clone()],
                        )
                        .unwrap();
                        for t0 in enumerate_topologies(sizes[0]).unwrap() {
                            for t1 in enumerate_topologies(sizes[1]).unwrap() {
                                let report =
                                    p.sum_continuity_report(&[t0.clone(), t1]).unwrap();
                                assert!(report.both_implications_hold(), "{p:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn nested_sums_flatten() {
        // Summing a sum equals the flat sum whose part tournament is itself
        // a sum: outer parts {0,1},{2,3},{4} over a 3-cycle, with the first
        // outer part refined into {0},{1}.
        let inner = PartitionedSelection::new(
            vec![vec![0], vec![1]],
            Tournament::chain(2),
            vec![single(), single()],
        )
        .unwrap();
        let outer = PartitionedSelection::new(
            vec![vec![0, 1], vec![2, 3], vec![4]],
            three_cycle(),
            vec![inner.lexsum(), Tournament::chain(2), single()],
        )
        .unwrap();

        // Flat: four parts {0},{1},{2,3},{4}; its part tournament glues the
        // refined indices by the outer 3-cycle.
        let flat_gamma = PartitionedSelection::new(
            vec![vec![0, 1], vec![2], vec![3]],
            three_cycle(),
            vec![Tournament::chain(2), single(), single()],
        )
        .unwrap()
        .lexsum();
        let flat = PartitionedSelection::new(
            vec![vec![0], vec![1], vec![2, 3], vec![4]],
            flat_gamma,
            vec![single(), single(), Tournament::chain(2), single()],
        )
        .unwrap();
        assert_eq!(outer.lexsum(), flat.lexsum());
    }

    #[test]
    fn condensation_is_union_of_parts_for_cyclic_glue() {
        // Strongly connected parts glued by a cycle collapse to one class.
        let p = PartitionedSelection::new(
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]],
            three_cycle(),
            vec![three_cycle(), three_cycle(), three_cycle()],
        )
        .unwrap();
        let report = p.lexsum().king_report();
        assert_eq!(report.condensation, vec![(0..9).collect::<Vec<_>>()]);
        assert_eq!(report.quasi_kings, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn condensation_classes_group_parts_by_gamma_classes() {
        // Chain glue keeps strongly connected parts as separate classes.
        let p = PartitionedSelection::new(
            vec![vec![0, 1, 2], vec![3, 4, 5]],
            Tournament::chain(2),
            vec![three_cycle(), three_cycle()],
        )
        .unwrap();
        let report = p.lexsum().king_report();
        assert_eq!(
            report.condensation,
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
    }
}
