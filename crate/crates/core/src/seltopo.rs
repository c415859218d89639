//! The topology a weak selection induces, and the continuity notions that
//! compare it with a given topology on the same points.
//!
//! The induced topology is generated, interval-style, by the strict lower
//! and upper sets of every point. Three increasingly demanding ways for a
//! selection to get along with a topology:
//!
//! * *separately continuous*: the induced topology is coarser,
//! * *Vietoris continuous*: every strict pair is separated by a pair of
//!   open sets lying entirely on the two sides,
//! * *properly continuous*: separately continuous, and Vietoris continuous
//!   with respect to the induced topology itself.

use serde::Serialize;
use thiserror::Error;

use crate::pointset::PointSet;
use crate::topology::{FiniteTopology, TopologyError};
use crate::tournament::Tournament;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeltopoError {
    #[error("restriction to the empty subset")]
    EmptySubset,
    #[error("tournament has {tournament} points but topology has {topology}")]
    SizeMismatch { tournament: usize, topology: usize },
}

/// The `2n` subbase intervals: for each point `x`, the strict lower set
/// `{y : y < x}` followed by the strict upper set `{y : x < y}`.
pub fn interval_subbase(t: &Tournament) -> Vec<PointSet> {
    (0..t.n())
        .flat_map(|x| [t.predecessors(x), t.successors(x)])
        .collect()
}

/// The topology generated by the interval subbase.
///
/// On a finite ground set this is always discrete: the minimal neighborhood
/// of `x` is the intersection of the upper sets of its predecessors and the
/// lower sets of its successors, which pins `x` down exactly. The crate
/// still computes it generically and checks discreteness as a property.
pub fn selection_topology(t: &Tournament) -> FiniteTopology {
    FiniteTopology::generate_from_subbase(t.n(), &interval_subbase(t))
        .expect("interval subbase stays within the ground set")
}

/// A weak selection paired with a topology on the same ground set.
#[derive(Clone, Debug)]
pub struct SelectionOnSpace {
    tournament: Tournament,
    topology: FiniteTopology,
}

impl SelectionOnSpace {
    pub fn new(
        tournament: Tournament,
        topology: FiniteTopology,
    ) -> Result<Self, SeltopoError> {
        if tournament.n() != topology.n() {
            return Err(SeltopoError::SizeMismatch {
                tournament: tournament.n(),
                topology: topology.n(),
            });
        }
        Ok(SelectionOnSpace {
            tournament,
            topology,
        })
    }

    pub fn tournament(&self) -> &Tournament {
        &self.tournament
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    /// The induced topology is coarser than the space topology;
    /// equivalently every subbase interval is open.
    pub fn is_separately_continuous(&self) -> bool {
        selection_topology(&self.tournament)
            .is_coarser(&self.topology)
            .expect("sizes validated at construction")
    }

    /// For every strict pair `x < y` there are opens `U` around `x` and `V`
    /// around `y` with everything in `U` strictly below everything in `V`.
    ///
    /// In a finite space it is enough to test the minimal neighborhoods:
    /// any witnessing pair of opens shrinks onto them.
    pub fn is_vietoris_continuous(&self) -> bool {
        let t = &self.tournament;
        (0..t.n()).all(|x| {
            t.successors(x).iter().all(|y| {
                let u = self.topology.min_nbhd(x);
                let v = self.topology.min_nbhd(y);
                u.iter().all(|s| v.is_subset(t.successors(s)))
            })
        })
    }

    /// Separately continuous, and Vietoris continuous with respect to the
    /// induced topology itself.
    pub fn is_properly_continuous(&self) -> bool {
        if !self.is_separately_continuous() {
            return false;
        }
        let own = SelectionOnSpace {
            tournament: self.tournament.clone(),
            topology: selection_topology(&self.tournament),
        };
        own.is_vietoris_continuous()
    }

    /// The flags emitted by the `check` CLI verb.
    pub fn continuity_report(&self) -> ContinuityReport {
        let sel = selection_topology(&self.tournament);
        ContinuityReport {
            separately: self.is_separately_continuous(),
            vietoris: self.is_vietoris_continuous(),
            properly: self.is_properly_continuous(),
            selection_topology_discrete: sel.is_discrete(),
            hausdorff: self.topology.is_hausdorff(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuityReport {
    pub separately: bool,
    pub vietoris: bool,
    pub properly: bool,
    pub selection_topology_discrete: bool,
    pub hausdorff: bool,
}

/// How the induced topology of a restricted selection compares with the
/// subspace of the full induced topology. The restricted one is never
/// finer; equality can fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub restricted_is_coarser: bool,
    pub topologies_equal: bool,
}

/// Restricts a selection to the points of `z` (relabeled in increasing
/// order) and compares the two routes to a topology on the subset.
pub fn restriction(
    t: &Tournament,
    z: PointSet,
) -> Result<(Tournament, RestrictionReport), SeltopoError> {
    if z.is_empty() {
        return Err(SeltopoError::EmptySubset);
    }
    let points = z.to_vec();
    let mut pairs = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        for (j, &q) in points.iter().enumerate().skip(i + 1) {
            if t.lt(p, q) {
                pairs.push((i, j));
            } else {
                pairs.push((j, i));
            }
        }
    }
    let sub = Tournament::from_pairs(points.len(), &pairs)
        .expect("induced subtournament is complete");
    let of_restricted = selection_topology(&sub);
    let subspace = selection_topology(t).subspace(z);
    let report = RestrictionReport {
        restricted_is_coarser: of_restricted
            .is_coarser(&subspace)
            .expect("same ground set"),
        topologies_equal: of_restricted == subspace,
    };
    Ok((sub, report))
}

/// Convenience wrapper for [`FiniteTopology::is_coarser`] on selection
/// topologies of the same tournament size.
pub fn is_coarser(
    s: &FiniteTopology,
    t: &FiniteTopology,
) -> Result<bool, TopologyError> {
    s.is_coarser(t)
}
