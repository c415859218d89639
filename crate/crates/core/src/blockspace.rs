//! Symbolic spaces built from finitely many interval-type blocks.
//!
//! A block space is an ordered catalog of blocks (each one of six order
//! types: the four kinds of unit interval, a single point, or a finite
//! chain) glued by a tournament on the block indices. The selection acts
//! inside each block as the standard minimum selection of its order type
//! (optionally reversed) and across blocks as the glue tournament: the
//! lexicographical sum of the per-block selections.
//!
//! Everything the crate decides about such a space reduces to finite data:
//! which blocks carry real endpoints and how the glue tournament wires them
//! together. Each block-level rule is re-derived independently by the
//! finite-skeleton oracle, which samples every block with a small marked
//! chain and runs the ordinary tournament machinery.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tournament::{KingReport, Tournament};

/// Family sweeps are exponential in the block count; this is the cap.
pub const MAX_FAMILY_BLOCKS: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockspaceError {
    #[error("glue tournament is not transitive; the glued order is not linear")]
    NonLinearGamma,
    #[error("component {component} has a maximum point")]
    ComponentHasMax { component: usize },
    #[error("{blocks} blocks exceed the family sweep bound {max}")]
    SizeLimit { blocks: usize, max: usize },
    #[error("invalid block space: {0}")]
    InvalidBlockSpace(String),
    #[error("skeleton density {density} is too small (need at least 3)")]
    DensityTooSmall { density: usize },
    #[error("component index {index} out of range ({count} components)")]
    NoSuchComponent { index: usize, count: usize },
}

/// The order type of one block, in its standard orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// Open unit interval: no smallest, no largest point.
    Open,
    /// Closed unit interval: both endpoints.
    Closed,
    /// Half-open interval keeping its left endpoint.
    LeftClosed,
    /// Half-open interval keeping its right endpoint.
    RightClosed,
    /// A single point.
    Point,
    /// A finite chain of `k >= 2` points.
    FiniteChain(usize),
}

impl BlockKind {
    pub fn has_min(self) -> bool {
        !matches!(self, BlockKind::Open | BlockKind::RightClosed)
    }

    pub fn has_max(self) -> bool {
        !matches!(self, BlockKind::Open | BlockKind::LeftClosed)
    }

    pub fn is_single_point(self) -> bool {
        matches!(self, BlockKind::Point)
    }
}

/// The six order types with the finite chain fixed at its smallest size,
/// used by exhaustive sweeps.
pub fn kind_catalog() -> [BlockKind; 6] {
    [
        BlockKind::Open,
        BlockKind::Closed,
        BlockKind::LeftClosed,
        BlockKind::RightClosed,
        BlockKind::Point,
        BlockKind::FiniteChain(2),
    ]
}

/// Whether a point of the named scope qualifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimScope {
    /// Every point of the block qualifies.
    EveryPoint,
    /// Only the largest point of the block qualifies.
    BlockMaxOnly,
}

/// One block together with which of its points qualify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockClaim {
    pub block: usize,
    pub scope: ClaimScope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmperorClaim {
    pub block: usize,
    /// Whether the emperor is pinned to the block maximum, which is a real
    /// constraint only when the block has more than one point.
    pub must_be_max: bool,
}

/// Block-level description of the kings, quasi-kings and emperor of a
/// block space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicKingReport {
    pub quasi_kings: Vec<BlockClaim>,
    pub kings: Vec<BlockClaim>,
    pub emperor: Option<EmperorClaim>,
    /// Strongly connected classes of the glue tournament, source to sink.
    pub block_condensation: Vec<Vec<usize>>,
}

impl SymbolicKingReport {
    pub fn has_quasi_king(&self) -> bool {
        !self.quasi_kings.is_empty()
    }

    pub fn has_king(&self) -> bool {
        !self.kings.is_empty()
    }
}

/// What happens at the seam between two adjacent blocks of a glued linear
/// order: both endpoints present, neither, or exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CutKind {
    Jump,
    Gap,
    Mixed,
}

fn cut_kind(left_has_top: bool, right_has_bottom: bool) -> CutKind {
    match (left_has_top, right_has_bottom) {
        (true, true) => CutKind::Jump,
        (false, false) => CutKind::Gap,
        _ => CutKind::Mixed,
    }
}

/// A clopen lower set witnessing that everything outside a maxless
/// component sits strictly below it or strictly above the cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerClopenWitness {
    /// Blocks strictly below the component, in glued order.
    pub below_blocks: Vec<usize>,
    /// The component's own blocks, in glued order.
    pub component_blocks: Vec<usize>,
    pub is_whole_space: bool,
    /// The seam just above the witness set; absent when it is the whole
    /// space. Always a gap: the component's top block has no maximum, and
    /// a mixed seam would have merged into the component.
    pub cut_above: Option<CutKind>,
}

/// A finite ordered catalog of blocks glued by a tournament, with an
/// orientation flag per block (`true` reverses the block's order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BlockSpaceWire", into = "BlockSpaceWire")]
pub struct BlockSpace {
    blocks: Vec<BlockKind>,
    gamma: Tournament,
    reversed: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct BlockSpaceWire {
    blocks: Vec<BlockKind>,
    gamma: Tournament,
    #[serde(default)]
    reversed: Option<Vec<bool>>,
}

impl TryFrom<BlockSpaceWire> for BlockSpace {
    type Error = BlockspaceError;
    fn try_from(w: BlockSpaceWire) -> Result<Self, Self::Error> {
        let reversed = w
            .reversed
            .unwrap_or_else(|| vec![false; w.blocks.len()]);
        BlockSpace::new(w.blocks, w.gamma, reversed)
    }
}

impl From<BlockSpace> for BlockSpaceWire {
    fn from(b: BlockSpace) -> Self {
        BlockSpaceWire {
            blocks: b.blocks,
            gamma: b.gamma,
            reversed: Some(b.reversed),
        }
    }
}

impl BlockSpace {
    pub fn new(
        blocks: Vec<BlockKind>,
        gamma: Tournament,
        reversed: Vec<bool>,
    ) -> Result<Self, BlockspaceError> {
        if blocks.is_empty() {
            return Err(BlockspaceError::InvalidBlockSpace("no blocks".into()));
        }
        if gamma.n() != blocks.len() {
            return Err(BlockspaceError::InvalidBlockSpace(format!(
                "glue tournament has {} points but there are {} blocks",
                gamma.n(),
                blocks.len()
            )));
        }
        if reversed.len() != blocks.len() {
            return Err(BlockspaceError::InvalidBlockSpace(format!(
                "{} orientation flags for {} blocks",
                reversed.len(),
                blocks.len()
            )));
        }
        for (i, b) in blocks.iter().enumerate() {
            if let BlockKind::FiniteChain(k) = b {
                if *k < 2 {
                    return Err(BlockspaceError::InvalidBlockSpace(format!(
                        "finite chain block {i} must have at least 2 points"
                    )));
                }
            }
        }
        Ok(BlockSpace {
            blocks,
            gamma,
            reversed,
        })
    }

    /// Standard orientation everywhere.
    pub fn standard(blocks: Vec<BlockKind>, gamma: Tournament) -> Result<Self, BlockspaceError> {
        let flags = vec![false; blocks.len()];
        BlockSpace::new(blocks, gamma, flags)
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[BlockKind] {
        &self.blocks
    }

    pub fn gamma(&self) -> &Tournament {
        &self.gamma
    }

    pub fn reversed(&self) -> &[bool] {
        &self.reversed
    }

    /// Whether block `i` has a smallest point under its chosen orientation.
    pub fn has_bottom(&self, i: usize) -> bool {
        if self.reversed[i] {
            self.blocks[i].has_max()
        } else {
            self.blocks[i].has_min()
        }
    }

    /// Whether block `i` has a largest point under its chosen orientation.
    pub fn has_top(&self, i: usize) -> bool {
        if self.reversed[i] {
            self.blocks[i].has_min()
        } else {
            self.blocks[i].has_max()
        }
    }

    /// Kings, quasi-kings and emperor of the summed selection, described at
    /// block level.
    ///
    /// The rules, each validated against the finite-skeleton oracle:
    ///
    /// * Crossing between distinct blocks never depends on the points, so a
    ///   chain from one block to another exists exactly when the glue
    ///   tournament has a path; a two-step chain exists exactly when the
    ///   glue tournament connects the blocks in at most two steps.
    /// * Within one block, a chain can only climb, unless the block sits on
    ///   a glue cycle, in which case leaving and re-entering reaches every
    ///   point of the block.
    ///
    /// Hence the quasi-kings live in the final strongly connected class of
    /// the glue: every point of every class block when the class is cyclic,
    /// else the maximum of the single final block when it has one. A king
    /// must be the maximum of its block (the two-step chain cannot re-enter
    /// a block: that would need glue edges both ways), and the block must be
    /// a king of the glue tournament. The emperor is the maximum of a block
    /// that is an emperor of the glue.
    pub fn symbolic_king_report(&self) -> SymbolicKingReport {
        let g: KingReport = self.gamma.king_report();
        let final_class = g
            .condensation
            .last()
            .expect("at least one block")
            .clone();
        let cyclic = final_class.len() >= 2;

        let scope_for = |block: usize| {
            if self.blocks[block].is_single_point() {
                ClaimScope::EveryPoint
            } else {
                ClaimScope::BlockMaxOnly
            }
        };

        let mut quasi_kings = Vec::new();
        if cyclic {
            for &b in &final_class {
                quasi_kings.push(BlockClaim {
                    block: b,
                    scope: ClaimScope::EveryPoint,
                });
            }
        } else {
            let b = final_class[0];
            if self.has_top(b) {
                quasi_kings.push(BlockClaim {
                    block: b,
                    scope: scope_for(b),
                });
            }
        }

        let kings = g
            .kings
            .iter()
            .filter(|&&b| self.has_top(b))
            .map(|&b| BlockClaim {
                block: b,
                scope: scope_for(b),
            })
            .collect();

        let emperor = g.emperor.filter(|&b| self.has_top(b)).map(|b| EmperorClaim {
            block: b,
            must_be_max: !self.blocks[b].is_single_point(),
        });

        SymbolicKingReport {
            quasi_kings,
            kings,
            emperor,
            block_condensation: g.condensation,
        }
    }

    /// For each block, a shortest glue path to some quasi-king block.
    /// Empty when there are none.
    pub fn quasi_king_witness_chains(&self, report: &SymbolicKingReport) -> Vec<Vec<usize>> {
        if report.quasi_kings.is_empty() {
            return Vec::new();
        }
        let targets: Vec<usize> = report.quasi_kings.iter().map(|c| c.block).collect();
        (0..self.block_count())
            .map(|from| {
                targets
                    .iter()
                    .filter_map(|&to| self.gamma.dominance_chain(from, to))
                    .min_by_key(Vec::len)
                    .expect("final class is reachable from every block")
            })
            .collect()
    }

    /// Samples every block by a short marked chain and glues the samples by
    /// the glue tournament. Single points contribute one sample and finite
    /// chains all their points; the interval kinds contribute `density`
    /// samples whose extreme samples are marked generic when the real block
    /// has no endpoint there.
    pub fn finite_skeleton(&self, density: usize) -> Result<Skeleton, BlockspaceError> {
        if density < 3 {
            return Err(BlockspaceError::DensityTooSmall { density });
        }
        let mut blocks = Vec::with_capacity(self.block_count());
        let mut next = 0;
        for (i, kind) in self.blocks.iter().enumerate() {
            let size = match kind {
                BlockKind::Point => 1,
                BlockKind::FiniteChain(k) => *k,
                _ => density,
            };
            let points: Vec<usize> = (next..next + size).collect();
            next += size;
            blocks.push(SkeletonBlock {
                points,
                bottom_is_min: self.has_bottom(i),
                top_is_max: self.has_top(i),
            });
        }
        let n = next;
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for (i, bi) in blocks.iter().enumerate() {
            for w in 0..bi.points.len() {
                for v in w + 1..bi.points.len() {
                    pairs.push((bi.points[w], bi.points[v]));
                }
            }
            for (j, bj) in blocks.iter().enumerate().skip(i + 1) {
                let i_below = self.gamma.lt(i, j);
                for &x in &bi.points {
                    for &y in &bj.points {
                        pairs.push(if i_below { (x, y) } else { (y, x) });
                    }
                }
            }
        }
        let tournament =
            Tournament::from_pairs(n, &pairs).expect("skeleton orients every pair once");
        Ok(Skeleton { tournament, blocks })
    }

    /// Blocks sorted by the glue order; requires a transitive glue.
    fn glued_order(&self) -> Result<Vec<usize>, BlockspaceError> {
        if !self.gamma.is_transitive() {
            return Err(BlockspaceError::NonLinearGamma);
        }
        let mut order: Vec<usize> = (0..self.block_count()).collect();
        order.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if self.gamma.lt(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(order)
    }

    /// The seams between consecutive blocks of the glued order.
    fn cuts(&self, order: &[usize]) -> Vec<CutKind> {
        order
            .windows(2)
            .map(|w| cut_kind(self.has_top(w[0]), self.has_bottom(w[1])))
            .collect()
    }

    /// Whether the glued linear order is compact in its interval topology.
    ///
    /// A linear order is compact exactly when every cut is filled and both
    /// global endpoints exist: a seam where the lower side has no maximum
    /// and the upper side no minimum leaves a cut with no nearest point on
    /// either side, and a missing global endpoint leaves an uncovered end.
    /// Seams with both endpoints (jumps) are harmless. Requires a
    /// transitive glue.
    pub fn is_order_compact(&self) -> Result<bool, BlockspaceError> {
        let order = self.glued_order()?;
        let first = order[0];
        let last = order[order.len() - 1];
        Ok(self.has_bottom(first)
            && self.has_top(last)
            && self.cuts(&order).iter().all(|c| *c != CutKind::Gap))
    }

    /// Maximal runs of blocks forming connected pieces of the glued order,
    /// in glued order. Requires a transitive glue.
    ///
    /// Two adjacent blocks stay connected exactly when the seam between
    /// them has exactly one endpoint: with both endpoints the two halves
    /// are clopen (a jump splits), with neither the two open rays are
    /// clopen (a gap splits), and with exactly one the half that lacks its
    /// endpoint is not open, so no clopen split exists at that seam.
    pub fn components(&self) -> Result<Vec<Vec<usize>>, BlockspaceError> {
        let order = self.glued_order()?;
        let cuts = self.cuts(&order);
        let mut parts = vec![vec![order[0]]];
        for (i, &b) in order.iter().enumerate().skip(1) {
            if cuts[i - 1] == CutKind::Mixed {
                parts.last_mut().expect("nonempty").push(b);
            } else {
                parts.push(vec![b]);
            }
        }
        Ok(parts)
    }

    /// The selection the summed selection induces on the components: one
    /// component precedes another exactly when all its points do, which is
    /// well defined because components are convex runs of the glued order.
    /// The result is always a transitive chain. Requires a transitive glue.
    pub fn decomposition_tournament(&self) -> Result<Tournament, BlockspaceError> {
        Ok(Tournament::chain(self.components()?.len()))
    }

    /// For the `index`-th component (in glued order) without a maximum
    /// point, the clopen lower set of everything up to and including it.
    pub fn component_lower_clopen(
        &self,
        index: usize,
    ) -> Result<LowerClopenWitness, BlockspaceError> {
        let comps = self.components()?;
        if index >= comps.len() {
            return Err(BlockspaceError::NoSuchComponent {
                index,
                count: comps.len(),
            });
        }
        let comp = &comps[index];
        let top_block = *comp.last().expect("components are nonempty");
        if self.has_top(top_block) {
            return Err(BlockspaceError::ComponentHasMax { component: index });
        }
        let below_blocks: Vec<usize> = comps[..index].iter().flatten().copied().collect();
        let is_whole_space = index + 1 == comps.len();
        let cut_above = if is_whole_space {
            None
        } else {
            let next_block = comps[index + 1][0];
            let kind = cut_kind(self.has_top(top_block), self.has_bottom(next_block));
            debug_assert_eq!(kind, CutKind::Gap, "maxless component ends in a gap");
            Some(kind)
        };
        Ok(LowerClopenWitness {
            below_blocks,
            component_blocks: comp.clone(),
            is_whole_space,
            cut_above,
        })
    }

    /// Whether every selection in the block-respecting family (any glue
    /// tournament, any per-block orientation) admits a quasi-king. The
    /// sweep is exponential in the block count and refuses beyond
    /// [`MAX_FAMILY_BLOCKS`].
    pub fn is_block_quasi_king_space(&self) -> Result<bool, BlockspaceError> {
        let b = self.block_count();
        if b > MAX_FAMILY_BLOCKS {
            return Err(BlockspaceError::SizeLimit {
                blocks: b,
                max: MAX_FAMILY_BLOCKS,
            });
        }
        for gamma in crate::tournament::enumerate_labeled(b)
            .expect("family bound is within the enumeration bound")
        {
            for mask in 0u64..1 << b {
                let flags: Vec<bool> = (0..b).map(|i| mask >> i & 1 == 1).collect();
                let bs = BlockSpace::new(self.blocks.clone(), gamma.clone(), flags)
                    .expect("same validated blocks");
                if !bs.symbolic_king_report().has_quasi_king() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A finite sample of a block space: a short marked chain per block.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub tournament: Tournament,
    pub blocks: Vec<SkeletonBlock>,
}

/// The sample points of one block, ascending in the block's effective
/// order, with markers telling whether the extreme samples stand for real
/// endpoints or for generic interior points.
#[derive(Clone, Debug)]
pub struct SkeletonBlock {
    pub points: Vec<usize>,
    pub bottom_is_min: bool,
    pub top_is_max: bool,
}

impl Skeleton {
    /// Re-derives the block-level report from the plain finite tournament
    /// machinery on the samples. Conclusions that would rest on a generic
    /// extreme sample acting as a real endpoint are discarded. Sample
    /// patterns that match no block-level shape are reported as errors so
    /// disagreements cannot hide.
    pub fn king_view(&self) -> Result<SymbolicKingReport, String> {
        let report = self.tournament.king_report();

        let classify = |hits: &[usize], block: &SkeletonBlock| -> Result<Option<ClaimScope>, String> {
            let top = *block.points.last().expect("blocks are nonempty");
            if hits.is_empty() {
                Ok(None)
            } else if hits.len() == block.points.len() {
                // All samples qualify; for a one-point block this subsumes
                // the max-only shape.
                Ok(Some(ClaimScope::EveryPoint))
            } else if hits.len() == 1 && hits[0] == top {
                if block.top_is_max {
                    Ok(Some(ClaimScope::BlockMaxOnly))
                } else {
                    Ok(None)
                }
            } else {
                Err(format!(
                    "samples {hits:?} of block with points {:?} match no block-level shape",
                    block.points
                ))
            }
        };

        let fold = |qualifying: &[usize]| -> Result<Vec<BlockClaim>, String> {
            let mut claims = Vec::new();
            for (b, block) in self.blocks.iter().enumerate() {
                let hits: Vec<usize> = block
                    .points
                    .iter()
                    .copied()
                    .filter(|p| qualifying.contains(p))
                    .collect();
                if let Some(scope) = classify(&hits, block)? {
                    claims.push(BlockClaim { block: b, scope });
                }
            }
            Ok(claims)
        };

        let quasi_kings = fold(&report.quasi_kings)?;
        let kings = fold(&report.kings)?;

        let emperor = match report.emperor {
            None => None,
            Some(e) => {
                let (b, block) = self
                    .blocks
                    .iter()
                    .enumerate()
                    .find(|(_, blk)| blk.points.contains(&e))
                    .expect("emperor is a sample");
                let top = *block.points.last().expect("nonempty");
                if e != top {
                    return Err(format!(
                        "emperor sample {e} is not the top sample of its block"
                    ));
                }
                if block.top_is_max {
                    Some(EmperorClaim {
                        block: b,
                        must_be_max: block.points.len() > 1,
                    })
                } else {
                    None
                }
            }
        };

        let block_of = |p: usize| {
            self.blocks
                .iter()
                .position(|blk| blk.points.contains(&p))
                .expect("every sample belongs to a block")
        };
        let mut block_condensation: Vec<Vec<usize>> = Vec::new();
        for class in &report.condensation {
            let mut touched: Vec<usize> = class.iter().map(|&p| block_of(p)).collect();
            touched.sort_unstable();
            touched.dedup();
            if block_condensation.last() != Some(&touched) {
                block_condensation.push(touched);
            }
        }

        Ok(SymbolicKingReport {
            quasi_kings,
            kings,
            emperor,
            block_condensation,
        })
    }
}
