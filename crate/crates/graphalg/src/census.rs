//! Orientation censuses: counts of distinct score vectors over all
//! orientations, optionally restricted to root-connected or strongly
//! connected ones, plus the forest-count cross-checks they support.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::graph::{Graph, Orientation, FOREST_ORACLE_CAP, MAX_EDGES};
use crate::scalar::{Rational, Scalar};

/// Which orientations enter the census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    /// All 2^m orientations.
    All,
    /// Orientations where every vertex has a directed path to the root.
    RootConnected { root: usize },
    /// Strongly connected orientations.
    StronglyConnected,
}

impl CensusMode {
    pub fn name(&self) -> &'static str {
        match self {
            CensusMode::All => "all",
            CensusMode::RootConnected { .. } => "root-connected",
            CensusMode::StronglyConnected => "strongly-connected",
        }
    }
}

/// Census result: the distinct score vectors, sorted, and how many
/// orientations passed the mode filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreCensus<S> {
    pub mode: CensusMode,
    pub vectors: Vec<Vec<S>>,
    pub orientations_considered: usize,
}

impl<S> ScoreCensus<S> {
    pub fn count(&self) -> usize {
        self.vectors.len()
    }
}

/// Enumerates all orientations, filters by mode, and deduplicates the
/// exact score vectors. Weights must be nonzero: the census backs
/// dimension formulas that are stated only for nonzero weights.
pub fn score_census<S: Scalar>(
    g: &Graph,
    weights: &[S],
    mode: CensusMode,
) -> Result<ScoreCensus<S>, crate::Error> {
    let m = g.edge_count();
    assert_eq!(weights.len(), m);
    if m > MAX_EDGES {
        return Err(crate::Error::CapExceeded {
            what: "census orientation count",
            needed: m,
            cap: MAX_EDGES,
        });
    }
    if let Some(edge) = weights.iter().position(Zero::is_zero) {
        return Err(crate::Error::ZeroWeight { edge });
    }
    match mode {
        CensusMode::RootConnected { root } => {
            if root >= g.vertex_count() {
                return Err(crate::Error::BadInput(format!(
                    "root {} out of range 1..={}",
                    root + 1,
                    g.vertex_count()
                )));
            }
            if !g.is_connected() {
                return Err(crate::Error::Disconnected);
            }
        }
        CensusMode::StronglyConnected => {
            if !g.is_connected() {
                return Err(crate::Error::Disconnected);
            }
        }
        CensusMode::All => {}
    }

    let mut seen: BTreeSet<Vec<S>> = BTreeSet::new();
    let mut considered = 0usize;
    for mask in 0..g.orientation_count() {
        let o = Orientation(mask as u32);
        let keep = match mode {
            CensusMode::All => true,
            CensusMode::RootConnected { root } => g.reaches_all_reversed(o, root),
            CensusMode::StronglyConnected => g.is_strongly_connected(o),
        };
        if !keep {
            continue;
        }
        considered += 1;
        seen.insert(g.score_vector(weights, o));
    }
    Ok(ScoreCensus {
        mode,
        vectors: seen.into_iter().collect(),
        orientations_considered: considered,
    })
}

/// Checks that the number of spanning forests equals the number of
/// distinct indegree vectors (the unit-weight score census).
pub fn indegree_forest_check(g: &Graph) -> Result<bool, crate::Error> {
    let forests = g.enumerate_forests(FOREST_ORACLE_CAP)?;
    let weights = vec![Rational::from_integer(1.into()); g.edge_count()];
    let census = score_census(g, &weights, CensusMode::All)?;
    Ok(census.count() as u64 == forests)
}

/// Product over partition classes of the number of acyclic edge subsets
/// inside the class: the predicted dimension for generic per-class
/// weights.
pub fn partition_product_oracle(
    g: &Graph,
    partition: &crate::graph::EdgePartition,
) -> Result<u64, crate::Error> {
    let m = g.edge_count();
    partition.validate(m)?;
    if m > FOREST_ORACLE_CAP {
        return Err(crate::Error::CapExceeded {
            what: "forest oracle edge count",
            needed: m,
            cap: FOREST_ORACLE_CAP,
        });
    }
    let mut product = 1u64;
    for class in &partition.classes {
        product *= g.count_forest_subsets_within(*class);
    }
    Ok(product)
}
