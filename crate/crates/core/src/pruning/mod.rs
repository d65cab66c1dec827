//! Similarity-driven pruning: cluster the population, measure how alike each
//! cluster's members are, and drop the worst members of the most uniform
//! clusters.

mod features;
mod kmeans;
mod similarity;

use std::cmp::Ordering;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use features::{build_features, FeatureMatrix};
pub use kmeans::{kmeans, Cluster, KMeansOutcome};
pub use similarity::{intra_class_similarity, pairwise_similarity, SimilarityMatrix};

use crate::error::{usage, Result};
use crate::model::{Individual, Population};

/// Guards the ceiling in [`retention_count`] against products such as
/// `0.865 * 100` landing a hair above an integer.
const RETENTION_EPS: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PruneParams {
    /// Number of clusters; `None` means `max(2, ceil(n / 20))`.
    pub k_clusters: Option<usize>,
    /// Pruning strength.
    pub delta: f64,
    pub kmeans_max_iter: usize,
    pub kmeans_tol: f64,
}

impl Default for PruneParams {
    fn default() -> Self {
        Self {
            k_clusters: None,
            delta: 0.135,
            kmeans_max_iter: 100,
            kmeans_tol: 1e-9,
        }
    }
}

impl PruneParams {
    /// Cluster count used for a population of `n`.
    pub fn resolved_k(&self, n: usize) -> usize {
        self.k_clusters.unwrap_or_else(|| 2.max(n.div_ceil(20)))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(usage(format!(
                "delta must lie in (0, 1), got {}",
                self.delta
            )));
        }
        if let Some(k) = self.k_clusters {
            if k < 2 {
                return Err(usage(format!("k_clusters must be at least 2, got {k}")));
            }
        }
        if self.kmeans_max_iter == 0 {
            return Err(usage("kmeans_max_iter must be positive"));
        }
        if self.kmeans_tol.is_nan() || self.kmeans_tol < 0.0 {
            return Err(usage(format!(
                "kmeans_tol must be non-negative, got {}",
                self.kmeans_tol
            )));
        }
        Ok(())
    }
}

/// Number of members kept from a class of `n_uk` with average similarity
/// `p_k`: `max(1, ceil((1 - delta * p_k) * n_uk))`.
pub fn retention_count(p_k: f64, delta: f64, n_uk: usize) -> usize {
    let keep = ((1.0 - delta * p_k) * n_uk as f64 - RETENTION_EPS).ceil();
    (keep.max(1.0) as usize).min(n_uk.max(1))
}

/// Clusters and per-cluster keep lists from one pruning pass.
#[derive(Clone, Debug)]
pub struct PruneOutcome {
    pub population: Population,
    pub clusters: Vec<Cluster>,
    /// Indices (into the input population) kept from each cluster, best first.
    pub kept: Vec<Vec<usize>>,
    pub inertia_trace: Vec<f64>,
    pub k_reduced: bool,
}

/// Orders cluster members by rank ascending, then crowding descending, then
/// position.
fn quality_order(a: &Individual, b: &Individual) -> Ordering {
    a.rank
        .cmp(&b.rank)
        .then_with(|| b.crowding.cmp(&a.crowding))
}

/// One pruning pass over a ranked population.
///
/// Members are clustered on [`build_features`]; each cluster keeps its best
/// [`retention_count`] members by rank and crowding. Survivors stay in
/// their original relative order, so a pass that removes nothing returns the
/// input unchanged. Only k-means++ seeding consumes randomness.
pub fn prune_population<R: Rng + ?Sized>(
    pop: &Population,
    params: &PruneParams,
    rng: &mut R,
) -> Result<PruneOutcome> {
    params.validate()?;
    if pop.len() < 2 {
        return Ok(PruneOutcome {
            population: pop.clone(),
            clusters: Vec::new(),
            kept: Vec::new(),
            inertia_trace: Vec::new(),
            k_reduced: false,
        });
    }
    let features = build_features(pop)?;
    let km = kmeans(
        &features.rows,
        params.resolved_k(pop.len()),
        params.kmeans_max_iter,
        params.kmeans_tol,
        rng,
    )?;
    let sim = SimilarityMatrix::from_population(pop);

    let mut clusters = km.clusters;
    let mut kept = Vec::with_capacity(clusters.len());
    let mut keep_mask = vec![false; pop.len()];
    for cluster in &mut clusters {
        cluster.avg_similarity = intra_class_similarity(&cluster.members, &sim);
        let n_k = retention_count(cluster.avg_similarity, params.delta, cluster.members.len());
        let mut order = cluster.members.clone();
        order.sort_by(|&a, &b| quality_order(&pop.members[a], &pop.members[b]));
        order.truncate(n_k);
        for &i in &order {
            keep_mask[i] = true;
        }
        kept.push(order);
    }

    let members = pop
        .members
        .iter()
        .zip(&keep_mask)
        .filter(|(_, keep)| **keep)
        .map(|(m, _)| m.clone())
        .collect();
    Ok(PruneOutcome {
        population: Population::new(members, pop.generation),
        clusters,
        kept,
        inertia_trace: km.inertia_trace,
        k_reduced: km.k_reduced,
    })
}
