use rand::Rng;
use serde::{Deserialize, Serialize};

use super::segment::segment_space;
use super::soc::{soc_crossover, SocParams};
use crate::error::{usage, Result};
use crate::model::{evaluate_individual, Crowding, Dominance, Individual, Population, Problem};
use crate::nsga2::{
    crowding_distance_assignment, nondominated_fronts, rank_and_crowd, sort_by_dominance,
};

/// Settings of the orthogonal-design initializer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitParams {
    /// Number of slabs the search box is cut into.
    pub subspaces: usize,
    /// Levels per factor of the crossover design; must be prime.
    pub q_levels: usize,
    /// Similarity threshold as a fraction of each dimension's width.
    pub theta0_rel: f64,
}

impl Default for InitParams {
    fn default() -> Self {
        Self {
            subspaces: 4,
            q_levels: 3,
            theta0_rel: 1e-4,
        }
    }
}

impl InitParams {
    pub fn validate(&self) -> Result<()> {
        if self.subspaces == 0 {
            return Err(usage("subspaces must be at least 1"));
        }
        if !super::array::is_prime(self.q_levels) {
            return Err(usage(format!(
                "q_levels must be prime, got {}",
                self.q_levels
            )));
        }
        if !(self.theta0_rel.is_finite() && self.theta0_rel >= 0.0) {
            return Err(usage(format!(
                "theta0_rel must be non-negative, got {}",
                self.theta0_rel
            )));
        }
        Ok(())
    }
}

/// Result of [`orthogonal_initialize`] with bookkeeping about the pool.
#[derive(Clone, Debug)]
pub struct InitOutcome {
    pub population: Population,
    /// Number of evaluated crossover children.
    pub pool_size: usize,
    /// Size of the accreted candidate set the final members were chosen from.
    pub candidate_size: usize,
    /// Uniform random points added because the pool was smaller than `n`.
    pub random_fill: usize,
}

/// Builds an initial population of `n` members from orthogonal crossover.
///
/// The box is split into `params.subspaces` slabs. In each slab the lower and
/// upper corners are crossed with an orthogonal design and every child is
/// evaluated. The pooled children are sorted into fronts, and whole fronts are
/// accreted until at least `4n` candidates are gathered. Crowding is computed
/// inside each front. Candidates are then ranked by a second sort that
/// minimizes front index and maximizes crowding, and the best `n` are kept
/// (ties by larger crowding, then pool order). Random points top up a pool
/// smaller than `n`. Rank and crowding of the returned members are
/// recomputed within the population.
pub fn orthogonal_initialize<P, R>(
    problem: &P,
    n: usize,
    params: &InitParams,
    rng: &mut R,
) -> Result<InitOutcome>
where
    P: Problem + ?Sized,
    R: Rng + ?Sized,
{
    params.validate()?;
    if n == 0 {
        return Err(usage("population size must be positive"));
    }
    let bounds = problem.bounds();
    let soc = SocParams::relative(params.q_levels, bounds, params.theta0_rel);
    let slabs = segment_space(bounds, params.subspaces)?;

    let mut pool: Vec<Individual> = Vec::new();
    for slab in &slabs.subspaces {
        for mut child in soc_crossover(slab.lower(), slab.upper(), &soc)? {
            bounds.clamp_in_place(&mut child.0);
            pool.push(evaluate_individual(problem, child)?);
        }
    }
    let pool_size = pool.len();
    let mut random_fill = 0;
    while pool.len() < n {
        pool.push(evaluate_individual(problem, bounds.sample_uniform(rng))?);
        random_fill += 1;
    }

    let objectives: Vec<&[f64]> = pool.iter().map(|m| &m.objectives[..]).collect();
    let partition = nondominated_fronts(&objectives);
    let target = 4 * n;
    let mut candidates: Vec<(usize, usize, Crowding)> = Vec::new();
    for (rank, front) in partition.fronts.iter().enumerate() {
        if candidates.len() >= target {
            break;
        }
        let points: Vec<&[f64]> = front.iter().map(|&i| objectives[i]).collect();
        for (&i, c) in front.iter().zip(crowding_distance_assignment(&points)) {
            candidates.push((i, rank, c));
        }
    }
    let candidate_size = candidates.len();

    let meta = sort_by_dominance(candidates.len(), |a, b| {
        let (_, ra, ca) = candidates[a];
        let (_, rb, cb) = candidates[b];
        let rank_cmp = ra.cmp(&rb);
        let crowd_cmp = cb.cmp(&ca);
        match (rank_cmp, crowd_cmp) {
            (std::cmp::Ordering::Equal, std::cmp::Ordering::Equal) => Dominance::Equal,
            (x, y) if x.is_le() && y.is_le() => Dominance::FirstDominates,
            (x, y) if x.is_ge() && y.is_ge() => Dominance::SecondDominates,
            _ => Dominance::Incomparable,
        }
    });
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&a, &b| {
        meta.ranks[a]
            .cmp(&meta.ranks[b])
            .then_with(|| candidates[b].2.cmp(&candidates[a].2))
            .then(candidates[a].0.cmp(&candidates[b].0))
    });

    let mut slots: Vec<Option<Individual>> = pool.into_iter().map(Some).collect();
    let members: Vec<Individual> = order
        .into_iter()
        .take(n)
        .map(|k| slots[candidates[k].0].take().expect("candidate used once"))
        .collect();
    let mut population = Population::new(members, 0);
    rank_and_crowd(&mut population);
    Ok(InitOutcome {
        population,
        pool_size,
        candidate_size,
        random_fill,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::make_problem;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zdt1_pool_and_size() {
        let p = make_problem("ZDT1").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let out = orthogonal_initialize(&p, 100, &InitParams::default(), &mut rng).unwrap();
        assert_eq!(out.pool_size, 4 * 81);
        assert_eq!(out.population.len(), 100);
        assert_eq!(out.random_fill, 0);
        assert!(out
            .population
            .members
            .iter()
            .all(|m| m.rank.is_some() && m.crowding.is_some()));
        // the all-lower corner of each slab sits on the optimal front (g = 1)
        let on_front = out
            .population
            .members
            .iter()
            .filter(|m| m.decision[1..].iter().all(|&v| v == 0.0))
            .count();
        assert!(on_front >= 1);
    }

    #[test]
    fn small_pool_is_topped_up() {
        let p = make_problem("SCH").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let params = InitParams {
            subspaces: 1,
            ..Default::default()
        };
        let out = orthogonal_initialize(&p, 10, &params, &mut rng).unwrap();
        assert_eq!(out.pool_size, 3);
        assert_eq!(out.random_fill, 7);
        assert_eq!(out.population.len(), 10);
    }

    #[test]
    fn deterministic() {
        let p = make_problem("ZDT2").unwrap();
        let a = orthogonal_initialize(
            &p,
            20,
            &InitParams::default(),
            &mut ChaCha8Rng::seed_from_u64(5),
        )
        .unwrap();
        let b = orthogonal_initialize(
            &p,
            20,
            &InitParams::default(),
            &mut ChaCha8Rng::seed_from_u64(5),
        )
        .unwrap();
        assert_eq!(a.population, b.population);
    }
}
