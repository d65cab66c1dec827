//! Building blocks of NSGA-II: sorting, crowding, selection and variation.

mod crowding;
mod selection;
mod sort;
mod variation;

use rand::Rng;

pub use crowding::{assign_crowding, crowding_distance_assignment};
pub use selection::{
    binary_tournament, binary_tournament_index, crowded_compare, environmental_selection,
    rank_and_crowd, Winner,
};
pub use sort::{fast_nondominated_sort, nondominated_fronts, sort_by_dominance, FrontPartition};
pub use variation::{polynomial_mutation, sbx_crossover, VariationParams};

use crate::error::{usage, Result};
use crate::model::{evaluate_individual, Individual, Population, Problem};

/// `n` uniformly random, evaluated and ranked individuals.
pub fn random_initialize<P, R>(problem: &P, n: usize, rng: &mut R) -> Result<Population>
where
    P: Problem + ?Sized,
    R: Rng + ?Sized,
{
    if n == 0 {
        return Err(usage("population size must be positive"));
    }
    let members = (0..n)
        .map(|_| evaluate_individual(problem, problem.bounds().sample_uniform(rng)))
        .collect::<Result<Vec<_>>>()?;
    let mut pop = Population::new(members, 0);
    rank_and_crowd(&mut pop);
    Ok(pop)
}

/// Breeds `n` evaluated offspring from a ranked parent population.
///
/// Per pair the random stream is consumed in this order: first tournament,
/// second tournament, crossover, mutation of the first child, mutation of the
/// second child. An odd `n` still breeds the last pair in full and drops its
/// second child.
pub fn make_offspring<P, R>(
    parents: &Population,
    n: usize,
    problem: &P,
    params: &VariationParams,
    rng: &mut R,
) -> Result<Vec<Individual>>
where
    P: Problem + ?Sized,
    R: Rng + ?Sized,
{
    let bounds = problem.bounds();
    let mut children = Vec::with_capacity(n + 1);
    while children.len() < n {
        let a = binary_tournament_index(parents, rng)?;
        let b = binary_tournament_index(parents, rng)?;
        let (c1, c2) = sbx_crossover(
            &parents.members[a].decision,
            &parents.members[b].decision,
            params,
            bounds,
            rng,
        );
        let m1 = polynomial_mutation(&c1, params, bounds, rng);
        let m2 = polynomial_mutation(&c2, params, bounds, rng);
        children.push(m1);
        children.push(m2);
    }
    children.truncate(n);
    children
        .into_iter()
        .map(|x| evaluate_individual(problem, x))
        .collect()
}
