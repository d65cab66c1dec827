use std::cmp::Ordering;

use rand::Rng;

use super::crowding::assign_crowding;
use super::sort::fast_nondominated_sort;
use crate::error::{usage, Result};
use crate::model::{Crowding, Individual, Population};

/// Which of two compared individuals is preferred.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    First,
    Second,
}

fn rank_and_crowding(ind: &Individual) -> Result<(usize, Crowding)> {
    match (ind.rank, ind.crowding) {
        (Some(r), Some(c)) => Ok((r, c)),
        _ => Err(usage(
            "individual has no rank/crowding; sort the population first",
        )),
    }
}

/// Crowded comparison: lower rank wins, then larger crowding. Exact ties go
/// to the first argument.
pub fn crowded_compare(a: &Individual, b: &Individual) -> Result<Winner> {
    let (ra, ca) = rank_and_crowding(a)?;
    let (rb, cb) = rank_and_crowding(b)?;
    let winner = match ra.cmp(&rb).then_with(|| cb.cmp(&ca)) {
        Ordering::Greater => Winner::Second,
        _ => Winner::First,
    };
    Ok(winner)
}

/// Draws two members uniformly with replacement and returns the index of
/// the crowded-comparison winner. Consumes exactly two index draws.
pub fn binary_tournament_index<R: Rng + ?Sized>(pop: &Population, rng: &mut R) -> Result<usize> {
    if pop.is_empty() {
        return Err(usage("tournament on an empty population"));
    }
    let a = rng.random_range(0..pop.len());
    let b = rng.random_range(0..pop.len());
    Ok(match crowded_compare(&pop.members[a], &pop.members[b])? {
        Winner::First => a,
        Winner::Second => b,
    })
}

pub fn binary_tournament<'a, R: Rng + ?Sized>(
    pop: &'a Population,
    rng: &mut R,
) -> Result<&'a Individual> {
    binary_tournament_index(pop, rng).map(|i| &pop.members[i])
}

/// Ranks the whole population and computes crowding per front.
pub fn rank_and_crowd(pop: &mut Population) {
    let partition = fast_nondominated_sort(pop);
    assign_crowding(pop, &partition);
}

/// Elitist truncation of a merged population to `n` members.
///
/// Whole fronts are admitted in rank order while they fit; the first front
/// that does not fit is cut by descending crowding, ties keeping the earlier
/// member. Survivors carry the rank and crowding computed on `combined`.
pub fn environmental_selection(mut combined: Population, n: usize) -> Result<Population> {
    if combined.len() < n {
        return Err(usage(format!(
            "cannot select {n} survivors from {} candidates",
            combined.len()
        )));
    }
    let partition = fast_nondominated_sort(&mut combined);
    assign_crowding(&mut combined, &partition);

    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    for front in &partition.fronts {
        if chosen.len() + front.len() <= n {
            chosen.extend(front);
            if chosen.len() == n {
                break;
            }
            continue;
        }
        let mut split = front.clone();
        split.sort_by(|&a, &b| {
            let ca = combined.members[a].crowding.expect("crowding assigned");
            let cb = combined.members[b].crowding.expect("crowding assigned");
            cb.cmp(&ca)
        });
        chosen.extend(split.into_iter().take(n - chosen.len()));
        break;
    }

    let mut slots: Vec<Option<Individual>> = combined.members.into_iter().map(Some).collect();
    let members = chosen
        .into_iter()
        .map(|i| slots[i].take().expect("index chosen once"))
        .collect();
    Ok(Population::new(members, combined.generation))
}
