//! Decision/objective space types and the Pareto dominance relation.
//!
//! All problems are minimized. A maximization objective is handled by the
//! caller negating it before it reaches this crate.

use std::cmp::Ordering;
use std::ops::Deref;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};

/// A point in decision space, in problem-native units.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DecisionVector(pub Vec<f64>);

/// The objective values of an evaluated point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectiveVector(pub Vec<f64>);

macro_rules! vector_newtype {
    ($name:ident) => {
        impl Deref for $name {
            type Target = [f64];

            fn deref(&self) -> &[f64] {
                &self.0
            }
        }

        impl AsRef<[f64]> for $name {
            fn as_ref(&self) -> &[f64] {
                &self.0
            }
        }

        impl From<Vec<f64>> for $name {
            fn from(values: Vec<f64>) -> Self {
                Self(values)
            }
        }

        impl $name {
            pub fn into_inner(self) -> Vec<f64> {
                self.0
            }
        }
    };
}

vector_newtype!(DecisionVector);
vector_newtype!(ObjectiveVector);

/// Box constraints `lower[i] <= x[i] <= upper[i]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(usage(format!(
                "bounds length mismatch: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        if lower.is_empty() {
            return Err(usage("bounds must have at least one dimension"));
        }
        for (i, (l, u)) in lower.iter().zip(&upper).enumerate() {
            if !(l.is_finite() && u.is_finite() && l < u) {
                return Err(usage(format!(
                    "invalid bounds in dimension {i}: [{l}, {u}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// `n` dimensions sharing the same interval.
    pub fn uniform(n: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; n], vec![upper; n])
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn width(&self, i: usize) -> f64 {
        self.upper[i] - self.lower[i]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.len()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| *v >= *l && *v <= *u)
    }

    /// Uniform random point inside the box. Consumes one draw per dimension, in order.
    pub fn sample_uniform<R: Rng + ?Sized>(&self, rng: &mut R) -> DecisionVector {
        DecisionVector(
            self.lower
                .iter()
                .zip(&self.upper)
                .map(|(l, u)| l + rng.random::<f64>() * (u - l))
                .collect(),
        )
    }

    /// Projects every component of `x` into its interval.
    pub fn clamp(&self, x: &DecisionVector) -> Result<DecisionVector> {
        if x.len() != self.len() {
            return Err(usage(format!(
                "clamp: vector has {} components, bounds have {}",
                x.len(),
                self.len()
            )));
        }
        Ok(DecisionVector(
            x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .map(|(v, (l, u))| v.clamp(*l, *u))
                .collect(),
        ))
    }

    pub(crate) fn clamp_in_place(&self, x: &mut [f64]) {
        for (v, (l, u)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*l, *u);
        }
    }
}

/// Free-function form of [`Bounds::clamp`].
pub fn clamp(x: &DecisionVector, bounds: &Bounds) -> Result<DecisionVector> {
    bounds.clamp(x)
}

/// Crowding distance. `Infinite` marks boundary individuals and sorts above every
/// finite value; it is never used in arithmetic.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub enum Crowding {
    Finite(f64),
    Infinite,
}

impl Crowding {
    pub fn finite(self) -> Option<f64> {
        match self {
            Crowding::Finite(v) => Some(v),
            Crowding::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Crowding::Infinite)
    }
}

impl Ord for Crowding {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Crowding::Infinite, Crowding::Infinite) => Ordering::Equal,
            (Crowding::Infinite, Crowding::Finite(_)) => Ordering::Greater,
            (Crowding::Finite(_), Crowding::Infinite) => Ordering::Less,
            (Crowding::Finite(a), Crowding::Finite(b)) => a.total_cmp(b),
        }
    }
}

impl PartialOrd for Crowding {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Crowding {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Crowding {}

/// An evaluated member of a population.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Individual {
    pub decision: DecisionVector,
    pub objectives: ObjectiveVector,
    /// Non-dominated front index (0 = best), set by sorting.
    pub rank: Option<usize>,
    /// Crowding distance within the individual's front, set by sorting.
    pub crowding: Option<Crowding>,
}

impl Individual {
    pub fn new(decision: DecisionVector, objectives: ObjectiveVector) -> Self {
        Self {
            decision,
            objectives,
            rank: None,
            crowding: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Population {
    pub members: Vec<Individual>,
    pub generation: usize,
}

impl Population {
    pub fn new(members: Vec<Individual>, generation: usize) -> Self {
        Self {
            members,
            generation,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn objectives(&self) -> Vec<&[f64]> {
        self.members.iter().map(|m| &m.objectives[..]).collect()
    }
}

/// Outcome of comparing two objective vectors under minimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    FirstDominates,
    SecondDominates,
    Incomparable,
    Equal,
}

impl Dominance {
    pub fn reverse(self) -> Self {
        match self {
            Dominance::FirstDominates => Dominance::SecondDominates,
            Dominance::SecondDominates => Dominance::FirstDominates,
            other => other,
        }
    }
}

/// Classifies `a` against `b`: `a` dominates when it is no worse everywhere and
/// strictly better somewhere.
pub fn dominates(a: &[f64], b: &[f64]) -> Result<Dominance> {
    if a.len() != b.len() {
        return Err(usage(format!(
            "dominance between vectors of length {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(compare(a, b))
}

/// Unchecked dominance used on hot paths where lengths are known to agree.
pub(crate) fn compare(a: &[f64], b: &[f64]) -> Dominance {
    let mut a_better = false;
    let mut b_better = false;
    for (x, y) in a.iter().zip(b) {
        if x < y {
            a_better = true;
        } else if y < x {
            b_better = true;
        }
        if a_better && b_better {
            return Dominance::Incomparable;
        }
    }
    match (a_better, b_better) {
        (true, false) => Dominance::FirstDominates,
        (false, true) => Dominance::SecondDominates,
        (false, false) => Dominance::Equal,
        (true, true) => Dominance::Incomparable,
    }
}

/// A box-constrained multi-objective minimization problem.
///
/// Implementors provide the raw objective function; [`evaluate`] adds the
/// bounds check. Implementations must be pure so they can be called from
/// several threads at once.
pub trait Problem: Send + Sync {
    fn name(&self) -> &str;
    fn bounds(&self) -> &Bounds;
    fn n_objectives(&self) -> usize;
    /// Objective values of an in-bounds point.
    fn objectives(&self, x: &[f64]) -> Vec<f64>;

    fn n_vars(&self) -> usize {
        self.bounds().len()
    }
}

/// Evaluates `x`, rejecting points outside the problem's box.
pub fn evaluate<P: Problem + ?Sized>(problem: &P, x: &DecisionVector) -> Result<ObjectiveVector> {
    if x.len() != problem.n_vars() {
        return Err(usage(format!(
            "{}: expected {} decision variables, got {}",
            problem.name(),
            problem.n_vars(),
            x.len()
        )));
    }
    if !problem.bounds().contains(x) {
        return Err(usage(format!(
            "{}: decision vector outside bounds (clamp before evaluating)",
            problem.name()
        )));
    }
    Ok(ObjectiveVector(problem.objectives(x)))
}

pub(crate) fn evaluate_individual<P: Problem + ?Sized>(
    problem: &P,
    decision: DecisionVector,
) -> Result<Individual> {
    let objectives = evaluate(problem, &decision)?;
    Ok(Individual::new(decision, objectives))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dominance_examples() {
        assert_eq!(
            dominates(&[1.0, 1.0], &[2.0, 2.0]).unwrap(),
            Dominance::FirstDominates
        );
        assert_eq!(
            dominates(&[1.0, 2.0], &[2.0, 1.0]).unwrap(),
            Dominance::Incomparable
        );
        assert_eq!(
            dominates(&[3.0, 3.0], &[3.0, 3.0]).unwrap(),
            Dominance::Equal
        );
        assert_eq!(
            dominates(&[2.0, 1.0], &[2.0, 2.0]).unwrap(),
            Dominance::FirstDominates
        );
        assert!(matches!(
            dominates(&[1.0], &[1.0, 2.0]),
            Err(crate::Error::Usage(_))
        ));
    }

    #[test]
    fn clamp_examples() {
        let b1 = Bounds::uniform(1, 0.0, 1.0).unwrap();
        assert_eq!(clamp(&vec![-1.0].into(), &b1).unwrap().0, vec![0.0]);
        assert_eq!(clamp(&vec![0.5].into(), &b1).unwrap().0, vec![0.5]);
        let b2 = Bounds::uniform(2, 0.0, 1.0).unwrap();
        assert_eq!(
            clamp(&vec![7.0, -3.0].into(), &b2).unwrap().0,
            vec![1.0, 0.0]
        );
        assert!(clamp(&vec![0.1].into(), &b2).is_err());
    }

    #[test]
    fn bounds_validation() {
        assert!(Bounds::new(vec![0.0], vec![0.0]).is_err());
        assert!(Bounds::new(vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(Bounds::new(vec![], vec![]).is_err());
        assert!(Bounds::new(vec![f64::NAN], vec![1.0]).is_err());
    }

    #[test]
    fn crowding_ordering() {
        assert!(Crowding::Infinite > Crowding::Finite(1e300));
        assert!(Crowding::Finite(2.0) > Crowding::Finite(1.3));
        assert_eq!(Crowding::Infinite, Crowding::Infinite);
    }

    fn vec3() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(0i32..5, 3).prop_map(|v| v.into_iter().map(f64::from).collect())
    }

    proptest! {
        #[test]
        fn dominance_antisymmetric(a in vec3(), b in vec3()) {
            let ab = dominates(&a, &b).unwrap();
            let ba = dominates(&b, &a).unwrap();
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(dominates(&a, &a).unwrap(), Dominance::Equal);
            prop_assert_eq!(ab == Dominance::Equal, a == b);
        }

        #[test]
        fn dominance_transitive(a in vec3(), b in vec3(), c in vec3()) {
            if compare(&a, &b) == Dominance::FirstDominates
                && compare(&b, &c) == Dominance::FirstDominates
            {
                prop_assert_eq!(compare(&a, &c), Dominance::FirstDominates);
            }
        }

        #[test]
        fn clamp_idempotent(x in prop::collection::vec(-3.0f64..3.0, 4)) {
            let b = Bounds::uniform(4, -1.0, 1.0).unwrap();
            let once = b.clamp(&x.into()).unwrap();
            prop_assert!(b.contains(&once));
            prop_assert_eq!(b.clamp(&once).unwrap(), once);
        }
    }
}
