//! Fuzzification of a relation on an FP-soft set into a ranking of the
//! object universe, and the decision method built on it.
//!
//! The score of an object is the sum of the memberships of all relation
//! entries whose object set contains it, divided by the squared size of
//! the support of the underlying fuzzy parameter set.

use std::sync::Arc;

use crate::norms::{MembershipValue, NormKind};
use crate::relations::{cartesian_product, FPSoftRelation, PairPolicy};
use crate::sets::{FPSoftSet, Universe};
use crate::{Error, Result};

/// Parameters of a decision run: how the relation over the self-product
/// is carved out before fuzzification.
#[derive(Debug, Clone, Copy)]
pub struct DecisionConfig {
    pub threshold: MembershipValue,
    pub norm: NormKind,
    pub policy: PairPolicy,
}

/// A fuzzy set over the object universe: per-object scores plus the
/// argmax set.
#[derive(Debug, Clone)]
pub struct FuzzyRanking {
    universe: Arc<Universe>,
    scores: Vec<f64>,
    best: Vec<u32>,
}

impl FuzzyRanking {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn score(&self, object: u32) -> f64 {
        self.scores[object as usize]
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    /// Objects attaining the maximum score, in universe order.
    pub fn best(&self) -> &[u32] {
        &self.best
    }

    pub fn best_names(&self) -> Vec<&str> {
        self.best.iter().map(|&i| self.universe.name(i)).collect()
    }

    /// (object, score) pairs, descending by score, ties in universe order.
    pub fn ranked(&self) -> Vec<(u32, f64)> {
        let mut pairs: Vec<(u32, f64)> = self
            .scores
            .iter()
            .enumerate()
            .map(|(i, &s)| (i as u32, s))
            .collect();
        pairs.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
        pairs
    }
}

/// Turns a relation on `base` into a fuzzy ranking of the universe.
pub fn fuzzify(relation: &FPSoftRelation, base: &FPSoftSet) -> Result<FuzzyRanking> {
    if !relation.left().approx_eq(base) || !relation.right().approx_eq(base) {
        return Err(Error::NotOnSingleSet);
    }
    let support = base.support();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let denominator = (support.len() * support.len()) as f64;
    let universe = base.universe().clone();
    let mut sums = vec![0.0_f64; universe.len()];
    for (_, entry) in relation.entries() {
        for object in entry.objects.iter() {
            sums[object as usize] += entry.membership.value();
        }
    }
    let scores: Vec<f64> = sums.into_iter().map(|s| s / denominator).collect();
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let best = scores
        .iter()
        .enumerate()
        .filter(|(_, &s)| s >= max - crate::norms::MEMBERSHIP_TOLERANCE)
        .map(|(i, _)| i as u32)
        .collect();
    Ok(FuzzyRanking {
        universe,
        scores,
        best,
    })
}

/// The full decision method: self-product under `config.norm`, threshold
/// restriction under `config.policy`, then fuzzification.
pub fn decide(base: &FPSoftSet, config: &DecisionConfig) -> Result<FuzzyRanking> {
    let product = cartesian_product(base, base, config.norm)?;
    let relation = product.restrict_by_threshold(config.threshold, config.policy);
    fuzzify(&relation, base)
}
