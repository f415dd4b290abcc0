//! Cartesian products, FP-soft relations and their algebra.
//!
//! A relation holds one entry per ordered pair of positive-grade
//! parameters; each entry carries a membership grade and an object set and
//! is bounded by the corresponding cartesian-product entry. Products keep
//! pairs whose object intersection is empty; `restrict` and `compose`
//! drop them by default ([`PairPolicy`]).

use std::collections::BTreeMap;

use crate::norms::{t_norm, MembershipValue, NormKind, MEMBERSHIP_TOLERANCE};
use crate::sets::{FPSoftElement, FPSoftSet, ObjectSet};
use crate::{Error, Result};

/// Whether derived relations retain pairs with an empty object set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairPolicy {
    #[default]
    DropEmpty,
    KeepEmpty,
}

/// One relation entry: a membership grade and an object set for an
/// ordered parameter pair.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationEntry {
    pub membership: MembershipValue,
    pub objects: ObjectSet,
}

impl RelationEntry {
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.membership.approx_eq(other.membership) && self.objects == other.objects
    }
}

/// An FP-soft relation from one FP-soft set to another, keyed by ordered
/// pairs of parameter indices.
#[derive(Debug, Clone)]
pub struct FPSoftRelation {
    left: FPSoftSet,
    right: FPSoftSet,
    entries: BTreeMap<(u32, u32), RelationEntry>,
}

/// Cartesian product of two FP-soft sets: memberships combined with the
/// given t-norm, object sets intersected. Pairs with an empty
/// intersection are kept.
pub fn cartesian_product(a: &FPSoftSet, b: &FPSoftSet, norm: NormKind) -> Result<FPSoftRelation> {
    if a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    if !norm.is_t_norm() {
        return Err(Error::NotATNorm(norm));
    }
    let mut entries = BTreeMap::new();
    for x in a.support() {
        for y in b.support() {
            let membership = t_norm(norm, a.grade(x), b.grade(y))?;
            let objects = a.approx_of(x).intersection(b.approx_of(y));
            entries.insert((x, y), RelationEntry { membership, objects });
        }
    }
    Ok(FPSoftRelation {
        left: a.clone(),
        right: b.clone(),
        entries,
    })
}

impl FPSoftRelation {
    /// Validating constructor for explicitly listed relations. Every
    /// entry must stay within the cartesian-product bound under `norm`.
    pub fn from_entries(
        left: FPSoftSet,
        right: FPSoftSet,
        norm: NormKind,
        entries: Vec<((u32, u32), RelationEntry)>,
    ) -> Result<Self> {
        if left.universe() != right.universe() {
            return Err(Error::UniverseMismatch);
        }
        if !norm.is_t_norm() {
            return Err(Error::NotATNorm(norm));
        }
        let mut map = BTreeMap::new();
        for ((x, y), entry) in entries {
            let pair_names = || {
                (
                    left.space().name(x).to_string(),
                    right.space().name(y).to_string(),
                )
            };
            if !left.grade(x).is_positive() || !right.grade(y).is_positive() {
                let (x, y) = pair_names();
                return Err(Error::EntryExceedsProduct(x, y));
            }
            let bound = t_norm(norm, left.grade(x), right.grade(y))?;
            let within = entry.membership.value() <= bound.value() + MEMBERSHIP_TOLERANCE;
            let objects_ok = entry
                .objects
                .is_subset(&left.approx_of(x).intersection(right.approx_of(y)));
            if !within || !objects_ok {
                let (x, y) = pair_names();
                return Err(Error::EntryExceedsProduct(x, y));
            }
            if map.insert((x, y), entry).is_some() {
                let (x, y) = pair_names();
                return Err(Error::DuplicatePair(x, y));
            }
        }
        Ok(FPSoftRelation {
            left,
            right,
            entries: map,
        })
    }

    pub fn left(&self) -> &FPSoftSet {
        &self.left
    }

    pub fn right(&self) -> &FPSoftSet {
        &self.right
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in (left index, right index) order.
    pub fn entries(&self) -> impl Iterator<Item = (&(u32, u32), &RelationEntry)> {
        self.entries.iter()
    }

    pub fn entry(&self, x: u32, y: u32) -> Option<&RelationEntry> {
        self.entries.get(&(x, y))
    }

    /// Keeps entries satisfying `predicate`; under [`PairPolicy::DropEmpty`]
    /// entries with an empty object set are removed even when they satisfy
    /// the predicate.
    pub fn restrict<F>(&self, predicate: F, policy: PairPolicy) -> FPSoftRelation
    where
        F: Fn((u32, u32), MembershipValue, &ObjectSet) -> bool,
    {
        let entries = self
            .entries
            .iter()
            .filter(|(&pair, entry)| {
                if policy == PairPolicy::DropEmpty && entry.objects.is_empty() {
                    return false;
                }
                predicate(pair, entry.membership, &entry.objects)
            })
            .map(|(&pair, entry)| (pair, entry.clone()))
            .collect();
        FPSoftRelation {
            left: self.left.clone(),
            right: self.right.clone(),
            entries,
        }
    }

    /// Keeps entries whose membership reaches `threshold`.
    pub fn restrict_by_threshold(
        &self,
        threshold: MembershipValue,
        policy: PairPolicy,
    ) -> FPSoftRelation {
        self.restrict(|_, m, _| m.value() >= threshold.value(), policy)
    }

    /// Elements of the left set that occur in some entry, with their
    /// original membership and object set.
    pub fn domain(&self) -> Vec<FPSoftElement> {
        let mut seen = std::collections::BTreeSet::new();
        for &(x, _) in self.entries.keys() {
            seen.insert(x);
        }
        seen.into_iter()
            .filter_map(|x| self.left.element(x))
            .collect()
    }

    /// Elements of the right set that occur in some entry.
    pub fn range(&self) -> Vec<FPSoftElement> {
        let mut seen = std::collections::BTreeSet::new();
        for &(_, y) in self.entries.keys() {
            seen.insert(y);
        }
        seen.into_iter()
            .filter_map(|y| self.right.element(y))
            .collect()
    }

    /// The converse relation: entry ((y,x), m, s) for every ((x,y), m, s).
    pub fn inverse(&self) -> FPSoftRelation {
        let entries = self
            .entries
            .iter()
            .map(|(&(x, y), entry)| ((y, x), entry.clone()))
            .collect();
        FPSoftRelation {
            left: self.right.clone(),
            right: self.left.clone(),
            entries,
        }
    }

    /// Sup-t composition: pair (x,z) collects every middle parameter y
    /// with entries (x,y) and (y,z); membership is the maximum over
    /// witnesses of the t-norm of the two memberships, the object set the
    /// union of pairwise intersections.
    pub fn compose(
        &self,
        other: &FPSoftRelation,
        norm: NormKind,
        policy: PairPolicy,
    ) -> Result<FPSoftRelation> {
        if !self.right.approx_eq(&other.left) {
            return Err(Error::MiddleMismatch);
        }
        if !norm.is_t_norm() {
            return Err(Error::NotATNorm(norm));
        }
        let mut by_middle: BTreeMap<u32, Vec<(u32, &RelationEntry)>> = BTreeMap::new();
        for (&(y, z), entry) in &other.entries {
            by_middle.entry(y).or_default().push((z, entry));
        }
        let mut entries: BTreeMap<(u32, u32), RelationEntry> = BTreeMap::new();
        for (&(x, y), first) in &self.entries {
            let Some(continuations) = by_middle.get(&y) else {
                continue;
            };
            for &(z, second) in continuations {
                let membership = t_norm(norm, first.membership, second.membership)?;
                let objects = first.objects.intersection(&second.objects);
                entries
                    .entry((x, z))
                    .and_modify(|e| {
                        e.membership = e.membership.max(membership);
                        e.objects = e.objects.union(&objects);
                    })
                    .or_insert(RelationEntry { membership, objects });
            }
        }
        if policy == PairPolicy::DropEmpty {
            entries.retain(|_, entry| !entry.objects.is_empty());
        }
        Ok(FPSoftRelation {
            left: self.left.clone(),
            right: other.right.clone(),
            entries,
        })
    }

    /// n-fold self-composition; n = 0 is rejected.
    pub fn power(&self, n: u32, norm: NormKind, policy: PairPolicy) -> Result<FPSoftRelation> {
        self.require_single_set()?;
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        let mut result = self.clone();
        for _ in 1..n {
            result = result.compose(self, norm, policy)?;
        }
        Ok(result)
    }

    fn require_single_set(&self) -> Result<()> {
        if self.left.approx_eq(&self.right) {
            Ok(())
        } else {
            Err(Error::NotOnSingleSet)
        }
    }

    /// Entry-wise subset: every entry of `self` is dominated by the entry
    /// of `other` at the same pair.
    pub fn is_subset_of(&self, other: &FPSoftRelation) -> Result<bool> {
        self.left.check_compatible(&other.left)?;
        self.right.check_compatible(&other.right)?;
        for (pair, entry) in &self.entries {
            match other.entries.get(pair) {
                Some(theirs) => {
                    if entry.membership.value() > theirs.membership.value() + MEMBERSHIP_TOLERANCE
                        || !entry.objects.is_subset(&theirs.objects)
                    {
                        return Ok(false);
                    }
                }
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Structural equality with membership tolerance.
    pub fn approx_eq(&self, other: &FPSoftRelation) -> bool {
        self.left.approx_eq(&other.left)
            && self.right.approx_eq(&other.right)
            && self.entries.len() == other.entries.len()
            && self.entries.iter().all(|(pair, entry)| {
                other
                    .entries
                    .get(pair)
                    .is_some_and(|theirs| entry.approx_eq(theirs))
            })
    }

    /// Every entry (x,y) has a converse entry (y,x) with equal membership
    /// and object set.
    pub fn is_symmetric(&self) -> Result<bool> {
        self.require_single_set()?;
        Ok(self.entries.iter().all(|(&(x, y), entry)| {
            self.entries
                .get(&(y, x))
                .is_some_and(|converse| entry.approx_eq(converse))
        }))
    }

    /// The self-composition is a subset of the relation.
    pub fn is_transitive(&self) -> Result<bool> {
        self.require_single_set()?;
        let squared = self.compose(self, NormKind::Minimum, PairPolicy::DropEmpty)?;
        squared.is_subset_of(self)
    }

    /// Every positive-grade parameter is related to itself.
    pub fn is_reflexive(&self) -> Result<bool> {
        self.require_single_set()?;
        Ok(self
            .left
            .support()
            .into_iter()
            .all(|x| self.entries.contains_key(&(x, x))))
    }

    /// Every positive-grade parameter has at least one outgoing entry.
    pub fn is_serial(&self) -> Result<bool> {
        self.require_single_set()?;
        Ok(self
            .left
            .support()
            .into_iter()
            .all(|x| self.entries.range((x, 0)..=(x, u32::MAX)).next().is_some()))
    }

    pub fn is_equivalence(&self) -> Result<bool> {
        Ok(self.is_symmetric()? && self.is_transitive()? && self.is_reflexive()?)
    }

    /// All elements related to the element at `parameter`, as elements of
    /// the underlying set. Requires an equivalence relation.
    pub fn equivalence_class(&self, parameter: u32) -> Result<Vec<FPSoftElement>> {
        if !self.is_equivalence()? {
            return Err(Error::NotEquivalence);
        }
        if !self.left.grade(parameter).is_positive() {
            return Err(Error::UnknownParameter(
                self.left.space().name(parameter).to_string(),
            ));
        }
        Ok(self
            .entries
            .range((parameter, 0)..=(parameter, u32::MAX))
            .filter_map(|(&(_, y), _)| self.right.element(y))
            .collect())
    }
}
