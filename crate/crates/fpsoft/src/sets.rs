//! Universes, parameter spaces, fuzzy sets and FP-soft sets.
//!
//! All values are immutable after construction. Object sets are kept as
//! sorted universe indices so every iteration and rendering is
//! deterministic in universe order.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::norms::MembershipValue;
use crate::{Error, Result};

fn build_index(names: &[String]) -> Result<HashMap<String, u32>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i as u32).is_some() {
            return Err(Error::DuplicateIdentifier(name.clone()));
        }
    }
    Ok(index)
}

/// Ordered set of distinct object identifiers.
#[derive(Debug, Clone)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = build_index(&names)?;
        Ok(Arc::new(Universe { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: u32) -> &str {
        &self.names[i as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<u32> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

/// Ordered set of distinct parameter identifiers.
#[derive(Debug, Clone)]
pub struct ParameterSpace {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

impl ParameterSpace {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = build_index(&names)?;
        Ok(Arc::new(ParameterSpace { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: u32) -> &str {
        &self.names[i as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<u32> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))
    }
}

impl PartialEq for ParameterSpace {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for ParameterSpace {}

/// Subset of a universe, stored as sorted object indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ObjectSet(BTreeSet<u32>);

impl ObjectSet {
    pub fn new() -> Self {
        ObjectSet(BTreeSet::new())
    }

    pub fn insert(&mut self, i: u32) {
        self.0.insert(i);
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.contains(&i)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        ObjectSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn union(&self, other: &Self) -> Self {
        ObjectSet(self.0.union(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<u32> for ObjectSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        ObjectSet(iter.into_iter().collect())
    }
}

/// A fuzzy set over a parameter space; absent parameters have grade 0.
#[derive(Debug, Clone)]
pub struct FuzzySet {
    space: Arc<ParameterSpace>,
    grades: Vec<MembershipValue>,
}

impl FuzzySet {
    /// Builds a fuzzy set from (parameter name, grade) pairs.
    pub fn new(space: Arc<ParameterSpace>, graded: &[(&str, f64)]) -> Result<Self> {
        let mut grades = vec![MembershipValue::ZERO; space.len()];
        for (name, value) in graded {
            let i = space.require(name)?;
            grades[i as usize] = MembershipValue::new(*value)?;
        }
        Ok(FuzzySet { space, grades })
    }

    pub fn from_grades(space: Arc<ParameterSpace>, grades: Vec<MembershipValue>) -> Result<Self> {
        if grades.len() != space.len() {
            return Err(Error::SpaceMismatch);
        }
        Ok(FuzzySet { space, grades })
    }

    pub fn space(&self) -> &Arc<ParameterSpace> {
        &self.space
    }

    pub fn grade(&self, parameter: u32) -> MembershipValue {
        self.grades[parameter as usize]
    }

    /// Indices of parameters with strictly positive grade, in space order.
    pub fn support(&self) -> Vec<u32> {
        (0..self.space.len() as u32)
            .filter(|&p| self.grades[p as usize].is_positive())
            .collect()
    }
}

/// One materialized element of an FP-soft set: a positive-grade parameter
/// with its approximate object set.
#[derive(Debug, Clone, PartialEq)]
pub struct FPSoftElement {
    pub parameter: u32,
    pub membership: MembershipValue,
    pub objects: ObjectSet,
}

impl FPSoftElement {
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.parameter == other.parameter
            && self.membership.approx_eq(other.membership)
            && self.objects == other.objects
    }
}

/// A fuzzy-parametrized soft set: per-parameter importance grades plus
/// approximate object subsets. Parameters with grade 0 carry the empty
/// set; positive-grade parameters may carry an empty set.
#[derive(Debug, Clone)]
pub struct FPSoftSet {
    universe: Arc<Universe>,
    fuzzy: FuzzySet,
    approx: Vec<ObjectSet>,
}

impl FPSoftSet {
    pub fn new(universe: Arc<Universe>, fuzzy: FuzzySet, approx: Vec<ObjectSet>) -> Result<Self> {
        if approx.len() != fuzzy.space().len() {
            return Err(Error::SpaceMismatch);
        }
        for (p, objects) in approx.iter().enumerate() {
            if !fuzzy.grade(p as u32).is_positive() && !objects.is_empty() {
                return Err(Error::ZeroGradeApprox(fuzzy.space().name(p as u32).to_string()));
            }
            for i in objects.iter() {
                if i as usize >= universe.len() {
                    return Err(Error::UnknownObject(format!("#{i}")));
                }
            }
        }
        Ok(FPSoftSet {
            universe,
            fuzzy,
            approx,
        })
    }

    /// Convenience constructor resolving object names, mainly for tests.
    pub fn from_named(
        universe: Arc<Universe>,
        fuzzy: FuzzySet,
        approx: &[(&str, &[&str])],
    ) -> Result<Self> {
        let mut sets = vec![ObjectSet::new(); fuzzy.space().len()];
        for (param, objects) in approx {
            let p = fuzzy.space().require(param)?;
            let mut set = ObjectSet::new();
            for name in *objects {
                set.insert(universe.require(name)?);
            }
            sets[p as usize] = set;
        }
        FPSoftSet::new(universe, fuzzy, sets)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn space(&self) -> &Arc<ParameterSpace> {
        self.fuzzy.space()
    }

    pub fn fuzzy(&self) -> &FuzzySet {
        &self.fuzzy
    }

    pub fn grade(&self, parameter: u32) -> MembershipValue {
        self.fuzzy.grade(parameter)
    }

    pub fn approx_of(&self, parameter: u32) -> &ObjectSet {
        &self.approx[parameter as usize]
    }

    pub fn support(&self) -> Vec<u32> {
        self.fuzzy.support()
    }

    /// The element at `parameter`, or `None` when its grade is 0.
    pub fn element(&self, parameter: u32) -> Option<FPSoftElement> {
        let membership = self.fuzzy.grade(parameter);
        membership.is_positive().then(|| FPSoftElement {
            parameter,
            membership,
            objects: self.approx[parameter as usize].clone(),
        })
    }

    /// Elements for exactly the positive-grade parameters, in space order.
    pub fn elements(&self) -> Vec<FPSoftElement> {
        self.support()
            .into_iter()
            .filter_map(|p| self.element(p))
            .collect()
    }

    pub(crate) fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        if self.space() != other.space() {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    /// FP-soft subset order: every element of `self` is dominated by the
    /// element of `other` at the same parameter.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        for element in self.elements() {
            let theirs = other.grade(element.parameter);
            if element.membership.value() > theirs.value() + crate::norms::MEMBERSHIP_TOLERANCE {
                return Ok(false);
            }
            if !theirs.is_positive() {
                return Ok(false);
            }
            if !element.objects.is_subset(other.approx_of(element.parameter)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Structural equality with membership tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.space() == other.space()
            && (0..self.space().len() as u32).all(|p| {
                self.grade(p).approx_eq(other.grade(p)) && self.approx_of(p) == other.approx_of(p)
            })
    }
}
