//! The JSON problem-document format.
//!
//! One document carries a universe, a parameter space, named fuzzy sets,
//! named FP-soft sets and optional named relations, so a whole problem
//! ships as a single self-contained fixture. Grades are written as
//! decimal strings to keep fixtures free of binary-float drift.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::norms::{MembershipValue, NormKind};
use crate::relations::{FPSoftRelation, RelationEntry};
use crate::sets::{FPSoftSet, FuzzySet, ObjectSet, ParameterSpace, Universe};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub fuzzy_sets: IndexMap<String, IndexMap<String, String>>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub fp_soft_sets: IndexMap<String, SoftSetDoc>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub relations: IndexMap<String, RelationDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoftSetDoc {
    pub fuzzy_set: String,
    #[serde(default)]
    pub approx: IndexMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub left: String,
    pub right: String,
    #[serde(default = "default_norm")]
    pub norm: String,
    pub entries: Vec<RelationEntryDoc>,
}

fn default_norm() -> String {
    NormKind::Minimum.name().to_string()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationEntryDoc {
    pub pair: [String; 2],
    pub grade: String,
    #[serde(default)]
    pub objects: Vec<String>,
}

/// A fully resolved and validated document.
#[derive(Debug, Clone)]
pub struct Model {
    pub document: ProblemDocument,
    pub universe: Arc<Universe>,
    pub parameters: Arc<ParameterSpace>,
    pub fuzzy_sets: IndexMap<String, FuzzySet>,
    pub soft_sets: IndexMap<String, FPSoftSet>,
    pub relations: IndexMap<String, NamedRelation>,
}

/// A relation together with the set names and norm it was declared with.
#[derive(Debug, Clone)]
pub struct NamedRelation {
    pub left: String,
    pub right: String,
    pub norm: NormKind,
    pub relation: FPSoftRelation,
}

fn parse_grade(parameter: &str, text: &str) -> Result<MembershipValue> {
    text.parse::<f64>()
        .ok()
        .and_then(|v| MembershipValue::new(v).ok())
        .ok_or_else(|| Error::InvalidGrade {
            parameter: parameter.to_string(),
            text: text.to_string(),
        })
}

/// Parses and validates a document, resolving every cross-reference.
pub fn parse_document(text: &str) -> Result<Model> {
    let document: ProblemDocument =
        serde_json::from_str(text).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    Model::from_document(document)
}

impl Model {
    pub fn from_document(document: ProblemDocument) -> Result<Model> {
        let universe = Universe::new(document.universe.iter().cloned())?;
        let parameters = ParameterSpace::new(document.parameters.iter().cloned())?;

        let mut fuzzy_sets = IndexMap::new();
        for (name, grades) in &document.fuzzy_sets {
            let mut values = vec![MembershipValue::ZERO; parameters.len()];
            for (parameter, text) in grades {
                let p = parameters.require(parameter)?;
                values[p as usize] = parse_grade(parameter, text)?;
            }
            let fuzzy = FuzzySet::from_grades(parameters.clone(), values)?;
            fuzzy_sets.insert(name.clone(), fuzzy);
        }

        let mut soft_sets = IndexMap::new();
        for (name, doc) in &document.fp_soft_sets {
            let fuzzy = fuzzy_sets
                .get(&doc.fuzzy_set)
                .cloned()
                .ok_or_else(|| Error::Unresolved {
                    kind: "fuzzy set",
                    name: doc.fuzzy_set.clone(),
                })?;
            let mut approx = vec![ObjectSet::new(); parameters.len()];
            for (parameter, objects) in &doc.approx {
                let p = parameters.require(parameter)?;
                let mut set = ObjectSet::new();
                for object in objects {
                    set.insert(universe.require(object)?);
                }
                approx[p as usize] = set;
            }
            let set = FPSoftSet::new(universe.clone(), fuzzy, approx)?;
            soft_sets.insert(name.clone(), set);
        }

        let mut relations = IndexMap::new();
        for (name, doc) in &document.relations {
            let left = soft_sets
                .get(&doc.left)
                .cloned()
                .ok_or_else(|| Error::Unresolved {
                    kind: "FP-soft set",
                    name: doc.left.clone(),
                })?;
            let right = soft_sets
                .get(&doc.right)
                .cloned()
                .ok_or_else(|| Error::Unresolved {
                    kind: "FP-soft set",
                    name: doc.right.clone(),
                })?;
            let norm: NormKind = doc.norm.parse()?;
            let mut entries = Vec::with_capacity(doc.entries.len());
            for entry in &doc.entries {
                let x = parameters.require(&entry.pair[0])?;
                let y = parameters.require(&entry.pair[1])?;
                let membership = parse_grade(&entry.pair[0], &entry.grade)?;
                let mut objects = ObjectSet::new();
                for object in &entry.objects {
                    objects.insert(universe.require(object)?);
                }
                entries.push(((x, y), RelationEntry { membership, objects }));
            }
            let relation = FPSoftRelation::from_entries(left, right, norm, entries)?;
            relations.insert(
                name.clone(),
                NamedRelation {
                    left: doc.left.clone(),
                    right: doc.right.clone(),
                    norm,
                    relation,
                },
            );
        }

        Ok(Model {
            document,
            universe,
            parameters,
            fuzzy_sets,
            soft_sets,
            relations,
        })
    }

    pub fn soft_set(&self, name: &str) -> Result<&FPSoftSet> {
        self.soft_sets.get(name).ok_or_else(|| Error::Unresolved {
            kind: "FP-soft set",
            name: name.to_string(),
        })
    }

    pub fn relation(&self, name: &str) -> Result<&NamedRelation> {
        self.relations.get(name).ok_or_else(|| Error::Unresolved {
            kind: "relation",
            name: name.to_string(),
        })
    }
}

/// Serializes a document as pretty JSON with a trailing newline.
pub fn to_json(document: &ProblemDocument) -> String {
    let mut text = serde_json::to_string_pretty(document).expect("document serialization");
    text.push('\n');
    text
}

fn soft_set_doc(set: &FPSoftSet) -> (IndexMap<String, String>, SoftSetDoc) {
    // Rebuilds the fuzzy-set and soft-set documents from a resolved value;
    // used when the result of a command references derived sets.
    let mut grades = IndexMap::new();
    let mut approx = IndexMap::new();
    for element in set.elements() {
        let parameter = set.space().name(element.parameter).to_string();
        grades.insert(parameter.clone(), element.membership.to_string());
        approx.insert(
            parameter,
            element
                .objects
                .iter()
                .map(|i| set.universe().name(i).to_string())
                .collect(),
        );
    }
    (
        grades,
        SoftSetDoc {
            fuzzy_set: String::new(),
            approx,
        },
    )
}

/// Converts a relation into its document form, entries sorted by
/// (left index, right index).
pub fn relation_doc(
    relation: &FPSoftRelation,
    left: &str,
    right: &str,
    norm: NormKind,
) -> RelationDoc {
    let entries = relation
        .entries()
        .map(|(&(x, y), entry)| RelationEntryDoc {
            pair: [
                relation.left().space().name(x).to_string(),
                relation.right().space().name(y).to_string(),
            ],
            grade: entry.membership.to_string(),
            objects: entry
                .objects
                .iter()
                .map(|i| relation.left().universe().name(i).to_string())
                .collect(),
        })
        .collect();
    RelationDoc {
        left: left.to_string(),
        right: right.to_string(),
        norm: norm.name().to_string(),
        entries,
    }
}

/// Builds a self-contained result document holding `relation` under
/// `name`, copying the referenced sets from the source document.
pub fn relation_result_document(
    model: &Model,
    left: &str,
    right: &str,
    norm: NormKind,
    relation: &FPSoftRelation,
    name: &str,
) -> ProblemDocument {
    let mut fuzzy_sets = IndexMap::new();
    let mut fp_soft_sets = IndexMap::new();
    for set_name in [left, right] {
        if let Some(doc) = model.document.fp_soft_sets.get(set_name) {
            fp_soft_sets.insert(set_name.to_string(), doc.clone());
            if let Some(grades) = model.document.fuzzy_sets.get(&doc.fuzzy_set) {
                fuzzy_sets.insert(doc.fuzzy_set.clone(), grades.clone());
            }
        } else if let Ok(set) = model.soft_set(set_name) {
            let (grades, mut doc) = soft_set_doc(set);
            let fuzzy_name = format!("{set_name}_grades");
            doc.fuzzy_set = fuzzy_name.clone();
            fuzzy_sets.insert(fuzzy_name, grades);
            fp_soft_sets.insert(set_name.to_string(), doc);
        }
    }
    let mut relations = IndexMap::new();
    relations.insert(name.to_string(), relation_doc(relation, left, right, norm));
    ProblemDocument {
        universe: model.document.universe.clone(),
        parameters: model.document.parameters.clone(),
        fuzzy_sets,
        fp_soft_sets,
        relations,
    }
}

/// Machine-readable ranking output.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankingDoc {
    /// (object, score) pairs, descending by score, ties in universe order.
    pub scores: Vec<RankingEntryDoc>,
    pub best: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankingEntryDoc {
    pub object: String,
    pub score: String,
}

impl RankingDoc {
    pub fn from_ranking(ranking: &crate::decision::FuzzyRanking) -> Self {
        RankingDoc {
            scores: ranking
                .ranked()
                .into_iter()
                .map(|(object, score)| RankingEntryDoc {
                    object: ranking.universe().name(object).to_string(),
                    score: score.to_string(),
                })
                .collect(),
            best: ranking
                .best_names()
                .into_iter()
                .map(str::to_string)
                .collect(),
        }
    }
}

/// Machine-readable property-check output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckDoc {
    pub relation: String,
    pub results: IndexMap<String, bool>,
}

/// Machine-readable equivalence-class output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassesDoc {
    pub classes: Vec<ClassDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassDoc {
    pub parameter: String,
    pub members: Vec<ElementDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ElementDoc {
    pub parameter: String,
    pub grade: String,
    pub objects: Vec<String>,
}

impl ElementDoc {
    pub fn from_element(set: &FPSoftSet, element: &crate::sets::FPSoftElement) -> Self {
        ElementDoc {
            parameter: set.space().name(element.parameter).to_string(),
            grade: element.membership.to_string(),
            objects: element
                .objects
                .iter()
                .map(|i| set.universe().name(i).to_string())
                .collect(),
        }
    }
}

/// Stable map from relation entries for tests and diffing.
pub fn entry_table(relation: &FPSoftRelation) -> BTreeMap<(String, String), (f64, Vec<String>)> {
    relation
        .entries()
        .map(|(&(x, y), entry)| {
            (
                (
                    relation.left().space().name(x).to_string(),
                    relation.right().space().name(y).to_string(),
                ),
                (
                    entry.membership.value(),
                    entry
                        .objects
                        .iter()
                        .map(|i| relation.left().universe().name(i).to_string())
                        .collect(),
                ),
            )
        })
        .collect()
}
