//! Text rendering for CLI output.
//!
//! Human-readable grades are truncated (not rounded) to three decimals,
//! with trailing zeros trimmed but at least one decimal kept, so 0.7
//! prints as `0.7` and 2.2/9 prints as `0.244`. Machine output keeps full
//! precision via the shortest round-trip form.

use crate::decision::FuzzyRanking;
use crate::relations::FPSoftRelation;
use crate::sets::{FPSoftElement, FPSoftSet};

/// Truncates toward zero to three decimals and trims trailing zeros,
/// keeping at least one digit after the dot.
pub fn truncate3(value: f64) -> String {
    // Going through a 9-decimal string avoids the classic
    // floor(0.7 * 1000) = 699 binary-float trap.
    let long = format!("{value:.9}");
    let dot = long.find('.').expect("fixed-point format");
    let mut out = long[..dot + 4].to_string();
    while out.ends_with('0') && !out.ends_with(".0") {
        out.pop();
    }
    out
}

fn object_list(set: &FPSoftSet, objects: &crate::sets::ObjectSet) -> String {
    let names: Vec<&str> = objects.iter().map(|i| set.universe().name(i)).collect();
    format!("{{{}}}", names.join(" "))
}

/// One line per entry: `grade/(x,y) {objects}`, in pair order.
pub fn relation_text(relation: &FPSoftRelation) -> String {
    let mut out = String::new();
    for (&(x, y), entry) in relation.entries() {
        out.push_str(&format!(
            "{}/({},{}) {}\n",
            truncate3(entry.membership.value()),
            relation.left().space().name(x),
            relation.right().space().name(y),
            object_list(relation.left(), &entry.objects),
        ));
    }
    out
}

/// One line per element: `grade/x {objects}`.
pub fn elements_text(set: &FPSoftSet, elements: &[FPSoftElement]) -> String {
    let mut out = String::new();
    for element in elements {
        out.push_str(&format!(
            "{}/{} {}\n",
            truncate3(element.membership.value()),
            set.space().name(element.parameter),
            object_list(set, &element.objects),
        ));
    }
    out
}

/// One line per object in descending score order, then the argmax line.
pub fn ranking_text(ranking: &FuzzyRanking) -> String {
    let mut out = String::new();
    for (object, score) in ranking.ranked() {
        out.push_str(&format!(
            "{}/{}\n",
            truncate3(score),
            ranking.universe().name(object),
        ));
    }
    let best = ranking.best_names().join(" ");
    let top = ranking.best()[0];
    out.push_str(&format!(
        "best: {} ({})\n",
        best,
        truncate3(ranking.score(top)),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_examples() {
        assert_eq!(truncate3(0.7), "0.7");
        assert_eq!(truncate3(0.0), "0.0");
        assert_eq!(truncate3(1.0), "1.0");
        assert_eq!(truncate3(0.8), "0.8");
        assert_eq!(truncate3(0.5 / 9.0), "0.055");
        assert_eq!(truncate3(2.2 / 9.0), "0.244");
        assert_eq!(truncate3(0.2444444), "0.244");
        assert_eq!(truncate3(0.9999), "0.999");
        assert_eq!(truncate3(0.25), "0.25");
    }
}
