//! End-to-end acceptance suite. Each test covers one release criterion
//! and prints a single PASS line when it holds.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpsoft::decision::{decide, DecisionConfig};
use fpsoft::document::parse_document;
use fpsoft::norms::{s_norm, t_norm, MembershipValue, NormKind};
use fpsoft::relations::{cartesian_product, FPSoftRelation, PairPolicy};
use fpsoft::sets::{FPSoftSet, FuzzySet, ObjectSet, ParameterSpace, Universe};

fn fixture(name: &str) -> fpsoft::document::Model {
    let text = std::fs::read_to_string(format!("fixtures/{name}")).unwrap();
    parse_document(&text).unwrap()
}

fn m(v: f64) -> MembershipValue {
    MembershipValue::new(v).unwrap()
}

/// Relation entries as ((left name, right name), membership, object names).
fn entry_rows(relation: &FPSoftRelation) -> Vec<((String, String), f64, Vec<String>)> {
    relation
        .entries()
        .map(|(&(x, y), entry)| {
            (
                (
                    relation.left().space().name(x).to_string(),
                    relation.right().space().name(y).to_string(),
                ),
                entry.membership.value(),
                entry
                    .objects
                    .iter()
                    .map(|i| relation.left().universe().name(i).to_string())
                    .collect(),
            )
        })
        .collect()
}

fn assert_rows(relation: &FPSoftRelation, expected: &[(&str, &str, f64, &[&str])]) {
    let rows = entry_rows(relation);
    assert_eq!(rows.len(), expected.len(), "entry count");
    for (row, want) in rows.iter().zip(expected) {
        assert_eq!((row.0 .0.as_str(), row.0 .1.as_str()), (want.0, want.1));
        assert!(
            (row.1 - want.2).abs() <= 1e-9,
            "membership at ({},{}): {} vs {}",
            want.0,
            want.1,
            row.1,
            want.2
        );
        assert_eq!(row.2, want.3, "objects at ({},{})", want.0, want.1);
    }
}

#[test]
fn criterion_1_car_gallery_ranking() {
    let model = fixture("car_gallery.json");
    let base = model.soft_set("gammaX").unwrap();
    let config = DecisionConfig {
        threshold: m(0.5),
        norm: NormKind::Minimum,
        policy: PairPolicy::DropEmpty,
    };
    let ranking = decide(base, &config).unwrap();
    let expected = [
        ("u1", 0.0556),
        ("u2", 0.0),
        ("u3", 0.2444),
        ("u4", 0.0556),
        ("u5", 0.0),
        ("u6", 0.0556),
        ("u7", 0.2444),
        ("u8", 0.2444),
    ];
    for (name, want) in expected {
        let i = base.universe().index_of(name).unwrap();
        assert!(
            (ranking.score(i) - want).abs() < 1e-3,
            "{name}: {} vs {want}",
            ranking.score(i)
        );
    }
    assert_eq!(ranking.best_names(), ["u3", "u7", "u8"]);
    println!("criterion 1: PASS — car-gallery decision scores and best set");
}

const PRODUCT_TABLE: [(&str, &str, f64, &[&str]); 20] = [
    ("x1", "x3", 0.5, &["u1", "u6", "u13"]),
    ("x1", "x6", 0.1, &["u3", "u7", "u11", "u15"]),
    ("x1", "x7", 0.5, &["u11"]),
    ("x1", "x8", 0.3, &["u8", "u12"]),
    ("x2", "x3", 0.7, &[]),
    ("x2", "x6", 0.1, &["u3", "u7", "u15"]),
    ("x2", "x7", 0.7, &["u14"]),
    ("x2", "x8", 0.3, &["u8", "u14"]),
    ("x3", "x3", 0.3, &["u1", "u5", "u6", "u9", "u10", "u13"]),
    ("x3", "x6", 0.1, &["u5", "u9"]),
    ("x3", "x7", 0.3, &["u2", "u5", "u9", "u10"]),
    ("x3", "x8", 0.3, &["u2", "u5", "u10", "u12"]),
    ("x4", "x3", 0.9, &["u6"]),
    ("x4", "x6", 0.1, &[]),
    ("x4", "x7", 0.7, &["u2"]),
    ("x4", "x8", 0.3, &["u2", "u8", "u12"]),
    ("x5", "x3", 0.6, &["u6", "u9", "u13"]),
    ("x5", "x6", 0.1, &["u3", "u7", "u9", "u15"]),
    ("x5", "x7", 0.6, &["u9"]),
    ("x5", "x8", 0.3, &[]),
];

#[test]
fn criterion_2_product_table() {
    let model = fixture("example1.json");
    let gx = model.soft_set("gammaX").unwrap();
    let gy = model.soft_set("gammaY").unwrap();
    let product = cartesian_product(gx, gy, NormKind::Minimum).unwrap();
    assert_rows(&product, &PRODUCT_TABLE);
    println!("criterion 2: PASS — 20-entry cartesian product, empties kept");
}

#[test]
fn criterion_3_restrict_and_inverse() {
    let model = fixture("example1.json");
    let gx = model.soft_set("gammaX").unwrap();
    let gy = model.soft_set("gammaY").unwrap();
    let product = cartesian_product(gx, gy, NormKind::Minimum).unwrap();
    let relation = product.restrict_by_threshold(m(0.3), PairPolicy::DropEmpty);
    let stored = &model.relation("R").unwrap().relation;
    assert_eq!(relation.len(), 13);
    assert!(relation.approx_eq(stored));

    let inverse_table: [(&str, &str, f64, &[&str]); 13] = [
        ("x3", "x1", 0.5, &["u1", "u6", "u13"]),
        ("x3", "x3", 0.3, &["u1", "u5", "u6", "u9", "u10", "u13"]),
        ("x3", "x4", 0.9, &["u6"]),
        ("x3", "x5", 0.6, &["u6", "u9", "u13"]),
        ("x7", "x1", 0.5, &["u11"]),
        ("x7", "x2", 0.7, &["u14"]),
        ("x7", "x3", 0.3, &["u2", "u5", "u9", "u10"]),
        ("x7", "x4", 0.7, &["u2"]),
        ("x7", "x5", 0.6, &["u9"]),
        ("x8", "x1", 0.3, &["u8", "u12"]),
        ("x8", "x2", 0.3, &["u8", "u14"]),
        ("x8", "x3", 0.3, &["u2", "u5", "u10", "u12"]),
        ("x8", "x4", 0.3, &["u2", "u8", "u12"]),
    ];
    assert_rows(&relation.inverse(), &inverse_table);
    println!("criterion 3: PASS — threshold restriction and inverse listings");
}

#[test]
fn criterion_4_equivalence_machinery() {
    let model = fixture("example7.json");
    let base = model.soft_set("gammaX").unwrap();
    let derived = cartesian_product(base, base, NormKind::Minimum)
        .unwrap()
        .restrict_by_threshold(m(0.3), PairPolicy::DropEmpty);
    let stored = &model.relation("R").unwrap().relation;
    assert!(derived.approx_eq(stored));
    assert!(derived.is_symmetric().unwrap());
    assert!(derived.is_transitive().unwrap());
    assert!(derived.is_reflexive().unwrap());
    assert!(derived.is_equivalence().unwrap());

    let x1 = base.space().index_of("x1").unwrap();
    let class = derived.equivalence_class(x1).unwrap();
    let elements = base.elements();
    assert_eq!(class.len(), 3);
    assert!(class
        .iter()
        .zip(elements.iter())
        .all(|(a, b)| a.approx_eq(b)));
    println!("criterion 4: PASS — equivalence predicates and class of x1");
}

#[test]
fn criterion_5_norm_axiom_suite() {
    const TOL: f64 = 1e-12;
    let grid: Vec<f64> = (0..=10).map(|i| i as f64 / 10.0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut triples: Vec<(f64, f64, f64)> = Vec::new();
    for a in &grid {
        for b in &grid {
            for c in &grid {
                triples.push((*a, *b, *c));
            }
        }
    }
    for _ in 0..1000 {
        triples.push((rng.gen(), rng.gen(), rng.gen()));
    }

    for kind in NormKind::ALL {
        let apply = |a: f64, b: f64| -> f64 {
            let (a, b) = (m(a), m(b));
            if kind.is_t_norm() {
                t_norm(kind, a, b).unwrap().value()
            } else {
                s_norm(kind, a, b).unwrap().value()
            }
        };
        let identity = if kind.is_t_norm() { 1.0 } else { 0.0 };
        for &(a, b, c) in &triples {
            // Boundary: the identity element leaves a unchanged.
            assert!((apply(a, identity) - a).abs() <= TOL, "{kind} boundary {a}");
            // Commutativity.
            assert!(
                (apply(a, b) - apply(b, a)).abs() <= TOL,
                "{kind} commutativity {a} {b}"
            );
            // Associativity.
            assert!(
                (apply(apply(a, b), c) - apply(a, apply(b, c))).abs() <= TOL,
                "{kind} associativity {a} {b} {c}"
            );
            // Monotonicity in the second argument.
            let (lo, hi) = if b <= c { (b, c) } else { (c, b) };
            assert!(
                apply(a, lo) <= apply(a, hi) + TOL,
                "{kind} monotonicity {a} {lo} {hi}"
            );
        }
    }

    // Duality under the standard negation, both directions.
    for kind in NormKind::T_NORMS {
        let dual = kind.dual();
        for &a in &grid {
            for &b in &grid {
                let t = t_norm(kind, m(a), m(b)).unwrap().value();
                let s = s_norm(dual, m(a), m(b)).unwrap().value();
                let via_t = 1.0 - t_norm(kind, m(1.0 - a), m(1.0 - b)).unwrap().value();
                let via_s = 1.0 - s_norm(dual, m(1.0 - a), m(1.0 - b)).unwrap().value();
                assert!((s - via_t).abs() <= TOL, "{dual} dual law {a} {b}");
                assert!((t - via_s).abs() <= TOL, "{kind} dual law {a} {b}");
            }
        }
    }
    println!("criterion 5: PASS — norm axioms on grid plus 1000 random triples");
}

/// Random FP-soft set with dyadic grades over shared spaces.
fn random_set(
    rng: &mut ChaCha8Rng,
    universe: &Arc<Universe>,
    space: &Arc<ParameterSpace>,
) -> FPSoftSet {
    loop {
        let grades: Vec<MembershipValue> = (0..space.len())
            .map(|_| {
                if rng.gen_bool(0.3) {
                    MembershipValue::ZERO
                } else {
                    m(rng.gen_range(1..=8) as f64 / 8.0)
                }
            })
            .collect();
        let approx: Vec<ObjectSet> = grades
            .iter()
            .map(|g| {
                if g.is_positive() {
                    (0..universe.len() as u32).filter(|_| rng.gen_bool(0.5)).collect()
                } else {
                    ObjectSet::new()
                }
            })
            .collect();
        let fuzzy = FuzzySet::from_grades(space.clone(), grades).unwrap();
        let set = FPSoftSet::new(universe.clone(), fuzzy, approx).unwrap();
        if !set.support().is_empty() {
            return set;
        }
    }
}

fn random_subrelation(rng: &mut ChaCha8Rng, relation: &FPSoftRelation) -> FPSoftRelation {
    let keep: Vec<(u32, u32)> = relation
        .entries()
        .filter(|_| rng.gen_bool(0.7))
        .map(|(&pair, _)| pair)
        .collect();
    relation.restrict(|pair, _, _| keep.contains(&pair), PairPolicy::DropEmpty)
}

#[test]
fn criterion_6_relation_algebra_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0usize;
    while checked < 500 {
        let n_objects = rng.gen_range(1..=6);
        let n_params = rng.gen_range(1..=4);
        let universe = Universe::new((1..=n_objects).map(|i| format!("u{i}"))).unwrap();
        let space = ParameterSpace::new((1..=n_params).map(|i| format!("x{i}"))).unwrap();
        let a = random_set(&mut rng, &universe, &space);
        let b = random_set(&mut rng, &universe, &space);
        let c = random_set(&mut rng, &universe, &space);

        // Heterogeneous relations for inverse and composition laws.
        let r1 = random_subrelation(
            &mut rng,
            &cartesian_product(&a, &b, NormKind::Minimum).unwrap(),
        );
        let r2 = random_subrelation(
            &mut rng,
            &cartesian_product(&b, &c, NormKind::Minimum).unwrap(),
        );

        // Involution.
        assert!(r1.inverse().inverse().approx_eq(&r1));

        // Inverse monotonicity on a sub-relation of r1.
        let smaller = random_subrelation(&mut rng, &r1);
        assert!(smaller.is_subset_of(&r1).unwrap());
        assert!(smaller.inverse().is_subset_of(&r1.inverse()).unwrap());

        // Anti-distribution of inverse over composition.
        let lhs = r1
            .compose(&r2, NormKind::Minimum, PairPolicy::DropEmpty)
            .unwrap()
            .inverse();
        let rhs = r2
            .inverse()
            .compose(&r1.inverse(), NormKind::Minimum, PairPolicy::DropEmpty)
            .unwrap();
        assert!(lhs.approx_eq(&rhs));

        // Self-relation: threshold restriction of a self-product is
        // symmetric and transitive by construction.
        let theta = m(rng.gen_range(0..=8) as f64 / 8.0);
        let s = cartesian_product(&a, &a, NormKind::Minimum)
            .unwrap()
            .restrict_by_threshold(theta, PairPolicy::DropEmpty);
        assert!(s.is_symmetric().unwrap());
        assert!(s.is_transitive().unwrap());

        // Symmetric ⇔ equal to own inverse, on both s and a mutation.
        for relation in [&s, &random_subrelation(&mut rng, &s)] {
            assert_eq!(
                relation.is_symmetric().unwrap(),
                relation.inverse().approx_eq(relation)
            );
            if relation.is_transitive().unwrap() {
                // Transitivity transfers to the inverse and to the square.
                assert!(relation.inverse().is_transitive().unwrap());
                let squared = relation
                    .compose(relation, NormKind::Minimum, PairPolicy::DropEmpty)
                    .unwrap();
                assert!(squared.is_transitive().unwrap());
            }
        }

        // Serial + symmetric + transitive forces reflexivity.
        if s.is_serial().unwrap() {
            assert!(s.is_reflexive().unwrap());
        }

        checked += 1;
    }
    assert_eq!(checked, 500);
    println!("criterion 6: PASS — relation algebra laws on 500 random instances");
}

/// Brute-force reference decision procedure over plain names and floats,
/// written independently of the library types.
mod oracle {
    pub struct Input {
        pub universe: Vec<String>,
        /// (parameter, grade, objects); grades strictly positive.
        pub elements: Vec<(String, f64, Vec<String>)>,
        pub threshold: f64,
    }

    pub fn decide(input: &Input) -> (Vec<f64>, Vec<String>) {
        let k = input.elements.len();
        let denominator = (k * k) as f64;
        let mut scores = vec![0.0f64; input.universe.len()];
        for (u, name) in input.universe.iter().enumerate() {
            for (_, gi, oi) in &input.elements {
                for (_, gj, oj) in &input.elements {
                    let membership = gi.min(*gj);
                    if membership >= input.threshold
                        && oi.contains(name)
                        && oj.contains(name)
                    {
                        scores[u] += membership;
                    }
                }
            }
        }
        for s in scores.iter_mut() {
            *s /= denominator;
        }
        let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let best = input
            .universe
            .iter()
            .zip(&scores)
            .filter(|(_, &s)| s == max)
            .map(|(name, _)| name.clone())
            .collect();
        (scores, best)
    }
}

#[test]
fn criterion_7_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n_objects = rng.gen_range(1..=6);
        let n_params = rng.gen_range(1..=4);
        let universe = Universe::new((1..=n_objects).map(|i| format!("u{i}"))).unwrap();
        let space = ParameterSpace::new((1..=n_params).map(|i| format!("x{i}"))).unwrap();
        let set = random_set(&mut rng, &universe, &space);
        let threshold = rng.gen_range(0..=8) as f64 / 8.0;

        let input = oracle::Input {
            universe: universe.names().to_vec(),
            elements: set
                .elements()
                .iter()
                .map(|e| {
                    (
                        space.name(e.parameter).to_string(),
                        e.membership.value(),
                        e.objects.iter().map(|i| universe.name(i).to_string()).collect(),
                    )
                })
                .collect(),
            threshold,
        };
        let (expected_scores, expected_best) = oracle::decide(&input);

        let config = DecisionConfig {
            threshold: m(threshold),
            norm: NormKind::Minimum,
            policy: PairPolicy::DropEmpty,
        };
        let ranking = decide(&set, &config).unwrap();
        // Dyadic grades make both summations exact, so equality is strict.
        assert_eq!(ranking.scores(), expected_scores.as_slice());
        assert_eq!(ranking.best_names(), expected_best);
    }
    println!("criterion 7: PASS — decision output matches brute-force oracle on 200 instances");
}

#[test]
fn criterion_8_cli_determinism_and_round_trip() {
    use std::process::Command;

    let bin = env!("CARGO_BIN_EXE_fpsoft");
    let commands: Vec<Vec<&str>> = vec![
        vec!["product", "--input", "fixtures/example1.json", "--left", "gammaX", "--right", "gammaY"],
        vec!["restrict", "--input", "fixtures/example1.json", "--relation", "R", "--threshold", "0.5"],
        vec!["invert", "--input", "fixtures/example1.json", "--relation", "R"],
        vec!["compose", "--input", "fixtures/example7.json", "--first", "R", "--second", "R"],
        vec!["check", "--input", "fixtures/example7.json", "--relation", "R"],
        vec!["classes", "--input", "fixtures/example7.json", "--relation", "R"],
        vec!["decide", "--input", "fixtures/car_gallery.json", "--set", "gammaX", "--threshold", "0.5"],
        vec!["norm-eval", "--kind", "einstein_sum", "0.5", "0.5"],
    ];
    for args in &commands {
        for format in ["text", "machine"] {
            let run = || {
                Command::new(bin)
                    .args(args)
                    .args(["--format", format])
                    .output()
                    .unwrap()
            };
            let first = run();
            let second = run();
            assert!(first.status.success(), "{args:?} ({format}): {:?}", first);
            assert!(first.stderr.is_empty());
            assert_eq!(first.stdout, second.stdout, "{args:?} ({format}) not deterministic");
            assert!(!first.stdout.is_empty());
        }
    }

    // Machine output of a relation command re-parses into the same relation.
    let output = Command::new(bin)
        .args([
            "product", "--input", "fixtures/example1.json", "--left", "gammaX",
            "--right", "gammaY", "--format", "machine",
        ])
        .output()
        .unwrap();
    let reparsed = parse_document(std::str::from_utf8(&output.stdout).unwrap()).unwrap();
    let model = fixture("example1.json");
    let product = cartesian_product(
        model.soft_set("gammaX").unwrap(),
        model.soft_set("gammaY").unwrap(),
        NormKind::Minimum,
    )
    .unwrap();
    assert!(reparsed.relation("result").unwrap().relation.approx_eq(&product));
    println!("criterion 8: PASS — CLI determinism and lossless machine round-trip");
}
