//! `fpsoft` command-line front end.
//!
//! Exit codes: 0 success, 1 validation error (document or name problems),
//! 2 computation error, 64 usage error. Diagnostics go to stderr only.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;

use fpsoft::decision::{decide, DecisionConfig};
use fpsoft::document::{
    parse_document, relation_result_document, to_json, CheckDoc, ClassDoc, ClassesDoc,
    ElementDoc, Model, NamedRelation, RankingDoc,
};
use fpsoft::norms::{s_norm, t_norm, MembershipValue, NormKind};
use fpsoft::relations::{cartesian_product, FPSoftRelation, PairPolicy};
use fpsoft::render;
use fpsoft::Error;

#[derive(Parser)]
#[command(name = "fpsoft", version, about = "Fuzzy-parametrized soft set calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    DropEmpty,
    KeepEmpty,
}

impl From<PolicyArg> for PairPolicy {
    fn from(p: PolicyArg) -> PairPolicy {
        match p {
            PolicyArg::DropEmpty => PairPolicy::DropEmpty,
            PolicyArg::KeepEmpty => PairPolicy::KeepEmpty,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Problem document to read.
    #[arg(long)]
    input: PathBuf,
    /// Output mode: human-readable text or full-precision machine JSON.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Cartesian product of two FP-soft sets.
    Product {
        #[command(flatten)]
        common: Common,
        /// Left FP-soft set name.
        #[arg(long)]
        left: String,
        /// Right FP-soft set name.
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "minimum")]
        norm: String,
    },
    /// Keep relation entries whose membership reaches a threshold.
    Restrict {
        #[command(flatten)]
        common: Common,
        /// Relation name in the document.
        #[arg(long)]
        relation: String,
        /// Minimum membership, a decimal in [0,1].
        #[arg(long)]
        threshold: String,
        #[arg(long, value_enum, default_value = "drop-empty")]
        policy: PolicyArg,
    },
    /// Converse of a relation.
    Invert {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        relation: String,
    },
    /// Sup-t composition of two relations.
    Compose {
        #[command(flatten)]
        common: Common,
        /// Relation applied first.
        #[arg(long)]
        first: String,
        /// Relation applied second.
        #[arg(long)]
        second: String,
        #[arg(long, default_value = "minimum")]
        norm: String,
        #[arg(long, value_enum, default_value = "drop-empty")]
        policy: PolicyArg,
    },
    /// Test relation properties (symmetric, transitive, reflexive, ...).
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        relation: String,
        /// Comma-separated list; defaults to all properties.
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
    },
    /// Equivalence classes of an equivalence relation.
    Classes {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        relation: String,
    },
    /// Run the decision method on an FP-soft set and rank the universe.
    Decide {
        #[command(flatten)]
        common: Common,
        /// FP-soft set name.
        #[arg(long)]
        set: String,
        #[arg(long)]
        threshold: String,
        #[arg(long, default_value = "minimum")]
        norm: String,
        #[arg(long, value_enum, default_value = "drop-empty")]
        policy: PolicyArg,
    },
    /// Evaluate a single norm on two grades.
    NormEval {
        #[arg(long)]
        kind: String,
        /// First grade.
        a: String,
        /// Second grade.
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failures tagged with the exit code they map to.
enum Failure {
    Validation(Error),
    Computation(Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Computation(_) => 2,
        }
    }

    fn error(&self) -> &Error {
        match self {
            Failure::Validation(e) | Failure::Computation(e) => e,
        }
    }
}

fn validation<T>(result: fpsoft::Result<T>) -> Result<T, Failure> {
    result.map_err(Failure::Validation)
}

fn computation<T>(result: fpsoft::Result<T>) -> Result<T, Failure> {
    result.map_err(Failure::Computation)
}

fn load(path: &PathBuf) -> Result<Model, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Failure::Validation(Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    })?;
    validation(parse_document(&text))
}

fn parse_grade_arg(name: &str, text: &str) -> Result<MembershipValue, Failure> {
    text.parse::<f64>()
        .ok()
        .and_then(|v| MembershipValue::new(v).ok())
        .ok_or_else(|| {
            Failure::Validation(Error::InvalidGrade {
                parameter: name.to_string(),
                text: text.to_string(),
            })
        })
}

fn parse_norm_arg(text: &str) -> Result<NormKind, Failure> {
    validation(text.parse())
}

fn emit_relation(
    model: &Model,
    left: &str,
    right: &str,
    norm: NormKind,
    relation: &FPSoftRelation,
    format: Format,
) {
    match format {
        Format::Text => print!("{}", render::relation_text(relation)),
        Format::Machine => {
            let doc = relation_result_document(model, left, right, norm, relation, "result");
            print!("{}", to_json(&doc));
        }
    }
}

const ALL_PROPERTIES: [&str; 5] =
    ["symmetric", "transitive", "reflexive", "serial", "equivalence"];

fn check_property(relation: &FPSoftRelation, property: &str) -> Result<bool, Failure> {
    let result = match property {
        "symmetric" => relation.is_symmetric(),
        "transitive" => relation.is_transitive(),
        "reflexive" => relation.is_reflexive(),
        "serial" => relation.is_serial(),
        "equivalence" => relation.is_equivalence(),
        other => {
            return Err(Failure::Validation(Error::Unresolved {
                kind: "property",
                name: other.to_string(),
            }))
        }
    };
    computation(result)
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Product {
            common,
            left,
            right,
            norm,
        } => {
            let model = load(&common.input)?;
            let norm = parse_norm_arg(&norm)?;
            let a = validation(model.soft_set(&left).cloned())?;
            let b = validation(model.soft_set(&right).cloned())?;
            let product = computation(cartesian_product(&a, &b, norm))?;
            emit_relation(&model, &left, &right, norm, &product, common.format);
        }
        Command::Restrict {
            common,
            relation,
            threshold,
            policy,
        } => {
            let model = load(&common.input)?;
            let threshold = parse_grade_arg("threshold", &threshold)?;
            let named = validation(model.relation(&relation).cloned())?;
            let result = named
                .relation
                .restrict_by_threshold(threshold, policy.into());
            emit_relation(
                &model,
                &named.left,
                &named.right,
                named.norm,
                &result,
                common.format,
            );
        }
        Command::Invert { common, relation } => {
            let model = load(&common.input)?;
            let named = validation(model.relation(&relation).cloned())?;
            let result = named.relation.inverse();
            emit_relation(
                &model,
                &named.right,
                &named.left,
                named.norm,
                &result,
                common.format,
            );
        }
        Command::Compose {
            common,
            first,
            second,
            norm,
            policy,
        } => {
            let model = load(&common.input)?;
            let norm = parse_norm_arg(&norm)?;
            let NamedRelation {
                left, relation: r1, ..
            } = validation(model.relation(&first).cloned())?;
            let NamedRelation {
                right, relation: r2, ..
            } = validation(model.relation(&second).cloned())?;
            let result = computation(r1.compose(&r2, norm, policy.into()))?;
            emit_relation(&model, &left, &right, norm, &result, common.format);
        }
        Command::Check {
            common,
            relation,
            properties,
        } => {
            let model = load(&common.input)?;
            let named = validation(model.relation(&relation))?;
            let requested: Vec<String> = if properties.is_empty() {
                ALL_PROPERTIES.iter().map(|s| s.to_string()).collect()
            } else {
                properties
            };
            let mut results = IndexMap::new();
            for property in &requested {
                let value = check_property(&named.relation, property)?;
                results.insert(property.clone(), value);
            }
            match common.format {
                Format::Text => {
                    for (property, value) in &results {
                        println!("{property}: {value}");
                    }
                }
                Format::Machine => {
                    let doc = CheckDoc {
                        relation: relation.clone(),
                        results,
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
        }
        Command::Classes { common, relation } => {
            let model = load(&common.input)?;
            let named = validation(model.relation(&relation))?;
            let base = named.relation.left();
            let mut classes = Vec::new();
            let mut covered = std::collections::BTreeSet::new();
            for p in base.support() {
                if covered.contains(&p) {
                    continue;
                }
                let members = computation(named.relation.equivalence_class(p))?;
                for member in &members {
                    covered.insert(member.parameter);
                }
                classes.push((p, members));
            }
            match common.format {
                Format::Text => {
                    for (p, members) in &classes {
                        println!("class of {}:", base.space().name(*p));
                        print!("{}", render::elements_text(base, members));
                    }
                }
                Format::Machine => {
                    let doc = ClassesDoc {
                        classes: classes
                            .iter()
                            .map(|(p, members)| ClassDoc {
                                parameter: base.space().name(*p).to_string(),
                                members: members
                                    .iter()
                                    .map(|m| ElementDoc::from_element(base, m))
                                    .collect(),
                            })
                            .collect(),
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
        }
        Command::Decide {
            common,
            set,
            threshold,
            norm,
            policy,
        } => {
            let model = load(&common.input)?;
            let threshold = parse_grade_arg("threshold", &threshold)?;
            let norm = parse_norm_arg(&norm)?;
            let base = validation(model.soft_set(&set).cloned())?;
            let config = DecisionConfig {
                threshold,
                norm,
                policy: policy.into(),
            };
            let ranking = computation(decide(&base, &config))?;
            match common.format {
                Format::Text => print!("{}", render::ranking_text(&ranking)),
                Format::Machine => {
                    let doc = RankingDoc::from_ranking(&ranking);
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
        }
        Command::NormEval { kind, a, b, format } => {
            let norm = parse_norm_arg(&kind)?;
            let a = parse_grade_arg("a", &a)?;
            let b = parse_grade_arg("b", &b)?;
            let value = computation(if norm.is_t_norm() {
                t_norm(norm, a, b)
            } else {
                s_norm(norm, a, b)
            })?;
            match format {
                Format::Text => println!("{}", render::truncate3(value.value())),
                Format::Machine => println!("{}", value.value()),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful exits; everything
            // else is a usage error (64), not clap's default 2.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            if code == 0 {
                print!("{e}");
            } else {
                eprint!("{e}");
            }
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.error());
            ExitCode::from(failure.code())
        }
    }
}
