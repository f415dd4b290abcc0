//! Fuzzy-parametrized soft sets over a finite object universe.
//!
//! An FP-soft set attaches to each parameter of a parameter space a fuzzy
//! importance grade together with an approximate subset of the universe.
//! This crate provides:
//!
//! - the catalog of the twelve classical non-parametrized t-norms and
//!   t-conorms ([`norms`]),
//! - FP-soft sets and their subset order ([`sets`]),
//! - cartesian products, FP-soft relations and their algebra: inverse,
//!   sup-t composition, symmetry/transitivity/reflexivity predicates and
//!   equivalence classes ([`relations`]),
//! - a fuzzification operator that turns a relation on an FP-soft set into
//!   a fuzzy ranking of the universe, and the decision method built on it
//!   ([`decision`]),
//! - a JSON problem-document format and the models behind the `fpsoft`
//!   command-line tool ([`document`], [`render`]).

pub mod decision;
pub mod document;
pub mod error;
pub mod norms;
pub mod relations;
pub mod render;
pub mod sets;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
