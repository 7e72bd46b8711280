//! Exact computations with totally ordered BL-algebras and basic hoops.
//!
//! Chains are finite ordinal sums of Wajsberg components drawn from a small
//! set of representable kinds: the finite Łukasiewicz chains `W_k`, the
//! Chang-style chains `W_{k,ω}`, the cancellative hoop `Z` and the standard
//! unit interval. On top of the element model the crate provides
//! decomposition of raw operation tables, embeddings and filters, amalgam
//! search, the class nomenclature with its membership engine, the
//! amalgamation-property classifiers and interpolant search.

pub mod algebra;
pub mod amalgamation;
pub mod classifier;
pub mod cli;
pub mod constructions;
pub mod dsl;
pub mod error;
pub mod laws;
pub mod logic;
pub mod morphisms;
pub mod raw;
pub mod structure;
pub mod varieties;

pub use algebra::{Caps, Chain, ComponentKind, Element, LocalValue, Op};
pub use error::{Error, Result};
pub use raw::RawChain;

/// Version tag written into every JSON document produced by the crate.
pub const SCHEMA: &str = "blcalc/1";
