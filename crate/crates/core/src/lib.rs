//! Linguistic truth-valued concept lattices.
//!
//! Fuzzy formal contexts valued in lattice implication algebras, their
//! concept lattices, and the mining of tacit attributes: extra attributes
//! that leave the concept lattice unchanged.

pub mod context;
pub mod galois;
pub mod lia;
pub mod tacit;

pub use context::{
    extend_context, load_context, parse_context, restrict_agrees, serialize_context,
    AttributeProvenance, ContextError, ExtensionConfig, FuzzyContext,
};
pub use galois::{
    closure_extent, closure_intent, derive_extent, derive_intent, enumerate_concepts, export_dot,
    export_json, Concept, ConceptLattice, Domain, Engine, FuzzySet, GaloisError, ScanOptions, Side,
};
pub use lia::{check_axioms, Algebra, Lia, LiaError, LinguisticLabel, TruthValue};
pub use tacit::{
    classify_columns, extend_concepts_fast, is_congener, mine, CongenerReport, MiningReport,
    TacitError, TheoremCheck, TheoremKind,
};
