//! Ideal-theoretic analysis of (metric) Lie n-algebras.

pub mod decompose;
pub mod forms;
pub mod ideals;
pub mod search;

pub use decompose::{
    classify_indecomposable, decompose, quotient_algebra, restrict_to_ideal, simplicity_fingerprint,
    subquotient_metric, DecompositionResult, DoubleExtensionShape, IndecomposableKind,
    SimplicityFingerprint, Subquotient,
};
pub use forms::invariant_forms;
pub use ideals::{
    brackets_of, center, centralizer, derived_ideal, derived_series, ideal_closure, is_ideal,
    is_solvable, is_subalgebra, AdGenerators, IdealFlags, IdealHandle,
};
pub use search::{classify_minimal, minimal_ideal_search, MinimalKind, SearchContext};
