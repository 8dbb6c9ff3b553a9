//! Builders for metric Lie n-algebras and double extensions.

pub mod basic;
pub mod dext;
pub mod extract;
pub mod representation;

pub use basic::{build_abelian, build_simple, cayley, direct_sum, parse_signs, random_isometry};
pub use dext::{
    double_extend_1d, double_extend_general, one_dim_as_general, GeneralDoubleExtensionData,
    OneDimDoubleExtensionData,
};
pub use extract::{extract_double_extension, extract_with_search, ExtractedData, Extraction};
pub use representation::{
    adjoint_representation, build_coadjoint, build_coadjoint_metric,
    build_representation_extension, coadjoint_representation, pairing_metric, RepresentationData,
};
