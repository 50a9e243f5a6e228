//! Order patterns, deformations and the decomposition of tropical polyhedra
//! into monomial pieces.
//!
//! A deformation shifts each generator by a vector ε^(j) while keeping every
//! strict coordinate comparison. Pattern types record which generators pin each
//! coordinate of a facet-apex and depend only on the order pattern. A tropical
//! polyhedron tconv(V) ⊕ tcone(W) equals the intersection of its d+1 monomial
//! polyhedra; membership is decided by the tropical Farkas lemma.

pub mod deform;
pub mod pattern;
pub mod polyhedron;

pub use deform::{
    apply_deformation, deformation_subcomplex_check, is_valid_deformation, strong_generification, zero_perturbation,
    Perturbation,
};
pub use pattern::{apex_from_pattern, order_pattern, pattern_type, OrderPattern};
pub use polyhedron::{
    decomposition_check, in_sector_union, ith_monomial_polyhedron, membership, sample_grid, TropicalPolyhedron,
};
