//! Simplicial complexes of monomial tropical polyhedra and their reduced
//! homology over the rationals or a prime field.
//!
//! The facet complex has the vertex sets of all facets (boundary facets and
//! the far face included) as maximal faces. Its ray-free part is the bounded
//! complex. Koszul complexes Δ_p and Scarf complexes come from covector graphs
//! and subset maxima respectively.

pub mod build;
pub mod complex;
pub mod homology;

pub use build::{
    bounded_complex, bounded_part, crosscut_complex, facet_complex, facet_complex_of, is_syzygy_point,
    koszul_complex, koszul_complex_at, order_complex, order_complex_between, scarf_complex, sphere_check, top_crosscut_complex,
    SCARF_BOUND,
};
pub use complex::{SimplicialComplex, FACE_BUDGET};
pub use homology::{rank, reduced_homology, Field, HomologyProfile};
