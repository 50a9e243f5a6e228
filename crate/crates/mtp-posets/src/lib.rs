//! Face posets of monomial tropical polyhedra: vertex-facet lattice,
//! max- and min-lattices, max-min poset, CP-order, Scarf poset and
//! pseudovertex poset, with closure lattices and Dedekind-MacNeille completion.

pub mod closure;
pub mod poset;
pub mod pseudo;
pub mod tower;

pub use closure::{
    affine_part, closed_sets, closure_lattice, completion_matches, dedekind_macneille, max_of_label, vertex_facet_lattice,
    vertex_facet_lattice_of, Completion,
};
pub use poset::{find_isomorphism, poset_compare, CompareOpts, Comparison, Element, Poset};
pub use pseudo::{grid_box, grid_cells, pseudovertex_points, pseudovertex_poset, GridOptions};
pub use tower::{
    cp_order, is_apex_covector, is_characteristic, is_scarf_point, label_mask, label_subset, max_label, max_lattice,
    max_min_poset,
    min_label, min_lattice, scarf_poset,
};
