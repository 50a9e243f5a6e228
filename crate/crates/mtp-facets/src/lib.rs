//! Facet-apices of monomial tropical polyhedra, the vertex-facet incidence
//! graph, and the complementary min-polyhedron.
//!
//! Apices come from a candidate scan: each coordinate ranges over the finite
//! generator values of its axis and +inf. Local upper bound algorithms from
//! multicriteria search enumerate the same set faster; the scan is kept for
//! its directness at small sizes.

pub mod apices;
pub mod complement;
pub mod incidence;

pub use apices::{apex_set, is_principal_apex, principal_apices, ApexSet};
pub use complement::{
    check_vertex_char, complementary_polyhedron, double_complement, linear_functional_minimizers, phi,
    Complement,
};
pub use incidence::{build_incidence, incidence_graph, incident, point_incident, FBar, IncidenceGraph, VBar};
