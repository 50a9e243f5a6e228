//! Monomial ideals through their monomial tropical polyhedra.
//!
//! An ideal I = <x^u> corresponds to V_I, where each exponent vector u is sent
//! to ũ with zero entries replaced by -inf. The support of I is the set of
//! lattice points of M(V_I). Irreducible components are the principal apices,
//! and the LCM-lattice is the +inf-free part of the max-lattice.

pub mod betti;
pub mod duality;
pub mod generic;
pub mod ideal;

pub use betti::{betti_numbers, betti_poset, lcm_lattice, syzygy_poset, BettiMethod, BettiTable, LCM_BOUND};
pub use duality::{alexander_dual, in_component, irreducible_decomposition, setminus};
pub use generic::{
    genericity, ideal_genericity, is_generic, is_strongly_generic, is_tropically_generic, Genericity, MINOR_BUDGET,
};
pub use ideal::{
    divides, exponent_to_point, ideal_from_polyhedron, lcm, monomial_string, point_to_exponent,
    polyhedron_from_ideal, strictly_divides, Exponent, MonomialIdeal,
};
