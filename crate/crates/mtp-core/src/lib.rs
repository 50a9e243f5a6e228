//! Exact extended arithmetic over {-inf} ∪ Q ∪ {+inf}, generator sets of
//! monomial tropical polyhedra, affine sectors and covector graphs.

pub mod bipartite;
pub mod bits;
pub mod covector;
pub mod error;
pub mod ext;
pub mod generators;
pub mod point;
pub mod rank;
pub mod sector;

pub use bipartite::Bipartite;
pub use covector::{covector, is_pseudovertex, CovectorGraph};
pub use error::{Error, Result};
pub use ext::{Ext, Rational};
pub use generators::GeneratorSet;
pub use point::Point;
pub use sector::{sector_member, Kind};
