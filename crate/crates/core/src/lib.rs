//! Exact construction and certification of rigid plane curves.
//!
//! The crate builds rational plane curves with prescribed singularities,
//! audits their singular points over exact fields, and checks projective
//! equivalence through explicit witnesses and separating invariants.

pub mod budget;
pub mod curvelocal;
pub mod error;
pub mod projgeom;
pub mod exactalg;
pub mod families;
pub mod rigidity;
pub mod wire;

pub use error::{Error, Result};
