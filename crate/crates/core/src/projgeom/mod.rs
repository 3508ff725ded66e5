//! Projective maps, implicitization, duality, the quadratic Cremona map,
//! pencils of conics and the class formula.

pub mod class;
pub mod cremona;
pub mod dual;
pub mod implicit;
pub mod map;
pub mod pencil;

pub use class::class_of_curve;
pub use cremona::{cremona_sigma, Triangle};
pub use dual::{biduality_holds, dual_curve, dual_form, dual_implicit, dual_param};
pub use implicit::{implicitize, ImplicitCurve};
pub use map::{apply_map, ProjMap};
pub use pencil::{pencil_analysis, DegenerateMember, LambdaValue, MemberLines, Pencil};
