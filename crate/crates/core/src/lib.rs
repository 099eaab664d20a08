//! Exact universal hyperbolic geometry over fields of characteristic other
//! than two, with an executable registry of its theorems.

pub mod constructions;
pub mod field;
pub mod metric;
pub mod nullkernel;
pub mod projective;
pub mod trig;
pub mod verifier;

pub use field::{make_field, Field, FieldError, FieldSpec, Scalar};
pub use metric::MetricValue;
pub use projective::{GeomError, Line, Point, Proportion2};
