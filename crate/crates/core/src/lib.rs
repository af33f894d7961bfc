//! Exact point counting and plane-section analysis for surfaces in `P^3`
//! over small finite fields.

pub mod altform;
pub mod audit;
pub mod catalog;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod projgeom;
pub mod sections;

pub use error::{Error, Result};
pub use gf::{Budget, FieldCtx, FieldElement};
