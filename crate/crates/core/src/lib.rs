//! Exact engine for the affine Temperley-Lieb category at `q = 1` and its
//! quotient by the essential circle.

pub mod canon;
pub mod cheb;
pub mod diagram;
pub mod error;
pub mod planar;
pub mod projectors;
pub mod rep;
pub mod scalar;
pub mod verify;

pub use diagram::{AnnularDiagram, Mode, Morphism, Point};
pub use error::{AtlError, Result};
pub use scalar::GaussianRational;
