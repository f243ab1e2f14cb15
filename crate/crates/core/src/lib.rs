//! Exact computation of hit subspaces, spike-square kernels and their quotient
//! over the subalgebras A(0) and A(1) of the mod 2 Steenrod algebra.

pub mod a1;
pub mod error;
pub mod gf2;
pub mod hit;
pub mod poly;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use gf2::{BitRow, GF2Matrix, Subspace};
pub use poly::{Monomial, PolyElement, PolyModule};
