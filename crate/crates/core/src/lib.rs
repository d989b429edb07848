//! Weierstrass semigroups of cyclic (r,s) curves, the Young-diagram
//! stratification they induce, and exact Schur-level certification of the
//! derivative-vanishing pattern on each stratum.

pub mod certify;
pub mod error;
pub mod numerics;
pub mod partition;
pub mod poly;
pub mod schur;
pub mod semigroup;

pub use error::{Error, Result};
