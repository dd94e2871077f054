//! Determinants of the irreducible representations of the finite
//! irreducible Coxeter groups, and closed formulas counting the
//! irreducibles with a given determinant.
//!
//! The symmetric-group layer ([`partition`], [`tower`], [`sn`]) feeds the
//! hyperoctahedral layer ([`typeb`]), which in turn feeds type `D` in
//! [`other`]. Every closed formula has a brute-force counterpart so the two
//! can be compared.

pub mod binmath;
pub mod error;
pub mod other;
pub mod partition;
pub mod report;
pub mod sn;
pub mod tower;
pub mod typeb;

pub use error::{Error, Result};
pub use partition::{Partition, SnDet};
pub use report::{CountReport, GroupTag, Method, MultChar};
pub use tower::{CoreQuotient, CoreTower, TowerPos};
pub use typeb::{Bipartition, MultCharB};
