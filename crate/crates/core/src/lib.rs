//! Odd Ferrers graphs and the partition families `P_omega` and `P_nu`.
//!
//! The crate provides exact truncated q-series over `Z[y^±1, z^±1]`, a
//! registry of mock theta identities checked coefficient by coefficient,
//! brute-force enumeration of the combinatorial objects behind each
//! generating function, and the explicit bijections from `P_omega` and
//! `P_nu` onto odd Ferrers graphs.

pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod identities;
pub mod laurent;
pub mod mock_theta;
pub mod odd_ferrers;
pub mod operators;
pub mod partition;
pub mod series;

pub use bijections::{MapFamily, SweepReport};
pub use error::{Error, Result};
pub use exec::Exec;
pub use laurent::LaurentPoly;
pub use odd_ferrers::OddFerrersGraph;
pub use partition::{FrobeniusSymbol, Partition};
pub use series::{LaurentSeries, Monomial};
