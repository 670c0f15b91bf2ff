//! Mixed degrees and heights of multiprojective cycles, Gröbner elimination,
//! resultants, Nullstellensatz certificates and the bound formulas that go
//! with them.

pub mod poly;

pub use poly::{CoeffDomain, GroupKind, Ideal, MPoly, PolyError, VarGroup, VarSpec};
pub mod elim;
pub mod hilbert;
pub mod measures;
pub mod chowring;
pub mod resultants;
pub mod nullcert;
pub mod bounds;
