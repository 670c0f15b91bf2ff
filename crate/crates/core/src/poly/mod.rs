//! Sparse exact polynomials over ℤ or ℚ with grouped variables.

mod display;
mod gcd;
mod modp;
mod mpoly;
mod parse;
mod varspec;

use thiserror::Error;

pub use gcd::{gcd, lcm, sort_grlex_desc, squarefree_part};
pub use mpoly::{grlex_cmp, mp_add, mp_mul, CoeffDomain, MPoly, Multidegree};
pub use parse::{parse_poly, ParseError, MAX_EXPONENT};
pub use varspec::{GroupKind, VarGroup, VarSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("invalid variable specification: {0}")]
    InvalidSpec(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials belong to different variable specifications")]
    SpecMismatch,
    #[error("coefficient domains differ or integer coefficients were required")]
    DomainMismatch,
    #[error("non-integral coefficient in an integer polynomial")]
    NonIntegral,
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// A list of generators sharing one variable specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    spec: std::sync::Arc<VarSpec>,
    gens: Vec<MPoly>,
}

impl Ideal {
    pub fn new(spec: &std::sync::Arc<VarSpec>, gens: Vec<MPoly>) -> Result<Ideal, PolyError> {
        if gens.iter().any(|g| g.spec() != spec) {
            return Err(PolyError::SpecMismatch);
        }
        Ok(Ideal { spec: spec.clone(), gens })
    }

    pub fn zero(spec: &std::sync::Arc<VarSpec>) -> Ideal {
        Ideal { spec: spec.clone(), gens: Vec::new() }
    }

    pub fn spec(&self) -> &std::sync::Arc<VarSpec> {
        &self.spec
    }

    pub fn gens(&self) -> &[MPoly] {
        &self.gens
    }

    /// Nonzero generators only.
    pub fn nonzero_gens(&self) -> Vec<MPoly> {
        self.gens.iter().filter(|g| !g.is_zero()).cloned().collect()
    }

    pub fn with_gens(&self, extra: impl IntoIterator<Item = MPoly>) -> Result<Ideal, PolyError> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.spec, gens)
    }

    /// Multidegrees of all generators, failing on the first inhomogeneous one.
    pub fn check_multihomogeneous(&self) -> Option<Vec<Multidegree>> {
        self.gens.iter().map(|g| g.is_multihomogeneous()).collect()
    }

    pub fn embed(&self, target: &std::sync::Arc<VarSpec>) -> Result<Ideal, PolyError> {
        let gens = self.gens.iter().map(|g| g.embed(target)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }
}
