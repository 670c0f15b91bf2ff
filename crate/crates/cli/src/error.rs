use thiserror::Error;

/// Input errors map to exit status 2, computation errors to 1.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum JobError {
    #[error("input error: {0}")]
    Input(String),
    #[error("computation error [{module}]: {message}")]
    Compute { module: &'static str, message: String },
}

impl JobError {
    pub fn compute(module: &'static str, e: impl std::fmt::Display) -> JobError {
        JobError::Compute { module, message: e.to_string() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Input(_) => 2,
            JobError::Compute { .. } => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            JobError::Input(_) => "input",
            JobError::Compute { .. } => "computation",
        }
    }
}

macro_rules! compute_from {
    ($ty:ty, $module:literal) => {
        impl From<$ty> for JobError {
            fn from(e: $ty) -> JobError {
                JobError::compute($module, e)
            }
        }
    };
}

compute_from!(multiheight::nullcert::NullError, "nullcert");
compute_from!(multiheight::elim::ElimError, "elim");
compute_from!(multiheight::hilbert::HilbertError, "hilbert");
compute_from!(multiheight::resultants::ResultantError, "resultants");
compute_from!(multiheight::bounds::BoundError, "bounds");
compute_from!(multiheight::measures::MeasureError, "measures");

impl From<multiheight::poly::PolyError> for JobError {
    fn from(e: multiheight::poly::PolyError) -> JobError {
        JobError::compute("polycore", e)
    }
}
