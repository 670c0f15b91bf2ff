//! Manifest-driven front end for the `multiheight` library.

pub mod error;
pub mod fixtures;
pub mod manifest;
pub mod report;
pub mod run;
