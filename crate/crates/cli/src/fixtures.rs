//! Built-in worked examples, each with its expected outputs.

use crate::manifest::{Job, Manifest};

pub const GOLDEN: &str = include_str!("../fixtures/golden.json");

pub fn fixtures() -> Vec<Job> {
    Manifest::from_json(GOLDEN).expect("built-in fixtures parse").jobs
}
