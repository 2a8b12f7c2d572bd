#![allow(clippy::needless_range_loop)]

pub mod calculus;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod free_algebra;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
