//! Root systems, Weyl groups, inversion arrangements, and freeness of
//! hyperplane arrangements.

pub mod error;
pub mod freeness;
pub mod inversion;
pub mod arrangement;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod rootsys;
pub mod smoothness;
pub mod weyl;

pub use error::{Error, Result};
