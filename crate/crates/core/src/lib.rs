//! Exact computations for towers of Bott orbifolds built by iterated joins,
//! constant scalar curvature Sasaki ray counts, and searches for smooth
//! Sasaki-Einstein families.

pub mod bott;
pub mod cscs;
pub mod error;
pub mod exactmath;
pub mod join;
pub mod search;
pub mod serde_util;
pub mod topology;

pub use error::{Error, Result};
