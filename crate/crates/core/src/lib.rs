//! Combinatorics of reflection factorizations in the complex reflection
//! groups G(m,p,n).

pub mod arith;
pub mod error;
pub mod factor;
pub mod graphset;
pub mod hurwitz;
pub mod lengths;
pub mod pqc;
pub mod table;
pub mod weyl;
pub mod wreath;

pub use error::{Error, Result};
pub use wreath::{Element, GroupParams, Reflection};
