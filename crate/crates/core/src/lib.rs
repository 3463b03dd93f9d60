//! Chamber complexes, complexes of groups and wreath-product lattices built
//! from Coxeter systems, with exhaustive axiom checking and exact covolumes.

pub mod action;
pub mod bounds;
pub mod cog;
pub mod coxeter;
pub mod davis;
pub mod error;
pub mod nerve;

pub use bounds::Bounds;
pub use error::{Error, ParseError, Result};
