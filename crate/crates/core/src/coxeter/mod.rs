//! Coxeter systems: parsing, the word problem, finite-type detection,
//! enumeration of spherical special subgroups and halvability.

pub mod cache;
pub mod group;
pub mod halving;
pub mod spherical;
pub mod system;
pub mod todd_coxeter;
pub mod word;

pub use cache::{HalfGroup, SpecialGroups};
pub use group::{left_cosets, subgroup_cosets, FiniteGroupTable, Subgroup};
pub use halving::halving;
pub use spherical::{is_spherical, spherical_order, Component, FiniteType, SphericalSubset};
pub use system::{CoxeterSystem, GenSet, Label};
pub use todd_coxeter::enumerate_group;
pub use word::{word_length, word_reduce, words_equal, Word};

/// Parses the line-oriented system format.
pub fn parse_system(text: &str) -> Result<CoxeterSystem, crate::ParseError> {
    CoxeterSystem::parse(text)
}
