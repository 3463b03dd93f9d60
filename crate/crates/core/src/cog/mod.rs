//! Scwols, complexes of groups, their morphisms and coverings, group actions
//! and the complex of groups induced on a quotient.

pub mod action;
pub mod complex;
pub mod induced;
pub mod morphism;
pub mod report;
pub mod scwol;

pub use action::{
    extend_action_to_cog, quotient_scwol, subdivide_action, subdivide_cog_action, validate_action, validate_cog_action, CogAction,
    QuotientScwol, ScwolAction,
};
pub use complex::{has_trivial_type0_groups, subdivide_cog, validate_cog, ComplexOfGroups};
pub use induced::{canonical_morphism_to_group, induce_quotient_cog, InducedQuotient, InducedQuotientData, LiftPolicy};
pub use morphism::{
    validate_covering, validate_morphism, validate_morphism_to_group, CogMorphism, MorphismToGroup,
};
pub use report::{Report, Violation};
pub use scwol::{subdivide, validate_scwol, Scwol, Subdivision};
