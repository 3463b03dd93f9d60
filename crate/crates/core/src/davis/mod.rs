//! Chambers, the complexes `Y_n` and their complexes of groups.

pub mod chamber;
pub mod groups;

pub use chamber::{
    alpha_of, build_chamber, build_yn, chamber_ids, check_structure, subcomplex_isos, verify_disjointness, w_word,
    ChamberComplex, ChamberId, DisjointnessReport, SubcomplexIso, VertexInfo,
};
pub use groups::{build_covering_to_gy1, build_gyn, EdgeMap, GYn, LocalGroup};
