use serde::Serialize;

/// Resource budgets shared by the constructions. Exceeding one yields
/// [`crate::Error::Resource`] or [`crate::Error::WordTooLong`], never a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Longest word accepted by the braid-closure word problem.
    pub word_len: usize,
    /// Largest spherical subgroup that will be enumerated.
    pub group_order: u64,
    /// Largest nerve accepted by the automorphism search.
    pub aut_vertices: usize,
    /// Largest wreath group whose elements will be materialized.
    pub wreath_elements: u64,
    /// Coset-enumeration work cap.
    pub deductions: usize,
    /// Largest group stored with a dense multiplication table.
    pub dense_table: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            word_len: 16,
            group_order: 1_000_000,
            aut_vertices: 64,
            wreath_elements: 1_000_000,
            deductions: 10_000_000,
            dense_table: 4096,
        }
    }
}
