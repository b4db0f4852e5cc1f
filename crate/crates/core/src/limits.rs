use crate::autosearch::DEFAULT_MAX_VERTICES;
use crate::cayley::DEFAULT_MAX_N;
use crate::permgroup::DEFAULT_ENUMERATION_CAP;

/// Size caps and execution switches shared by the analyses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which `Cay(S_n, S)` is built.
    pub max_n: usize,
    /// Largest `n` for which the full automorphism group of the Cayley graph is searched.
    pub full_aut_max_n: usize,
    /// Vertex cap for the automorphism search.
    pub max_search_vertices: usize,
    /// Cap on element enumeration for exponents and intersections.
    pub enumeration_cap: usize,
    pub skip_full_aut: bool,
    /// Run per-pair checks on the rayon pool. Results do not depend on it.
    pub parallel: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            full_aut_max_n: 6,
            max_search_vertices: DEFAULT_MAX_VERTICES,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            skip_full_aut: false,
            parallel: false,
        }
    }
}
