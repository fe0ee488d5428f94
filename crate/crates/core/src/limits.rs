use serde::{Deserialize, Serialize};

/// Size caps shared by the exhaustive routines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Largest `N^max(k, l)` for which a matrix `T_p` is built.
    pub max_rows: usize,
    /// Largest point count a generated category is closed up to.
    pub max_closure_points: usize,
    /// Largest `k + l` for exhaustive enumeration of `C(k, l)`.
    pub max_enumeration_points: usize,
    /// Largest `t` for which permutations of through-blocks are searched.
    pub max_sym_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rows: 4096,
            max_closure_points: 10,
            max_enumeration_points: 10,
            max_sym_degree: 8,
        }
    }
}
