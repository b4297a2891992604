//! Complexity guards. Defaults can be overridden per process through
//! environment variables (read once, on first use) or [`set_guards`].

use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Edges allowed in an Eulerian subgraph count.
    pub count_max_edges: usize,
    /// Edges allowed in an orientation search.
    pub search_max_edges: usize,
    /// Edges and vertices allowed in the polynomial expansion.
    pub coeff_max_edges: usize,
    pub coeff_max_vertices: usize,
    /// Vertices allowed in a list-colouring search.
    pub coloring_max_vertices: usize,
    /// Vertices and total list size allowed in the choosability search.
    pub choose_max_vertices: usize,
    pub choose_max_palette: usize,
    /// Vertices allowed in the paint game.
    pub paint_max_vertices: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            count_max_edges: 30,
            search_max_edges: 24,
            coeff_max_edges: 24,
            coeff_max_vertices: 10,
            coloring_max_vertices: 12,
            choose_max_vertices: 7,
            choose_max_palette: 24,
            paint_max_vertices: 8,
        }
    }
}

pub const ENV_VARS: [&str; 8] = [
    "AT_GUARD_COUNT_EDGES",
    "AT_GUARD_SEARCH_EDGES",
    "AT_GUARD_COEFF_EDGES",
    "AT_GUARD_COEFF_VERTICES",
    "AT_GUARD_COLORING_VERTICES",
    "AT_GUARD_CHOOSE_VERTICES",
    "AT_GUARD_CHOOSE_PALETTE",
    "AT_GUARD_PAINT_VERTICES",
];

impl Guards {
    /// Defaults with any `AT_GUARD_*` overrides applied. Unparsable values are ignored.
    pub fn from_env() -> Self {
        let mut g = Guards::default();
        let fields: [&mut usize; 8] = [
            &mut g.count_max_edges,
            &mut g.search_max_edges,
            &mut g.coeff_max_edges,
            &mut g.coeff_max_vertices,
            &mut g.coloring_max_vertices,
            &mut g.choose_max_vertices,
            &mut g.choose_max_palette,
            &mut g.paint_max_vertices,
        ];
        for (name, field) in ENV_VARS.iter().zip(fields) {
            if let Some(v) = std::env::var(name).ok().and_then(|s| s.trim().parse().ok()) {
                *field = v;
            }
        }
        g
    }
}

fn cell() -> &'static RwLock<Guards> {
    static GUARDS: OnceLock<RwLock<Guards>> = OnceLock::new();
    GUARDS.get_or_init(|| RwLock::new(Guards::from_env()))
}

pub fn guards() -> Guards {
    *cell().read().unwrap()
}

pub fn set_guards(g: Guards) {
    *cell().write().unwrap() = g;
}
