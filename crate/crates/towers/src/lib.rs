//! Towers `H̄_n ⊂ B̄r_n(N)`: Bratteli diagrams, inclusion (principal) graphs and the index.

pub mod bratteli;
pub mod dynkin;
pub mod graph;
pub mod index;
pub mod stabilize;

pub use bratteli::{build_bratteli, BratteliDiagram};
pub use dynkin::{dynkin_a, dynkin_d, norm_squared};
pub use graph::{
    bipartite_isomorphic, inclusion_graph, inclusion_graph_with, isomorphic_to, local_index, local_indices, pf_consistency,
    InclusionGraph, JsonGraph, Side, Vertex,
};
pub use index::{
    asymptotics_probe, dim_p, index_closed_form, index_ratio, index_report, p_weights, AsymptoticsProbe,
    IndexReport,
};
pub use stabilize::{stabilize, stabilize_with, DEFAULT_N_CAP};
