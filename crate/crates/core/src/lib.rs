//! Hypercube drawings of graphs and antimagic injections.
//!
//! A *hypercube drawing* places the vertices of a graph at distinct corners
//! of `{0,1}^d` so that no two straight edges cross; two edges cross exactly
//! when their endpoint sums coincide. An *antimagic injection* labels the
//! vertices with distinct positive integers so that all edge sums differ.
//! The two notions convert into each other, and both connect to Sidon sets.
//!
//! ```
//! use hcube_core::{generate, greedy_degen_label, from_antimagic, verify_drawing, GraphKind};
//!
//! let g = generate(GraphKind::Complete { n: 5 }).unwrap();
//! let f = greedy_degen_label(&g).unwrap();
//! let drawing = from_antimagic(&g, &f).unwrap();
//! assert!(verify_drawing(&g, &drawing).unwrap());
//! ```

pub mod antimagic;
pub mod bounds;
pub mod error;
pub mod graph;
pub mod hypercube;
pub mod io;
pub mod oracle;
pub mod sidon;

pub use antimagic::{
    bandwidth_label, check_track_injection, find_sum_collision, greedy_degen_label, mag_lower_bound, path_power_label,
    queue_label, technical_combine, verify_antimagic, Labelling, SumCollision, TrackInjection,
};
pub use bounds::{bounds_report, Bound, BoundSource, BoundsOptions, BoundsReport, ExactBound};
pub use error::{Error, Result};
pub use graph::{
    degeneracy_ordering, find_nested_pair, find_one_queue_layout, generate, is_one_queue_ordering, DegeneracyResult,
    Edge, Graph, GraphKind, Vertex, VertexOrdering,
};
pub use hypercube::{
    crossing_probability_exact, edges_cross, find_drawing_violation, from_antimagic, is_kn_point_set, lll_dimension,
    lll_draw, max_edges, to_antimagic, verify_drawing, vol_lower_bound, BitPoint, CrossingProbability,
    DrawingViolation, HypercubeDrawing, LllDrawing, LllParameters,
};
pub use io::Bundle;
pub use oracle::{exact_mag, exact_vol, max_drawing_edges_exhaustive, segment_cross_exact, ExactResult, Outcome};
pub use sidon::{
    erdos_turan_sidon, is_prime, is_sidon, is_weak_sidon, singer_sidon, smallest_prime_at_least, SidonSet,
};
