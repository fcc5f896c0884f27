//! Random hypercube drawings by resampling.
//!
//! Every vertex gets an independent uniform corner of `{0,1}^d`. The bad
//! events are a pair of vertices sharing a corner and a pair of disjoint
//! edges sharing a midpoint; the dimension is chosen so that the local lemma
//! guarantees a placement avoiding all of them. Violated events are repaired
//! by redrawing the corners of their vertices until none remain.

use std::collections::HashMap;
use std::f64::consts::LOG2_E;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{corner_sum, HypercubeDrawing, MAX_DIMENSION};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Graph statistics and the dimension they dictate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LllParameters {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub dimension: u32,
    /// `4n + 1`, the reciprocal weight of a vertex-collision event.
    pub collision_weight_inv: u64,
    /// `4Δm + 1`, the reciprocal weight of a crossing event.
    pub crossing_weight_inv: u64,
}

impl LllParameters {
    pub fn new(n: usize, m: usize, max_degree: usize) -> Self {
        LllParameters {
            n,
            m,
            max_degree,
            dimension: lll_dimension(n, m, max_degree),
            collision_weight_inv: 4 * n as u64 + 1,
            crossing_weight_inv: 4 * (max_degree as u64) * (m as u64) + 1,
        }
    }
}

/// `⌈max{log₂(e(4n+1)), log_{8/3}(e²(4Δm+1))}⌉`.
pub fn lll_dimension(n: usize, m: usize, max_degree: usize) -> u32 {
    let collisions = LOG2_E + (4.0 * n as f64 + 1.0).log2();
    let crossings = (2.0 + (4.0 * max_degree as f64 * m as f64 + 1.0).ln()) / (8.0f64 / 3.0).ln();
    collisions.max(crossings).ceil() as u32
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LllDrawing {
    pub drawing: HypercubeDrawing,
    pub parameters: LllParameters,
    /// Times the resampling budget ran out and the dimension was raised.
    pub escalations: u32,
    /// Vertex redraws in the final dimension.
    pub resamplings: u64,
}

impl LllDrawing {
    pub fn escalated(&self) -> bool {
        self.escalations > 0
    }
}

/// Vertex redraws allowed per dimension before giving up on it.
fn resample_budget(n: usize, m: usize, dim: u32) -> u64 {
    64 * (n as u64 + (m as u64).pow(2)) * u64::from(dim)
}

enum BadEvent {
    Collision(Vertex, Vertex),
    Crossing(usize, usize),
}

/// Lowest-indexed violated event. Collision events `(v, w)`, `v < w`, come
/// first in lexicographic order, then crossing events `(i, j)`, `i < j`,
/// over edge indices. Crossings are only examined once the placement is
/// injective, and then every sum clash is between disjoint edges.
fn first_violation(g: &Graph, points: &[u64]) -> Option<BadEvent> {
    let mut at: HashMap<u64, (Vertex, Option<Vertex>)> = HashMap::with_capacity(points.len());
    for (v, &p) in points.iter().enumerate() {
        at.entry(p)
            .and_modify(|e| {
                e.1.get_or_insert(v);
            })
            .or_insert((v, None));
    }
    if let Some((v, w)) = at.values().filter_map(|&(v, w)| w.map(|w| (v, w))).min() {
        return Some(BadEvent::Collision(v, w));
    }
    let mut by_sum: HashMap<(u64, u64), (usize, Option<usize>)> = HashMap::with_capacity(g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        by_sum
            .entry(corner_sum(points[e.0], points[e.1]))
            .and_modify(|x| {
                x.1.get_or_insert(i);
            })
            .or_insert((i, None));
    }
    by_sum
        .values()
        .filter_map(|&(i, j)| j.map(|j| (i, j)))
        .min()
        .map(|(i, j)| BadEvent::Crossing(i, j))
}

/// Draws `g` in dimension [`lll_dimension`]`(n, m, Δ)`, resampling the
/// lowest violated event until the placement is a drawing. If the redraw
/// budget of `64(n + m²)d` is exhausted the dimension is raised by one and
/// the search restarts; this is recorded in `escalations`.
pub fn lll_draw(g: &Graph, seed: u64) -> Result<LllDrawing> {
    g.require_simple("hypercube drawing")?;
    let n = g.vertex_count();
    let parameters = LllParameters::new(n, g.edge_count(), g.max_degree());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dim = parameters.dimension;
    let mut escalations = 0;
    loop {
        if dim > MAX_DIMENSION {
            return Err(Error::DimensionOutOfRange {
                dim,
                max: MAX_DIMENSION,
            });
        }
        let mask = (1u64 << dim) - 1;
        let draw = |rng: &mut ChaCha8Rng| rng.random::<u64>() & mask;
        let mut points: Vec<u64> = (0..n).map(|_| draw(&mut rng)).collect();
        let budget = resample_budget(n, g.edge_count(), dim);
        let mut resamplings = 0u64;
        let done = loop {
            let mut vertices = match first_violation(g, &points) {
                None => break true,
                Some(BadEvent::Collision(v, w)) => vec![v, w],
                Some(BadEvent::Crossing(i, j)) => {
                    let (a, b) = (g.edges()[i], g.edges()[j]);
                    vec![a.0, a.1, b.0, b.1]
                }
            };
            if resamplings + vertices.len() as u64 > budget {
                break false;
            }
            vertices.sort_unstable();
            for v in vertices {
                points[v] = draw(&mut rng);
                resamplings += 1;
            }
        };
        if done {
            return Ok(LllDrawing {
                drawing: HypercubeDrawing::new(dim, points)?,
                parameters,
                escalations,
                resamplings,
            });
        }
        escalations += 1;
        dim += 1;
    }
}
