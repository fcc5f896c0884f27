//! Drawings of graphs on the corners of the unit hypercube `{0,1}^d`.
//!
//! Two open segments between hypercube corners meet only at a common
//! midpoint, so edges `vw` and `xy` cross exactly when the coordinatewise
//! sums `λ(v) + λ(w)` and `λ(x) + λ(y)` agree. Every check in this module
//! reduces to comparing such sums. A sum in `{0,1,2}^d` is stored as the
//! pair `(a & b, a ^ b)`: the coordinates equal to 2 and those equal to 1.

mod lll;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::antimagic::{verify_antimagic, Labelling};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub use lll::{lll_dimension, lll_draw, LllDrawing, LllParameters};

/// Largest supported dimension; points are packed into a `u64`.
pub const MAX_DIMENSION: u32 = 63;

/// Largest dimension whose corners still have a base-3 value that fits in `u64`.
pub const MAX_BASE3_DIMENSION: u32 = 40;

/// Largest dimension accepted by [`crossing_probability_exact`].
pub const MAX_ENUMERATION_DIMENSION: u32 = 5;

fn check_dimension(dim: u32, max: u32) -> Result<()> {
    if dim > max {
        Err(Error::DimensionOutOfRange { dim, max })
    } else {
        Ok(())
    }
}

/// Corner of `{0,1}^d`. Bit `j` of `bits` is coordinate `j`; the textual
/// form lists the most significant coordinate first, so it coincides with
/// the binary numeral of `bits`. The single corner of `{0,1}^0` is written
/// `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitPoint {
    bits: u64,
    dim: u32,
}

impl BitPoint {
    pub fn new(bits: u64, dim: u32) -> Result<Self> {
        check_dimension(dim, MAX_DIMENSION)?;
        if bits >> dim != 0 {
            return Err(Error::InvalidDrawing(format!(
                "value {bits} does not fit in {dim} bits"
            )));
        }
        Ok(BitPoint { bits, dim })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Coordinates, coordinate 0 first.
    pub fn coordinates(&self) -> Vec<u8> {
        (0..self.dim).map(|j| (self.bits >> j & 1) as u8).collect()
    }
}

impl fmt::Display for BitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 0 {
            return f.write_str("-");
        }
        for j in (0..self.dim).rev() {
            f.write_str(if self.bits >> j & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(BitPoint { bits: 0, dim: 0 });
        }
        if s.is_empty() {
            return Err(Error::InvalidDrawing("empty bit string".into()));
        }
        let dim = s.len() as u32;
        check_dimension(dim, MAX_DIMENSION)?;
        let mut bits = 0u64;
        for c in s.chars() {
            bits = bits << 1
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidDrawing(format!("'{c}' is not a binary digit"))),
                };
        }
        Ok(BitPoint { bits, dim })
    }
}

/// Coordinatewise sum of two corners, as `(twos, ones)` masks.
#[inline]
fn corner_sum(a: u64, b: u64) -> (u64, u64) {
    (a & b, a ^ b)
}

/// True iff the open segments `p_v p_w` and `p_x p_y` meet, i.e. their
/// endpoint sums coincide.
pub fn edges_cross(pv: &BitPoint, pw: &BitPoint, px: &BitPoint, py: &BitPoint) -> Result<bool> {
    for p in [pw, px, py] {
        if p.dim != pv.dim {
            return Err(Error::DimensionMismatch(pv.dim, p.dim));
        }
    }
    if pv == pw || px == py {
        return Err(Error::DegenerateSegment);
    }
    if (pv == px && pw == py) || (pv == py && pw == px) {
        return Err(Error::SameSegment);
    }
    Ok(corner_sum(pv.bits, pw.bits) == corner_sum(px.bits, py.bits))
}

/// Placement of the vertices of a graph at corners of `{0,1}^dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDrawing", into = "RawDrawing")]
pub struct HypercubeDrawing {
    dim: u32,
    points: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawDrawing {
    dimension: u32,
    points: Vec<String>,
}

impl TryFrom<RawDrawing> for HypercubeDrawing {
    type Error = Error;

    fn try_from(raw: RawDrawing) -> Result<Self> {
        let points = raw
            .points
            .iter()
            .map(|s| {
                let p: BitPoint = s.parse()?;
                if p.dim != raw.dimension {
                    return Err(Error::DimensionMismatch(raw.dimension, p.dim));
                }
                Ok(p.bits)
            })
            .collect::<Result<Vec<_>>>()?;
        HypercubeDrawing::new(raw.dimension, points)
    }
}

impl From<HypercubeDrawing> for RawDrawing {
    fn from(d: HypercubeDrawing) -> Self {
        RawDrawing {
            dimension: d.dim,
            points: d.points().map(|p| p.to_string()).collect(),
        }
    }
}

impl HypercubeDrawing {
    pub fn new(dim: u32, points: Vec<u64>) -> Result<Self> {
        check_dimension(dim, MAX_DIMENSION)?;
        if let Some((v, &p)) = points.iter().enumerate().find(|(_, &p)| p >> dim != 0) {
            return Err(Error::InvalidDrawing(format!(
                "vertex {v} at {p} lies outside {{0,1}}^{dim}"
            )));
        }
        Ok(HypercubeDrawing { dim, points })
    }

    pub fn dimension(&self) -> u32 {
        self.dim
    }

    /// Number of hypercube corners, `2^d`.
    pub fn volume(&self) -> u128 {
        1u128 << self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, v: Vertex) -> BitPoint {
        BitPoint {
            bits: self.points[v],
            dim: self.dim,
        }
    }

    pub fn points(&self) -> impl Iterator<Item = BitPoint> + '_ {
        self.points.iter().map(|&bits| BitPoint { bits, dim: self.dim })
    }

    pub fn raw_points(&self) -> &[u64] {
        &self.points
    }
}

/// Why a placement fails to be a hypercube drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DrawingViolation {
    /// Two vertices share a corner.
    Collision { first: Vertex, second: Vertex },
    /// Two edges share a midpoint; `twos`/`ones` give the common sum.
    Crossing {
        first: Edge,
        second: Edge,
        twos: u64,
        ones: u64,
    },
}

impl DrawingViolation {
    /// Common endpoint sum of a crossing, most significant coordinate first.
    pub fn sum_string(&self, dim: u32) -> Option<String> {
        match *self {
            DrawingViolation::Crossing { twos, ones, .. } => Some(
                (0..dim)
                    .rev()
                    .map(|j| match (twos >> j & 1, ones >> j & 1) {
                        (1, _) => '2',
                        (_, 1) => '1',
                        _ => '0',
                    })
                    .collect(),
            ),
            DrawingViolation::Collision { .. } => None,
        }
    }
}

fn check_drawable(g: &Graph, lambda: &HypercubeDrawing) -> Result<()> {
    g.require_simple("hypercube drawing")?;
    if lambda.len() != g.vertex_count() {
        return Err(Error::DrawingSizeMismatch {
            points: lambda.len(),
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// First collision or crossing found, if any.
pub fn find_drawing_violation(g: &Graph, lambda: &HypercubeDrawing) -> Result<Option<DrawingViolation>> {
    check_drawable(g, lambda)?;
    let mut at: HashMap<u64, Vertex> = HashMap::with_capacity(g.vertex_count());
    for (v, &p) in lambda.points.iter().enumerate() {
        if let Some(&first) = at.get(&p) {
            return Ok(Some(DrawingViolation::Collision { first, second: v }));
        }
        at.insert(p, v);
    }
    let mut by_sum: HashMap<(u64, u64), Edge> = HashMap::with_capacity(g.edge_count());
    for &e in g.edges() {
        let key = corner_sum(lambda.points[e.0], lambda.points[e.1]);
        if let Some(&first) = by_sum.get(&key) {
            return Ok(Some(DrawingViolation::Crossing {
                first,
                second: e,
                twos: key.0,
                ones: key.1,
            }));
        }
        by_sum.insert(key, e);
    }
    Ok(None)
}

/// True iff the placement is injective and no two edges cross.
pub fn verify_drawing(g: &Graph, lambda: &HypercubeDrawing) -> Result<bool> {
    Ok(find_drawing_violation(g, lambda)?.is_none())
}

/// True iff the sums `p_i + p_j` over all unordered index pairs, `i = j`
/// included, are distinct. This is exactly the condition for the points to
/// carry a drawing of the complete graph in which no vertex sits at the
/// midpoint of an edge.
pub fn is_kn_point_set(points: &[BitPoint]) -> Result<bool> {
    if let Some(first) = points.first() {
        if let Some(p) = points.iter().find(|p| p.dim != first.dim) {
            return Err(Error::DimensionMismatch(first.dim, p.dim));
        }
    }
    let mut sums = std::collections::HashSet::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i..] {
            if !sums.insert(corner_sum(a.bits, b.bits)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn ceil_log2(k: u64) -> u32 {
    if k <= 1 {
        0
    } else {
        64 - (k - 1).leading_zeros()
    }
}

/// Writes each label in binary, using `max(1, ⌈log₂ k⌉)` bits. Labels are
/// written as is when the largest one fits in that width and shifted down
/// by one otherwise (only possible when `k` is a power of two); a uniform
/// shift leaves sums distinct. Equal corner sums then force equal label
/// sums, so the result is a drawing whenever `f` is antimagic.
pub fn from_antimagic(g: &Graph, f: &Labelling) -> Result<HypercubeDrawing> {
    g.require_simple("hypercube drawing")?;
    if let Some(c) = crate::antimagic::find_sum_collision(g, f)? {
        return Err(c.into());
    }
    let dim = ceil_log2(f.k()).max(1);
    check_dimension(dim, MAX_DIMENSION)?;
    let offset = u64::from(f.max_label() >> dim != 0);
    HypercubeDrawing::new(dim, f.labels().iter().map(|&l| l - offset).collect())
}

/// Value of a corner read as a base-3 numeral over its coordinates.
fn base3_value(bits: u64, dim: u32) -> u64 {
    (0..dim).rev().fold(0u64, |acc, j| acc * 3 + (bits >> j & 1))
}

/// Reads each corner as a base-3 numeral and adds 1. Corner sums have
/// digits in `{0,1,2}`, so they collide exactly when the integer sums do,
/// and a drawing becomes an antimagic labelling into `[3^d]`.
pub fn to_antimagic(g: &Graph, lambda: &HypercubeDrawing) -> Result<Labelling> {
    check_dimension(lambda.dim, MAX_BASE3_DIMENSION)?;
    if let Some(v) = find_drawing_violation(g, lambda)? {
        return Err(Error::InvalidDrawing(format!("{v:?}")));
    }
    let labels = lambda.points.iter().map(|&p| base3_value(p, lambda.dim) + 1).collect();
    let f = Labelling::tight(labels)?;
    debug_assert!(verify_antimagic(g, &f).unwrap_or(false));
    Ok(f)
}

/// Most edges a drawing in `{0,1}^d` can have: `3^d - 2^d`, one per
/// achievable midpoint. Defined for `d <= 80`.
pub fn max_edges(d: u32) -> u128 {
    let three = 3u128.checked_pow(d).expect("3^d overflows u128 for d > 80");
    three - (1u128 << d)
}

/// Smallest dimension (and its volume) compatible with `n` vertices and `m`
/// edges: `2^d >= n` and `3^d >= n + m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeBound {
    pub dimension: u32,
    pub volume: u128,
}

pub fn vol_lower_bound(n: usize, m: usize) -> VolumeBound {
    let (n, total) = (n as u128, n as u128 + m as u128);
    let mut d = 0u32;
    while (1u128 << d) < n || 3u128.pow(d) < total {
        d += 1;
    }
    VolumeBound {
        dimension: d,
        volume: 1u128 << d,
    }
}

/// Counts for one stratum `k`: sums with exactly `k` coordinates equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingStratum {
    pub ones: u32,
    /// Distinct sum points observed in this stratum.
    pub midpoints: u64,
    /// Quadruples `(v, w, x, y)` with `v + w = x + y` in this stratum.
    pub quadruples: u64,
    pub probability: Ratio<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingProbability {
    pub dimension: u32,
    pub quadruples: u64,
    pub total: u64,
    pub probability: Ratio<u64>,
    pub strata: Vec<CrossingStratum>,
}

/// Probability that two independent uniform random segments in `{0,1}^d`
/// have equal endpoint sums, by enumerating all `2^{4d}` quadruples of
/// corners coordinate by coordinate.
pub fn crossing_probability_exact(d: u32) -> Result<CrossingProbability> {
    check_dimension(d, MAX_ENUMERATION_DIMENSION)?;
    let corners = 1u64 << d;
    let coordinate_sum = |a: u64, b: u64| -> Vec<u8> { (0..d).map(|j| ((a >> j & 1) + (b >> j & 1)) as u8).collect() };
    let total = corners.pow(4);
    let mut quadruples = 0u64;
    let mut strata: Vec<(u64, u64)> = vec![(0, 0); d as usize + 1];
    let mut points_seen: Vec<std::collections::HashSet<Vec<u8>>> = vec![Default::default(); d as usize + 1];
    for v in 0..corners {
        for w in 0..corners {
            let left = coordinate_sum(v, w);
            let ones = left.iter().filter(|&&c| c == 1).count();
            points_seen[ones].insert(left.clone());
            for x in 0..corners {
                for y in 0..corners {
                    if coordinate_sum(x, y) == left {
                        quadruples += 1;
                        strata[ones].1 += 1;
                    }
                }
            }
        }
    }
    for (k, seen) in points_seen.iter().enumerate() {
        strata[k].0 = seen.len() as u64;
    }
    Ok(CrossingProbability {
        dimension: d,
        quadruples,
        total,
        probability: Ratio::new(quadruples, total),
        strata: strata
            .into_iter()
            .enumerate()
            .map(|(k, (midpoints, count))| CrossingStratum {
                ones: k as u32,
                midpoints,
                quadruples: count,
                probability: Ratio::new(count, total),
            })
            .collect(),
    })
}
