//! Exhaustive ground truth for small instances: optimal labelling ranges and
//! drawing volumes by backtracking, exact rational segment intersection, and
//! the largest edge set a hypercube drawing can carry.
//!
//! Nothing here shares code with the constructions it is used to check,
//! apart from the final witness verification.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::antimagic::{greedy_degen_label, mag_lower_bound, Labelling};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::hypercube::{vol_lower_bound, BitPoint, HypercubeDrawing};

/// Largest dimension [`exact_vol`] will search.
pub const MAX_EXACT_VOL_DIMENSION: u32 = 12;

/// Outcome of a capped exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Outcome<W> {
    /// `value` is optimal: the witness achieves it and every smaller value
    /// was refuted.
    Exact { value: u64, witness: W },
    /// Every value below `lower` was refuted before the cap was reached.
    /// `upper` is the best construction known, if any.
    Unresolved { lower: u64, upper: Option<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult<W> {
    pub outcome: Outcome<W>,
    pub nodes_explored: u64,
}

impl<W> ExactResult<W> {
    pub fn value(&self) -> Option<u64> {
        match self.outcome {
            Outcome::Exact { value, .. } => Some(value),
            Outcome::Unresolved { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&W> {
        match &self.outcome {
            Outcome::Exact { witness, .. } => Some(witness),
            Outcome::Unresolved { .. } => None,
        }
    }
}

/// Vertices by descending degree (loops counted), lowest id first on ties.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let mut loops = vec![0usize; g.vertex_count()];
    for e in g.edges().iter().filter(|e| e.is_loop()) {
        loops[e.0] = 1;
    }
    let mut order: Vec<Vertex> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v) + loops[v]), v));
    order
}

/// For each vertex in search order, its neighbours that come earlier, and
/// whether it carries a loop.
fn back_neighbours(g: &Graph, order: &[Vertex]) -> (Vec<Vec<Vertex>>, Vec<bool>) {
    let mut rank = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut back = vec![Vec::new(); g.vertex_count()];
    let mut looped = vec![false; g.vertex_count()];
    for e in g.edges() {
        if e.is_loop() {
            looped[e.0] = true;
        } else if rank[e.0] < rank[e.1] {
            back[e.1].push(e.0);
        } else {
            back[e.0].push(e.1);
        }
    }
    (back, looped)
}

struct MagSearch<'a> {
    order: &'a [Vertex],
    back: &'a [Vec<Vertex>],
    looped: &'a [bool],
    k: u64,
    labels: Vec<u64>,
    used: Vec<bool>,
    sums: Vec<bool>,
    nodes: u64,
}

impl MagSearch<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mut new_sums = Vec::with_capacity(self.back[v].len() + 1);
        for label in 1..=self.k {
            if self.used[label as usize] {
                continue;
            }
            self.nodes += 1;
            new_sums.clear();
            new_sums.extend(self.back[v].iter().map(|&w| self.labels[w] + label));
            if self.looped[v] {
                new_sums.push(2 * label);
            }
            if new_sums.iter().any(|&s| self.sums[s as usize]) {
                continue;
            }
            self.labels[v] = label;
            self.used[label as usize] = true;
            for &s in &new_sums {
                self.sums[s as usize] = true;
            }
            if self.run(depth + 1) {
                return true;
            }
            for &s in &new_sums {
                self.sums[s as usize] = false;
            }
            self.used[label as usize] = false;
        }
        false
    }
}

/// Smallest `k` admitting an antimagic injection into `1..=k`, searching
/// `k` upward from the edge-count lower bound to `k_cap`. Loops are
/// handled. The witness is the first labelling found, assigning labels in
/// ascending order to vertices by descending degree.
pub fn exact_mag(g: &Graph, k_cap: u64) -> ExactResult<Labelling> {
    let order = search_order(g);
    let (back, looped) = back_neighbours(g, &order);
    let mut nodes = 0;
    let start = mag_lower_bound(g);
    for k in start..=k_cap {
        let mut search = MagSearch {
            order: &order,
            back: &back,
            looped: &looped,
            k,
            labels: vec![0; g.vertex_count()],
            used: vec![false; k as usize + 1],
            sums: vec![false; 2 * k as usize + 1],
            nodes: 0,
        };
        let found = search.run(0);
        nodes += search.nodes;
        if found {
            let witness = Labelling::new(search.labels, k).expect("search keeps labels distinct");
            return ExactResult {
                outcome: Outcome::Exact { value: k, witness },
                nodes_explored: nodes,
            };
        }
    }
    let lower = start.max(k_cap.saturating_add(1));
    let greedy = greedy_degen_label(g).ok();
    let outcome = match greedy {
        // Everything below `lower` is refuted, so a construction meeting it is optimal.
        Some(f) if f.max_label() == lower => Outcome::Exact {
            value: lower,
            witness: Labelling::new(f.labels().to_vec(), lower).expect("greedy labels are distinct"),
        },
        other => Outcome::Unresolved {
            lower,
            upper: other.map(|f| f.max_label()),
        },
    };
    ExactResult {
        outcome,
        nodes_explored: nodes,
    }
}

struct VolSearch<'a> {
    order: &'a [Vertex],
    back: &'a [Vec<Vertex>],
    dim: u32,
    /// Base-3 reading of every corner; corner sums collide iff these add up
    /// to the same integer.
    ternary: Vec<usize>,
    points: Vec<u64>,
    occupied: Vec<bool>,
    sums: Vec<bool>,
    nodes: u64,
}

impl VolSearch<'_> {
    fn candidates(&self, depth: usize) -> Vec<u64> {
        match depth {
            // Translations by xor are symmetries: pin the first vertex.
            0 => vec![0],
            // With the origin fixed, coordinate permutations remain: only
            // the Hamming weight of the second corner matters.
            1 => (1..=self.dim).map(|w| (1u64 << w) - 1).collect(),
            _ => (0..1u64 << self.dim).collect(),
        }
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mut new_sums = Vec::with_capacity(self.back[v].len());
        for p in self.candidates(depth) {
            if self.occupied[p as usize] {
                continue;
            }
            self.nodes += 1;
            new_sums.clear();
            new_sums.extend(
                self.back[v]
                    .iter()
                    .map(|&w| self.ternary[self.points[w] as usize] + self.ternary[p as usize]),
            );
            if new_sums.iter().any(|&s| self.sums[s]) {
                continue;
            }
            self.points[v] = p;
            self.occupied[p as usize] = true;
            for &s in &new_sums {
                self.sums[s] = true;
            }
            if self.run(depth + 1) {
                return true;
            }
            for &s in &new_sums {
                self.sums[s] = false;
            }
            self.occupied[p as usize] = false;
        }
        false
    }
}

/// Smallest volume `2^d` of a hypercube drawing of `g`, searching `d`
/// upward from the counting lower bound to `d_cap`.
pub fn exact_vol(g: &Graph, d_cap: u32) -> Result<ExactResult<HypercubeDrawing>> {
    g.require_simple("hypercube drawing")?;
    if d_cap > MAX_EXACT_VOL_DIMENSION {
        return Err(Error::DimensionOutOfRange {
            dim: d_cap,
            max: MAX_EXACT_VOL_DIMENSION,
        });
    }
    let order = search_order(g);
    let (back, _) = back_neighbours(g, &order);
    let start = vol_lower_bound(g.vertex_count(), g.edge_count()).dimension;
    let mut nodes = 0;
    for dim in start..=d_cap {
        let corners = 1usize << dim;
        let ternary = (0..corners as u64)
            .map(|p| (0..dim).rev().fold(0usize, |acc, j| acc * 3 + (p >> j & 1) as usize))
            .collect();
        let mut search = VolSearch {
            order: &order,
            back: &back,
            dim,
            ternary,
            points: vec![0; g.vertex_count()],
            occupied: vec![false; corners],
            sums: vec![false; 3usize.pow(dim)],
            nodes: 0,
        };
        let found = search.run(0);
        nodes += search.nodes;
        if found {
            return Ok(ExactResult {
                outcome: Outcome::Exact {
                    value: 1 << dim,
                    witness: HypercubeDrawing::new(dim, search.points)?,
                },
                nodes_explored: nodes,
            });
        }
    }
    let lower = 1u64 << start.max(d_cap + 1);
    let drawn = greedy_degen_label(g)
        .ok()
        .and_then(|f| crate::hypercube::from_antimagic(g, &f).ok());
    let outcome = match drawn {
        Some(d) if d.dimension() < 64 && 1u64 << d.dimension() == lower => Outcome::Exact {
            value: lower,
            witness: d,
        },
        other => Outcome::Unresolved {
            lower,
            upper: other.and_then(|d| u64::try_from(d.volume()).ok()),
        },
    };
    Ok(ExactResult {
        outcome,
        nodes_explored: nodes,
    })
}

type Q = Ratio<i64>;

fn coords(p: &BitPoint) -> Vec<i64> {
    p.coordinates().into_iter().map(i64::from).collect()
}

/// True iff the open segments `(a, b)` and `(c, d)` share a point, in exact
/// rational arithmetic. Solves `a + s(b - a) = c + t(d - c)` for
/// `s, t ∈ (0, 1)`; parallel segments are intersected as parameter
/// intervals along their common line.
pub fn segment_cross_exact(a: &BitPoint, b: &BitPoint, c: &BitPoint, d: &BitPoint) -> Result<bool> {
    for p in [b, c, d] {
        if p.dim() != a.dim() {
            return Err(Error::DimensionMismatch(a.dim(), p.dim()));
        }
    }
    if a == b || c == d {
        return Err(Error::DegenerateSegment);
    }
    let (a, b, c, d) = (coords(a), coords(b), coords(c), coords(d));
    let dim = a.len();
    let u: Vec<i64> = (0..dim).map(|i| b[i] - a[i]).collect();
    let v: Vec<i64> = (0..dim).map(|i| d[i] - c[i]).collect();
    let w: Vec<i64> = (0..dim).map(|i| c[i] - a[i]).collect();

    // s·u - t·v = w. Look for a 2x2 minor of [u | -v] that is invertible.
    for i in 0..dim {
        for j in (i + 1)..dim {
            let det = -u[i] * v[j] + v[i] * u[j];
            if det == 0 {
                continue;
            }
            let s = Q::new(-w[i] * v[j] + v[i] * w[j], det);
            let t = Q::new(u[i] * w[j] - u[j] * w[i], det);
            let consistent = (0..dim).all(|k| s * u[k] - t * v[k] == Q::from_integer(w[k]));
            let zero = Q::from_integer(0);
            let one = Q::from_integer(1);
            return Ok(consistent && zero < s && s < one && zero < t && t < one);
        }
    }

    // Parallel directions. Intersect only if `c` lies on the line through
    // `a` and `b`.
    let on_line = (0..dim).all(|i| (0..dim).all(|j| u[i] * w[j] == u[j] * w[i]));
    if !on_line {
        return Ok(false);
    }
    let k = (0..dim).find(|&k| u[k] != 0).expect("segment has nonzero length");
    let tc = Q::new(w[k], u[k]);
    let td = Q::new(d[k] - a[k], u[k]);
    let lo = std::cmp::max(Q::from_integer(0), std::cmp::min(tc, td));
    let hi = std::cmp::min(Q::from_integer(1), std::cmp::max(tc, td));
    Ok(lo < hi)
}

/// Largest set of corner pairs in `{0,1}^d` with pairwise distinct
/// coordinate sums, for `d <= 3`, by branch and bound over all candidate
/// pairs.
pub fn max_drawing_edges_exhaustive(d: u32) -> Result<usize> {
    if d > 3 {
        return Err(Error::DimensionOutOfRange { dim: d, max: 3 });
    }
    let corners: Vec<Vec<u8>> = (0..1u64 << d)
        .map(|p| BitPoint::new(p, d).expect("in range").coordinates())
        .collect();
    let mut sums = Vec::new();
    for i in 0..corners.len() {
        for j in (i + 1)..corners.len() {
            let s: Vec<u8> = corners[i].iter().zip(&corners[j]).map(|(x, y)| x + y).collect();
            sums.push(s);
        }
    }
    let count = sums.len();
    let conflicts: Vec<u64> = (0..count)
        .map(|i| {
            (0..count)
                .filter(|&j| j != i && sums[i] == sums[j])
                .fold(0u64, |mask, j| mask | 1 << j)
        })
        .collect();
    let all = if count == 64 { u64::MAX } else { (1u64 << count) - 1 };
    let mut best = 0;
    max_independent(&conflicts, all, 0, &mut best);
    Ok(best)
}

fn max_independent(conflicts: &[u64], remaining: u64, chosen: usize, best: &mut usize) {
    if chosen + remaining.count_ones() as usize <= *best {
        return;
    }
    if remaining == 0 {
        *best = chosen;
        return;
    }
    let pivot = (0..conflicts.len())
        .filter(|&i| remaining >> i & 1 == 1)
        .max_by_key(|&i| (conflicts[i] & remaining).count_ones())
        .expect("remaining is nonempty");
    max_independent(
        conflicts,
        remaining & !(1 << pivot) & !conflicts[pivot],
        chosen + 1,
        best,
    );
    if conflicts[pivot] & remaining != 0 {
        max_independent(conflicts, remaining & !(1 << pivot), chosen, best);
    }
}
