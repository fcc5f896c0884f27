//! Antimagic injections: vertex labellings by distinct positive integers
//! under which every edge has a different endpoint sum. Includes the
//! verifier, the edge-count lower bound and several explicit constructions.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, degeneracy_ordering, Edge, Graph, Vertex, VertexOrdering};
use crate::sidon::{is_prime, smallest_prime_at_least, SidonSet};

/// Injective labelling `vertex -> 1..=k`, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLabelling", into = "RawLabelling")]
pub struct Labelling {
    labels: Vec<u64>,
    k: u64,
}

#[derive(Serialize, Deserialize)]
struct RawLabelling {
    k: u64,
    labels: Vec<u64>,
}

impl TryFrom<RawLabelling> for Labelling {
    type Error = Error;

    fn try_from(raw: RawLabelling) -> Result<Self> {
        Labelling::new(raw.labels, raw.k)
    }
}

impl From<Labelling> for RawLabelling {
    fn from(l: Labelling) -> Self {
        RawLabelling {
            k: l.k,
            labels: l.labels,
        }
    }
}

impl Labelling {
    /// Validates that labels are distinct and lie in `1..=k`.
    pub fn new(labels: Vec<u64>, k: u64) -> Result<Self> {
        let mut seen = HashSet::with_capacity(labels.len());
        for (v, &label) in labels.iter().enumerate() {
            if label == 0 || label > k {
                return Err(Error::InvalidLabelling(format!(
                    "label {label} of vertex {v} is outside 1..={k}"
                )));
            }
            if !seen.insert(label) {
                return Err(Error::InvalidLabelling(format!(
                    "label {label} is used twice (again at vertex {v})"
                )));
            }
        }
        Ok(Labelling { labels, k })
    }

    /// Labelling whose range bound is its largest label.
    pub fn tight(labels: Vec<u64>) -> Result<Self> {
        let k = labels.iter().copied().max().unwrap_or(0);
        Labelling::new(labels, k)
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn max_label(&self) -> u64 {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Two edges with the same endpoint sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumCollision {
    pub first: Edge,
    pub second: Edge,
    pub sum: u64,
}

impl From<SumCollision> for Error {
    fn from(c: SumCollision) -> Self {
        Error::NotAntimagic {
            first: c.first,
            second: c.second,
            sum: c.sum,
        }
    }
}

fn check_size(g: &Graph, f: &Labelling) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::LabellingSizeMismatch {
            labels: f.len(),
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// First pair of edges (in edge-list order of the second) sharing a sum.
/// A loop `vv` has sum `2 f(v)`.
pub fn find_sum_collision(g: &Graph, f: &Labelling) -> Result<Option<SumCollision>> {
    check_size(g, f)?;
    let mut by_sum: HashMap<u64, Edge> = HashMap::with_capacity(g.edge_count());
    for &e in g.edges() {
        let sum = f.label(e.0) + f.label(e.1);
        if let Some(&first) = by_sum.get(&sum) {
            return Ok(Some(SumCollision { first, second: e, sum }));
        }
        by_sum.insert(sum, e);
    }
    Ok(None)
}

/// True iff all edge sums are pairwise distinct.
pub fn verify_antimagic(g: &Graph, f: &Labelling) -> Result<bool> {
    Ok(find_sum_collision(g, f)?.is_none())
}

/// Lower bound on the smallest feasible range `k`: `max{n, ⌈(m+3)/2⌉}` for
/// simple graphs. With loops, sums range over `2..=2k`, which only gives
/// `⌈(m+1)/2⌉`. An edgeless graph needs exactly `n`.
pub fn mag_lower_bound(g: &Graph) -> u64 {
    let n = g.vertex_count() as u64;
    let m = g.edge_count() as u64;
    if m == 0 {
        return n;
    }
    let from_edges = if g.has_loops() {
        (m + 1).div_ceil(2)
    } else {
        (m + 3).div_ceil(2)
    };
    n.max(from_edges)
}

/// Greedy first-fit labelling along the reverse of the degeneracy
/// elimination order. Each new vertex `v` avoids every used label and
/// every value `f(x) + f(y) - f(w)` with `xy` an edge among labelled
/// vertices and `w` a labelled neighbour of `v`. The result never exceeds
/// `n + d·m` for degeneracy `d`.
pub fn greedy_degen_label(g: &Graph) -> Result<Labelling> {
    g.require_simple("greedy labelling")?;
    let n = g.vertex_count();
    let degen = degeneracy_ordering(g);
    let mut labels = vec![0u64; n];
    let mut labelled = vec![false; n];
    // Sums of edges with both endpoints labelled.
    let mut sums: HashSet<u64> = HashSet::with_capacity(g.edge_count());
    let mut used: Vec<bool> = Vec::new();
    // Every label below this one is taken.
    let mut first_free = 1u64;
    for v in degen.insertion_order() {
        let back: Vec<u64> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| labelled[w])
            .map(|&w| labels[w])
            .collect();
        // c is forbidden iff c + f(w) already occurs as a sum.
        let label = (first_free..)
            .filter(|&c| !used.get(c as usize).copied().unwrap_or(false))
            .find(|&c| back.iter().all(|lw| !sums.contains(&(c + lw))))
            .expect("unbounded search");
        labels[v] = label;
        labelled[v] = true;
        if used.len() <= label as usize {
            used.resize(label as usize + 1, false);
        }
        used[label as usize] = true;
        while used.get(first_free as usize).copied().unwrap_or(false) {
            first_free += 1;
        }
        sums.extend(back.iter().map(|lw| lw + label));
    }
    Labelling::tight(labels)
}

/// Labels of `v_0 … v_{n-1}` in the path power `P_n^p`: `i + 1` when
/// `p = 2`, otherwise `1 + 2pi + (i^2 mod p)`. Valid for any `n`.
fn path_power_values(n: usize, p: u64) -> Vec<u64> {
    (0..n as u64)
        .map(|i| if p == 2 { i + 1 } else { 1 + 2 * p * i + (i * i) % p })
        .collect()
}

/// Antimagic labelling of `P_n^p` for a prime `p < n`, with every label at
/// most `p(2n-1)`. For `p = 2` the identity ordering is a 1-queue layout
/// and the labels are `1..=n`.
pub fn path_power_label(n: usize, p: u64) -> Result<Labelling> {
    if !is_prime(p) {
        return Err(Error::NotPrime { value: p });
    }
    if p as usize >= n {
        return Err(Error::InvalidParameters(format!(
            "path power labelling needs p < n, got p={p}, n={n}"
        )));
    }
    Labelling::tight(path_power_values(n, p))
}

/// Labels `G` through a vertex ordering of bandwidth `b`: `G` is a
/// subgraph of `P_n^p` for the smallest prime `p >= b`, and vertex `v`
/// takes the path-power label of position `σ(v)`. Labels stay below
/// `2b(2n-1)`.
pub fn bandwidth_label(g: &Graph, order: &VertexOrdering) -> Result<Labelling> {
    g.require_simple("bandwidth labelling")?;
    let bandwidth = order.bandwidth(g)? as u64;
    let p = smallest_prime_at_least(bandwidth.max(1));
    let values = path_power_values(g.vertex_count(), p);
    Labelling::tight((0..g.vertex_count()).map(|v| values[order.position(v) - 1]).collect())
}

/// Labels each vertex by its position in a 1-queue ordering. Equal sums
/// would force two edges to nest, so the result is antimagic with `k = n`.
pub fn queue_label(g: &Graph, order: &VertexOrdering) -> Result<Labelling> {
    if let Some((outer, inner)) = graph::find_nested_pair(g, order)? {
        return Err(Error::NestedEdges { outer, inner });
    }
    let n = g.vertex_count();
    Labelling::new((0..n).map(|v| order.position(v) as u64).collect(), n as u64)
}

/// Placement of vertices on `tracks` tracks with `capacity` slots each.
/// Tracks and slots are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTracks", into = "RawTracks")]
pub struct TrackInjection {
    tracks: usize,
    capacity: usize,
    assignment: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawTracks {
    tracks: usize,
    capacity: usize,
    assignment: Vec<(usize, usize)>,
}

impl TryFrom<RawTracks> for TrackInjection {
    type Error = Error;

    fn try_from(raw: RawTracks) -> Result<Self> {
        TrackInjection::new(raw.tracks, raw.capacity, raw.assignment)
    }
}

impl From<TrackInjection> for RawTracks {
    fn from(t: TrackInjection) -> Self {
        RawTracks {
            tracks: t.tracks,
            capacity: t.capacity,
            assignment: t.assignment,
        }
    }
}

impl TrackInjection {
    pub fn new(tracks: usize, capacity: usize, assignment: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(assignment.len());
        for (v, &(a, i)) in assignment.iter().enumerate() {
            if a == 0 || a > tracks || i == 0 || i > capacity {
                return Err(Error::InvalidTrackInjection(format!(
                    "vertex {v} at ({a}, {i}) is outside [{tracks}]x[{capacity}]"
                )));
            }
            if !seen.insert((a, i)) {
                return Err(Error::InvalidTrackInjection(format!(
                    "position ({a}, {i}) is used twice (again by vertex {v})"
                )));
            }
        }
        Ok(TrackInjection {
            tracks,
            capacity,
            assignment,
        })
    }

    pub fn tracks(&self) -> usize {
        self.tracks
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn assignment(&self) -> &[(usize, usize)] {
        &self.assignment
    }

    /// `(track, slot)` of `v`.
    pub fn place(&self, v: Vertex) -> (usize, usize) {
        self.assignment[v]
    }
}

fn edge_key(f: &TrackInjection, e: &Edge) -> ((usize, usize), usize) {
    let (a, i) = f.place(e.0);
    let (b, j) = f.place(e.1);
    ((a.min(b), a.max(b)), i + j)
}

fn find_edge_map_collision(g: &Graph, f: &TrackInjection) -> Result<Option<(Edge, Edge)>> {
    if f.assignment.len() != g.vertex_count() {
        return Err(Error::InvalidTrackInjection(format!(
            "injection places {} vertices but the graph has {}",
            f.assignment.len(),
            g.vertex_count()
        )));
    }
    let mut seen = HashMap::with_capacity(g.edge_count());
    for e in g.edges() {
        if let Some(&first) = seen.get(&edge_key(f, e)) {
            return Ok(Some((first, *e)));
        }
        seen.insert(edge_key(f, e), *e);
    }
    Ok(None)
}

/// True iff `vw -> ({track(v), track(w)}, slot(v) + slot(w))` is injective
/// on the edges of `g`.
pub fn check_track_injection(g: &Graph, f: &TrackInjection) -> Result<bool> {
    Ok(find_edge_map_collision(g, f)?.is_none())
}

/// Combines a track injection with an injective edge map and a Sidon set
/// `s_1 < s_2 < …` of at least `tracks` elements into the labelling
/// `λ(v) = 2r(s_a - 1) + i` for `v` at `(a, i)`, `r` the track capacity.
pub fn technical_combine(g: &Graph, f: &TrackInjection, sidon: &SidonSet) -> Result<Labelling> {
    if let Some((first, second)) = find_edge_map_collision(g, f)? {
        return Err(Error::EdgeMapNotInjective { first, second });
    }
    if sidon.len() < f.tracks() {
        return Err(Error::InvalidParameters(format!(
            "Sidon set has {} elements but {} tracks are used",
            sidon.len(),
            f.tracks()
        )));
    }
    let r = f.capacity() as u64;
    let s = sidon.elements();
    Labelling::tight(
        f.assignment()
            .iter()
            .map(|&(a, i)| 2 * r * (s[a - 1] - 1) + i as u64)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, pairs.iter().copied(), false).unwrap()
    }

    fn lab(labels: &[u64]) -> Labelling {
        Labelling::tight(labels.to_vec()).unwrap()
    }

    #[test]
    fn labelling_validation() {
        assert!(Labelling::new(vec![1, 1], 2).is_err());
        assert!(Labelling::new(vec![0, 1], 2).is_err());
        assert!(Labelling::new(vec![1, 3], 2).is_err());
        assert_eq!(Labelling::new(vec![2, 1], 5).unwrap().max_label(), 2);
    }

    #[test]
    fn verify_examples() {
        let k3 = generate(GraphKind::Complete { n: 3 }).unwrap();
        assert!(verify_antimagic(&k3, &lab(&[1, 2, 3])).unwrap());

        let c4 = generate(GraphKind::Cycle { n: 4 }).unwrap();
        let hit = find_sum_collision(&c4, &lab(&[1, 2, 3, 4])).unwrap().unwrap();
        assert_eq!(hit.sum, 5);
        assert_eq!((hit.first, hit.second), (Edge(1, 2), Edge(0, 3)));

        assert!(verify_antimagic(&Graph::empty(3), &lab(&[3, 1, 2])).unwrap());
        assert!(verify_antimagic(&k3, &lab(&[1, 2])).is_err());
    }

    #[test]
    fn loops_contribute_double_labels() {
        let g = Graph::from_edge_list(2, [(0, 0), (0, 1), (1, 1)], true).unwrap();
        // sums 2, 4, 6 with labels 1, 3
        assert!(verify_antimagic(&g, &lab(&[1, 3])).unwrap());
        // 2*2 == 1 + 3
        let h = Graph::from_edge_list(3, [(0, 0), (1, 2)], true).unwrap();
        assert!(!verify_antimagic(&h, &lab(&[2, 1, 3])).unwrap());
    }

    #[test]
    fn lower_bound_examples() {
        let k4 = generate(GraphKind::Complete { n: 4 }).unwrap();
        assert_eq!(mag_lower_bound(&k4), 5);
        assert_eq!(mag_lower_bound(&Graph::empty(1)), 1);
        for n in 3..20 {
            for k in 1..n {
                let g = generate(GraphKind::PathPower { n, k }).unwrap();
                // 2·bound >= kn - k(k+1)/2 + 3
                let twice = 2 * mag_lower_bound(&g) as i64;
                assert!(2 * twice >= (2 * k * n - k * (k + 1)) as i64 + 6);
            }
        }
        let kp = generate(GraphKind::CompletePseudo { n: 3 }).unwrap();
        assert_eq!(mag_lower_bound(&kp), 4); // m = 6, ⌈7/2⌉ = 4
    }

    #[test]
    fn greedy_examples() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let f = greedy_degen_label(&p3).unwrap();
        // elimination 0, 1, 2 (ties to lowest id), so insertion runs 2, 1, 0
        // and vertex 0 must avoid 3 - 2 = 1
        assert_eq!(f.labels(), &[3, 2, 1]);
        assert!(verify_antimagic(&p3, &f).unwrap());

        assert_eq!(greedy_degen_label(&Graph::empty(1)).unwrap().labels(), &[1]);

        let looped = Graph::from_edge_list(1, [(0, 0)], true).unwrap();
        assert!(greedy_degen_label(&looped).is_err());
    }

    #[test]
    fn greedy_respects_degeneracy_bound_on_families() {
        for kind in [
            GraphKind::Complete { n: 9 },
            GraphKind::SubdividedComplete { n: 6 },
            GraphKind::PathPower { n: 20, k: 4 },
            GraphKind::Cycle { n: 11 },
        ] {
            let g = generate(kind).unwrap();
            let f = greedy_degen_label(&g).unwrap();
            let d = degeneracy_ordering(&g).degeneracy as u64;
            assert!(verify_antimagic(&g, &f).unwrap(), "{kind:?}");
            assert!(
                f.max_label() <= g.vertex_count() as u64 + d * g.edge_count() as u64,
                "{kind:?}"
            );
        }
    }

    #[test]
    fn path_power_examples() {
        assert_eq!(path_power_label(4, 3).unwrap().labels(), &[1, 8, 14, 19]);
        assert_eq!(path_power_label(5, 2).unwrap().labels(), &[1, 2, 3, 4, 5]);
        assert_eq!(path_power_label(3, 2).unwrap().labels(), &[1, 2, 3]);
        assert_eq!(path_power_label(9, 4), Err(Error::NotPrime { value: 4 }));
        assert!(path_power_label(3, 3).is_err());
        let g = generate(GraphKind::PathPower { n: 4, k: 3 }).unwrap();
        assert!(verify_antimagic(&g, &path_power_label(4, 3).unwrap()).unwrap());
    }

    #[test]
    fn bandwidth_examples() {
        let p4 = generate(GraphKind::Path { n: 4 }).unwrap();
        let f = bandwidth_label(&p4, &VertexOrdering::identity(4)).unwrap();
        assert_eq!(f.labels(), &[1, 2, 3, 4]);

        let c4 = generate(GraphKind::Cycle { n: 4 }).unwrap();
        let order = VertexOrdering::new(vec![0, 1, 3, 2]).unwrap();
        let f = bandwidth_label(&c4, &order).unwrap();
        assert!(verify_antimagic(&c4, &f).unwrap());
        assert!(f.max_label() <= 28);

        let edge = graph(2, &[(0, 1)]);
        let f = bandwidth_label(&edge, &VertexOrdering::identity(2)).unwrap();
        assert_eq!(f.labels(), &[1, 2]);
    }

    #[test]
    fn bandwidth_with_odd_prime() {
        let c7 = generate(GraphKind::Cycle { n: 7 }).unwrap();
        let order = VertexOrdering::identity(7); // bandwidth 6 -> p = 7
        let f = bandwidth_label(&c7, &order).unwrap();
        assert!(verify_antimagic(&c7, &f).unwrap());
        assert!(f.max_label() <= 2 * 6 * 13);
    }

    #[test]
    fn queue_examples() {
        let star = generate(GraphKind::Star { n: 4 }).unwrap();
        let f = queue_label(&star, &VertexOrdering::identity(4)).unwrap();
        assert_eq!(f.labels(), &[1, 2, 3, 4]);
        assert_eq!(f.k(), 4);
        assert!(verify_antimagic(&star, &f).unwrap());

        let c4 = generate(GraphKind::Cycle { n: 4 }).unwrap();
        assert_eq!(
            queue_label(&c4, &VertexOrdering::identity(4)),
            Err(Error::NestedEdges {
                outer: Edge(0, 3),
                inner: Edge(1, 2)
            })
        );
    }

    #[test]
    fn track_injection_checks() {
        assert!(TrackInjection::new(2, 2, vec![(1, 1), (1, 1)]).is_err());
        assert!(TrackInjection::new(2, 2, vec![(3, 1)]).is_err());

        // track pairs {1,2} and {1,3}
        let g = graph(4, &[(0, 1), (2, 3)]);
        let f = TrackInjection::new(3, 2, vec![(1, 1), (2, 1), (1, 2), (3, 1)]).unwrap();
        assert!(check_track_injection(&g, &f).unwrap());

        // two edges on track pair {1,2} with slot sums 3 and 3
        let g2 = graph(4, &[(0, 3), (1, 2)]);
        let f2 = TrackInjection::new(2, 2, vec![(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert!(!check_track_injection(&g2, &f2).unwrap());
    }

    #[test]
    fn combine_example() {
        let g = graph(4, &[(0, 2), (1, 3)]);
        let f = TrackInjection::new(2, 2, vec![(1, 1), (1, 2), (2, 1), (2, 2)]).unwrap();
        assert!(check_track_injection(&g, &f).unwrap());
        let s = SidonSet::new(vec![1, 2], 2).unwrap();
        let lam = technical_combine(&g, &f, &s).unwrap();
        assert_eq!(lam.labels(), &[1, 2, 5, 6]);
        assert!(verify_antimagic(&g, &lam).unwrap());

        let single = TrackInjection::new(1, 3, vec![(1, 2), (1, 3), (1, 1)]).unwrap();
        let lam = technical_combine(&Graph::empty(3), &single, &s).unwrap();
        assert_eq!(lam.labels(), &[2, 3, 1]);

        let bad = graph(4, &[(0, 3), (1, 2)]);
        assert!(matches!(
            technical_combine(&bad, &f, &s),
            Err(Error::EdgeMapNotInjective { .. })
        ));
    }
}
