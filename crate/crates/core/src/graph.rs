//! Undirected graphs and pseudographs on dense vertex ids `0..n`, the graph
//! families used throughout the crate, degeneracy orderings and 1-queue
//! layouts.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex identifier. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

/// An unordered vertex pair stored with the smaller id first. A loop is `(v, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn is_loop(&self) -> bool {
        self.0 == self.1
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.0 == other.0 || self.0 == other.1 || self.1 == other.0 || self.1 == other.1
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Undirected graph without parallel edges. Loops are only admitted in
/// pseudograph mode (`allows_loops`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
    allows_loops: bool,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    #[serde(default)]
    loops: bool,
    edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::from_edge_list(raw.n, raw.edges, raw.loops)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            loops: g.allows_loops,
            edges: g.edges.iter().map(|e| (e.0, e.1)).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Each pair is normalised to
    /// `(min, max)`; input order of the edges is kept.
    pub fn from_edge_list<I>(n: usize, pairs: I, allows_loops: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in pairs {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            let e = Edge::new(u, v);
            if e.is_loop() && !allows_loops {
                return Err(Error::LoopNotAllowed(e));
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
            if !e.is_loop() {
                adjacency[e.0].push(e.1);
                adjacency[e.1].push(e.0);
            }
            edges.push(e);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
            allows_loops,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            allows_loops: false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn allows_loops(&self) -> bool {
        self.allows_loops
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Neighbours of `v` other than `v` itself, ascending.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    /// Number of distinct neighbours; a loop does not count.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return self.edges.contains(&Edge(u, u));
        }
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Spanning subgraph keeping the edges accepted by `keep`.
    pub fn restrict_edges<F: Fn(&Edge) -> bool>(&self, keep: F) -> Graph {
        Graph::from_edge_list(
            self.n,
            self.edges.iter().filter(|e| keep(e)).map(|e| (e.0, e.1)),
            self.allows_loops,
        )
        .expect("subset of a valid edge list is valid")
    }

    pub(crate) fn require_simple(&self, operation: &'static str) -> Result<()> {
        if self.has_loops() {
            Err(Error::LoopsUnsupported { operation })
        } else {
            Ok(())
        }
    }
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GraphKind {
    /// `K_n`.
    Complete {
        n: usize,
    },
    /// `K_n` with one loop at every vertex.
    CompletePseudo {
        n: usize,
    },
    /// `k`-th power of the path `v_0 … v_{n-1}`: `v_i v_j` adjacent iff `1 <= |i-j| <= k`.
    PathPower {
        n: usize,
        k: usize,
    },
    /// `K_n` with every edge subdivided once. Vertices `0..n` are the
    /// original ones, followed by one vertex per edge of `K_n` in
    /// lexicographic order.
    SubdividedComplete {
        n: usize,
    },
    /// Uniformly sampled edges, rejecting any that would push a vertex above
    /// `max_degree`, until `m` edges are placed.
    RandomBoundedDegree {
        n: usize,
        m: usize,
        max_degree: usize,
        seed: u64,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,n-1}` with centre 0.
    Star {
        n: usize,
    },
}

/// Builds the graph described by `kind`.
pub fn generate(kind: GraphKind) -> Result<Graph> {
    match kind {
        GraphKind::Complete { n } => complete(n, false),
        GraphKind::CompletePseudo { n } => complete(n, true),
        GraphKind::PathPower { n, k } => {
            if k >= n {
                return Err(Error::InvalidParameters(format!(
                    "path power needs k < n, got k={k}, n={n}"
                )));
            }
            let pairs = (0..n).flat_map(|i| ((i + 1)..n.min(i + k + 1)).map(move |j| (i, j)));
            Graph::from_edge_list(n, pairs, false)
        }
        GraphKind::SubdividedComplete { n } => {
            let mut pairs = Vec::new();
            let mut next = n;
            for i in 0..n {
                for j in (i + 1)..n {
                    pairs.push((i, next));
                    pairs.push((next, j));
                    next += 1;
                }
            }
            Graph::from_edge_list(next, pairs, false)
        }
        GraphKind::RandomBoundedDegree { n, m, max_degree, seed } => random_bounded_degree(n, m, max_degree, seed),
        GraphKind::Path { n } => Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)), false),
        GraphKind::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidParameters(format!(
                    "a cycle needs at least 3 vertices, got {n}"
                )));
            }
            Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)), false)
        }
        GraphKind::Star { n } => Graph::from_edge_list(n, (1..n).map(|i| (0, i)), false),
    }
}

fn complete(n: usize, loops: bool) -> Result<Graph> {
    let mut pairs = Vec::new();
    for i in 0..n {
        if loops {
            pairs.push((i, i));
        }
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    Graph::from_edge_list(n, pairs, loops)
}

fn random_bounded_degree(n: usize, m: usize, max_degree: usize, seed: u64) -> Result<Graph> {
    let possible = n * n.saturating_sub(1) / 2;
    if m > possible || m > n * max_degree / 2 {
        return Err(Error::InvalidParameters(format!(
            "cannot place {m} edges on {n} vertices with maximum degree {max_degree}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut seen = HashSet::with_capacity(m);
    let mut pairs = Vec::with_capacity(m);
    let budget = 1_000 + 1_000 * m as u64;
    let mut attempts = 0u64;
    while pairs.len() < m {
        if attempts == budget {
            return Err(Error::GenerationStalled {
                attempts,
                placed: pairs.len(),
                wanted: m,
            });
        }
        attempts += 1;
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || degree[u] >= max_degree || degree[v] >= max_degree {
            continue;
        }
        if seen.insert(Edge::new(u, v)) {
            degree[u] += 1;
            degree[v] += 1;
            pairs.push((u, v));
        }
    }
    Graph::from_edge_list(n, pairs, false)
}

/// A bijection from vertices to positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexOrdering {
    order: Vec<Vertex>,
    position: Vec<usize>,
}

impl VertexOrdering {
    /// `order[i]` is the vertex at position `i + 1`.
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!(
                    "vertex {v} out of range for {n} positions"
                )));
            }
            if position[v] != usize::MAX {
                return Err(Error::InvalidOrdering(format!("vertex {v} appears twice")));
            }
            position[v] = i + 1;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            position: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 1-based position of `v`.
    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub(crate) fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.len() != g.vertex_count() {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} positions but the graph has {} vertices",
                self.len(),
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// Largest position distance `|σ(v) - σ(w)|` over the edges of `g`.
    pub fn bandwidth(&self, g: &Graph) -> Result<usize> {
        self.check_covers(g)?;
        Ok(g.edges()
            .iter()
            .map(|e| self.position(e.0).abs_diff(self.position(e.1)))
            .max()
            .unwrap_or(0))
    }
}

impl TryFrom<Vec<Vertex>> for VertexOrdering {
    type Error = Error;

    fn try_from(order: Vec<Vertex>) -> Result<Self> {
        VertexOrdering::new(order)
    }
}

impl From<VertexOrdering> for Vec<Vertex> {
    fn from(o: VertexOrdering) -> Self {
        o.order
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyResult {
    /// Vertices in the order they were removed.
    pub ordering: Vec<Vertex>,
    pub degeneracy: usize,
}

impl DegeneracyResult {
    /// Reverse of the elimination order: every vertex has at most
    /// `degeneracy` neighbours earlier in this sequence.
    pub fn insertion_order(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.ordering.iter().rev().copied()
    }
}

/// Repeatedly removes a vertex of minimum remaining degree (lowest id on
/// ties). The degeneracy is the largest degree seen at removal time. Loops
/// are ignored.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyResult {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut degeneracy = 0;
    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        ordering.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }
    DegeneracyResult { ordering, degeneracy }
}

/// Returns a pair of vertex-disjoint edges `(outer, inner)` with
/// `σ(outer.a) < σ(inner.a) < σ(inner.b) < σ(outer.b)`, if one exists.
pub fn find_nested_pair(g: &Graph, order: &VertexOrdering) -> Result<Option<(Edge, Edge)>> {
    order.check_covers(g)?;
    let mut spans: Vec<(usize, usize, Edge)> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|&e| {
            let (a, b) = (order.position(e.0), order.position(e.1));
            (a.min(b), a.max(b), e)
        })
        .collect();
    spans.sort_unstable_by_key(|&(l, r, _)| (l, r));
    // Widest span among edges with a strictly smaller left end.
    let mut widest: Option<(usize, Edge)> = None;
    let mut i = 0;
    while i < spans.len() {
        let left = spans[i].0;
        let mut j = i;
        while j < spans.len() && spans[j].0 == left {
            if let Some((right, outer)) = widest {
                if spans[j].1 < right {
                    return Ok(Some((outer, spans[j].2)));
                }
            }
            j += 1;
        }
        let (_, r, e) = spans[j - 1];
        if widest.is_none_or(|(right, _)| r > right) {
            widest = Some((r, e));
        }
        i = j;
    }
    Ok(None)
}

/// True iff no two vertex-disjoint edges nest under `order`.
pub fn is_one_queue_ordering(g: &Graph, order: &VertexOrdering) -> Result<bool> {
    Ok(find_nested_pair(g, order)?.is_none())
}

/// Default vertex cap for [`find_one_queue_layout`].
pub const DEFAULT_QUEUE_SEARCH_CAP: usize = 10;

/// Exhaustive search for a 1-queue vertex ordering. Partial orderings are
/// extended one position at a time and abandoned as soon as some edge, placed
/// or still pending, is forced to nest another.
pub fn find_one_queue_layout(g: &Graph, n_cap: usize) -> Result<Option<VertexOrdering>> {
    let n = g.vertex_count();
    if n > n_cap {
        return Err(Error::SearchCapExceeded { n, cap: n_cap });
    }
    // A 1-queue graph on n >= 2 vertices has at most 2n - 3 edges.
    let simple_edges = g.edges().iter().filter(|e| !e.is_loop()).count();
    if n >= 2 && simple_edges > 2 * n - 3 {
        return Ok(None);
    }
    // Non-adjacent vertices with equal neighbourhoods can be swapped in any
    // layout, so only the lowest unplaced one of each class is tried.
    let twin_of = (0..n)
        .map(|v| (0..v).find(|&u| g.neighbors(u) == g.neighbors(v)))
        .collect();
    let mut search = QueueSearch {
        g,
        order: Vec::with_capacity(n),
        position: vec![None; n],
        pending: (0..n).map(|v| g.degree(v)).collect(),
        twin_of,
    };
    if search.extend(0) {
        Ok(Some(
            VertexOrdering::new(search.order).expect("search builds a permutation"),
        ))
    } else {
        Ok(None)
    }
}

struct QueueSearch<'a> {
    g: &'a Graph,
    order: Vec<Vertex>,
    position: Vec<Option<usize>>,
    /// Neighbours not yet placed.
    pending: Vec<usize>,
    twin_of: Vec<Option<Vertex>>,
}

impl QueueSearch<'_> {
    // `max_left` is the largest left position among edges already fully
    // placed. An edge whose right end is placed later nests one of them iff
    // its left end is smaller, so every placed vertex that still has
    // unplaced neighbours must sit at or beyond `max_left`.
    fn extend(&mut self, max_left: usize) -> bool {
        let p = self.order.len();
        let n = self.g.vertex_count();
        if p == n {
            return true;
        }
        for v in 0..n {
            if self.position[v].is_some() {
                continue;
            }
            if self.twin_of[v].is_some_and(|u| self.position[u].is_none()) {
                continue;
            }
            let lefts = self.g.neighbors(v).iter().filter_map(|&u| self.position[u]);
            let next_max = lefts.max().map_or(max_left, |a| a.max(max_left));
            self.position[v] = Some(p);
            for &u in self.g.neighbors(v) {
                self.pending[u] -= 1;
            }
            // Edges into `v` start at vertices that were open before, so
            // they already satisfy the condition against `max_left`.
            let feasible = self
                .order
                .iter()
                .filter(|&&w| self.pending[w] > 0)
                .all(|&w| self.position[w].is_some_and(|a| a >= next_max));
            if feasible {
                self.order.push(v);
                if self.extend(next_max) {
                    return true;
                }
                self.order.pop();
            }
            for &u in self.g.neighbors(v) {
                self.pending[u] += 1;
            }
            self.position[v] = None;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, pairs.iter().copied(), false).unwrap()
    }

    #[test]
    fn edge_list_normalises_and_validates() {
        let p3 = graph(3, &[(1, 0), (1, 2)]);
        assert_eq!(p3.edges(), &[Edge(0, 1), Edge(1, 2)]);
        assert_eq!(p3.degree(1), 2);

        let single = graph(1, &[]);
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));

        assert_eq!(
            Graph::from_edge_list(2, [(0, 0)], false),
            Err(Error::LoopNotAllowed(Edge(0, 0)))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1), (1, 0)], false),
            Err(Error::DuplicateEdge(Edge(0, 1)))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)], false),
            Err(Error::VertexOutOfRange { id: 3, n: 3 })
        );
        let looped = Graph::from_edge_list(2, [(0, 0), (0, 1)], true).unwrap();
        assert!(looped.has_loops());
        assert_eq!(looped.degree(0), 1);
    }

    #[test]
    fn generators() {
        let pp = generate(GraphKind::PathPower { n: 4, k: 2 }).unwrap();
        let mut edges = pp.edges().to_vec();
        edges.sort();
        assert_eq!(edges, vec![Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(1, 3), Edge(2, 3)]);
        assert!(generate(GraphKind::PathPower { n: 4, k: 4 }).is_err());

        assert_eq!(generate(GraphKind::Complete { n: 4 }).unwrap().edge_count(), 6);

        let sub = generate(GraphKind::SubdividedComplete { n: 3 }).unwrap();
        assert_eq!((sub.vertex_count(), sub.edge_count()), (6, 6));

        let kp = generate(GraphKind::CompletePseudo { n: 3 }).unwrap();
        assert_eq!(kp.edge_count(), 6);
        assert!(kp.has_loops());
    }

    #[test]
    fn path_power_edge_count_formula() {
        for n in 2..15 {
            for k in 1..n {
                let g = generate(GraphKind::PathPower { n, k }).unwrap();
                assert_eq!(2 * g.edge_count(), 2 * k * n - k * (k + 1));
            }
        }
    }

    #[test]
    fn random_generator_is_seeded_and_capped() {
        let kind = GraphKind::RandomBoundedDegree {
            n: 40,
            m: 60,
            max_degree: 4,
            seed: 7,
        };
        let a = generate(kind).unwrap();
        let b = generate(kind).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 60);
        assert!(a.max_degree() <= 4);
        let c = generate(GraphKind::RandomBoundedDegree {
            n: 40,
            m: 60,
            max_degree: 4,
            seed: 8,
        })
        .unwrap();
        assert_ne!(a, c);
        assert!(generate(GraphKind::RandomBoundedDegree {
            n: 5,
            m: 11,
            max_degree: 4,
            seed: 0
        })
        .is_err());
    }

    #[test]
    fn degeneracy_examples() {
        let k4 = generate(GraphKind::Complete { n: 4 }).unwrap();
        assert_eq!(degeneracy_ordering(&k4).degeneracy, 3);
        for n in 2..8 {
            let g = generate(GraphKind::SubdividedComplete { n }).unwrap();
            assert_eq!(degeneracy_ordering(&g).degeneracy, if n == 2 { 1 } else { 2 });
        }
        let tree = graph(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]);
        let res = degeneracy_ordering(&tree);
        assert_eq!(res.degeneracy, 1);
        // Leaf 1 has the lowest id among the minimum-degree vertices.
        assert_eq!(res.ordering[0], 1);
    }

    #[test]
    fn vertex_ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![0, 2]).is_err());
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.position(2), 1);
        assert_eq!(o.position(1), 3);
    }

    #[test]
    fn one_queue_examples() {
        let p4 = generate(GraphKind::Path { n: 4 }).unwrap();
        assert!(is_one_queue_ordering(&p4, &VertexOrdering::identity(4)).unwrap());

        let star = generate(GraphKind::Star { n: 4 }).unwrap();
        assert!(is_one_queue_ordering(&star, &VertexOrdering::identity(4)).unwrap());

        let c4 = generate(GraphKind::Cycle { n: 4 }).unwrap();
        let nested = find_nested_pair(&c4, &VertexOrdering::identity(4)).unwrap();
        assert_eq!(nested, Some((Edge(0, 3), Edge(1, 2))));
    }

    #[test]
    fn loops_never_nest() {
        let g = Graph::from_edge_list(3, [(0, 2), (1, 1)], true).unwrap();
        assert!(is_one_queue_ordering(&g, &VertexOrdering::identity(3)).unwrap());
    }

    #[test]
    fn queue_layout_search() {
        let p5 = generate(GraphKind::Path { n: 5 }).unwrap();
        let found = find_one_queue_layout(&p5, 10).unwrap().unwrap();
        assert_eq!(found, VertexOrdering::identity(5));

        let k5 = generate(GraphKind::Complete { n: 5 }).unwrap();
        assert_eq!(find_one_queue_layout(&k5, 10).unwrap(), None);

        let edge = graph(2, &[(0, 1)]);
        assert!(find_one_queue_layout(&edge, 10).unwrap().is_some());

        let big = Graph::empty(11);
        assert_eq!(
            find_one_queue_layout(&big, DEFAULT_QUEUE_SEARCH_CAP),
            Err(Error::SearchCapExceeded { n: 11, cap: 10 })
        );
    }

    #[test]
    fn bandwidth_of_orderings() {
        let c4 = generate(GraphKind::Cycle { n: 4 }).unwrap();
        assert_eq!(VertexOrdering::identity(4).bandwidth(&c4).unwrap(), 3);
        let better = VertexOrdering::new(vec![0, 1, 3, 2]).unwrap();
        assert_eq!(better.bandwidth(&c4).unwrap(), 2);
    }
}
