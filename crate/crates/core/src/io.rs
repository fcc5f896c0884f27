//! Plain-text formats.
//!
//! ```text
//! # graph: "n m [loops]" then m edges
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! # labelling: "k <bound>" then one "id label" line per vertex
//! k 5
//! 0 1
//! 1 2
//! 2 4
//! 3 5
//! # drawing: "d <dim>" then one "id bits" line per vertex, MSB first
//! d 3
//! 0 000
//! 1 001
//! 2 011
//! 3 100
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. A bundle is a graph
//! optionally followed by a labelling section and/or a drawing section, which
//! is what the command-line stages pass to each other.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::antimagic::{Labelling, TrackInjection};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::hypercube::{BitPoint, HypercubeDrawing};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// A line number with its whitespace-separated fields.
type Record<'a> = (usize, Vec<&'a str>);

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = Record<'a>> + 'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let iter: Box<dyn Iterator<Item = Record<'a>> + 'a> = Box::new(
            text.lines()
                .enumerate()
                // `#` starts a comment, whole-line or trailing
                .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or_default().trim()))
                .filter(|(_, l)| !l.is_empty())
                .map(|(i, l)| (i, l.split_whitespace().collect())),
        );
        Lines {
            inner: iter.peekable(),
            last_line: text.lines().count(),
        }
    }

    fn next(&mut self, what: &str) -> Result<Record<'a>> {
        self.inner
            .next()
            .ok_or_else(|| parse_error(self.last_line + 1, format!("unexpected end of input, expected {what}")))
    }

    fn peek_keyword(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|(_, t)| t[0])
    }

    fn finish(&mut self) -> Result<()> {
        match self.inner.next() {
            None => Ok(()),
            Some((line, tokens)) => Err(parse_error(
                line,
                format!("unexpected trailing line `{}`", tokens.join(" ")),
            )),
        }
    }
}

fn number<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("{what} `{token}` is not a nonnegative integer")))
}

fn expect_fields(line: usize, tokens: &[&str], n: usize, shape: &str) -> Result<()> {
    if tokens.len() != n {
        return Err(parse_error(
            line,
            format!("expected `{shape}`, found `{}`", tokens.join(" ")),
        ));
    }
    Ok(())
}

fn read_graph(lines: &mut Lines) -> Result<Graph> {
    let (line, header) = lines.next("graph header `n m [loops]`")?;
    let loops = match header.len() {
        2 => false,
        3 if header[2] == "loops" => true,
        _ => {
            return Err(parse_error(
                line,
                format!("expected `n m [loops]`, found `{}`", header.join(" ")),
            ))
        }
    };
    let n: usize = number(line, header[0], "vertex count")?;
    let m: usize = number(line, header[1], "edge count")?;
    let mut pairs = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = lines.next("edge `u v`")?;
        expect_fields(line, &tokens, 2, "u v")?;
        let u: Vertex = number(line, tokens[0], "vertex")?;
        let v: Vertex = number(line, tokens[1], "vertex")?;
        // Validate here as well so errors point at the offending line.
        let e = Edge::new(u, v);
        let problem = if e.1 >= n {
            Some(Error::VertexOutOfRange { id: e.1, n })
        } else if e.is_loop() && !loops {
            Some(Error::LoopNotAllowed(e))
        } else if !seen.insert(e) {
            Some(Error::DuplicateEdge(e))
        } else {
            None
        };
        if let Some(problem) = problem {
            return Err(parse_error(line, problem.to_string()));
        }
        pairs.push((u, v));
    }
    Graph::from_edge_list(n, pairs, loops)
}

/// Reads `count` lines of `id value`, where the ids are a permutation of
/// `0..count`. `count == None` reads to the end of the input.
fn read_table<'a>(lines: &mut Lines<'a>, count: Option<usize>, what: &str) -> Result<Vec<(usize, &'a str)>> {
    let mut rows: Vec<(usize, usize, &'a str)> = Vec::new();
    while count.is_none_or(|c| rows.len() < c) {
        if count.is_none() && lines.inner.peek().is_none() {
            break;
        }
        let (line, tokens) = lines.next(&format!("`id {what}`"))?;
        expect_fields(line, &tokens, 2, &format!("id {what}"))?;
        let id: usize = number(line, tokens[0], "vertex")?;
        rows.push((line, id, tokens[1]));
    }
    let n = rows.len();
    let mut slots: Vec<Option<(usize, &'a str)>> = vec![None; n];
    for (line, id, value) in rows {
        if id >= n {
            return Err(parse_error(line, format!("vertex {id} out of range for {n} vertices")));
        }
        if slots[id].is_some() {
            return Err(parse_error(line, format!("vertex {id} listed twice")));
        }
        slots[id] = Some((line, value));
    }
    Ok(slots.into_iter().map(|s| s.expect("ids form a permutation")).collect())
}

fn read_labelling(lines: &mut Lines, n: Option<usize>) -> Result<Labelling> {
    let (line, header) = lines.next("labelling header `k <bound>`")?;
    if header.len() != 2 || header[0] != "k" {
        return Err(parse_error(
            line,
            format!("expected `k <bound>`, found `{}`", header.join(" ")),
        ));
    }
    let k: u64 = number(line, header[1], "bound")?;
    let rows = read_table(lines, n, "label")?;
    let labels = rows
        .iter()
        .map(|&(line, token)| number(line, token, "label"))
        .collect::<Result<Vec<u64>>>()?;
    Labelling::new(labels, k).map_err(|e| parse_error(line, e.to_string()))
}

fn read_drawing(lines: &mut Lines, n: Option<usize>) -> Result<HypercubeDrawing> {
    let (line, header) = lines.next("drawing header `d <dim>`")?;
    if header.len() != 2 || header[0] != "d" {
        return Err(parse_error(
            line,
            format!("expected `d <dim>`, found `{}`", header.join(" ")),
        ));
    }
    let dim: u32 = number(line, header[1], "dimension")?;
    let rows = read_table(lines, n, "bits")?;
    let points = rows
        .iter()
        .map(|&(line, token)| {
            let p: BitPoint = token.parse().map_err(|e: Error| parse_error(line, e.to_string()))?;
            if p.dim() != dim {
                return Err(parse_error(
                    line,
                    format!("point `{token}` has {} bits, expected {dim}", p.dim()),
                ));
            }
            Ok(p.bits())
        })
        .collect::<Result<Vec<u64>>>()?;
    HypercubeDrawing::new(dim, points).map_err(|e| parse_error(line, e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let g = read_graph(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

pub fn parse_labelling(text: &str) -> Result<Labelling> {
    let mut lines = Lines::new(text);
    let f = read_labelling(&mut lines, None)?;
    lines.finish()?;
    Ok(f)
}

pub fn parse_drawing(text: &str) -> Result<HypercubeDrawing> {
    let mut lines = Lines::new(text);
    let d = read_drawing(&mut lines, None)?;
    lines.finish()?;
    Ok(d)
}

/// Track injection: `t <tracks> <capacity>` then one `id track slot` line
/// per vertex, tracks and slots counted from 1.
pub fn parse_track_injection(text: &str) -> Result<TrackInjection> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next("track header `t <tracks> <capacity>`")?;
    if header.len() != 3 || header[0] != "t" {
        return Err(parse_error(
            line,
            format!("expected `t <tracks> <capacity>`, found `{}`", header.join(" ")),
        ));
    }
    let tracks: usize = number(line, header[1], "track count")?;
    let capacity: usize = number(line, header[2], "capacity")?;
    let mut rows: Vec<(usize, Option<(usize, usize)>)> = Vec::new();
    while lines.inner.peek().is_some() {
        let (line, tokens) = lines.next("`id track slot`")?;
        expect_fields(line, &tokens, 3, "id track slot")?;
        let id: usize = number(line, tokens[0], "vertex")?;
        let place = (number(line, tokens[1], "track")?, number(line, tokens[2], "slot")?);
        if id >= rows.len() {
            rows.resize(id + 1, (line, None));
        }
        if rows[id].1.is_some() {
            return Err(parse_error(line, format!("vertex {id} listed twice")));
        }
        rows[id] = (line, Some(place));
    }
    let assignment = rows
        .iter()
        .enumerate()
        .map(|(v, &(line, place))| place.ok_or_else(|| parse_error(line, format!("vertex {v} has no position"))))
        .collect::<Result<Vec<_>>>()?;
    TrackInjection::new(tracks, capacity, assignment).map_err(|e| parse_error(line, e.to_string()))
}

pub fn write_track_injection(f: &TrackInjection) -> String {
    let mut out = format!("t {} {}\n", f.tracks(), f.capacity());
    for (v, (a, i)) in f.assignment().iter().enumerate() {
        let _ = writeln!(out, "{v} {a} {i}");
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}", g.vertex_count(), g.edge_count());
    if g.allows_loops() {
        out.push_str(" loops");
    }
    out.push('\n');
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.0, e.1);
    }
    out
}

pub fn write_labelling(f: &Labelling) -> String {
    let mut out = format!("k {}\n", f.k());
    for (v, label) in f.labels().iter().enumerate() {
        let _ = writeln!(out, "{v} {label}");
    }
    out
}

pub fn write_drawing(d: &HypercubeDrawing) -> String {
    let mut out = format!("d {}\n", d.dimension());
    for (v, p) in d.points().enumerate() {
        let _ = writeln!(out, "{v} {p}");
    }
    out
}

/// A graph with the artifacts computed for it so far.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub graph: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labelling: Option<Labelling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drawing: Option<HypercubeDrawing>,
}

impl Bundle {
    pub fn new(graph: Graph) -> Self {
        Bundle {
            graph,
            labelling: None,
            drawing: None,
        }
    }

    /// Rejects artifacts whose size does not match the graph.
    fn check_sizes(&self, line: usize) -> Result<()> {
        let n = self.graph.vertex_count();
        if let Some(f) = &self.labelling {
            if f.len() != n {
                return Err(parse_error(
                    line,
                    format!("labelling has {} entries for {n} vertices", f.len()),
                ));
            }
        }
        if let Some(d) = &self.drawing {
            if d.len() != n {
                return Err(parse_error(
                    line,
                    format!("drawing has {} points for {n} vertices", d.len()),
                ));
            }
        }
        Ok(())
    }
}

/// Parses a bundle. Section bodies have exactly one line per vertex.
pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let mut lines = Lines::new(text);
    let mut bundle = Bundle::new(read_graph(&mut lines)?);
    let n = Some(bundle.graph.vertex_count());
    while let Some(keyword) = lines.peek_keyword() {
        let line = lines.inner.peek().map(|(l, _)| *l).unwrap_or_default();
        match keyword {
            "k" if bundle.labelling.is_none() => bundle.labelling = Some(read_labelling(&mut lines, n)?),
            "d" if bundle.drawing.is_none() => bundle.drawing = Some(read_drawing(&mut lines, n)?),
            "k" | "d" => return Err(parse_error(line, format!("repeated `{keyword}` section"))),
            other => {
                return Err(parse_error(
                    line,
                    format!("expected a `k` or `d` section, found `{other}`"),
                ))
            }
        }
        bundle.check_sizes(line)?;
    }
    Ok(bundle)
}

pub fn write_bundle(b: &Bundle) -> String {
    let mut out = write_graph(&b.graph);
    if let Some(f) = &b.labelling {
        out.push_str(&write_labelling(f));
    }
    if let Some(d) = &b.drawing {
        out.push_str(&write_drawing(d));
    }
    out
}

/// Parses a bundle in either format: JSON when the first non-space
/// character is `{`, text otherwise.
pub fn parse_bundle_any(text: &str) -> Result<Bundle> {
    if text.trim_start().starts_with('{') {
        let bundle: Bundle = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
        bundle.check_sizes(0)?;
        Ok(bundle)
    } else {
        parse_bundle(text)
    }
}
