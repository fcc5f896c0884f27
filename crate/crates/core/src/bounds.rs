//! Lower and upper bounds on the labelling range and drawing volume of one
//! graph, gathered from every applicable construction, optionally alongside
//! the exact optima.

use serde::{Deserialize, Serialize};

use crate::antimagic::{bandwidth_label, greedy_degen_label, mag_lower_bound, queue_label, Labelling};
use crate::error::Result;
use crate::graph::{degeneracy_ordering, find_one_queue_layout, Graph, VertexOrdering};
use crate::hypercube::{from_antimagic, lll_draw, to_antimagic, vol_lower_bound, LllParameters, MAX_BASE3_DIMENSION};
use crate::oracle::{exact_mag, exact_vol, Outcome};
use crate::sidon::smallest_prime_at_least;

/// Where a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// `max{n, ⌈(m+3)/2⌉}` from counting edge sums.
    EdgeCount,
    /// `2^d >= n` and `3^d >= n + m`.
    SumCount,
    GreedyDegeneracy,
    /// Path-power labelling along the identity ordering.
    Bandwidth,
    QueueLayout,
    /// A drawing read back as a labelling.
    ViaDrawing,
    /// A labelling encoded in binary.
    ViaLabelling,
    Resampling,
}

/// One bound. For constructions, `value` is what the witness achieved and
/// `guarantee` is what the construction promises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub source: BoundSource,
    pub value: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub guarantee: Option<u64>,
}

/// Outcome of an exhaustive search: `value` when resolved, otherwise only
/// the refuted range below `lower`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactBound {
    pub value: Option<u64>,
    pub lower: u64,
    pub nodes_explored: u64,
}

impl<W> From<&crate::oracle::ExactResult<W>> for ExactBound {
    fn from(r: &crate::oracle::ExactResult<W>) -> Self {
        match r.outcome {
            Outcome::Exact { value, .. } => ExactBound {
                value: Some(value),
                lower: value,
                nodes_explored: r.nodes_explored,
            },
            Outcome::Unresolved { lower, .. } => ExactBound {
                value: None,
                lower,
                nodes_explored: r.nodes_explored,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsOptions {
    /// Seed for the resampling drawing.
    pub seed: u64,
    /// Run the exhaustive searches.
    pub exact: bool,
    pub mag_cap: u64,
    pub vol_cap: u32,
    /// Largest graph handed to the 1-queue layout search.
    pub queue_cap: usize,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            seed: 0,
            exact: false,
            mag_cap: 64,
            vol_cap: 6,
            queue_cap: 8,
        }
    }
}

/// Bounds for one graph. Volumes are reported as `2^d`. Pseudographs only
/// get labelling bounds, since drawings are defined for simple graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub mag_lower: Bound,
    pub mag_upper: Vec<Bound>,
    pub mag_exact: Option<ExactBound>,
    pub vol_lower: Option<Bound>,
    pub vol_upper: Vec<Bound>,
    pub vol_exact: Option<ExactBound>,
}

fn label_bound(source: BoundSource, f: &Labelling, guarantee: Option<u64>) -> Bound {
    Bound {
        source,
        value: f.max_label(),
        guarantee,
    }
}

pub fn bounds_report(g: &Graph, options: &BoundsOptions) -> Result<BoundsReport> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let degeneracy = degeneracy_ordering(g).degeneracy;
    let simple = !g.has_loops();

    let mut mag_upper = Vec::new();
    let mut vol_upper = Vec::new();
    if simple {
        let greedy = greedy_degen_label(g)?;
        mag_upper.push(label_bound(
            BoundSource::GreedyDegeneracy,
            &greedy,
            Some((n + degeneracy * m) as u64),
        ));

        let identity = VertexOrdering::identity(n);
        if n > 0 {
            let width = identity.bandwidth(g)? as u64;
            let p = smallest_prime_at_least(width.max(1));
            let f = bandwidth_label(g, &identity)?;
            mag_upper.push(label_bound(
                BoundSource::Bandwidth,
                &f,
                Some(p * (2 * n as u64).saturating_sub(1)),
            ));
        }

        if n <= options.queue_cap {
            if let Some(order) = find_one_queue_layout(g, options.queue_cap)? {
                let f = queue_label(g, &order)?;
                mag_upper.push(label_bound(BoundSource::QueueLayout, &f, Some(n as u64)));
            }
        }

        let drawing = from_antimagic(g, &greedy)?;
        vol_upper.push(Bound {
            source: BoundSource::ViaLabelling,
            value: 1 << drawing.dimension(),
            guarantee: Some(1 << drawing.dimension()),
        });

        let lll = lll_draw(g, options.seed)?;
        let promised = LllParameters::new(n, m, g.max_degree()).dimension;
        vol_upper.push(Bound {
            source: BoundSource::Resampling,
            value: 1 << lll.drawing.dimension(),
            guarantee: Some(1 << promised),
        });
        if lll.drawing.dimension() <= MAX_BASE3_DIMENSION {
            let f = to_antimagic(g, &lll.drawing)?;
            mag_upper.push(label_bound(
                BoundSource::ViaDrawing,
                &f,
                Some(3u64.pow(lll.drawing.dimension())),
            ));
        }
    }

    let (mag_exact, vol_exact) = if options.exact {
        let mag = ExactBound::from(&exact_mag(g, options.mag_cap));
        let vol = if simple {
            Some(ExactBound::from(&exact_vol(g, options.vol_cap)?))
        } else {
            None
        };
        (Some(mag), vol)
    } else {
        (None, None)
    };

    Ok(BoundsReport {
        n,
        m,
        max_degree: g.max_degree(),
        degeneracy,
        mag_lower: Bound {
            source: BoundSource::EdgeCount,
            value: mag_lower_bound(g),
            guarantee: None,
        },
        mag_upper,
        mag_exact,
        vol_lower: simple.then(|| Bound {
            source: BoundSource::SumCount,
            value: vol_lower_bound(n, m).volume as u64,
            guarantee: None,
        }),
        vol_upper,
        vol_exact,
    })
}

impl BoundsReport {
    /// Every ordering the report should satisfy that fails: lower bounds
    /// at most the optimum, the optimum at most every witness, and every
    /// witness within its guarantee.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut check = |what: &str, lower: Option<u64>, exact: Option<ExactBound>, uppers: &[Bound]| {
            let best = exact.and_then(|e| e.value);
            if let (Some(l), Some(e)) = (lower, best) {
                if l > e {
                    out.push(format!("{what}: lower bound {l} exceeds optimum {e}"));
                }
            }
            for u in uppers {
                if let Some(l) = lower {
                    if u.value < l {
                        out.push(format!(
                            "{what}: {:?} value {} below lower bound {l}",
                            u.source, u.value
                        ));
                    }
                }
                if let Some(e) = exact {
                    if u.value < e.lower {
                        out.push(format!(
                            "{what}: {:?} value {} below optimum {}",
                            u.source, u.value, e.lower
                        ));
                    }
                }
                if let Some(gu) = u.guarantee {
                    if u.value > gu {
                        out.push(format!(
                            "{what}: {:?} value {} exceeds its guarantee {gu}",
                            u.source, u.value
                        ));
                    }
                }
            }
        };
        check("labelling", Some(self.mag_lower.value), self.mag_exact, &self.mag_upper);
        check(
            "volume",
            self.vol_lower.map(|b| b.value),
            self.vol_exact,
            &self.vol_upper,
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn complete_graphs_are_consistent() {
        let options = BoundsOptions {
            exact: true,
            ..Default::default()
        };
        for n in 1..=5 {
            let g = generate(GraphKind::Complete { n }).unwrap();
            let r = bounds_report(&g, &options).unwrap();
            assert!(r.inconsistencies().is_empty(), "K_{n}: {:?}", r.inconsistencies());
            assert!(r.mag_exact.unwrap().value.is_some());
        }
        let k4 = bounds_report(&generate(GraphKind::Complete { n: 4 }).unwrap(), &options).unwrap();
        assert_eq!(k4.vol_exact.unwrap().value, Some(8));
        assert_eq!(k4.vol_lower.unwrap().value, 8);
    }

    #[test]
    fn pseudographs_skip_drawings() {
        let g = generate(GraphKind::CompletePseudo { n: 3 }).unwrap();
        let r = bounds_report(
            &g,
            &BoundsOptions {
                exact: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(r.vol_lower.is_none() && r.vol_upper.is_empty() && r.vol_exact.is_none());
        assert_eq!(r.mag_exact.unwrap().value, Some(4));
        assert!(r.inconsistencies().is_empty());
    }

    #[test]
    fn detects_violations() {
        let g = generate(GraphKind::Path { n: 3 }).unwrap();
        let mut r = bounds_report(&g, &BoundsOptions::default()).unwrap();
        r.mag_upper[0].value = 1;
        assert!(!r.inconsistencies().is_empty());
    }
}
