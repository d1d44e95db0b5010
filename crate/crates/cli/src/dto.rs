//! JSON wire formats and conversions to and from the core types.
//! Unknown fields are rejected everywhere so that schema drift fails
//! loudly instead of being silently ignored.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use nbhc_core::complex::SimplicialComplex;
use nbhc_core::graph::{Digraph, Graph};
use nbhc_core::grouppres::GroupPresentation;
use nbhc_core::homology::HomologyResult;
use nbhc_core::hypergraph::Hypergraph;
use nbhc_core::metric::{FiniteMetricSpace, Rational};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDto {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
}

impl GraphDto {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDto { kind: "graph".into(), n: g.vertex_count(), edges: g.edges().collect() }
    }

    pub fn from_digraph(x: &Digraph) -> Self {
        GraphDto { kind: "digraph".into(), n: x.vertex_count(), edges: x.arcs().collect() }
    }

    pub fn to_graph(&self) -> Result<Graph, String> {
        if self.kind != "graph" {
            return Err(format!("expected a graph, got type \"{}\"", self.kind));
        }
        Graph::new(self.n, self.edges.iter().copied()).map_err(|e| e.to_string())
    }

    pub fn to_digraph(&self) -> Result<Digraph, String> {
        if self.kind != "digraph" {
            return Err(format!("expected a digraph, got type \"{}\"", self.kind));
        }
        Digraph::new(self.n, self.edges.iter().copied()).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDto {
    pub ground: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub void: Option<bool>,
}

impl ComplexDto {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        if k.is_void() {
            ComplexDto { ground: k.ground().to_vec(), facets: None, void: Some(true) }
        } else {
            ComplexDto {
                ground: k.ground().to_vec(),
                facets: Some(k.facets().to_vec()),
                void: None,
            }
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, String> {
        match (self.void, &self.facets) {
            (Some(true), None) => Ok(SimplicialComplex::void(self.ground.clone())),
            (None | Some(false), Some(facets)) => Ok(SimplicialComplex::from_generating_sets(
                self.ground.clone(),
                facets.clone(),
            )),
            _ => Err("complex needs either \"facets\" or \"void\": true".into()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDto {
    pub n: u32,
    pub hyperedges: Vec<Vec<u32>>,
}

impl HypergraphDto {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        HypergraphDto { n: h.vertex_count(), hyperedges: h.hyperedges().cloned().collect() }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph, String> {
        Hypergraph::new(self.n, self.hyperedges.iter().cloned()).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyGroupDto {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyDto {
    pub dims: BTreeMap<String, HomologyGroupDto>,
}

impl HomologyDto {
    pub fn from_result(h: &HomologyResult) -> Self {
        let dims = h
            .nontrivial_dims()
            .map(|d| {
                let torsion = h
                    .torsion(d)
                    .iter()
                    .map(|t| t.to_u64().expect("torsion order too large for wire format"))
                    .collect();
                (d.to_string(), HomologyGroupDto { betti: h.betti(d), torsion })
            })
            .collect();
        HomologyDto { dims }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDto {
    pub generators: usize,
    pub relators: Vec<Vec<i64>>,
}

impl PresentationDto {
    pub fn from_presentation(p: &GroupPresentation) -> Self {
        PresentationDto { generators: p.generator_count(), relators: p.relators().to_vec() }
    }

    pub fn to_presentation(&self) -> GroupPresentation {
        GroupPresentation::new(self.generators, self.relators.clone())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricDto {
    pub n: usize,
    pub dist: Vec<Vec<String>>,
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let bad = |_| format!("cannot parse rational \"{s}\"");
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(bad)?;
            let q: i64 = q.trim().parse().map_err(bad)?;
            if q == 0 {
                return Err(format!("zero denominator in \"{s}\""));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: i64 = s.trim().parse().map_err(bad)?;
            Ok(Rational::from_integer(p))
        }
    }
}

pub fn format_rational(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl MetricDto {
    pub fn from_metric(x: &FiniteMetricSpace) -> Self {
        MetricDto {
            n: x.point_count(),
            dist: x
                .distances()
                .iter()
                .map(|row| row.iter().map(|&d| format_rational(d)).collect())
                .collect(),
        }
    }

    pub fn to_metric(&self) -> Result<FiniteMetricSpace, String> {
        if self.dist.len() != self.n {
            return Err("\"dist\" row count disagrees with \"n\"".into());
        }
        let rows: Result<Vec<Vec<Rational>>, String> = self
            .dist
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect())
            .collect();
        FiniteMetricSpace::new(rows?).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FailureDto {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDto {
    pub suite: String,
    pub seed: u64,
    pub cases: u64,
    pub failures: Vec<FailureDto>,
    pub inconclusive: u64,
}
