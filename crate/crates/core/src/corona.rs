//! Generalized subdivision-vertex and subdivision-edge coronas.
//!
//! Both constructions start from the subdivision graph `S(G)` and attach one
//! graph `H_i` per attach point. Vertex labels follow a fixed block order:
//!
//! ```text
//! 0 .. n            original vertices V(G)
//! n .. n+m          subdivision vertices I(G), in canonical edge order
//! n+m ..            H_1, H_2, ... in attach-point order
//! ```
//!
//! In the vertex corona `H_i` is joined to original vertex `i`; in the edge
//! corona it is joined to the subdivision vertex of edge `i`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::DenseSymMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoronaMode {
    Vertex,
    Edge,
}

impl CoronaMode {
    /// Number of attach points for a base graph with `n` vertices, `m` edges.
    pub fn attach_points(self, n: usize, m: usize) -> usize {
        match self {
            CoronaMode::Vertex => n,
            CoronaMode::Edge => m,
        }
    }
}

impl fmt::Display for CoronaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoronaMode::Vertex => "vertex",
            CoronaMode::Edge => "edge",
        })
    }
}

impl FromStr for CoronaMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "vertex" => Ok(CoronaMode::Vertex),
            "edge" => Ok(CoronaMode::Edge),
            other => Err(format!("unknown corona mode `{other}` (expected vertex|edge)")),
        }
    }
}

/// A constructed corona together with its block index map.
#[derive(Debug, Clone, PartialEq)]
pub struct CoronaLayout {
    pub graph: Graph,
    pub mode: CoronaMode,
    pub base_n: usize,
    pub base_m: usize,
    /// Label range of each attached graph, in attach-point order.
    pub blocks: Vec<Range<usize>>,
    /// Label range of the subdivision vertices.
    pub subdivision_range: Range<usize>,
    base: Graph,
    attachments: Vec<Graph>,
}

#[derive(Serialize)]
struct LayoutJson<'a> {
    mode: CoronaMode,
    base_n: usize,
    base_m: usize,
    blocks: Vec<[usize; 2]>,
    graph: &'a Graph,
}

impl Serialize for CoronaLayout {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LayoutJson {
            mode: self.mode,
            base_n: self.base_n,
            base_m: self.base_m,
            blocks: self.blocks.iter().map(|r| [r.start, r.end]).collect(),
            graph: &self.graph,
        }
        .serialize(serializer)
    }
}

impl CoronaLayout {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn attachments(&self) -> &[Graph] {
        &self.attachments
    }

    /// Label of the vertex that block `i` is joined to.
    pub fn attach_vertex(&self, i: usize) -> usize {
        match self.mode {
            CoronaMode::Vertex => i,
            CoronaMode::Edge => self.base_n + i,
        }
    }

    /// Normalized Laplacian assembled from its closed-form blocks rather
    /// than from the constructed graph.
    ///
    /// Requires `G` to be `r`-regular and each `H_i` to be `r_i`-regular.
    /// With `t_i = |H_i|`, the nonzero off-diagonal blocks are
    ///
    /// * vertex mode: `-1/sqrt(2(r+t_v))` on `V(G) x I(G)` incidences and
    ///   `-1/sqrt((r+t_i)(r_i+1))` between vertex `i` and `H_i`;
    /// * edge mode: `-1/sqrt(r(2+t_e))` on incidences and
    ///   `-1/sqrt((2+t_i)(r_i+1))` between subdivision vertex `i` and `H_i`;
    ///
    /// and each `H_i` block is `I - A(H_i)/(r_i+1)`.
    pub fn assemble_block_laplacian(&self) -> Result<DenseSymMatrix> {
        let r = self.base.check_regular()?.degree as f64;
        let attach_degrees = self
            .attachments
            .iter()
            .map(|h| h.check_regular().map(|c| c.degree as f64))
            .collect::<Result<Vec<_>>>()?;
        let t: Vec<f64> = self.attachments.iter().map(|h| h.order() as f64).collect();

        let n = self.base_n;
        let mut l = DenseSymMatrix::identity(self.graph.order())?;

        for (e, &(u, v)) in self.base.edges().iter().enumerate() {
            for w in [u, v] {
                let c = match self.mode {
                    CoronaMode::Vertex => 1.0 / (2.0 * (r + t[w])).sqrt(),
                    CoronaMode::Edge => 1.0 / (r * (2.0 + t[e])).sqrt(),
                };
                l.set(w, n + e, -c);
            }
        }

        for (i, (h, block)) in self.attachments.iter().zip(&self.blocks).enumerate() {
            let ri = attach_degrees[i];
            let s = match self.mode {
                CoronaMode::Vertex => r + t[i],
                CoronaMode::Edge => 2.0 + t[i],
            };
            let join = 1.0 / (s * (ri + 1.0)).sqrt();
            let hub = self.attach_vertex(i);
            for w in block.clone() {
                l.set(hub, w, -join);
            }
            for &(a, b) in h.edges() {
                l.set(block.start + a, block.start + b, -1.0 / (ri + 1.0));
            }
        }
        Ok(l)
    }
}

fn build(mode: CoronaMode, g: &Graph, hs: &[Graph]) -> Result<CoronaLayout> {
    let (n, m) = (g.order(), g.size());
    if m == 0 {
        return Err(Error::EmptyBase);
    }
    let expected = mode.attach_points(n, m);
    if hs.len() != expected {
        return Err(Error::AttachmentCount {
            expected,
            got: hs.len(),
        });
    }
    if let Some(i) = hs.iter().position(|h| h.order() == 0) {
        return Err(Error::EmptyAttachment(i));
    }

    let total = n + m + hs.iter().map(Graph::order).sum::<usize>();
    let mut pairs: Vec<(usize, usize)> = g.subdivision().edges().to_vec();
    let mut blocks = Vec::with_capacity(hs.len());
    let mut next = n + m;
    for (i, h) in hs.iter().enumerate() {
        let block = next..next + h.order();
        let hub = match mode {
            CoronaMode::Vertex => i,
            CoronaMode::Edge => n + i,
        };
        pairs.extend(h.edges().iter().map(|&(a, b)| (block.start + a, block.start + b)));
        pairs.extend(block.clone().map(|w| (hub, w)));
        next = block.end;
        blocks.push(block);
    }

    Ok(CoronaLayout {
        graph: Graph::from_edge_list(total, pairs)?,
        mode,
        base_n: n,
        base_m: m,
        blocks,
        subdivision_range: n..n + m,
        base: g.clone(),
        attachments: hs.to_vec(),
    })
}

/// `H_i` joined to original vertex `i`; needs exactly `n` attached graphs.
pub fn subdivision_vertex_corona(g: &Graph, hs: &[Graph]) -> Result<CoronaLayout> {
    build(CoronaMode::Vertex, g, hs)
}

/// `H_i` joined to the subdivision vertex of edge `i`; needs exactly `m`
/// attached graphs.
pub fn subdivision_edge_corona(g: &Graph, hs: &[Graph]) -> Result<CoronaLayout> {
    build(CoronaMode::Edge, g, hs)
}

pub fn build_corona(mode: CoronaMode, g: &Graph, hs: &[Graph]) -> Result<CoronaLayout> {
    build(mode, g, hs)
}

/// Attaches a copy of `h` at every attach point.
pub fn build_uniform_corona(mode: CoronaMode, g: &Graph, h: &Graph) -> Result<CoronaLayout> {
    let k = mode.attach_points(g.order(), g.size());
    build(mode, g, &vec![h.clone(); k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::linalg::normalized_laplacian;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn vertex_corona_c4_k2_counts() {
        let lay = build_uniform_corona(CoronaMode::Vertex, &cycle(4), &complete(2)).unwrap();
        assert_eq!((lay.graph.order(), lay.graph.size()), (16, 20));
        assert_eq!(lay.blocks.len(), 4);
        assert_eq!(lay.blocks[0], 8..10);
        assert_eq!(lay.subdivision_range, 4..8);
    }

    #[test]
    fn vertex_corona_smallest_case() {
        let lay = build_uniform_corona(CoronaMode::Vertex, &complete(2), &complete(1)).unwrap();
        assert_eq!((lay.graph.order(), lay.graph.size()), (5, 4));
        assert_eq!(sorted_degrees(&lay.graph), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn vertex_corona_heterogeneous() {
        let hs = [complete(1), complete(2), cycle(3)];
        let lay = subdivision_vertex_corona(&cycle(3), &hs).unwrap();
        assert_eq!((lay.graph.order(), lay.graph.size()), (12, 16));
        let deg = lay.graph.degrees();
        // r_G(i) + t_i on original vertices
        assert_eq!(&deg[..3], &[3, 4, 5]);
        assert!(deg[3..6].iter().all(|&d| d == 2));
    }

    #[test]
    fn edge_corona_counts() {
        let lay = build_uniform_corona(CoronaMode::Edge, &cycle(4), &complete(2)).unwrap();
        assert_eq!((lay.graph.order(), lay.graph.size()), (16, 20));

        let lay = subdivision_edge_corona(&complete(2), &[complete(1)]).unwrap();
        assert_eq!((lay.graph.order(), lay.graph.size()), (4, 3));
        assert_eq!(lay.graph.degrees(), vec![1, 1, 3, 1]);

        let lay = build_uniform_corona(CoronaMode::Edge, &cycle(3), &cycle(3)).unwrap();
        assert_eq!((lay.graph.order(), lay.graph.size()), (15, 24));
        let deg = lay.graph.degrees();
        assert!(deg[..3].iter().all(|&d| d == 2));
        assert!(deg[3..6].iter().all(|&d| d == 5));
        assert!(deg[6..].iter().all(|&d| d == 3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            subdivision_vertex_corona(&cycle(4), &[complete(2)]),
            Err(Error::AttachmentCount {
                expected: 4,
                got: 1
            })
        );
        assert_eq!(
            subdivision_edge_corona(&complete(2), &[Graph::empty(0)]),
            Err(Error::EmptyAttachment(0))
        );
        assert_eq!(
            subdivision_vertex_corona(&Graph::empty(1), &[complete(1)]),
            Err(Error::EmptyBase)
        );
    }

    #[test]
    fn block_laplacian_matches_generic() {
        let lay = build_uniform_corona(CoronaMode::Vertex, &cycle(4), &complete(2)).unwrap();
        let block = lay.assemble_block_laplacian().unwrap();
        let generic = normalized_laplacian(&lay.graph).unwrap();
        assert!(block.max_abs_diff(&generic).unwrap() <= 1e-12);

        let lay = build_uniform_corona(CoronaMode::Edge, &complete(2), &complete(2)).unwrap();
        let block = lay.assemble_block_laplacian().unwrap();
        let generic = normalized_laplacian(&lay.graph).unwrap();
        assert!(block.max_abs_diff(&generic).unwrap() <= 1e-12);
    }

    #[test]
    fn block_laplacian_rejects_irregular_attachment() {
        let lay = build_uniform_corona(CoronaMode::Vertex, &cycle(4), &path(3)).unwrap();
        assert!(matches!(
            lay.assemble_block_laplacian(),
            Err(Error::NotRegular { .. })
        ));
        let lay = build_uniform_corona(CoronaMode::Edge, &path(3), &complete(2)).unwrap();
        assert!(matches!(
            lay.assemble_block_laplacian(),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn layout_json() {
        let lay = subdivision_edge_corona(&complete(2), &[complete(1)]).unwrap();
        let v = serde_json::to_value(&lay).unwrap();
        assert_eq!(v["mode"], "edge");
        assert_eq!(v["base_n"], 2);
        assert_eq!(v["base_m"], 1);
        assert_eq!(v["blocks"], serde_json::json!([[3, 4]]));
        assert_eq!(v["graph"]["n"], 4);
        assert_eq!(v["graph"]["edges"], serde_json::json!([[0, 2], [1, 2], [2, 3]]));
    }
}
