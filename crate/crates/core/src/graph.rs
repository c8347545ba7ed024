//! Simple undirected graphs in canonical edge-list form, plus the derived
//! graphs the corona constructions are built from.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically and
/// free of duplicates. The position of an edge in [`Graph::edges`] is its
/// edge index; subdivision labels and edge-corona blocks are keyed on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::from_edge_list(raw.n, raw.edges)
    }
}

/// Common degree and connectivity of a regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityCertificate {
    pub degree: usize,
    pub connected: bool,
}

impl Graph {
    /// Builds the canonical graph from arbitrary pairs. Reversed and repeated
    /// pairs collapse to a single edge.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// `n` vertices, no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Returns the common degree, or the first pair of vertices whose
    /// degrees differ.
    pub fn check_regular(&self) -> Result<RegularityCertificate> {
        let deg = self.degrees();
        let degree = deg.first().copied().unwrap_or(0);
        if let Some((v, &dv)) = deg.iter().enumerate().find(|&(_, &d)| d != degree) {
            return Err(Error::NotRegular {
                u: 0,
                du: degree,
                v,
                dv,
            });
        }
        Ok(RegularityCertificate {
            degree,
            connected: self.is_connected(),
        })
    }

    /// Vertex-edge incidence pairs `(v, e)`, ordered by edge index then
    /// endpoint. Exactly `2m` pairs.
    pub fn incidence_pairs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(e, &(u, v))| [(u, e), (v, e)])
            .collect()
    }

    /// Replaces every edge `e = (u, v)` by the path `u - (n + e) - v`.
    pub fn subdivision(&self) -> Graph {
        let n = self.n;
        let pairs = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(e, &(u, v))| [(u, n + e), (v, n + e)]);
        Graph::from_edge_list(n + self.size(), pairs).expect("subdivision of a valid graph")
    }

    /// Vertex `e` of the result is edge `e` of `self`; two are adjacent when
    /// the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut incident = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
        }
        let mut pairs = Vec::new();
        for list in &incident {
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        Graph::from_edge_list(self.size(), pairs).expect("line graph of a valid graph")
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency_lists();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// Number of triangles through each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        let adj = self.adjacency_lists();
        (0..self.n)
            .map(|v| {
                let nb = &adj[v];
                let mut count = 0;
                for (i, &a) in nb.iter().enumerate() {
                    for &b in &nb[i + 1..] {
                        if self.has_edge(a, b) {
                            count += 1;
                        }
                    }
                }
                count
            })
            .collect()
    }

    /// Subgraph induced on `vertices`, relabelled by position.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edge_list(vertices.len(), pairs).expect("induced subgraph of a valid graph")
    }
}
