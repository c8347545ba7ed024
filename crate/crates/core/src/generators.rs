//! Named graph families used by the test battery and the CLI.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    Graph::from_edge_list(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
}

pub fn path(k: usize) -> Graph {
    Graph::from_edge_list(k, (1..k).map(|i| (i - 1, i))).unwrap()
}

pub fn complete(k: usize) -> Graph {
    Graph::from_edge_list(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)))).unwrap()
}

/// `d`-dimensional hypercube `Q_d`.
pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let pairs = (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))));
    Graph::from_edge_list(n, pairs).unwrap()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i + 5)`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edge_list(10, outer.chain(inner).chain(spokes)).unwrap()
}

/// Cayley graph on `Z4 x Z4` with connection set `±{(1,0), (0,1), (1,1)}`.
/// Vertex `(a, b)` has label `4a + b`.
pub fn shrikhande() -> Graph {
    const STEPS: [(usize, usize); 6] = [(1, 0), (0, 1), (1, 1), (3, 0), (0, 3), (3, 3)];
    let pairs = (0..16).flat_map(|v| {
        let (a, b) = (v / 4, v % 4);
        STEPS.map(|(da, db)| (v, 4 * ((a + da) % 4) + (b + db) % 4))
    });
    Graph::from_edge_list(16, pairs).unwrap()
}

/// Rook's graph `K_k □ K_k`: cells of a `k x k` board, adjacent when they
/// share a row or a column.
pub fn rook(k: usize) -> Graph {
    let n = k * k;
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let same_row = u / k == v / k;
            let same_col = u % k == v % k;
            if same_row != same_col {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs).unwrap()
}

/// Parses generator specs of the form `gen:<name>[:<param>]`, e.g.
/// `gen:cycle:6`, `gen:complete:2`, `gen:hypercube:3`, `gen:shrikhande`.
pub fn from_spec(spec: &str) -> Result<Graph> {
    let body = spec
        .strip_prefix("gen:")
        .ok_or_else(|| Error::UnknownGenerator(spec.to_string()))?;
    let (name, param) = match body.split_once(':') {
        Some((name, p)) => (name, Some(p)),
        None => (body, None),
    };
    let unknown = || Error::UnknownGenerator(spec.to_string());
    let int = |min: usize| -> Result<usize> {
        param
            .and_then(|p| p.parse::<usize>().ok())
            .filter(|&k| k >= min)
            .ok_or_else(unknown)
    };
    let g = match name {
        "cycle" => cycle(int(3)?),
        "path" => path(int(1)?),
        "complete" => complete(int(1)?),
        "hypercube" => {
            let d = int(0)?;
            if d > 10 {
                return Err(unknown());
            }
            hypercube(d as u32)
        }
        "rook" => rook(param.map_or(Ok(4), |_| int(1))?),
        "rook44" if param.is_none() => rook(4),
        "petersen" if param.is_none() => petersen(),
        "shrikhande" if param.is_none() => shrikhande(),
        _ => return Err(unknown()),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn common_neighbours(g: &Graph, u: usize, v: usize) -> usize {
        let adj = g.adjacency_lists();
        adj[u].iter().filter(|w| adj[v].contains(w)).count()
    }

    fn assert_srg(g: &Graph, k: usize, lambda: usize, mu: usize) {
        assert_eq!(g.check_regular().unwrap().degree, k);
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let c = common_neighbours(g, u, v);
                if g.has_edge(u, v) {
                    assert_eq!(c, lambda, "edge ({u},{v})");
                } else {
                    assert_eq!(c, mu, "non-edge ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn shrikhande_and_rook_are_srg_16_6_2_2() {
        assert_srg(&shrikhande(), 6, 2, 2);
        assert_srg(&rook(4), 6, 2, 2);
        assert_eq!(shrikhande().size(), 48);
        assert_eq!(rook(4).size(), 48);
    }

    #[test]
    fn petersen_is_srg_10_3_0_1() {
        assert_srg(&petersen(), 3, 0, 1);
    }

    #[test]
    fn hypercube_q3() {
        let q = hypercube(3);
        assert_eq!((q.order(), q.size()), (8, 12));
        assert_eq!(q.check_regular().unwrap().degree, 3);
        assert!(q.two_coloring().is_some());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(from_spec("gen:cycle:6").unwrap(), cycle(6));
        assert_eq!(from_spec("gen:complete:2").unwrap(), complete(2));
        assert_eq!(from_spec("gen:shrikhande").unwrap(), shrikhande());
        assert_eq!(from_spec("gen:rook44").unwrap(), rook(4));
        assert_eq!(from_spec("gen:rook:3").unwrap(), rook(3));
        assert_eq!(from_spec("gen:hypercube:3").unwrap(), hypercube(3));
        assert!(from_spec("gen:cycle:2").is_err());
        assert!(from_spec("gen:cycle").is_err());
        assert!(from_spec("gen:nope:3").is_err());
        assert!(from_spec("cycle:3").is_err());
    }
}
