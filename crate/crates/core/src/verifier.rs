//! Oracle-versus-prediction checks and normalized-Laplacian cospectrality
//! certificates.

use serde::Serialize;

use crate::corona::{build_corona, build_uniform_corona, CoronaMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{adjacency_spectrum, laplacian_spectrum, SpectrumMultiset};
use crate::predictor::{predict, AttachmentSpec, PredictedSpectrum, RegularGraphSpec};

/// Outcome of comparing the eigensolver spectrum of a constructed corona
/// against the closed-form prediction.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub mode: CoronaMode,
    pub instance: String,
    pub order: usize,
    pub tol: f64,
    pub max_abs_err: Option<f64>,
    pub matched: bool,
    /// First part of the prediction containing a value with no oracle
    /// eigenvalue within `tol`; `"multiplicity"` or `"cardinality"` when
    /// every value is individually present but the multisets still differ.
    pub first_mismatch: Option<String>,
    /// Why the closed form was not applied, if it was not.
    pub predictor_refusal: Option<String>,
    pub oracle: SpectrumMultiset,
    pub prediction: Option<PredictedSpectrum>,
}

fn describe(g: &Graph, hs: &[Graph]) -> String {
    let base = match g.check_regular() {
        Ok(c) => format!("G(n={}, m={}, r={})", g.order(), g.size(), c.degree),
        Err(_) => format!("G(n={}, m={})", g.order(), g.size()),
    };
    let mut params: Vec<(usize, Option<usize>)> = hs
        .iter()
        .map(|h| (h.order(), h.check_regular().ok().map(|c| c.degree)))
        .collect();
    params.dedup();
    let attach = if params.len() == 1 {
        let (t, r) = params[0];
        let r = r.map_or("-".into(), |r| r.to_string());
        format!("H(t={t}, r={r}) x{}", hs.len())
    } else {
        format!("{} heterogeneous H", hs.len())
    };
    format!("{base}; {attach}")
}

fn first_mismatch(prediction: &PredictedSpectrum, oracle: &SpectrumMultiset, tol: f64) -> Option<String> {
    let present = |x: f64| oracle.values().iter().any(|o| (o - x).abs() <= tol);
    let parts = &prediction.parts;
    if !parts.shifted_delta.iter().all(|&x| present(x)) {
        return Some("shifted_delta".into());
    }
    if parts.repeated.multiplicity > 0 && !parts.repeated.values.iter().all(|&x| present(x)) {
        return Some("repeated".into());
    }
    if !parts.cubic.iter().flatten().all(|&x| present(x)) {
        return Some("cubic".into());
    }
    if prediction.flattened.len() != oracle.len() {
        return Some("cardinality".into());
    }
    let err = prediction.flattened.max_abs_diff(oracle).unwrap_or(f64::INFINITY);
    (err > tol).then(|| "multiplicity".into())
}

/// Builds the corona, eigensolves it and compares against the closed form.
///
/// Non-uniform attachments are accepted: the report then carries the
/// oracle spectrum only, with the refusal reason and `matched = false`.
pub fn verify_theorem(mode: CoronaMode, g: &Graph, hs: &[Graph], tol: f64) -> Result<VerificationReport> {
    let layout = build_corona(mode, g, hs)?;
    let oracle = laplacian_spectrum(&layout.graph)?.with_tol(tol);
    let base = RegularGraphSpec::from_graph(g)?;

    let mut report = VerificationReport {
        mode,
        instance: describe(g, hs),
        order: layout.graph.order(),
        tol,
        max_abs_err: None,
        matched: false,
        first_mismatch: None,
        predictor_refusal: None,
        oracle,
        prediction: None,
    };

    let attachments = match AttachmentSpec::from_graphs(hs) {
        Ok(a) => a,
        Err(e @ Error::NonUniformAttachments(_)) => {
            report.predictor_refusal = Some(e.to_string());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let prediction = predict(mode, &base, &attachments)?;
    report.max_abs_err = prediction.flattened.max_abs_diff(&report.oracle);
    report.matched = report.max_abs_err.is_some_and(|e| e <= tol);
    report.first_mismatch = first_mismatch(&prediction, &report.oracle, tol);
    report.prediction = Some(prediction);
    Ok(report)
}

pub fn verify_uniform(mode: CoronaMode, g: &Graph, h: &Graph, tol: f64) -> Result<VerificationReport> {
    let k = mode.attach_points(g.order(), g.size());
    verify_theorem(mode, g, &vec![h.clone(); k], tol)
}

/// Normalized-Laplacian cospectrality of two graphs.
#[derive(Debug, Clone, Serialize)]
pub struct CospectralityCertificate {
    pub graphs: [Graph; 2],
    pub spectra: [SpectrumMultiset; 2],
    pub max_abs_diff: Option<f64>,
    pub cospectral: bool,
    /// Common degree of each graph, if regular.
    pub regular_degrees: [Option<usize>; 2],
    /// Adjacency cospectrality, computed only for regular graphs of equal
    /// degree.
    pub adjacency_cospectral: Option<bool>,
    /// `Some(false)` when the invariant screen proves the graphs
    /// non-isomorphic; `None` when the screen is inconclusive.
    pub isomorphic_hint: Option<bool>,
}

impl CospectralityCertificate {
    /// For regular same-degree pairs, ℒ-cospectrality and adjacency
    /// cospectrality must agree. Vacuously true otherwise.
    pub fn regular_equivalence_holds(&self) -> bool {
        self.adjacency_cospectral.is_none_or(|adj| adj == self.cospectral)
    }

    pub fn both_non_regular(&self) -> bool {
        self.regular_degrees.iter().all(Option::is_none)
    }
}

/// Per-vertex local invariants: degree, triangles through the vertex, and
/// components of the subgraph induced on its neighbourhood. Sorted, so it
/// is a graph invariant.
fn invariant_screen(g: &Graph) -> Vec<(usize, usize, usize)> {
    let adj = g.adjacency_lists();
    let triangles = g.triangle_counts();
    let mut screen: Vec<_> = (0..g.order())
        .map(|v| {
            let local = g.induced_subgraph(&adj[v]);
            (adj[v].len(), triangles[v], local.component_count())
        })
        .collect();
    screen.sort_unstable();
    screen
}

pub fn check_cospectral(a: &Graph, b: &Graph, tol: f64) -> Result<CospectralityCertificate> {
    let sa = laplacian_spectrum(a)?.with_tol(tol);
    let sb = laplacian_spectrum(b)?.with_tol(tol);
    let max_abs_diff = sa.max_abs_diff(&sb);
    let cospectral = max_abs_diff.is_some_and(|d| d <= tol);
    let degrees = [a, b].map(|g| g.check_regular().ok().map(|c| c.degree));

    let adjacency_cospectral = match degrees {
        [Some(x), Some(y)] if x == y => {
            let aa = adjacency_spectrum(a)?.with_tol(tol);
            let ab = adjacency_spectrum(b)?;
            Some(aa.matches(&ab))
        }
        _ => None,
    };

    let isomorphic_hint = (invariant_screen(a) != invariant_screen(b)).then_some(false);

    Ok(CospectralityCertificate {
        graphs: [a.clone(), b.clone()],
        spectra: [sa, sb],
        max_abs_diff,
        cospectral,
        regular_degrees: degrees,
        adjacency_cospectral,
        isomorphic_hint,
    })
}

/// Builds the `mode` corona of two ℒ-cospectral regular seeds with the same
/// uniform attachment `h` and certifies the results against each other.
pub fn cospectral_corona_pair(
    mode: CoronaMode,
    g1: &Graph,
    g2: &Graph,
    h: &Graph,
    tol: f64,
) -> Result<CospectralityCertificate> {
    let d1 = g1.check_regular()?.degree;
    let d2 = g2.check_regular()?.degree;
    if d1 != d2 {
        return Err(Error::DegreeMismatch(d1, d2));
    }
    let hc = h.check_regular()?;
    if !hc.connected {
        return Err(Error::Disconnected);
    }
    let seeds = check_cospectral(g1, g2, tol)?;
    if !seeds.cospectral {
        return Err(Error::NotCospectral(seeds.max_abs_diff.unwrap_or(f64::INFINITY)));
    }
    let c1 = build_uniform_corona(mode, g1, h)?;
    let c2 = build_uniform_corona(mode, g2, h)?;
    check_cospectral(&c1.graph, &c2.graph, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, rook, shrikhande};

    #[test]
    fn verify_vertex_c4_k2() {
        let r = verify_uniform(CoronaMode::Vertex, &cycle(4), &complete(2), 1e-8).unwrap();
        assert!(r.matched, "{r:?}");
        assert_eq!(r.first_mismatch, None);
        assert_eq!(r.order, 16);
    }

    #[test]
    fn verify_edge_k4_k2() {
        let r = verify_uniform(CoronaMode::Edge, &complete(4), &complete(2), 1e-8).unwrap();
        assert!(r.matched, "{r:?}");
        assert_eq!(r.prediction.as_ref().unwrap().parts.repeated.multiplicity, 2);
    }

    #[test]
    fn heterogeneous_is_refused() {
        let hs = [complete(2), complete(2), cycle(3), cycle(3)];
        let r = verify_theorem(CoronaMode::Vertex, &cycle(4), &hs, 1e-8).unwrap();
        assert!(!r.matched);
        assert!(r.prediction.is_none());
        assert!(r.predictor_refusal.is_some());
        assert_eq!(r.oracle.len(), 4 + 4 + 10);
    }

    #[test]
    fn perturbed_prediction_reports_part() {
        let r = verify_uniform(CoronaMode::Vertex, &cycle(5), &cycle(3), 1e-8).unwrap();
        let mut p = r.prediction.clone().unwrap();
        p.parts.cubic[2][1] += 1e-3;
        assert_eq!(first_mismatch(&p, &r.oracle, 1e-8).as_deref(), Some("cubic"));
    }

    #[test]
    fn cospectral_examples() {
        let c = check_cospectral(&cycle(4), &cycle(4), 1e-8).unwrap();
        assert!(c.cospectral);
        assert_eq!(c.isomorphic_hint, None);

        let c = check_cospectral(&shrikhande(), &rook(4), 1e-8).unwrap();
        assert!(c.cospectral);
        assert_eq!(c.adjacency_cospectral, Some(true));
        assert_eq!(c.isomorphic_hint, Some(false));

        let c = check_cospectral(&cycle(4), &complete(4), 1e-8).unwrap();
        assert!(!c.cospectral);
        assert_eq!(c.regular_degrees, [Some(2), Some(3)]);
        assert_eq!(c.adjacency_cospectral, None);

        let c = check_cospectral(&cycle(4), &cycle(5), 1e-8).unwrap();
        assert_eq!(c.max_abs_diff, None);
    }

    #[test]
    fn cospectral_rejects_isolated_vertex() {
        let g = complete(2).disjoint_union(&Graph::empty(1));
        assert_eq!(
            check_cospectral(&g, &cycle(3), 1e-8).unwrap_err(),
            Error::IsolatedVertex(2)
        );
    }

    #[test]
    fn corona_pair_refuses_non_cospectral_seeds() {
        let err = cospectral_corona_pair(
            CoronaMode::Vertex,
            &cycle(6),
            &cycle(3).disjoint_union(&cycle(3)),
            &complete(2),
            1e-8,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotCospectral(_)));
        let err =
            cospectral_corona_pair(CoronaMode::Vertex, &cycle(4), &complete(4), &complete(2), 1e-8).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch(2, 3));
    }

    #[test]
    fn corona_pair_identical_seeds() {
        let c = cospectral_corona_pair(CoronaMode::Vertex, &cycle(4), &cycle(4), &complete(2), 1e-8).unwrap();
        assert!(c.cospectral);
    }
}
