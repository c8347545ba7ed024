//! Closed-form normalized Laplacian spectra of the two coronas for an
//! `r`-regular base graph `G` and uniformly `r_h`-regular attachments of
//! order `t`.
//!
//! Both spectra split into three parts:
//!
//! * **shifted deltas**: `(1 + r_h δ) / (r_h + 1)` for every nonzero
//!   eigenvalue `δ` of each attached graph (one zero dropped per block);
//! * **repeated**: the eigenvalue `1` with multiplicity `m - n` (vertex mode),
//!   or both roots of
//!   `(r_h t + 2 r_h + t + 2) x^2 - (r_h t + 2 r_h + 2t + 4) x + 2`
//!   with multiplicity `m - n` each (edge mode);
//! * **cubic**: three roots per eigenvalue `μ` of `ℒ(G)`, with
//!   vertex-mode coefficients
//!   `2(r+t+r r_h+r_h t), -2(2r r_h+2r_h t+3r+3t), 2t r_h+4r+4t+r r_h μ+r μ, -r μ`
//!   and edge-mode coefficients
//!   `r_h t+2r_h+t+2, -(2r_h t+3t+4r_h+6), r_h t+r_h μ+μ+2t+4, -μ`.

mod roots;

pub use roots::{real_roots_cubic, real_roots_quadratic};

use rayon::prelude::*;
use serde::Serialize;

use crate::corona::CoronaMode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{laplacian_spectrum, SpectrumMultiset, DEFAULT_TOL};

/// Spectral data of the regular base graph.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularGraphSpec {
    pub r: usize,
    pub n: usize,
    pub m: usize,
    pub mu: SpectrumMultiset,
}

impl RegularGraphSpec {
    /// Requires a connected regular graph with at least one edge.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let cert = g.check_regular()?;
        if !cert.connected {
            return Err(Error::Disconnected);
        }
        if g.size() == 0 {
            return Err(Error::EmptyBase);
        }
        Ok(RegularGraphSpec {
            r: cert.degree,
            n: g.order(),
            m: g.size(),
            mu: laplacian_spectrum(g)?,
        })
    }
}

/// Spectral data of the attached graphs, which must share order and degree.
#[derive(Debug, Clone, PartialEq)]
pub struct AttachmentSpec {
    pub r_h: usize,
    pub t: usize,
    pub delta_lists: Vec<SpectrumMultiset>,
}

impl AttachmentSpec {
    /// `K1` has no normalized Laplacian; its spectrum is taken as `{0}`.
    pub fn from_graphs(hs: &[Graph]) -> Result<Self> {
        let first = hs.first().ok_or(Error::AttachmentCount {
            expected: 1,
            got: 0,
        })?;
        let (t, r_h) = (first.order(), first.check_regular()?.degree);
        let mut delta_lists = Vec::with_capacity(hs.len());
        for (i, h) in hs.iter().enumerate() {
            if h.order() == 0 {
                return Err(Error::EmptyAttachment(i));
            }
            let cert = h.check_regular()?;
            if h.order() != t || cert.degree != r_h {
                return Err(Error::NonUniformAttachments(format!(
                    "graph 0 has (t, r) = ({t}, {r_h}), graph {i} has ({}, {})",
                    h.order(),
                    cert.degree
                )));
            }
            if !cert.connected {
                return Err(Error::Disconnected);
            }
            let spec = if t == 1 {
                SpectrumMultiset::new(vec![0.0])
            } else {
                laplacian_spectrum(h)?
            };
            delta_lists.push(spec);
        }
        Ok(AttachmentSpec {
            r_h,
            t,
            delta_lists,
        })
    }

    /// Single graph replicated `count` times.
    pub fn uniform(h: &Graph, count: usize) -> Result<Self> {
        let one = Self::from_graphs(std::slice::from_ref(h))?;
        Ok(AttachmentSpec {
            delta_lists: vec![one.delta_lists[0].clone(); count],
            ..one
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepeatedPart {
    pub values: Vec<f64>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumParts {
    pub shifted_delta: Vec<f64>,
    pub repeated: RepeatedPart,
    pub cubic: Vec<[f64; 3]>,
}

/// Predicted spectrum grouped by origin, plus the flattened multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictedSpectrum {
    pub parts: SpectrumParts,
    pub flattened: SpectrumMultiset,
}

impl Serialize for PredictedSpectrum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use crate::linalg::round_sig12 as rnd;
        #[derive(Serialize)]
        struct Out {
            parts: SpectrumParts,
            flattened: Vec<f64>,
        }
        let p = &self.parts;
        Out {
            parts: SpectrumParts {
                shifted_delta: p.shifted_delta.iter().copied().map(rnd).collect(),
                repeated: RepeatedPart {
                    values: p.repeated.values.iter().copied().map(rnd).collect(),
                    multiplicity: p.repeated.multiplicity,
                },
                cubic: p.cubic.iter().map(|c| c.map(rnd)).collect(),
            },
            flattened: self.flattened.values().iter().copied().map(rnd).collect(),
        }
        .serialize(serializer)
    }
}

impl PredictedSpectrum {
    fn assemble(parts: SpectrumParts) -> Self {
        let mut all = parts.shifted_delta.clone();
        for &v in &parts.repeated.values {
            all.extend(std::iter::repeat_n(v, parts.repeated.multiplicity));
        }
        all.extend(parts.cubic.iter().flatten());
        PredictedSpectrum {
            flattened: SpectrumMultiset::new(all),
            parts,
        }
    }
}

fn shifted_deltas(h: &AttachmentSpec) -> Result<Vec<f64>> {
    let rh = h.r_h as f64;
    let mut out = Vec::with_capacity(h.delta_lists.len() * h.t.saturating_sub(1));
    for deltas in &h.delta_lists {
        let values = deltas.values();
        match values.first() {
            Some(&z) if z.abs() <= DEFAULT_TOL => {}
            Some(&z) => return Err(Error::MissingZeroEigenvalue(z)),
            None => return Err(Error::EmptyAttachment(0)),
        }
        out.extend(values[1..].iter().map(|&d| (1.0 + rh * d) / (rh + 1.0)));
    }
    Ok(out)
}

fn check_counts(g: &RegularGraphSpec, h: &AttachmentSpec, mode: CoronaMode) -> Result<()> {
    let expected = mode.attach_points(g.n, g.m);
    if h.delta_lists.len() != expected {
        return Err(Error::AttachmentCount {
            expected,
            got: h.delta_lists.len(),
        });
    }
    if g.m < g.n {
        return Err(Error::FewerEdgesThanVertices { n: g.n, m: g.m });
    }
    Ok(())
}

fn cubic_part<F>(mu: &SpectrumMultiset, coefficients: F) -> Result<Vec<[f64; 3]>>
where
    F: Fn(f64) -> [f64; 4] + Sync,
{
    mu.values()
        .par_iter()
        .map(|&m| {
            let [a, b, c, d] = coefficients(m);
            real_roots_cubic(a, b, c, d)
        })
        .collect()
}

/// Vertex-mode cubic coefficients `[a, b, c, d]` for one eigenvalue `mu`.
pub fn vertex_cubic_coefficients(r: f64, t: f64, r_h: f64, mu: f64) -> [f64; 4] {
    [
        2.0 * (r + t + r * r_h + r_h * t),
        -2.0 * (2.0 * r * r_h + 2.0 * r_h * t + 3.0 * r + 3.0 * t),
        2.0 * t * r_h + 4.0 * r + 4.0 * t + r * r_h * mu + r * mu,
        -r * mu,
    ]
}

/// Edge-mode cubic coefficients `[a, b, c, d]` for one eigenvalue `mu`.
pub fn edge_cubic_coefficients(t: f64, r_h: f64, mu: f64) -> [f64; 4] {
    [
        r_h * t + 2.0 * r_h + t + 2.0,
        -(2.0 * r_h * t + 3.0 * t + 4.0 * r_h + 6.0),
        r_h * t + r_h * mu + mu + 2.0 * t + 4.0,
        -mu,
    ]
}

/// Edge-mode quadratic coefficients `[a, b, c]`.
pub fn edge_quadratic_coefficients(t: f64, r_h: f64) -> [f64; 3] {
    [
        2.0 * r_h + r_h * t + t + 2.0,
        -(2.0 * r_h + r_h * t + 2.0 * t + 4.0),
        2.0,
    ]
}

pub fn predict_vertex_corona(g: &RegularGraphSpec, h: &AttachmentSpec) -> Result<PredictedSpectrum> {
    check_counts(g, h, CoronaMode::Vertex)?;
    let (r, t, rh) = (g.r as f64, h.t as f64, h.r_h as f64);
    let parts = SpectrumParts {
        shifted_delta: shifted_deltas(h)?,
        repeated: RepeatedPart {
            values: vec![1.0],
            multiplicity: g.m - g.n,
        },
        cubic: cubic_part(&g.mu, |mu| vertex_cubic_coefficients(r, t, rh, mu))?,
    };
    Ok(PredictedSpectrum::assemble(parts))
}

pub fn predict_edge_corona(g: &RegularGraphSpec, h: &AttachmentSpec) -> Result<PredictedSpectrum> {
    check_counts(g, h, CoronaMode::Edge)?;
    let (t, rh) = (h.t as f64, h.r_h as f64);
    let [qa, qb, qc] = edge_quadratic_coefficients(t, rh);
    let parts = SpectrumParts {
        shifted_delta: shifted_deltas(h)?,
        repeated: RepeatedPart {
            values: real_roots_quadratic(qa, qb, qc)?.to_vec(),
            multiplicity: g.m - g.n,
        },
        cubic: cubic_part(&g.mu, |mu| edge_cubic_coefficients(t, rh, mu))?,
    };
    Ok(PredictedSpectrum::assemble(parts))
}

pub fn predict(mode: CoronaMode, g: &RegularGraphSpec, h: &AttachmentSpec) -> Result<PredictedSpectrum> {
    match mode {
        CoronaMode::Vertex => predict_vertex_corona(g, h),
        CoronaMode::Edge => predict_edge_corona(g, h),
    }
}

/// Closed form of `Cᵀ (xI - T')⁻¹ C` for a regular attachment, where
/// `attach_degree_sum` is `r + t` (vertex mode) or `2 + t` (edge mode).
pub fn coronal_chi(r_h: usize, t: usize, attach_degree_sum: f64, x: f64) -> Result<f64> {
    let rh1 = r_h as f64 + 1.0;
    let pole = 1.0 / rh1;
    if (x - pole).abs() <= 1e-12 {
        return Err(Error::Pole(x));
    }
    Ok(t as f64 / (attach_degree_sum * rh1 * (x - pole)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn vertex_cubic_for_c4_k2_zero_mu() {
        // r=2, t=2, r_h=1, μ=0
        assert_eq!(vertex_cubic_coefficients(2.0, 2.0, 1.0, 0.0), [16.0, -40.0, 20.0, -0.0]);
    }

    #[test]
    fn edge_quadratic_for_k2() {
        assert_eq!(edge_quadratic_coefficients(2.0, 1.0), [8.0, -12.0, 2.0]);
    }

    #[test]
    fn predict_vertex_c4_k2() {
        let g = RegularGraphSpec::from_graph(&cycle(4)).unwrap();
        let h = AttachmentSpec::uniform(&complete(2), 4).unwrap();
        let p = predict_vertex_corona(&g, &h).unwrap();
        assert_eq!(p.parts.shifted_delta.len(), 4);
        assert!(p.parts.shifted_delta.iter().all(|&x| (x - 1.5).abs() < 1e-12));
        assert_eq!(p.parts.repeated.multiplicity, 0);
        let s5 = 5f64.sqrt();
        let first = p.parts.cubic[0];
        for (got, want) in first.iter().zip([0.0, (5.0 - s5) / 4.0, (5.0 + s5) / 4.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert_eq!(p.flattened.len(), 16);
        assert_eq!(p.flattened.count_near(0.0), 1);
    }

    #[test]
    fn predict_edge_repeated_multiplicity() {
        let g = RegularGraphSpec::from_graph(&complete(4)).unwrap();
        let h = AttachmentSpec::uniform(&complete(2), 6).unwrap();
        let p = predict_edge_corona(&g, &h).unwrap();
        assert_eq!(p.parts.repeated.multiplicity, 2);
        let s5 = 5f64.sqrt();
        let want = [(3.0 - s5) / 4.0, (3.0 + s5) / 4.0];
        for (got, want) in p.parts.repeated.values.iter().zip(want) {
            assert!((got - want).abs() < 1e-14);
        }
        assert_eq!(p.flattened.len(), 4 + 6 + 12);
    }

    #[test]
    fn predictor_refusals() {
        assert!(matches!(
            AttachmentSpec::from_graphs(&[complete(2), cycle(3)]),
            Err(Error::NonUniformAttachments(_))
        ));
        let g = RegularGraphSpec::from_graph(&cycle(4)).unwrap();
        let h = AttachmentSpec::uniform(&complete(2), 3).unwrap();
        assert!(matches!(
            predict_vertex_corona(&g, &h),
            Err(Error::AttachmentCount { expected: 4, got: 3 })
        ));
        let k2 = RegularGraphSpec::from_graph(&complete(2)).unwrap();
        let h = AttachmentSpec::uniform(&complete(2), 2).unwrap();
        assert_eq!(
            predict_vertex_corona(&k2, &h),
            Err(Error::FewerEdgesThanVertices { n: 2, m: 1 })
        );
        let two_c3 = cycle(3).disjoint_union(&cycle(3));
        assert_eq!(RegularGraphSpec::from_graph(&two_c3), Err(Error::Disconnected));
    }

    #[test]
    fn k1_attachments_give_no_shifted_part() {
        let h = AttachmentSpec::uniform(&complete(1), 3).unwrap();
        assert_eq!(h.delta_lists[0].values(), &[0.0]);
        assert!(shifted_deltas(&h).unwrap().is_empty());
    }

    #[test]
    fn chi_examples() {
        assert!((coronal_chi(1, 2, 4.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(coronal_chi(1, 2, 4.0, 0.5), Err(Error::Pole(_))));
        assert_eq!(coronal_chi(3, 0, 5.0, 2.0).unwrap(), 0.0);
    }
}
