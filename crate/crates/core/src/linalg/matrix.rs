use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted for dense storage.
pub const MAX_DENSE_ORDER: usize = 2000;

/// Square real matrix stored row-major with `a[i][j] == a[j][i]` exactly.
///
/// All writes go through [`DenseSymMatrix::set`], which mirrors the entry,
/// so symmetry cannot be broken after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(order: usize) -> Result<Self> {
        if order > MAX_DENSE_ORDER {
            return Err(Error::MatrixTooLarge {
                order,
                limit: MAX_DENSE_ORDER,
            });
        }
        Ok(DenseSymMatrix {
            order,
            data: vec![0.0; order * order],
        })
    }

    pub fn identity(order: usize) -> Result<Self> {
        let mut m = Self::zeros(order)?;
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        Ok(m)
    }

    /// Builds from `f(i, j)` evaluated on the upper triangle only.
    pub fn from_upper<F>(order: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> f64,
    {
        let mut m = Self::zeros(order)?;
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        Ok(m)
    }

    /// Reads a full row-major square array; rejects any asymmetric pair.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let k = rows.len();
        let mut m = Self::zeros(k)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::DimensionMismatch {
                    left: k,
                    right: row.len(),
                });
            }
            for j in i..k {
                if row[j] != rows[j][i] {
                    return Err(Error::Asymmetric(i, j));
                }
                m.set(i, j, row[j]);
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
        self.data[j * self.order + i] = value;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.order.max(1)).take(self.order).map(<[f64]>::to_vec).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_order(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(DenseSymMatrix {
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a * b).collect(),
        })
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub(crate) fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

pub fn adjacency(g: &Graph) -> Result<DenseSymMatrix> {
    let mut a = DenseSymMatrix::zeros(g.order())?;
    for &(u, v) in g.edges() {
        a.set(u, v, 1.0);
    }
    Ok(a)
}

/// `I - D^{-1/2} A D^{-1/2}`. Fails on an isolated vertex.
pub fn normalized_laplacian(g: &Graph) -> Result<DenseSymMatrix> {
    let deg = g.degrees();
    if let Some(v) = deg.iter().position(|&d| d == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let mut l = DenseSymMatrix::identity(g.order())?;
    for &(u, v) in g.edges() {
        l.set(u, v, -1.0 / ((deg[u] * deg[v]) as f64).sqrt());
    }
    Ok(l)
}
