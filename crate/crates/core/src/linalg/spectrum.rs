use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub const DEFAULT_TOL: f64 = 1e-8;

/// Eigenvalue multiset, kept sorted ascending.
///
/// Two multisets are compared by sorted pairing: equal lengths and the
/// largest elementwise gap within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumMultiset {
    values: Vec<f64>,
    tol: f64,
}

impl SpectrumMultiset {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        SpectrumMultiset {
            values,
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// `None` when the lengths differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Compares at `self`'s tolerance.
    pub fn matches(&self, other: &Self) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= self.tol)
    }

    /// Number of values within tolerance of `x`.
    pub fn count_near(&self, x: f64) -> usize {
        self.values.iter().filter(|v| (*v - x).abs() <= self.tol).count()
    }
}

/// Magnitudes below this print as zero; spectra here live on a unit scale.
const PRINT_FLOOR: f64 = 5e-13;

/// Rounds to 12 significant digits, flushing sub-`5e-13` noise and negative
/// zero to `0.0`.
pub fn round_sig12(x: f64) -> f64 {
    if x.abs() < PRINT_FLOOR || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap();
    r + 0.0
}

/// `{"order": k, "eigenvalues": [...]}` with 12 significant digits.
impl Serialize for SpectrumMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rounded: Vec<f64> = self.values.iter().copied().map(round_sig12).collect();
        let mut st = serializer.serialize_struct("Spectrum", 2)?;
        st.serialize_field("order", &self.values.len())?;
        st.serialize_field("eigenvalues", &rounded)?;
        st.end()
    }
}
