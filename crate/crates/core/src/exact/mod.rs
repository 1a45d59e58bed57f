//! Exact Gaussian-rational arithmetic, resultants and 2x2x2 certificates.

pub mod charpoly;
pub mod gaussian;
pub mod poly;
pub mod resultant;

pub use charpoly::{
    charpoly_exact_2_3, hyperdeterminant_222, is_singular_222, res_x_222, sum_of_squares_222, CharPolyMethod,
    ExactCharPoly,
};
pub use gaussian::{GaussianRational, GR};
pub use poly::ExactPoly;
pub use resultant::{bareiss_det, det_gr, sylvester_matrix, sylvester_resultant};

use crate::error::{Error, Result};
use crate::tensor::Tensor;

/// Dense tensor with exact entries, same indexing as [`Tensor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactTensor {
    order: usize,
    dim: usize,
    entries: Vec<GR>,
}

impl ExactTensor {
    pub fn new(order: usize, dim: usize, entries: Vec<GR>) -> Result<Self> {
        if order < 2 || dim < 1 {
            return Err(Error::InvalidTensor(format!("order {order}, dimension {dim}")));
        }
        let len = dim.pow(order as u32);
        if entries.len() != len {
            return Err(Error::DimensionMismatch { expected: len, got: entries.len() });
        }
        Ok(ExactTensor { order, dim, entries })
    }

    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> GR) -> Self {
        let len = dim.pow(order as u32);
        let t = Tensor::zeros(order, dim);
        let entries = (0..len).map(|k| f(&t.multi_index(k))).collect();
        ExactTensor { order, dim, entries }
    }

    /// Exact image of a floating tensor (every double is a dyadic rational).
    pub fn from_tensor(a: &Tensor) -> Result<Self> {
        let entries = a.entries().iter().map(|&z| GR::from_c64(z)).collect::<Result<_>>()?;
        ExactTensor::new(a.order(), a.dim(), entries)
    }

    pub fn to_tensor(&self) -> Tensor {
        Tensor::new(self.order, self.dim, self.entries.iter().map(GR::to_c64).collect()).expect("same shape")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[GR] {
        &self.entries
    }

    pub fn get(&self, idx: &[usize]) -> &GR {
        &self.entries[idx.iter().fold(0, |acc, &i| acc * self.dim + i)]
    }

    pub fn scale(&self, s: &GR) -> ExactTensor {
        ExactTensor { entries: self.entries.iter().map(|e| e * s).collect(), ..self.clone() }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, other: &ExactTensor, s: &GR) -> Result<ExactTensor> {
        if other.order != self.order || other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.entries.len(), got: other.entries.len() });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + &(b * s)).collect();
        Ok(ExactTensor { entries, ..self.clone() })
    }

    pub(crate) fn require_222(&self) -> Result<()> {
        if self.order != 3 || self.dim != 2 {
            return Err(Error::UnsupportedFormat(format!(
                "expected a 2x2x2 tensor, got order {} dimension {}",
                self.order, self.dim
            )));
        }
        Ok(())
    }
}
