//! E-eigenpairs of complex tensors.

pub mod catalog;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod polysolve;
pub mod spectra;
pub mod tensor;

pub use error::{Error, Result};
pub use tensor::{C64, EigenClass, EigenPair, PolyForm, Tensor};
