//! Order two: the classes are the ordinary eigenvalues.
use tensor_eigen::{polysolve::TrackerConfig, spectra, Tensor, C64};

fn main() -> tensor_eigen::Result<()> {
    let rows: Vec<C64> = [2., 1., 0., 1., 3., 1., 0., 1., 4.].iter().map(|&v| C64::new(v, 0.0)).collect();
    let a = Tensor::from_matrix(3, &rows)?;
    let r = spectra::eigenclasses(&a, &TrackerConfig::default())?;
    for c in &r.classes {
        println!("lambda = {:.12}  multiplicity {}", c.lambda().re, c.multiplicity);
    }
    let id = Tensor::diagonal(2, &[C64::new(1.0, 0.0); 3]);
    let r = spectra::eigenclasses(&id, &TrackerConfig::default())?;
    println!("identity: {} classes, all lambda = 1: {}", r.classes.len(), r.classes.iter().all(|c| (c.lambda() - 1.0).norm() < 1e-12));
    Ok(())
}
