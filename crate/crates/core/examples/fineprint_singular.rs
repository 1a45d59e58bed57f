//! A tensor for which every vector is an eigenvector: `A x^2 = (x1 + i x2) x`.
use tensor_eigen::exact::{self, ExactTensor};
use tensor_eigen::{catalog, polysolve::TrackerConfig, spectra};

fn main() -> tensor_eigen::Result<()> {
    let a = catalog::fineprint();
    let probe = spectra::singular_probe(&a, 5, &TrackerConfig::default())?;
    println!("probe: {:?} ({} of {} trials hit)", probe.kind, probe.hits, probe.trials);
    let p = exact::charpoly_exact_2_3(&ExactTensor::from_tensor(&a)?)?;
    let [c2, c4, c6, c8] = p.coefficients();
    println!("exact: C2 = {c2}, C4 = {c4}, C6 = {c6}, C8 = {c8}");
    Ok(())
}
