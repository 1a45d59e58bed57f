use tensor_eigen::tensor::form_from_tensor;
use tensor_eigen::{catalog, polysolve::TrackerConfig, spectra};

fn main() -> tensor_eigen::Result<()> {
    let cfg = TrackerConfig::default();
    let fam = spectra::eigenclasses(&catalog::line_family(), &cfg)?;
    println!("family: positive dimensional = {}, values {:?}", fam.positive_dimensional, re(&fam.normalized_values));
    let a = catalog::symmetric_isotropic();
    let r = spectra::eigenclasses(&a, &cfg)?;
    println!("isotropic example: values {:?}, isotropic classes {}", re(&r.normalized_values), r.isotropic_count);
    let f = form_from_tensor(&a)?;
    for p in spectra::normalized_pairs(&r) {
        println!("  lambda {:+.6}: singular point of the shifted form = {}", p.lambda.re, spectra::shifted_singularity_check(&f, p.lambda, &p.x));
    }
    Ok(())
}

fn re(v: &[tensor_eigen::C64]) -> Vec<f64> {
    v.iter().map(|z| z.re).collect()
}
