//! The Motzkin form is nonnegative but not a sum of squares; its
//! eigenvalues certify the first fact.
use tensor_eigen::{catalog, polysolve::TrackerConfig, spectra};

fn main() -> tensor_eigen::Result<()> {
    let cfg = TrackerConfig::default();
    let r = spectra::eigenclasses(&catalog::motzkin(), &cfg)?;
    println!("{} classes over {} paths, {} isotropic", r.total_multiplicity, r.diagnostics.paths, r.isotropic_count);
    for (v, k) in &r.value_multiplicities {
        println!("  normalized value {:>10.6}  multiplicity {k}", v.re);
    }
    println!("PSD: {}", spectra::is_positive_semidefinite(&catalog::motzkin_form(), &cfg, 1e-8)?);
    Ok(())
}
