//! Class counts of random tensors against ((m-1)^n - 1)/(m-2).
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tensor_eigen::{catalog, polysolve::TrackerConfig, spectra};

fn main() -> tensor_eigen::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    println!("  m  n  expected  found  paths");
    for (m, n) in [(3, 2), (4, 2), (5, 2), (3, 3), (4, 3), (3, 4)] {
        let a = catalog::random_complex(m, n, &mut rng);
        let r = spectra::eigenclasses(&a, &TrackerConfig::default())?;
        println!("{m:>3}{n:>3}{:>10}{:>7}{:>7}", r.expected_count, r.total_multiplicity, r.diagnostics.paths);
    }
    Ok(())
}
