use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tensor_eigen::{catalog, polysolve::TrackerConfig, spectra};

fn main() -> tensor_eigen::Result<()> {
    let cfg = TrackerConfig::default();
    for (name, a) in [("order 4, n = 2", catalog::no_real(4)), ("two blocks, n = 4", catalog::no_real_blocks(4, 2))] {
        let r = spectra::eigenclasses(&a, &cfg)?;
        println!("{name}: {} classes, {} real", r.classes.len(), spectra::real_classes(&r, 1e-8).len());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (m, n) in [(3, 2), (2, 3), (3, 3)] {
        let counts: Vec<usize> = (0..10)
            .map(|_| {
                let r = spectra::eigenclasses(&catalog::random_real(m, n, &mut rng), &cfg).expect("solve");
                spectra::real_classes(&r, 1e-8).len()
            })
            .collect();
        println!("random real ({m},{n}): real classes {counts:?}");
    }
    Ok(())
}
