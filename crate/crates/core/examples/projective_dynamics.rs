//! Orbit records `step x... distance`, ready for plotting.
use tensor_eigen::dynamics::{self, ProjPoint};
use tensor_eigen::{catalog, polysolve::TrackerConfig};

fn main() -> tensor_eigen::Result<()> {
    let a = catalog::translation();
    let cfg = TrackerConfig::default();
    for p in dynamics::base_locus(&a, &cfg)?.points {
        println!("base point: ({:.6} : {:.6})", p[0].norm(), p[1].norm());
    }
    println!("nilpotency: {:?}", dynamics::nilpotency(&a, 4, &cfg)?);
    let o = dynamics::orbit(&a, &ProjPoint::real(&[1.0, 0.0])?, 12)?;
    for (k, p) in o.points.iter().enumerate().skip(1) {
        let x = p.coords();
        println!("{k} {:.8} {:.8} {:.3e}", x[0].re, x[1].re, o.distances[k - 1]);
    }
    let c = dynamics::base_locus(&catalog::cremona(), &cfg)?;
    println!("Cremona base locus: {} points", c.points.len());
    Ok(())
}
