use tensor_eigen::tensor::equivalent;
use tensor_eigen::{polysolve::TrackerConfig, spectra, Tensor, C64};

fn main() -> tensor_eigen::Result<()> {
    let d = [C64::new(1.0, 0.0), C64::new(2.0, 0.0), C64::new(0.5, 1.0)];
    let m = 4;
    let a = Tensor::diagonal(m, &d);
    let solved = spectra::eigenclasses(&a, &TrackerConfig::default())?;
    let closed = spectra::diagonal_classes(&d, m)?;
    let matched = closed
        .iter()
        .filter(|w| solved.classes.iter().any(|c| equivalent(&c.representative, &w.representative, m, 1e-9)))
        .count();
    println!("closed form: {} classes, solver: {}, matched: {matched}", closed.len(), solved.classes.len());
    for c in &closed {
        let x: Vec<String> = c.representative.x.iter().map(|z| format!("{:.4}", z)).collect();
        println!("  lambda = {:.6}  x = ({})", c.lambda(), x.join(", "));
    }
    Ok(())
}
