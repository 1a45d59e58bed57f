use tensor_eigen::exact::{self, ExactTensor, GR};

fn main() -> tensor_eigen::Result<()> {
    let vals = [(1, 2), (-3, 1), (0, 1), (2, 3), (5, 4), (-1, 1), (1, 1), (7, 5)];
    let a = ExactTensor::new(3, 2, vals.iter().map(|&(p, q)| GR::ratio(p, q)).collect())?;
    let p = exact::charpoly_exact_2_3(&a)?;
    let [c2, c4, c6, c8] = p.coefficients();
    println!("phi(mu) = ({c2}) mu^3 + ({c4}) mu^2 + ({c6}) mu + ({c8})   [{:?}]", p.method);
    println!("sum of squares = {}", exact::sum_of_squares_222(&a)?);
    let r = exact::res_x_222(&a)?;
    println!("Res_x(A x^2) = {r}, squared = {}", &r * &r);
    Ok(())
}
