use tensor_eigen::exact::{self, ExactTensor};
use tensor_eigen::catalog;

fn main() -> tensor_eigen::Result<()> {
    for (name, t) in [
        ("all ones", catalog::all_ones(3, 2)),
        ("unit diagonal", catalog::diagonal_unit(3, 2)),
        ("singular, nonzero Det", catalog::singular_nonzero_det()),
    ] {
        let e = ExactTensor::from_tensor(&t)?;
        println!("{name:<22} Det = {:<4} singular = {}", exact::hyperdeterminant_222(&e)?, exact::is_singular_222(&e)?);
    }
    Ok(())
}
