fn main() {
    std::process::exit(tensor_eigen::cli::main_with_args(std::env::args_os()));
}
