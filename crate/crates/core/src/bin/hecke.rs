fn main() {
    std::process::exit(affine_hecke::cli::main_with_args(std::env::args_os()));
}
