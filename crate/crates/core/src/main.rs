fn main() {
    std::process::exit(braided_core::cli::main_with_args(std::env::args_os()));
}
