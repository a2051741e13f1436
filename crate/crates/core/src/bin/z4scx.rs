fn main() {
    std::process::exit(z4scx::cli::main_with_args(std::env::args_os()));
}
