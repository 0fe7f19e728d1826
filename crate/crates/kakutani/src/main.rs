fn main() {
    std::process::exit(kakutani::cli::main_with_args(std::env::args_os()));
}
