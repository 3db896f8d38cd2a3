fn main() {
    std::process::exit(lwbn::cli::main_with_args(std::env::args_os()));
}
