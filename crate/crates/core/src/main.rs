fn main() {
    std::process::exit(brauerbox::cli::main_with_args(std::env::args_os()));
}
