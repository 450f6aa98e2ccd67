fn main() {
    std::process::exit(qhom::cli::main_with_args(std::env::args()));
}
