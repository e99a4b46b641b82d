fn main() {
    std::process::exit(hurwitz_core::cli::main());
}
