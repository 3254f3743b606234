fn main() {
    std::process::exit(packtriple::cli::main());
}
