fn main() {
    std::process::exit(pluecker::cli::main());
}
