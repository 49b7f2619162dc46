fn main() {
    std::process::exit(gentorsion::cli::main());
}
