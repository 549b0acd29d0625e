fn main() {
    std::process::exit(lazard::cli::main());
}
