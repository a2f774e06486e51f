fn main() {
    std::process::exit(prime_interference::cli::run());
}
