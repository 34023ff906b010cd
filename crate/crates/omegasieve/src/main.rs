fn main() {
    std::process::exit(omegasieve::cli::run());
}
