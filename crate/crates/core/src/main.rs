fn main() {
    std::process::exit(specpot::cli::run());
}
