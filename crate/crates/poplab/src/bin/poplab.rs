fn main() {
    std::process::exit(poplab::cli::run());
}
