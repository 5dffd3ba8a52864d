fn main() {
    std::process::exit(hookschur::cli::run());
}
