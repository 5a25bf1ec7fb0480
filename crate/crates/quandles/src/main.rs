fn main() {
    std::process::exit(quandles::cli::run());
}
