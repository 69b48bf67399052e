fn main() {
    std::process::exit(ideal_collapse::cli::run_command(std::env::args()));
}
