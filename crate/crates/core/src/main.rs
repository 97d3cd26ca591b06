fn main() {
    std::process::exit(fibdense::cli::run(std::env::args_os()));
}
