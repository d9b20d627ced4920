fn main() {
    std::process::exit(millrank::cli::run(std::env::args_os()));
}
