fn main() {
    std::process::exit(finfree::cli::run(std::env::args_os()));
}
