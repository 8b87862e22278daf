fn main() {
    std::process::exit(ordpoly::cli::run(std::env::args_os()));
}
