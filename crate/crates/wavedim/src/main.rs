fn main() {
    std::process::exit(wavedim::cli::run(std::env::args_os()));
}
