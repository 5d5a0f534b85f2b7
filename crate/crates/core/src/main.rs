fn main() {
    std::process::exit(pminors::cli::run(std::env::args_os()));
}
