fn main() {
    std::process::exit(lincong::cli::run(std::env::args_os()));
}
