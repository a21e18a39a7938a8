fn main() {
    std::process::exit(ngon_spiral::cli::run(std::env::args_os()));
}
