fn main() {
    std::process::exit(absolute_cli::run(std::env::args_os()));
}
