fn main() {
    std::process::exit(eighth_cli::run(std::env::args_os()));
}
