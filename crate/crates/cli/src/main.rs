fn main() {
    std::process::exit(bentwave_cli::run(std::env::args_os()));
}
