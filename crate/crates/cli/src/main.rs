fn main() {
    std::process::exit(graded_cli::run(std::env::args_os()));
}
