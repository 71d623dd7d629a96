fn main() {
    std::process::exit(orbitclass::cli::run(std::env::args_os()));
}
