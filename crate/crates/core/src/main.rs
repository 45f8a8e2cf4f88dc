fn main() {
    std::process::exit(eccx::cli::run(std::env::args_os()));
}
