fn main() {
    std::process::exit(horace::cli::main_with_args(std::env::args_os()));
}
