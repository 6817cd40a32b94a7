fn main() {
    std::process::exit(selfdual::cli::main_with_args(std::env::args_os()));
}
