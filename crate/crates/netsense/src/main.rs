fn main() {
    std::process::exit(netsense::cli::main_from(std::env::args_os()));
}
