fn main() {
    std::process::exit(uudd::cli::main_with_env());
}
