fn main() {
    std::process::exit(wythoff::cli::main_entry());
}
