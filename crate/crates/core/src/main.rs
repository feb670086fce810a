fn main() {
    std::process::exit(biuniform::cli::main_entry());
}
