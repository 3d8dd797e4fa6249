fn main() {
    biquasi::cli::main_entry()
}
