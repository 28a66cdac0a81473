fn main() {
    std::process::exit(mfv_core::cli::run(std::env::args_os()));
}
