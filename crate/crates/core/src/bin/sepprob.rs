fn main() {
    std::process::exit(sepprob::cli::main_with_args(std::env::args_os()));
}
