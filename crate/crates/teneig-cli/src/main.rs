fn main() {
    std::process::exit(teneig_cli::cli_main(std::env::args_os()));
}
