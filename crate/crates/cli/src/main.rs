fn main() {
    std::process::exit(gridlabel_cli::run_cli(std::env::args_os()));
}
