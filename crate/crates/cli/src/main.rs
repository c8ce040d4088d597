fn main() {
    let status = revolute_cli::run(std::env::args_os());
    std::process::exit(status.code);
}
