fn main() {
    env_logger::init();
    let code = cardex::cli::cli_main(std::env::args_os());
    std::process::exit(code);
}
