fn main() {
    let code = signed_graphs::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
