fn main() {
    let out = std::io::stdout();
    let err = std::io::stderr();
    let code = ctz_core::cli::main_with_args(std::env::args_os(), &mut out.lock(), &mut err.lock());
    std::process::exit(code);
}
