fn main() {
    let (code, out) = pseudocone::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
