fn main() {
    let args: Vec<std::ffi::OsString> = std::env::args_os().collect();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let code = qweight::cli::run(args, &mut stdout, &mut stderr);
    std::process::exit(code);
}
