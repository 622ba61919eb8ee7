use std::io::Write;

fn main() {
    let (code, out) = gf4sss::cli::run(std::env::args_os());
    if code == 0 {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush());
    } else {
        let _ = std::io::stderr().write_all(out.as_bytes());
    }
    std::process::exit(code);
}
