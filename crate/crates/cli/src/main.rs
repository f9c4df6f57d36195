use std::io::Write;

fn main() {
    let mut out = std::io::stdout().lock();
    let code = gammoid_cli::run(std::env::args_os(), &mut out);
    out.flush().ok();
    std::process::exit(code);
}
