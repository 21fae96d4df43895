use std::io::Write;

fn main() {
    let (code, out) = slie::run(std::env::args_os());
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
        std::io::stdout().flush().ok();
    }
    std::process::exit(code);
}
