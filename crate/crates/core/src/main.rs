use std::io::Write;

fn main() {
    let out = coinv::cli::run(std::env::args_os());
    // Ignore write errors so a closed pipe does not panic.
    let _ = if out.code != 2 {
        writeln!(std::io::stdout(), "{}", out.text)
    } else {
        writeln!(std::io::stderr(), "{}", out.text)
    };
    std::process::exit(out.code);
}
