use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = blcalc::cli::run(&args);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    if !out.stdout.is_empty() {
        let _ = writeln!(std::io::stdout(), "{}", out.stdout.trim_end());
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", out.stderr.trim_end());
    }
    std::process::exit(out.code);
}
