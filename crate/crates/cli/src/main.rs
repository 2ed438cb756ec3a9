use std::io::{IsTerminal, Read, Write};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let reads_stdin = args.iter().any(|a| a == "-");
    let mut stdin = String::new();
    if reads_stdin && !std::io::stdin().is_terminal() {
        if let Err(e) = std::io::stdin().read_to_string(&mut stdin) {
            eprintln!("error: reading stdin: {e}");
            std::process::exit(1);
        }
    }
    let outcome = leibniz_cli::run(&args, &stdin);
    // Broken pipes are not worth reporting.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
