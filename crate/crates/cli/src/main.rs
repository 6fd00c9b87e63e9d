use std::io::Write;

use clap::Parser;

fn main() {
    let cli = yamaguti_cli::Cli::parse();
    let outcome = yamaguti_cli::execute(cli);
    print!("{}", outcome.stdout);
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
