use std::io::Write;

use clap::Parser;
use eulersym_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let (code, out, err) = execute(&cli);
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
