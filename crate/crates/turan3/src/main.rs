use std::process::exit;

use clap::Parser;

use turan3::cli::{run, Cli};
use turan3::error::Error;

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => exit(code),
        Err(Error::InvalidArgument(msg)) => {
            eprintln!("error: {msg}");
            exit(2);
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit(1);
        }
    }
}
