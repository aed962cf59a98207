use clap::Parser;
use hodge_cousin::cli::{run, Cli};

fn main() {
    std::process::exit(run(&Cli::parse()));
}
