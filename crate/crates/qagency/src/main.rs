use clap::Parser;
use qagency::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    std::process::exit(run(&config));
}
