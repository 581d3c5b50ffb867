use clap::Parser;
use galois_tori::cli::{main_with, Cli};

fn main() {
    std::process::exit(main_with(Cli::parse()));
}
