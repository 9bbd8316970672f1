use clap::Parser;

fn main() {
    let cli = posetdist::cli::Cli::parse();
    std::process::exit(posetdist::cli::run(cli));
}
