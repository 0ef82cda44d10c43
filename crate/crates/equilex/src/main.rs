use clap::Parser;

fn main() {
    let cli = equilex::cli::Cli::parse();
    std::process::exit(equilex::cli::run(cli));
}
