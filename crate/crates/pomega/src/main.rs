use clap::Parser;

fn main() {
    let cli = pomega::cli::Cli::parse();
    std::process::exit(pomega::cli::run(cli));
}
