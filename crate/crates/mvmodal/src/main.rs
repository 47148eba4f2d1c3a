use clap::Parser;

fn main() {
    let cli = mvmodal::cli::Cli::parse();
    std::process::exit(mvmodal::cli::run(cli));
}
