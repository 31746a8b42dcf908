use clap::Parser;

fn main() {
    let cli = zerosum_cli::commands::Cli::parse();
    if let Err(err) = zerosum_cli::commands::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
