use clap::Parser;

fn main() {
    // Clap handles --help/--version (exit 0) and malformed flags (exit 2).
    let cli = match polynoise_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Err(e) = polynoise_cli::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
