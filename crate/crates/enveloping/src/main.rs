use clap::Parser;

fn main() {
    let cli = enveloping::cli::Cli::parse();
    match enveloping::cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
