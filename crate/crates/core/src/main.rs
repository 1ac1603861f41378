use clap::Parser;
use pdmf::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("pdmf: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
