use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = jhp_cli::Cli::parse();
    if let Some(threads) = cli.common.threads {
        // a failure here only means a pool was already installed
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match jhp_cli::run(&cli) {
        Ok((output, code)) => {
            let written = match &cli.common.out {
                Some(path) => std::fs::write(path, &output),
                None => std::io::stdout().write_all(output.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
