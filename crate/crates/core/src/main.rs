use std::fs::File;
use std::io::{self, BufReader, Write};
use std::process::ExitCode;

use moricone_core::cli::{run, RunConfig, HELP};

fn main() -> ExitCode {
    let config = match RunConfig::from_args(std::env::args_os().skip(1)) {
        Ok(c) => c,
        Err(e) => {
            eprint!("{e}");
            eprintln!("try `moricone -h` for the list of options");
            return ExitCode::from(1);
        }
    };
    if config.help {
        print!("{HELP}");
        return ExitCode::SUCCESS;
    }
    let input: Box<dyn io::BufRead> = match &config.in_file {
        Some(path) => match File::open(path) {
            Ok(f) => Box::new(BufReader::new(f)),
            Err(e) => {
                eprintln!("moricone: cannot open {path}: {e}");
                return ExitCode::from(1);
            }
        },
        None => Box::new(io::stdin().lock()),
    };
    let mut out: Box<dyn Write> = match &config.out_file {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("moricone: cannot create {path}: {e}");
                return ExitCode::from(1);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let code = run(&config, input, &mut out, &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
