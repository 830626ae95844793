use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gcalg_cli::{parse_config, run, run_script, CliError, Command};

/// Exact exterior-algebra computations on point configurations.
#[derive(Parser)]
#[command(name = "gcalg", version, after_help = gcalg_cli::command::HELP)]
struct Args {
    /// Configuration file (`rank N`, then `<letter> = q1 ... qN` lines).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Script of newline-separated commands; each is echoed as `> command`.
    #[arg(long)]
    batch: Option<PathBuf>,
    /// A single command; without one, commands are read from standard input.
    command: Vec<String>,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn main_inner(args: Args) -> Result<(), CliError> {
    let config = args.config.as_ref().map(read).transpose()?.map(|t| parse_config(&t)).transpose()?;
    let script = match (&args.batch, args.command.is_empty()) {
        (Some(_), false) => return Err(CliError::Usage("give either --batch or a command, not both".into())),
        (Some(path), true) => read(path)?,
        (None, false) => {
            let out = if args.command.len() == 1 {
                run(&Command::parse_line(&args.command[0])?, config.as_ref())?
            } else {
                run(&Command::from_args(&args.command)?, config.as_ref())?
            };
            print!("{out}");
            return Ok(());
        }
        (None, true) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let (out, err) = run_script(&script, config.as_ref());
    print!("{out}");
    err.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            // help and version go to stdout and succeed
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match main_inner(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
