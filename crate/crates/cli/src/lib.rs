//! Command-line driver for `desitter-monopole`: argument and config
//! parsing, the subcommands, and CSV/JSON output.

pub mod args;
pub mod error;
pub mod output;
pub mod run;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Parser;

pub use args::{Cli, Command, Format, RunConfig};
pub use error::CliError;
pub use output::Report;

/// Environment variable that redirects `--output` files into a directory.
pub const OUTPUT_DIR_ENV: &str = "DS_MONOPOLE_OUTPUT_DIR";

/// The command, output path and format after merging `--config` with flags.
/// Flags given on the command line win over the file.
pub fn resolve(cli: Cli) -> Result<(Command, Option<PathBuf>, Format), CliError> {
    let (file_cmd, file_out, file_fmt) = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            let cfg: RunConfig = serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            (Some(cfg.command), cfg.output, cfg.format)
        }
        None => (None, None, None),
    };
    let command = cli
        .command
        .or(file_cmd)
        .ok_or_else(|| CliError::Usage("no subcommand given (and no --config)".into()))?;
    Ok((command, cli.output.or(file_out), cli.format.or(file_fmt).unwrap_or_default()))
}

/// `path` inside the override directory when the environment names one.
pub fn output_path(path: &Path, dir_override: Option<&Path>) -> PathBuf {
    match (dir_override, path.file_name()) {
        (Some(dir), Some(name)) => dir.join(name),
        _ => path.to_path_buf(),
    }
}

/// Runs one invocation. Notes, warnings and errors go to `err`; the table
/// goes to `out` unless an output file is named. Returns the exit status.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return e.exit_code();
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let (command, path, format) = resolve(cli)?;
    let report = run::run(&command)?;
    match path {
        Some(p) => {
            let dir = std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from);
            let p = output_path(&p, dir.as_deref());
            let io = |source| CliError::Io { path: p.clone(), source };
            let mut w = BufWriter::new(File::create(&p).map_err(io)?);
            report.write(format, &mut w).map_err(io)?;
            w.flush().map_err(io)?;
        }
        None => report.write(format, out).map_err(|source| CliError::Io { path: "<stdout>".into(), source })?,
    }
    for w in &report.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    for n in &report.notes {
        let _ = writeln!(err, "{n}");
    }
    if let Some(c) = &report.check {
        let _ = writeln!(err, "{}: {:e} (tolerance {:e})", c.what, c.value, c.tol);
        if !c.passed() {
            return Err(CliError::Tolerance { what: c.what.clone(), value: c.value, tol: c.tol });
        }
    }
    Ok(())
}
