use std::io::Write;

use clap::{Parser, Subcommand};
use normsum_core::repsearch::{SearchConfig, DEFAULT_DP_CAP, DEFAULT_R_MAX};
use normsum_core::Error;

use crate::commands;
use crate::output::{render, OutputFormat, Render};
use crate::report::{verify_all_with, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "normsum",
    version,
    about = "Sums of norms in imaginary quadratic fields"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Largest `r * k` the dynamic program may allocate for.
    #[arg(long, global = true, default_value_t = DEFAULT_DP_CAP)]
    pub dp_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ring, class representatives and their congruence conditions.
    FieldInfo {
        #[arg(short)]
        d: u64,
    },
    /// Fewest norms summing to `r * k` in the given class.
    MinTerms {
        #[arg(short)]
        d: u64,
        #[arg(long = "class")]
        class_index: usize,
        #[arg(short)]
        r: u64,
    },
    /// An explicit representation with exactly `m` summands.
    Certificate {
        #[arg(short)]
        d: u64,
        #[arg(long = "class")]
        class_index: usize,
        #[arg(short)]
        r: u64,
        #[arg(short)]
        m: usize,
    },
    /// All `r <= r_max` with no representation.
    Exceptional {
        #[arg(short)]
        d: u64,
        #[arg(long = "class")]
        class_index: usize,
        #[arg(long, default_value_t = DEFAULT_R_MAX)]
        r_max: u64,
    },
    /// Largest minimum summand count over all classes.
    G {
        #[arg(short)]
        d: u64,
        #[arg(long, default_value_t = DEFAULT_R_MAX)]
        r_max: u64,
    },
    /// Number of norms needed to represent every positive integer.
    #[command(name = "m-d")]
    MD {
        #[arg(short)]
        d: u64,
    },
    /// Recompute every field of a class number and diff against the known tables.
    Verify {
        #[arg(long)]
        class_number: u8,
        #[arg(long, default_value_t = DEFAULT_R_MAX)]
        r_max: u64,
        /// Worker threads; 0 uses all processors.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Class representatives for class numbers 2 and 3.
    Tables,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedField(_) => EXIT_UNSUPPORTED,
        Error::CrossCheckFailed { .. } => EXIT_INTERNAL,
        _ => EXIT_BAD_INPUT,
    }
}

/// Runs one invocation, writing the result to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let cfg = SearchConfig { dp_cap: cli.dp_cap };
    let emit = |item: &dyn Render, out: &mut dyn Write| {
        let _ = out.write_all(render(item, cli.format).as_bytes());
    };
    let fail = |e: Error, err: &mut dyn Write| {
        let _ = writeln!(err, "error: {e}");
        exit_code(&e)
    };

    let result: Result<Box<dyn Render>, Error> = match cli.command {
        Command::FieldInfo { d } => commands::field_info(d).map(|x| Box::new(x) as _),
        Command::MinTerms { d, class_index, r } => {
            commands::min_terms(d, class_index, r, &cfg).map(|x| Box::new(x) as _)
        }
        Command::Certificate {
            d,
            class_index,
            r,
            m,
        } => commands::certificate(d, class_index, r, m, &cfg).map(|x| Box::new(x) as _),
        Command::Exceptional {
            d,
            class_index,
            r_max,
        } => commands::exceptional(d, class_index, r_max, &cfg).map(|x| Box::new(x) as _),
        Command::G { d, r_max } => commands::g(d, r_max, &cfg).map(|x| Box::new(x) as _),
        Command::MD { d } => commands::norm_count(d).map(|x| Box::new(x) as _),
        Command::Tables => Ok(Box::new(commands::class_tables())),
        Command::Verify {
            class_number,
            r_max,
            jobs,
        } => {
            return match verify_all_with(class_number, r_max, jobs, &cfg) {
                Ok(report) => {
                    emit(&report, out);
                    let _ = writeln!(
                        err,
                        "{}/{} fields match",
                        report.matched(),
                        report.fields.len()
                    );
                    if report.all_match() {
                        EXIT_OK
                    } else {
                        EXIT_MISMATCH
                    }
                }
                Err(VerifyError::Core(e)) => fail(e, err),
                Err(e @ VerifyError::Precondition { .. }) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_BAD_INPUT
                }
            };
        }
    };
    match result {
        Ok(item) => {
            emit(item.as_ref(), out);
            EXIT_OK
        }
        Err(e) => fail(e, err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("normsum").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_errors_are_bad_input() {
        assert_eq!(call(&["min-terms", "-d", "5"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["frobnicate"]).0, EXIT_BAD_INPUT);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn error_codes() {
        assert_eq!(call(&["field-info", "-d", "21"]).0, EXIT_UNSUPPORTED);
        assert_eq!(
            call(&["min-terms", "-d", "5", "--class", "3", "-r", "1"]).0,
            EXIT_BAD_INPUT
        );
        let (code, _, err) = call(&[
            "--dp-cap",
            "100",
            "min-terms",
            "-d",
            "907",
            "--class",
            "2",
            "-r",
            "81",
        ]);
        assert_eq!(code, EXIT_BAD_INPUT);
        assert!(err.contains("1053"), "{err}");
    }

    #[test]
    fn m_d_subcommand_name() {
        assert_eq!(call(&["m-d", "-d", "5"]).1, "{\"d\":5,\"m_d\":3}\n");
    }
}
