//! Command line front end. [`run`] does all the work; the binary only
//! forwards its arguments and exit code.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or I/O error,
//! 3 parse error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::ext::{ext_chart, render_chart, ChartFormat};
use crate::gradmod::{dualize, split_free_summands, tensor, AlgebraTag, GradedModule, ModuleError};
use crate::models::{reference_suite, SuiteReport};
use crate::spda::{
    characteristic_classes, verify_char_identities, verify_pd, verify_sharp_pd, PresentedAlgebra,
    SpdaError,
};
use crate::steenrod::{antipode_sq, SteenrodElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sqpd", version, about = "Steenrod squares, duality algebras and Ext charts over F2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce a sum of Steenrod words to admissible form, e.g. "Sq1 Sq2".
    Adem { expr: String },
    /// Print the antipode of Sq^k.
    Antipode { k: u32 },
    /// Operations on module files.
    #[command(subcommand)]
    Module(ModuleCommand),
    /// Operations on algebra files.
    #[command(subcommand)]
    Spda(SpdaCommand),
    /// Ext chart of a module over A(1).
    Ext {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        smax: u32,
        #[arg(long, default_value_t = 24)]
        tmax: i32,
        #[arg(long, default_value = "ascii")]
        format: ChartFormat,
    },
    /// Run the built-in verification suite.
    #[command(name = "paper-suite", visible_alias = "suite")]
    Suite {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ModuleCommand {
    /// Check the module axioms.
    Check { file: PathBuf },
    /// Tensor product of two modules, optionally split into free summands and the rest.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        split: bool,
    },
    /// The dual module.
    Dual { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum SpdaCommand {
    /// Duality, Steenrod compatibility and characteristic class identities.
    Verify { file: PathBuf },
    /// Wu, Stiefel-Whitney and dual Stiefel-Whitney classes.
    Classes { file: PathBuf },
}

/// A failure already formatted for stderr, with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn parse(path: &Path, e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: format!("{}:{e}", path.display()),
        }
    }
}

impl From<ModuleError> for Failure {
    fn from(e: ModuleError) -> Self {
        let code = match e {
            ModuleError::Parse(_) => EXIT_PARSE,
            ModuleError::Axioms(_) | ModuleError::NotEquivariant => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SpdaError> for Failure {
    fn from(e: SpdaError) -> Self {
        let code = match e {
            SpdaError::Parse(_) => EXIT_PARSE,
            SpdaError::NotPd(_) | SpdaError::Unsolvable(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_module(path: &Path) -> Result<GradedModule, Failure> {
    GradedModule::from_json(&read(path)?).map_err(|e| match e {
        ModuleError::Parse(p) => Failure::parse(path, p),
        other => Failure::from(other),
    })
}

fn load_algebra(path: &Path) -> Result<PresentedAlgebra, Failure> {
    PresentedAlgebra::from_json(&read(path)?).map_err(|e| match e {
        SpdaError::Parse(p) => Failure::parse(path, p),
        other => Failure::from(other),
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Adem { expr } => {
            let x: SteenrodElement = expr.parse().map_err(|e| Failure {
                code: EXIT_PARSE,
                message: format!("<expr>:{e}"),
            })?;
            writeln!(out, "{x}")?;
            Ok(EXIT_OK)
        }
        Command::Antipode { k } => {
            writeln!(out, "{}", antipode_sq(k))?;
            Ok(EXIT_OK)
        }
        Command::Module(m) => module_command(m, out),
        Command::Spda(s) => spda_command(s, out),
        Command::Ext {
            file,
            smax,
            tmax,
            format,
        } => {
            let mut m = load_module(&file)?;
            if m.tag() == AlgebraTag::A {
                m = m.restrict_to_a1();
            }
            let chart = ext_chart(&m, smax, tmax)?;
            out.write_all(render_chart(&chart, format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Suite { json } => {
            let report = reference_suite();
            print_suite(&report, json, out)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

fn print_suite(report: &SuiteReport, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        out.write_all(report.to_json().as_bytes())
    } else {
        out.write_all(report.render().as_bytes())
    }
}

fn module_command(cmd: ModuleCommand, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        ModuleCommand::Check { file } => {
            let m = load_module(&file)?;
            let r = m.check_axioms();
            let dims: Vec<String> = m.dims().iter().map(|(d, n)| format!("{d}:{n}")).collect();
            writeln!(out, "module over {}, dimension {} ({})", m.tag(), m.dim(), dims.join(" "))?;
            if r.is_ok() {
                writeln!(out, "ok")?;
                Ok(EXIT_OK)
            } else {
                for v in &r.violations {
                    writeln!(out, "FAIL {v}")?;
                }
                Ok(EXIT_VERIFY)
            }
        }
        ModuleCommand::Tensor { a, b, split } => {
            let t = tensor(&load_module(&a)?, &load_module(&b)?)?;
            if !split {
                out.write_all(t.to_json().as_bytes())?;
                return Ok(EXIT_OK);
            }
            let s = split_free_summands(&t)?;
            let shifts: Vec<String> = s.shifts.iter().map(i32::to_string).collect();
            writeln!(out, "free summands: A(1) shifted by [{}]", shifts.join(", "))?;
            writeln!(out, "remainder:")?;
            out.write_all(s.remainder.to_json().as_bytes())?;
            Ok(EXIT_OK)
        }
        ModuleCommand::Dual { file } => {
            out.write_all(dualize(&load_module(&file)?).to_json().as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn spda_command(cmd: SpdaCommand, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        SpdaCommand::Verify { file } => {
            let p = load_algebra(&file)?;
            let mut r = verify_pd(&p);
            if r.is_ok() {
                r.extend(verify_sharp_pd(&p));
            }
            if r.is_ok() {
                let t = characteristic_classes(&p)?;
                r.extend(verify_char_identities(&p, &t));
            }
            write!(out, "{r}")?;
            Ok(if r.is_ok() { EXIT_OK } else { EXIT_VERIFY })
        }
        SpdaCommand::Classes { file } => {
            let p = load_algebra(&file)?;
            let t = characteristic_classes(&p)?;
            out.write_all(t.render(&p).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["sqpd"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn adem_command() {
        assert_eq!(run_str(&["adem", "Sq1 Sq2"]), (0, "Sq3\n".into(), String::new()));
        assert_eq!(run_str(&["adem", "Sq1 Sq1"]).1, "0\n");
        let (code, _, err) = run_str(&["adem", "Sq1 Sqx"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("1:"), "{err}");
    }

    #[test]
    fn antipode_command() {
        let (code, out, _) = run_str(&["antipode", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "Sq2\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["adem"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["ext", "x.json", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["module", "check", "/nonexistent/m.json"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["ext", "x.json", "--format", "png"]).0, EXIT_USAGE);
    }
}
