use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod odd;
mod p2;

/// Negacyclic codes over Z4 + uZ4 (u^2 = 0).
#[derive(Parser, Debug)]
#[command(name = "negacyclic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor x^n - 1 over F2 and Z4 and x^n + 1 over Z4 (n odd).
    Factor(FactorArgs),
    /// Odd-length codes <g + up, ua>.
    #[command(subcommand)]
    Odd(odd::OddCommand),
    /// Codes of length n = 2^k.
    #[command(subcommand)]
    P2(p2::P2Command),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Ring {
    F2,
    Z4,
    Nega,
}

#[derive(Args, Debug)]
struct FactorArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    ring: Option<Ring>,
    #[arg(long)]
    json: bool,
}

/// Output flags shared by the reporting subcommands.
#[derive(Args, Debug, Clone, Default)]
pub struct Output {
    #[arg(long)]
    pub json: bool,
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Output {
    pub fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => {
                std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                Ok(())
            }
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Serialize)]
struct FactorReport {
    schema: u32,
    command: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    f2: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    z4: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nega: Option<Vec<String>>,
}

fn factor(args: &FactorArgs) -> Result<String> {
    let fs = negacyclic::factor::negacyclic_factors(args.n)?;
    let f2: Vec<String> = fs.f2_factors.iter().map(|f| f.to_string()).collect();
    let z4: Vec<String> = fs.z4_factors.iter().map(|f| f.to_signed_string()).collect();
    let nega: Vec<String> = fs
        .nega_factors
        .iter()
        .map(|f| f.to_signed_string())
        .collect();
    let pick = |r: Ring| args.ring.is_none() || args.ring == Some(r);
    if args.json {
        let report = FactorReport {
            schema: 1,
            command: "factor",
            n: args.n,
            f2: pick(Ring::F2).then_some(f2),
            z4: pick(Ring::Z4).then_some(z4),
            nega: pick(Ring::Nega).then_some(nega),
        };
        return to_json(&report);
    }
    if args.ring.is_some() {
        let list = [(Ring::F2, f2), (Ring::Z4, z4), (Ring::Nega, nega)]
            .into_iter()
            .find(|(r, _)| pick(*r))
            .map(|(_, l)| l)
            .unwrap_or_default();
        return Ok(list.iter().map(|f| format!("{f}\n")).collect());
    }
    let product = |l: &[String]| l.iter().map(|f| format!("({f})")).collect::<String>();
    let n = args.n;
    Ok(format!(
        "F2: x^{n}-1 = {}\nZ4: x^{n}-1 = {}\nZ4: x^{n}+1 = {}\n",
        product(&f2),
        product(&z4),
        product(&nega)
    ))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Factor(args) => {
            print!("{}", factor(&args)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Odd(cmd) => odd::run(cmd),
        Command::P2(cmd) => p2::run(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

pub fn parse_poly<T: std::str::FromStr<Err = negacyclic::Error>>(
    text: &str,
    what: &str,
) -> Result<T> {
    match text.parse() {
        Ok(v) => Ok(v),
        Err(e) => bail!("--{what}: {e}"),
    }
}
