use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Subcommand};
use negacyclic::odd_codes::{
    count_codes, count_ideals, is_free, is_minimal_spanning, rank_and_spanning, res_tor,
    z4_code_is_free, OddCode, SpanningBranch,
};
use negacyclic::oracle::module_rank;
use negacyclic::{PolyR, PolyZ4};
use serde::Serialize;

use crate::{parse_poly, to_json};

#[derive(Subcommand, Debug)]
pub enum OddCommand {
    /// Number of codes of odd length n.
    Count(CountArgs),
    /// Rank and spanning family of <g + up, ua>.
    Rank(RankArgs),
    /// Freeness of the principal code <gen>.
    Free(FreeArgs),
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    g: String,
    #[arg(long, default_value = "0")]
    p: String,
    #[arg(long, default_value = "0")]
    a: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct FreeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    gen: String,
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct CountReport {
    schema: u32,
    command: &'static str,
    n: usize,
    factors: usize,
    seven_to_m: u128,
    ideal_count: u128,
}

#[derive(Serialize)]
struct RankReport {
    schema: u32,
    command: &'static str,
    n: usize,
    code: String,
    k1: usize,
    k2: usize,
    branch: SpanningBranch,
    rank: usize,
    first_shifts: usize,
    second_shifts: usize,
    family: Vec<String>,
    code_size_log2: u32,
    family_span_size_log2: u32,
    family_spans_code: bool,
    family_is_minimal: bool,
    minimal_generator_count: u32,
}

#[derive(Serialize)]
struct FreeReport {
    schema: u32,
    command: &'static str,
    n: usize,
    generator: String,
    #[serde(flatten)]
    freeness: negacyclic::odd_codes::Freeness,
    residue_is_free: bool,
}

pub fn run(cmd: OddCommand) -> Result<ExitCode> {
    let text = match cmd {
        OddCommand::Count(args) => {
            let report = CountReport {
                schema: 1,
                command: "odd count",
                n: args.n,
                factors: negacyclic::factor::negacyclic_factors(args.n)?
                    .nega_factors
                    .len(),
                seven_to_m: count_codes(args.n)?,
                ideal_count: count_ideals(args.n)?,
            };
            if args.json {
                to_json(&report)?
            } else {
                format!(
                    "factors of x^{}+1: {}\n7^m: {}\nideals (product of 2^deg+5): {}\n",
                    report.n, report.factors, report.seven_to_m, report.ideal_count
                )
            }
        }
        OddCommand::Rank(args) => {
            let g: PolyZ4 = parse_poly(&args.g, "g")?;
            let p: PolyZ4 = parse_poly(&args.p, "p")?;
            let a: PolyZ4 = parse_poly(&args.a, "a")?;
            let code = OddCode::new(args.n, &g, &p, &a)?;
            let s = rank_and_spanning(&code)?;
            let span = code.span()?;
            let fam = s.span(code.n);
            let report = RankReport {
                schema: 1,
                command: "odd rank",
                n: code.n,
                code: code.to_string(),
                k1: code.k1(),
                k2: code.k2(),
                branch: s.branch,
                rank: s.rank,
                first_shifts: s.first_shifts,
                second_shifts: s.second_shifts,
                family: s.family.iter().map(|f| f.to_string()).collect(),
                code_size_log2: span.size_log2(),
                family_span_size_log2: fam.size_log2(),
                family_spans_code: fam == *span.module(),
                family_is_minimal: is_minimal_spanning(code.n, &s.family),
                minimal_generator_count: module_rank(span.module()),
            };
            if args.json {
                to_json(&report)?
            } else {
                let mut out = format!(
                    "code: {}\nk1 = {}, k2 = {}\nbranch: {}\nrank: {} ({} shifts of g+up, {} shifts of ua)\nfamily:\n",
                    report.code, report.k1, report.k2, branch_name(report.branch), report.rank,
                    report.first_shifts, report.second_shifts
                );
                for f in &report.family {
                    out.push_str(&format!("  {f}\n"));
                }
                out.push_str(&format!(
                    "oracle: |C| = 2^{}, |span(family)| = 2^{}, spans code: {}, minimal: {}, minimal generator count: {}\n",
                    report.code_size_log2,
                    report.family_span_size_log2,
                    yes_no(report.family_spans_code),
                    yes_no(report.family_is_minimal),
                    report.minimal_generator_count
                ));
                out
            }
        }
        OddCommand::Free(args) => {
            let gen: PolyR = parse_poly(&args.gen, "gen")?;
            let freeness = is_free(args.n, &gen)?;
            let code = OddCode::from_generator(args.n, &gen, &PolyZ4::zero())?;
            let (res, _) = res_tor(&code)?;
            let report = FreeReport {
                schema: 1,
                command: "odd free",
                n: args.n,
                generator: gen.to_string(),
                residue_is_free: z4_code_is_free(args.n, &res)?,
                freeness,
            };
            if args.json {
                to_json(&report)?
            } else {
                let f = &report.freeness;
                let mut out = format!("code: <{}>\nfree: {}\n", report.generator, yes_no(f.free));
                if let (Some(g), Some(r)) = (&f.generator, f.free_rank) {
                    out.push_str(&format!(
                        "monic divisor generator: {}\nfree rank: {r}\n",
                        g.to_signed_string()
                    ));
                }
                out.push_str(&format!(
                    "residue code free over Z4: {}\n",
                    yes_no(report.residue_is_free)
                ));
                out
            }
        }
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn branch_name(b: SpanningBranch) -> &'static str {
    match b {
        SpanningBranch::General => "general (rank 2n-k1-k2)",
        SpanningBranch::RegularMonic => "g regular, a monic (rank n-k2)",
    }
}
