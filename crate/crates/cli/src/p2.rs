use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Subcommand};
use negacyclic::oracle::IdealSpan;
use negacyclic::pow2::{
    self, candidates, formulas, verify, Catalog, CodeDescriptor, CodeRow, VerifyReport,
};
use negacyclic::{Modulus, PolyR, Residue};
use serde::Serialize;

use crate::{to_json, Output};

#[derive(Subcommand, Debug)]
pub enum P2Command {
    /// All distinct codes of length n.
    List(ListArgs),
    /// Annihilator and dual of one code, by formula and by oracle.
    Dual(CodeArgs),
    /// Size of one code (or of every code), by formula and by oracle.
    Size(SizeArgs),
    /// Self-dual and self-orthogonal codes.
    Selfdual(ListArgs),
    /// Formula-versus-oracle report; exit status 2 on any disagreement.
    Verify(ListArgs),
    /// Table of codes with annihilators, sizes and self-duality marks.
    Table(ListArgs),
}

#[derive(Args, Debug)]
pub struct ListArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
pub struct CodeArgs {
    #[arg(long)]
    n: usize,
    /// Descriptor (`T2_1,s=2,t=0,h=1`), catalog index (`5` or `C5`), or
    /// generators over R separated by `;`.
    #[arg(long)]
    code: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct SizeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    code: Option<String>,
    #[arg(long)]
    json: bool,
}

/// A code named on the command line, resolved against the catalog.
struct Resolved {
    descriptor: CodeDescriptor,
    index: usize,
    span: IdealSpan,
}

fn resolve(catalog: &Catalog, text: &str) -> Result<Resolved> {
    let n = catalog.n;
    let text = text.trim();
    let by_index = |i: usize| -> Result<Resolved> {
        let e = catalog
            .get(i)
            .ok_or_else(|| anyhow!("no code #{i}; length {n} has {}", catalog.len()))?;
        Ok(Resolved {
            descriptor: e.descriptor.clone(),
            index: i,
            span: e.span.clone(),
        })
    };
    if let Ok(i) = text.trim_start_matches(['C', '#']).parse::<usize>() {
        return by_index(i);
    }
    let with_n = if text.contains("n=") {
        text.to_string()
    } else {
        descriptor_with_n(text, n)
    };
    if let Ok(d) = with_n.parse::<CodeDescriptor>() {
        if d.n != n {
            bail!("descriptor has n = {}, expected {n}", d.n);
        }
        if !candidates(n)?.contains(&d) {
            bail!("descriptor {d} is outside the classified parameter ranges");
        }
        let span = IdealSpan::closure(n, &d.generators().to_vec())?;
        let index = catalog
            .index_of(&span)
            .ok_or_else(|| anyhow!("{d} is not in the catalog"))?;
        return Ok(Resolved {
            descriptor: d,
            index,
            span,
        });
    }
    let gens = text
        .split(';')
        .map(|g| {
            g.parse::<PolyR>()
                .map(|p| Residue::from_poly(&p, n, Modulus::Nega))
                .map_err(|e| {
                    anyhow!(
                        "--code {text:?} is neither a descriptor, an index, nor generators: {e}"
                    )
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let span = IdealSpan::closure(n, &gens)?;
    let index = catalog
        .index_of(&span)
        .ok_or_else(|| anyhow!("generated ideal is missing from the catalog"))?;
    by_index(index)
}

fn descriptor_with_n(text: &str, n: usize) -> String {
    match text.split_once(',') {
        Some((kind, rest)) => format!("{kind},n={n},{rest}"),
        None => format!("{text},n={n}"),
    }
}

fn row_csv(rows: &[CodeRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "index",
        "generators",
        "type",
        "s",
        "t",
        "m",
        "m1",
        "l",
        "h",
        "size",
        "annihilator-index",
        "self-orthogonal",
        "self-dual",
    ])?;
    for r in rows {
        let d = &r.descriptor;
        let h = if d.kind.has_mixed_tail() {
            format!("h1={};h2={}", bits(&d.h1), bits(&d.h2))
        } else {
            bits(&d.h)
        };
        w.write_record([
            r.index.to_string(),
            r.generators.clone(),
            d.kind.to_string(),
            d.s.to_string(),
            d.t.to_string(),
            d.m.to_string(),
            d.m1.to_string(),
            d.l.to_string(),
            h,
            r.size_oracle.to_string(),
            opt(r.annihilator_oracle_index),
            r.self_orthogonal.to_string(),
            r.self_dual.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// (x+1)-basis coefficients, low power first.
fn bits(h: &negacyclic::PolyF2) -> String {
    if h.is_zero() {
        return "0".into();
    }
    h.coeffs().iter().map(|c| c.value().to_string()).collect()
}

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn mark(r: &CodeRow) -> &'static str {
    if r.self_dual {
        "*"
    } else if r.self_orthogonal {
        "†"
    } else {
        ""
    }
}

#[derive(Serialize)]
struct ListReport<'a> {
    schema: u32,
    command: &'static str,
    n: usize,
    count: usize,
    codes: Vec<ListRow<'a>>,
}

#[derive(Serialize)]
struct ListRow<'a> {
    index: usize,
    descriptor: &'a CodeDescriptor,
    generators: &'a str,
    size: u128,
    annihilator_index: Option<usize>,
    dual_index: Option<usize>,
    self_orthogonal: bool,
    self_dual: bool,
    agrees: bool,
}

fn list_rows(report: &VerifyReport, keep: impl Fn(&CodeRow) -> bool) -> Vec<ListRow<'_>> {
    report
        .rows
        .iter()
        .filter(|r| keep(r))
        .map(|r| ListRow {
            index: r.index,
            descriptor: &r.descriptor,
            generators: &r.generators,
            size: r.size_oracle,
            annihilator_index: r.annihilator_oracle_index,
            dual_index: r.dual_oracle_index,
            self_orthogonal: r.self_orthogonal,
            self_dual: r.self_dual,
            agrees: r.agrees,
        })
        .collect()
}

fn human_list(rows: &[ListRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:>4}  {:<40} {:<48} size={:<8} ann=#{:<4} {}\n",
            r.index,
            r.descriptor.to_string(),
            r.generators,
            r.size,
            opt(r.annihilator_index),
            if r.self_dual {
                "self-dual"
            } else if r.self_orthogonal {
                "self-orthogonal"
            } else {
                ""
            }
        ));
    }
    out
}

#[derive(Serialize)]
struct DualReport {
    schema: u32,
    command: &'static str,
    n: usize,
    index: usize,
    descriptor: CodeDescriptor,
    generators: String,
    formula_case: String,
    formula_annihilator: Vec<String>,
    formula_dual: Vec<String>,
    formula_annihilator_index: Option<usize>,
    formula_dual_index: Option<usize>,
    oracle_annihilator_index: Option<usize>,
    oracle_dual_index: Option<usize>,
    oracle_dual_generators: Vec<String>,
    agrees: bool,
}

#[derive(Serialize)]
struct SizeRow {
    index: usize,
    descriptor: CodeDescriptor,
    size_formula: Option<u128>,
    size_oracle: u128,
    agrees: bool,
}

#[derive(Serialize)]
struct SizeReport {
    schema: u32,
    command: &'static str,
    n: usize,
    codes: Vec<SizeRow>,
}

fn size_row(r: &Resolved) -> SizeRow {
    let size_formula = formulas::cardinality(&r.descriptor).ok();
    let size_oracle = r.span.size();
    SizeRow {
        index: r.index,
        descriptor: r.descriptor.clone(),
        size_formula,
        size_oracle,
        agrees: size_formula == Some(size_oracle),
    }
}

#[derive(Serialize)]
struct TableRow {
    label: String,
    generators: String,
    annihilator: String,
    size: u128,
    mark: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    printed: Option<PrintedRow>,
}

#[derive(Serialize)]
struct PrintedRow {
    annihilator: String,
    size: u128,
    mark: String,
    agrees: bool,
}

pub fn run(cmd: P2Command) -> Result<ExitCode> {
    match cmd {
        P2Command::List(args) => {
            let report = verify(args.n)?;
            let rows = list_rows(&report, |_| true);
            let text = if args.output.json {
                to_json(&ListReport {
                    schema: 1,
                    command: "p2 list",
                    n: args.n,
                    count: rows.len(),
                    codes: rows,
                })?
            } else if args.output.csv {
                row_csv(&report.rows)?
            } else {
                human_list(&rows)
            };
            args.output.emit(&text)?;
        }
        P2Command::Selfdual(args) => {
            let report = verify(args.n)?;
            let rows = list_rows(&report, |r| r.self_orthogonal);
            let text = if args.output.json {
                to_json(&ListReport {
                    schema: 1,
                    command: "p2 selfdual",
                    n: args.n,
                    count: rows.len(),
                    codes: rows,
                })?
            } else if args.output.csv {
                let keep: Vec<CodeRow> = report
                    .rows
                    .iter()
                    .filter(|r| r.self_orthogonal)
                    .cloned()
                    .collect();
                row_csv(&keep)?
            } else {
                format!(
                    "{}self-dual: {}\nself-orthogonal: {}\n",
                    human_list(&rows),
                    report.self_dual_count,
                    report.self_orthogonal_count
                )
            };
            args.output.emit(&text)?;
        }
        P2Command::Dual(args) => {
            pow2::check_length(args.n)?;
            let catalog = Catalog::build(args.n)?;
            let r = resolve(&catalog, &args.code)?;
            let ann = formulas::annihilator(&r.descriptor)?;
            let dual = formulas::dual(&r.descriptor)?;
            let ann_span = IdealSpan::closure(args.n, &ann.gens)?;
            let dual_span = IdealSpan::closure(args.n, &dual.gens)?;
            let oracle_dual = r.span.dual();
            let report = DualReport {
                schema: 1,
                command: "p2 dual",
                n: args.n,
                index: r.index,
                generators: r.descriptor.generators_text(),
                descriptor: r.descriptor,
                formula_case: ann.case,
                formula_annihilator: ann
                    .gens
                    .iter()
                    .filter(|g| !g.is_zero())
                    .map(|g| g.to_string())
                    .collect(),
                formula_dual: dual
                    .gens
                    .iter()
                    .filter(|g| !g.is_zero())
                    .map(|g| g.to_string())
                    .collect(),
                formula_annihilator_index: catalog.index_of(&ann_span),
                formula_dual_index: catalog.index_of(&dual_span),
                oracle_annihilator_index: catalog.index_of(&r.span.annihilator()),
                oracle_dual_index: catalog.index_of(&oracle_dual),
                oracle_dual_generators: oracle_dual
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect(),
                agrees: dual_span == oracle_dual,
            };
            let text = if args.json {
                to_json(&report)?
            } else {
                format!(
                    "code #{}: {} = {}\nannihilator ({}): {} = #{}\ndual (formula): {} = #{}\ndual (oracle): #{} = {}\nagrees: {}\n",
                    report.index,
                    report.descriptor,
                    report.generators,
                    report.formula_case,
                    ideal_text(&report.formula_annihilator),
                    opt(report.formula_annihilator_index),
                    ideal_text(&report.formula_dual),
                    opt(report.formula_dual_index),
                    opt(report.oracle_dual_index),
                    ideal_text(&report.oracle_dual_generators),
                    report.agrees
                )
            };
            print!("{text}");
        }
        P2Command::Size(args) => {
            pow2::check_length(args.n)?;
            let catalog = Catalog::build(args.n)?;
            let rows: Vec<SizeRow> = match &args.code {
                Some(code) => vec![size_row(&resolve(&catalog, code)?)],
                None => (1..=catalog.len())
                    .map(|i| {
                        let e = catalog.get(i).expect("index in range");
                        size_row(&Resolved {
                            descriptor: e.descriptor.clone(),
                            index: i,
                            span: e.span.clone(),
                        })
                    })
                    .collect(),
            };
            let text = if args.json {
                to_json(&SizeReport {
                    schema: 1,
                    command: "p2 size",
                    n: args.n,
                    codes: rows,
                })?
            } else {
                rows.iter()
                    .map(|r| {
                        format!(
                            "{:>4}  {:<40} formula={:<8} oracle={:<8} {}\n",
                            r.index,
                            r.descriptor.to_string(),
                            r.size_formula
                                .map(|s| s.to_string())
                                .unwrap_or_else(|| "-".into()),
                            r.size_oracle,
                            if r.agrees { "ok" } else { "MISMATCH" }
                        )
                    })
                    .collect()
            };
            print!("{text}");
        }
        P2Command::Verify(args) => {
            let report = verify(args.n)?;
            let json = to_json(&report)?;
            match &args.output.out {
                Some(_) => {
                    args.output.emit(&json)?;
                    print!("{}", verify_summary(&report));
                }
                None if args.output.json || !args.output.csv => print!("{json}"),
                None => bail!("verify writes JSON; --csv is not supported"),
            }
            if !report.is_clean() {
                return Ok(ExitCode::from(2));
            }
        }
        P2Command::Table(args) => {
            let report = verify(args.n)?;
            let rows = table_rows(&report);
            let text = if args.output.json {
                #[derive(Serialize)]
                struct TableReport {
                    schema: u32,
                    command: &'static str,
                    n: usize,
                    rows: Vec<TableRow>,
                }
                to_json(&TableReport {
                    schema: 1,
                    command: "p2 table",
                    n: args.n,
                    rows,
                })?
            } else if args.output.csv {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record([
                    "label",
                    "ideal",
                    "annihilator",
                    "size",
                    "mark",
                    "printed-annihilator",
                    "printed-size",
                    "printed-mark",
                    "agrees",
                ])?;
                for r in &rows {
                    let p = r.printed.as_ref();
                    w.write_record([
                        r.label.clone(),
                        r.generators.clone(),
                        r.annihilator.clone(),
                        r.size.to_string(),
                        r.mark.to_string(),
                        p.map(|p| p.annihilator.clone()).unwrap_or_default(),
                        p.map(|p| p.size.to_string()).unwrap_or_default(),
                        p.map(|p| p.mark.clone()).unwrap_or_default(),
                        p.map(|p| p.agrees.to_string()).unwrap_or_default(),
                    ])?;
                }
                String::from_utf8(w.into_inner()?)?
            } else {
                human_table(&rows)
            };
            args.output.emit(&text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Rows labelled C1, C2, ...; at length 2 the labels and order follow the
/// reference table and each row carries its printed values.
fn table_rows(report: &VerifyReport) -> Vec<TableRow> {
    let label = |i: Option<usize>| i.map(|i| format!("#{i}")).unwrap_or_default();
    if let Some(table) = &report.table {
        return table
            .iter()
            .map(|t| TableRow {
                label: t.label.clone(),
                generators: t.generators.clone(),
                annihilator: t.oracle_annihilator.join("="),
                size: t.oracle_size,
                mark: match t.oracle_mark.as_str() {
                    "*" => "*",
                    "†" => "†",
                    _ => "",
                },
                printed: Some(PrintedRow {
                    annihilator: t.printed_annihilator.clone(),
                    size: t.printed_size,
                    mark: t.printed_mark.clone(),
                    agrees: t.agrees,
                }),
            })
            .collect();
    }
    report
        .rows
        .iter()
        .map(|r| TableRow {
            label: format!("#{}", r.index),
            generators: r.generators.clone(),
            annihilator: label(r.annihilator_oracle_index),
            size: r.size_oracle,
            mark: mark(r),
            printed: None,
        })
        .collect()
}

fn human_table(rows: &[TableRow]) -> String {
    let mut out = String::new();
    let printed = rows.iter().any(|r| r.printed.is_some());
    if printed {
        out.push_str(&format!(
            "{:<5} {:<32} {:<12} {:>6} {:<4} | {:<8} {:>6} {:<4} {}\n",
            "", "ideal", "A(C)", "|C|", "mark", "printed", "|C|", "mark", "agrees"
        ));
    } else {
        out.push_str(&format!(
            "{:<6} {:<48} {:<7} {:>8} {}\n",
            "", "ideal", "A(C)", "|C|", "mark"
        ));
    }
    for r in rows {
        match &r.printed {
            Some(p) => out.push_str(&format!(
                "{:<5} {:<32} {:<12} {:>6} {:<4} | {:<8} {:>6} {:<4} {}\n",
                r.label,
                r.generators,
                r.annihilator,
                r.size,
                r.mark,
                p.annihilator,
                p.size,
                p.mark,
                if p.agrees { "yes" } else { "no" }
            )),
            None => out.push_str(&format!(
                "{:<6} {:<48} {:<7} {:>8} {}\n",
                r.label, r.generators, r.annihilator, r.size, r.mark
            )),
        }
    }
    out
}

fn verify_summary(report: &VerifyReport) -> String {
    let mut out = format!(
        "length {}: {} candidates, {} distinct codes{}\n",
        report.n,
        report.candidates,
        report.distinct,
        report
            .oracle_ideal_count
            .map(|c| format!(", {c} ideals found by exhaustive search"))
            .unwrap_or_default()
    );
    out.push_str(&format!(
        "self-dual: {}, self-orthogonal: {}\n",
        report.self_dual_count, report.self_orthogonal_count
    ));
    for (name, tally) in &report.checks {
        out.push_str(&format!(
            "  {name:<36} pass {:>4}  fail {:>4}\n",
            tally.pass, tally.fail
        ));
    }
    out.push_str(&format!("discrepancies: {}\n", report.discrepancies.len()));
    out
}

fn ideal_text(gens: &[String]) -> String {
    if gens.is_empty() {
        "<0>".into()
    } else {
        format!("<{}>", gens.join(", "))
    }
}
