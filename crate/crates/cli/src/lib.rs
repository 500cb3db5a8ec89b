//! Command-line front end: enumeration sweeps, JHP verdicts, table
//! reproduction and oracle-vs-criterion verification runs.
//!
//! Exit codes: 0 = success / positive verdict, 1 = negative verdict or
//! counterexample found, 2 = usage error.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use jhp_core::error::{Error, Result};
use jhp_core::filt_oracle::{check_jhp, check_wjhp, filtrations, GeneratorSet};
use jhp_core::quiver_rep::{Interval, IsoClass, ModCtx, TypeAQuiver};
use jhp_core::reflect::{main6_jhp, sink_plan_to_linear};
use jhp_core::semibrick::{
    catalan_count, enumerate_semibricks_linear, is_semibrick_linear, is_semibrick_shifted,
    ShiftedInterval,
};
use jhp_core::symgroup::{
    bruhat_inversions, enumerate_c_sortables, inversions, is_c_sortable, Permutation,
};
use jhp_core::torsion::{
    bb_criterion, enumerate_tf_classes_bruteforce, is_torsion_free_oracle, jhp_by_count,
    tf_class_of, BbVerdict, TfBounds, TfVerdict,
};
use jhp_core::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct CommonOpts {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// Size of the rayon thread pool for sweeps (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for sampled sweeps
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Dimension bound for the filtration universe
    #[arg(long = "universe-dim", global = true, default_value_t = 8)]
    pub universe_dim: usize,
    /// Max indecomposable summands per side in submodule-closure checks
    #[arg(long = "pair-sum", global = true, default_value_t = 2)]
    pub pair_sum: usize,
    /// Prime field characteristic for matrix representations
    #[arg(long, global = true, default_value_t = 2)]
    pub field: u8,
}

#[derive(Debug, Parser)]
#[command(name = "jhp", version, about = "Jordan-Hölder property of torsion-free classes over type-A quivers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonOpts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// c-sortable elements of the symmetric group
    Sortable {
        #[command(subcommand)]
        action: SortableCmd,
    },
    /// Torsion-free classes of interval modules
    Tf {
        #[command(subcommand)]
        action: TfCmd,
    },
    /// Jordan-Hölder verdicts via the symmetric-group criteria
    Jhp {
        #[command(subcommand)]
        action: JhpCmd,
    },
    /// Reflection functor traces
    Reflect {
        #[command(subcommand)]
        action: ReflectCmd,
    },
    /// Semibricks over the linearly oriented quiver
    Semibrick {
        #[command(subcommand)]
        action: SemibrickCmd,
    },
    /// Brute-force filtration oracle
    Filt {
        #[command(subcommand)]
        action: FiltCmd,
    },
    /// Inversions and Bruhat inversions of a permutation
    Binv {
        /// Permutation in one-line notation, e.g. 534216
        perm: String,
    },
    /// Cross-validation suites (criteria vs brute-force oracles)
    Verify {
        /// Suite name, or "all"
        #[arg(default_value = "all")]
        suite: String,
        /// Accepted for symmetry with the other verbs; the suites sweep all
        /// orientations regardless
        #[arg(long)]
        quiver: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SortableCmd {
    /// Enumerate all c_Q-sortable elements
    List {
        #[arg(long)]
        quiver: String,
    },
    /// Decide sortability and print the certificate
    Check {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        perm: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum TfCmd {
    /// Enumerate torsion-free classes (via sortables, or --brute for the
    /// power-set oracle)
    Enumerate {
        #[arg(long)]
        quiver: String,
        /// Use the brute-force power-set enumeration instead of F(w)
        #[arg(long)]
        brute: bool,
    },
    /// Run the closure oracle on F(--perm) or on an explicit --class
    Oracle {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        perm: Option<String>,
        /// Space-separated intervals, e.g. "[1,3) [2,3)"
        #[arg(long)]
        class: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum JhpCmd {
    /// Decide JHP for F(--perm) by the reflection-sequence criterion
    Check {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        perm: String,
    },
    /// Reproduce the full sortable/reflection/JHP table for a quiver
    Table {
        #[arg(long)]
        quiver: String,
    },
    /// Closed-form verdict for the fan quiver 1 <- 2 -> 3 -> ... -> n
    Bb {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        perm: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ReflectCmd {
    /// Emit the reflection plan/sequence certificate as JSON
    Trace {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        perm: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SemibrickCmd {
    /// Count semibricks over the linear A_n quiver and compare with the
    /// Catalan formula
    Count {
        #[arg(long)]
        n: u8,
    },
    /// Check a set of modules M(i,j) (optionally shifted M(i,j)[k])
    Check {
        /// Space-separated objects, e.g. "M(0,2) M(2,3)" or "M(1,2)[-1] M(2,3)[0]"
        #[arg(long)]
        set: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FiltCmd {
    /// List all filtration outcome sequences of a module
    List {
        #[arg(long)]
        quiver: String,
        /// Space-separated member intervals
        #[arg(long)]
        members: String,
        /// Module as a sum of intervals, e.g. "[1,3) + 2*[2,3)"
        #[arg(long)]
        module: String,
    },
    /// Weak Jordan-Hölder check over the bounded universe
    Wjhp {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        members: String,
    },
    /// Full Jordan-Hölder check over the bounded universe
    Jhp {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        members: String,
    },
}

fn parse_quiver(s: &str) -> Result<TypeAQuiver> {
    s.parse()
}

fn parse_perm(s: &str) -> Result<Permutation> {
    s.parse()
}

fn parse_intervals(s: &str) -> Result<Vec<Interval>> {
    s.split_whitespace().map(str::parse).collect()
}

fn parse_iso_class(s: &str) -> Result<IsoClass> {
    let mut class = IsoClass::zero();
    let trimmed = s.trim();
    if trimmed == "0" {
        return Ok(class);
    }
    for part in trimmed.split('+') {
        let part = part.trim();
        let (mult, interval) = match part.split_once('*') {
            Some((k, rest)) => (
                k.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadInterval(part.to_string()))?,
                rest.trim(),
            ),
            None => (1, part),
        };
        let interval: Interval = interval.parse()?;
        for _ in 0..mult {
            class.push(interval);
        }
    }
    Ok(class)
}

/// "s2·s1·s3" for the letters [2,1,3]; "e" for the identity.
pub fn word_label(letters: &[u8]) -> String {
    if letters.is_empty() {
        "e".to_string()
    } else {
        letters.iter().map(|q| format!("s{q}")).collect::<Vec<_>>().join("·")
    }
}

fn intervals_label(intervals: &BTreeSet<Interval>) -> String {
    if intervals.is_empty() {
        "(empty)".to_string()
    } else {
        intervals.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (k, cell) in cells.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[k] - cell.chars().count();
            if k + 1 < cells.len() {
                line.extend(std::iter::repeat(' ').take(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(&mut out, &header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit(&mut out, row);
    }
    out
}

fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let quote = |cell: &str| {
        if cell.contains(',') || cell.contains('"') {
            format!("\"{}\"", cell.replace('"', "\"\""))
        } else {
            cell.to_string()
        }
    };
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn render_rows(
    format: Format,
    header: &[&str],
    rows: &[Vec<String>],
) -> String {
    match format {
        Format::Table => render_table(header, rows),
        Format::Csv => render_csv(header, rows),
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut map = serde_json::Map::new();
                    for (k, cell) in row.iter().enumerate() {
                        map.insert(header[k].to_string(), json!(cell));
                    }
                    serde_json::Value::Object(map)
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&items).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn render_json(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

/// Key/value report that degrades to JSON when asked.
fn render_report(format: Format, pairs: &[(&str, serde_json::Value)]) -> String {
    match format {
        Format::Json | Format::Csv => {
            let mut map = serde_json::Map::new();
            for (k, v) in pairs {
                map.insert(k.to_string(), v.clone());
            }
            render_json(serde_json::Value::Object(map))
        }
        Format::Table => {
            let mut out = String::new();
            for (k, v) in pairs {
                let shown = match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                writeln!(out, "{k}: {shown}").unwrap();
            }
            out
        }
    }
}

/// One row of the `jhp table` output.
pub struct TableRow {
    pub word: String,
    pub perm: String,
    pub sequence: String,
    pub image: String,
    pub dagger: i64,
    pub ddagger: i64,
}

/// The full reflection/JHP table of a quiver, in enumeration order of the
/// sortable elements (lexicographic by one-line form).
pub fn jhp_table_rows(quiver: &TypeAQuiver) -> Result<Vec<TableRow>> {
    let plan = sink_plan_to_linear(quiver)?;
    let final_quiver = plan.final_quiver().clone();
    let mut rows = Vec::new();
    for w in enumerate_c_sortables(quiver)? {
        let cert = is_c_sortable(&w, quiver)?.expect("enumerated as sortable");
        let report = main6_jhp(&w, quiver)?;
        let (sequence, image) = match &report.trace {
            None => ("absence".to_string(), w.clone()),
            Some(trace) => (
                trace
                    .sequence
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                trace.image.clone(),
            ),
        };
        let image_cert = is_c_sortable(&image, &final_quiver)?.ok_or_else(|| {
            Error::Internal(format!("image {image} not sortable for {final_quiver}"))
        })?;
        rows.push(TableRow {
            word: word_label(&cert.word()),
            perm: w.to_string(),
            sequence,
            image: format!("{} = {}", word_label(&image_cert.word()), image),
            dagger: report.dagger_total,
            ddagger: report.ddagger_total,
        });
    }
    Ok(rows)
}

const TABLE_HEADER: [&str; 6] = ["word", "one-line", "sequence", "image", "dagger", "ddagger"];

pub fn render_jhp_table(quiver: &TypeAQuiver, format: Format) -> Result<String> {
    let rows: Vec<Vec<String>> = jhp_table_rows(quiver)?
        .into_iter()
        .map(|r| {
            vec![r.word, r.perm, r.sequence, r.image, r.dagger.to_string(), r.ddagger.to_string()]
        })
        .collect();
    Ok(render_rows(format, &TABLE_HEADER, &rows))
}

fn filt_report_output(
    format: Format,
    report: &jhp_core::filt_oracle::FiltReport,
    check: &str,
) -> String {
    let counterexamples: Vec<serde_json::Value> = report
        .counterexamples
        .iter()
        .map(|c| {
            json!({
                "module": c.module.to_string(),
                "seq_a": c.seq_a.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "seq_b": c.seq_b.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    render_report(
        format,
        &[
            ("check", json!(check)),
            ("generator_set", json!(report.generator_set)),
            ("universe_bound", json!(report.universe_bound)),
            ("verdict", json!(if report.verdict { "pass" } else { "fail" })),
            ("counterexamples", json!(counterexamples)),
            ("inconclusive", json!(report.inconclusive)),
        ],
    )
}

fn suite_output(format: Format, reports: &[verify::SuiteReport]) -> (String, i32) {
    let all_pass = reports.iter().all(verify::SuiteReport::pass);
    let out = match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite,
                        "checks": r.checks,
                        "pass": r.pass(),
                        "failures": r.failures,
                        "notes": r.notes,
                    })
                })
                .collect();
            render_json(json!({ "pass": all_pass, "suites": items }))
        }
        Format::Table | Format::Csv => {
            let mut out = String::new();
            for r in reports {
                writeln!(
                    out,
                    "{}: {} ({} checks)",
                    r.suite,
                    if r.pass() { "pass" } else { "FAIL" },
                    r.checks
                )
                .unwrap();
                for f in &r.failures {
                    writeln!(out, "  failure: {f}").unwrap();
                }
                for n in &r.notes {
                    writeln!(out, "  note: {n}").unwrap();
                }
            }
            writeln!(out, "overall: {}", if all_pass { "pass" } else { "FAIL" }).unwrap();
            out
        }
    };
    (out, if all_pass { 0 } else { 1 })
}

/// Execute a parsed invocation; returns the rendered output and the exit
/// code (0 positive, 1 negative verdict).
pub fn run(cli: &Cli) -> Result<(String, i32)> {
    let common = &cli.common;
    let format = common.format;
    let bounds = TfBounds { pair_sum: common.pair_sum, max_dim: common.universe_dim };
    match &cli.command {
        Command::Sortable { action } => match action {
            SortableCmd::List { quiver } => {
                let quiver = parse_quiver(quiver)?;
                let rows: Vec<Vec<String>> = enumerate_c_sortables(&quiver)?
                    .into_iter()
                    .map(|w| {
                        let cert = is_c_sortable(&w, &quiver)?.expect("sortable");
                        Ok(vec![w.to_string(), word_label(&cert.word())])
                    })
                    .collect::<Result<_>>()?;
                Ok((render_rows(format, &["one-line", "word"], &rows), 0))
            }
            SortableCmd::Check { quiver, perm } => {
                let quiver = parse_quiver(quiver)?;
                let w = parse_perm(perm)?;
                let cert = is_c_sortable(&w, &quiver)?;
                let code = i32::from(cert.is_none());
                let (sortable, word, factors) = match cert {
                    Some(c) => (true, json!(word_label(&c.word())), json!(c.to_string())),
                    None => (false, json!(null), json!(null)),
                };
                let out = render_report(
                    format,
                    &[
                        ("perm", json!(w.to_string())),
                        ("quiver", json!(quiver.to_string())),
                        ("sortable", json!(sortable)),
                        ("word", word),
                        ("factors", factors),
                    ],
                );
                Ok((out, code))
            }
        },
        Command::Tf { action } => match action {
            TfCmd::Enumerate { quiver, brute } => {
                let quiver = parse_quiver(quiver)?;
                if *brute {
                    let ctx = ModCtx::new(&quiver, common.field)?;
                    let classes = enumerate_tf_classes_bruteforce(&quiver, &ctx, bounds)?;
                    let rows: Vec<Vec<String>> =
                        classes.iter().map(|c| vec![intervals_label(c)]).collect();
                    Ok((render_rows(format, &["class"], &rows), 0))
                } else {
                    let rows: Vec<Vec<String>> = enumerate_c_sortables(&quiver)?
                        .into_iter()
                        .map(|w| {
                            let class = tf_class_of(&w, &quiver)?;
                            Ok(vec![w.to_string(), intervals_label(&class.intervals)])
                        })
                        .collect::<Result<_>>()?;
                    Ok((render_rows(format, &["one-line", "class"], &rows), 0))
                }
            }
            TfCmd::Oracle { quiver, perm, class } => {
                let quiver = parse_quiver(quiver)?;
                let intervals: BTreeSet<Interval> = match (perm, class) {
                    (Some(p), None) => tf_class_of(&parse_perm(p)?, &quiver)?.intervals,
                    (None, Some(c)) => parse_intervals(c)?.into_iter().collect(),
                    _ => {
                        return Err(Error::Internal(
                            "pass exactly one of --perm and --class".to_string(),
                        ))
                    }
                };
                let ctx = ModCtx::new(&quiver, common.field)?;
                let verdict = is_torsion_free_oracle(&intervals, &ctx, bounds)?;
                let out = render_report(
                    format,
                    &[
                        ("quiver", json!(quiver.to_string())),
                        ("class", json!(intervals_label(&intervals))),
                        ("verdict", json!(verdict.to_string())),
                    ],
                );
                Ok((out, i32::from(verdict == TfVerdict::NotTorsionFree)))
            }
        },
        Command::Jhp { action } => match action {
            JhpCmd::Check { quiver, perm } => {
                let quiver = parse_quiver(quiver)?;
                let w = parse_perm(perm)?;
                let report = main6_jhp(&w, &quiver)?;
                let by_count = jhp_by_count(&w);
                if report.jhp != by_count {
                    return Err(Error::Internal(format!(
                        "criteria disagree at {w} over {quiver}"
                    )));
                }
                let sequence = match &report.trace {
                    None => json!(null),
                    Some(t) => json!(t.sequence),
                };
                let image = match &report.trace {
                    None => json!(w.to_string()),
                    Some(t) => json!(t.image.to_string()),
                };
                let out = render_report(
                    format,
                    &[
                        ("perm", json!(w.to_string())),
                        ("quiver", json!(quiver.to_string())),
                        ("sequence", sequence),
                        ("image", image),
                        ("dagger_total", json!(report.dagger_total)),
                        ("ddagger_total", json!(report.ddagger_total)),
                        ("jhp", json!(report.jhp)),
                    ],
                );
                Ok((out, i32::from(!report.jhp)))
            }
            JhpCmd::Table { quiver } => {
                let quiver = parse_quiver(quiver)?;
                Ok((render_jhp_table(&quiver, format)?, 0))
            }
            JhpCmd::Bb { quiver, perm } => {
                let quiver = parse_quiver(quiver)?;
                let w = parse_perm(perm)?;
                let verdict = bb_criterion(&w, &quiver)?;
                let out = render_report(
                    format,
                    &[
                        ("perm", json!(w.to_string())),
                        ("quiver", json!(quiver.to_string())),
                        ("verdict", json!(verdict.to_string())),
                    ],
                );
                Ok((out, i32::from(verdict != BbVerdict::TorsionFreeJHP)))
            }
        },
        Command::Reflect { action } => match action {
            ReflectCmd::Trace { quiver, perm } => {
                let quiver = parse_quiver(quiver)?;
                let w = parse_perm(perm)?;
                let report = main6_jhp(&w, &quiver)?;
                let steps: Vec<serde_json::Value> = report
                    .trace
                    .iter()
                    .flat_map(|t| &t.steps)
                    .map(|s| {
                        json!({
                            "vertex": s.vertex,
                            "dagger": s.dagger,
                            "ddagger": s.ddagger,
                            "perm_before": s.perm_before.to_string(),
                            "perm_after": s.perm_after.to_string(),
                        })
                    })
                    .collect();
                let out = render_json(json!({
                    "quiver": quiver.to_string(),
                    "perm": w.to_string(),
                    "plan": report.plan.vertices(),
                    "sequence": report.trace.as_ref().map(|t| t.sequence.clone()),
                    "steps": steps,
                    "image": report.trace.as_ref().map_or_else(|| w.to_string(), |t| t.image.to_string()),
                    "totals": { "dagger": report.dagger_total, "ddagger": report.ddagger_total },
                    "jhp": report.jhp,
                }));
                Ok((out, 0))
            }
        },
        Command::Semibrick { action } => match action {
            SemibrickCmd::Count { n } => {
                let count = enumerate_semibricks_linear(*n)?.len() as u128;
                let formula = catalan_count(*n);
                let out = render_report(
                    format,
                    &[
                        ("n", json!(n)),
                        ("count", json!(count.to_string())),
                        ("catalan", json!(formula.to_string())),
                    ],
                );
                Ok((out, i32::from(count != formula)))
            }
            SemibrickCmd::Check { set } => {
                let shifted = set.contains('[');
                let verdict = if shifted {
                    let items: BTreeSet<ShiftedInterval> = set
                        .split_whitespace()
                        .map(str::parse)
                        .collect::<Result<_>>()?;
                    is_semibrick_shifted(&items)
                } else {
                    let items: BTreeSet<(u8, u8)> = set
                        .split_whitespace()
                        .map(|s| {
                            let obj: ShiftedInterval = format!("{s}[0]").parse()?;
                            Ok((obj.i, obj.j))
                        })
                        .collect::<Result<_>>()?;
                    is_semibrick_linear(&items)
                };
                let out = render_report(
                    format,
                    &[
                        ("set", json!(set)),
                        ("shifted", json!(shifted)),
                        ("semibrick", json!(verdict)),
                    ],
                );
                Ok((out, i32::from(!verdict)))
            }
        },
        Command::Filt { action } => {
            let (quiver, members) = match action {
                FiltCmd::List { quiver, members, .. }
                | FiltCmd::Wjhp { quiver, members }
                | FiltCmd::Jhp { quiver, members } => (quiver, members),
            };
            let quiver = parse_quiver(quiver)?;
            let ctx = ModCtx::new(&quiver, common.field)?;
            let x = GeneratorSet::of_intervals(&quiver, parse_intervals(members)?);
            match action {
                FiltCmd::List { module, .. } => {
                    let m = parse_iso_class(module)?;
                    let mut seqs: Vec<Vec<String>> =
                        filtrations(&m, &x, &ctx, common.universe_dim)?
                            .into_iter()
                            .map(|seq| {
                                vec![seq
                                    .iter()
                                    .map(|c| c.to_string())
                                    .collect::<Vec<_>>()
                                    .join("; ")]
                            })
                            .collect();
                    seqs.sort();
                    Ok((render_rows(format, &["filtration"], &seqs), 0))
                }
                FiltCmd::Wjhp { .. } => {
                    let report = check_wjhp(&x, &ctx, common.universe_dim)?;
                    let out = filt_report_output(format, &report, "wjhp");
                    Ok((out, i32::from(!report.verdict)))
                }
                FiltCmd::Jhp { .. } => {
                    let report = check_jhp(&x, &ctx, common.universe_dim)?;
                    let out = filt_report_output(format, &report, "jhp");
                    Ok((out, i32::from(!report.verdict)))
                }
            }
        }
        Command::Binv { perm } => {
            let w = parse_perm(perm)?;
            let inv = inversions(&w);
            let binv = bruhat_inversions(&w);
            let show = |set: &BTreeSet<jhp_core::symgroup::Transposition>| {
                set.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
            };
            let out = render_report(
                format,
                &[
                    ("perm", json!(w.to_string())),
                    ("length", json!(inv.len())),
                    ("inversions", json!(show(&inv))),
                    ("bruhat_inversions", json!(show(&binv))),
                ],
            );
            Ok((out, 0))
        }
        Command::Verify { suite, quiver } => {
            if let Some(q) = quiver {
                parse_quiver(q)?;
            }
            let reports = if suite == "all" {
                verify::run_all(common.seed, common.universe_dim, bounds)?
            } else {
                match verify::run_suite(suite, common.seed, common.universe_dim, bounds)? {
                    Some(r) => vec![r],
                    None => {
                        return Err(Error::Internal(format!(
                            "unknown suite '{suite}'; expected all or one of {}",
                            verify::SUITE_NAMES.join(", ")
                        )))
                    }
                }
            };
            let (out, code) = suite_output(format, &reports);
            Ok((out, code))
        }
    }
}
