//! Acceptance sweep: one pass/fail line per criterion, non-zero exit on any
//! failure.  Run via `cargo test` (custom harness) or directly.

use std::collections::BTreeSet;
use std::time::Instant;

use jhp_cli::{render_jhp_table, Format};
use jhp_core::quiver_rep::TypeAQuiver;
use jhp_core::semibrick::{catalan_count, enumerate_semibricks_linear};
use jhp_core::symgroup::{bruhat_inversions, enumerate_c_sortables, inversions, Permutation};
use jhp_core::torsion::TfBounds;
use jhp_core::verify;

type CheckResult = Result<(), String>;

fn suite(report: jhp_core::Result<verify::SuiteReport>) -> CheckResult {
    let report = report.map_err(|e| format!("error: {e}"))?;
    if report.pass() {
        Ok(())
    } else {
        Err(report.failures.join("; "))
    }
}

fn c01_inversion_fidelity() -> CheckResult {
    let w: Permutation = "534216".parse().map_err(|e| format!("{e}"))?;
    let fmt = |set: &BTreeSet<jhp_core::symgroup::Transposition>| {
        set.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
    };
    let inv = fmt(&inversions(&w));
    let binv = fmt(&bruhat_inversions(&w));
    let want_inv = "(1 2) (1 3) (1 4) (1 5) (2 3) (2 4) (2 5) (3 5) (4 5)";
    let want_binv = "(1 2) (2 3) (2 4) (3 5) (4 5)";
    if inv != want_inv {
        return Err(format!("inversions: {inv}"));
    }
    if binv != want_binv {
        return Err(format!("bruhat inversions: {binv}"));
    }
    Ok(())
}

fn c02_sortable_counts() -> CheckResult {
    let count = |q: &str| -> Result<usize, String> {
        let quiver: TypeAQuiver = q.parse().map_err(|e| format!("{e}"))?;
        Ok(enumerate_c_sortables(&quiver).map_err(|e| format!("{e}"))?.len())
    };
    if count("<")? != 5 {
        return Err("1<-2 should have 5 sortables".to_string());
    }
    if count("><")? != 14 {
        return Err("1->2<-3 should have 14 sortables".to_string());
    }
    for n in 2..=4usize {
        for quiver in TypeAQuiver::all_orientations(n) {
            let got = enumerate_c_sortables(&quiver).map_err(|e| format!("{e}"))?.len() as u128;
            if got != catalan_count(n as u8) {
                return Err(format!("{quiver}: {got} sortables"));
            }
        }
    }
    Ok(())
}

fn c03_table_reproduction() -> CheckResult {
    let quiver: TypeAQuiver = "><".parse().map_err(|e| format!("{e}"))?;
    let rendered = render_jhp_table(&quiver, Format::Table).map_err(|e| format!("{e}"))?;
    let golden = include_str!("golden/jhp_table_fan3.txt");
    if rendered != golden {
        return Err("rendered table differs from the golden file".to_string());
    }
    if rendered.lines().count() != 15 {
        return Err("expected header + 14 rows".to_string());
    }
    Ok(())
}

fn c11_semibrick_catalan() -> CheckResult {
    let want = [2u128, 5, 14, 42, 132];
    for (n, &expected) in (1u8..=5).zip(&want) {
        let got = enumerate_semibricks_linear(n).map_err(|e| format!("{e}"))?.len() as u128;
        if got != expected || catalan_count(n) != expected {
            return Err(format!("n = {n}: enumerated {got}, formula {}", catalan_count(n)));
        }
    }
    Ok(())
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> CheckResult>)> = vec![
        ("01 inversion fidelity", Box::new(c01_inversion_fidelity)),
        ("02 sortable counts", Box::new(c02_sortable_counts)),
        ("03 table reproduction", Box::new(c03_table_reproduction)),
        ("04 criterion equivalence", Box::new(|| suite(verify::suite_criteria(4)))),
        ("05 fan-quiver criterion", Box::new(|| suite(verify::suite_bb(4)))),
        ("06 brute-force bijection", Box::new(|| suite(verify::suite_tf(4, TfBounds::default(), 0)))),
        ("07 semibrick oracle validation", Box::new(|| suite(verify::suite_filt(3, 8)))),
        ("08 worked example end-to-end", Box::new(|| suite(verify::suite_example(8)))),
        ("09 reflection tables", Box::new(|| suite(verify::suite_reflect(5)))),
        ("10 step-count identities", Box::new(|| suite(verify::suite_step_counts(4)))),
        ("11 semibrick catalan", Box::new(c11_semibrick_catalan)),
        ("12 H-set and shifted-hom consistency", Box::new(|| suite(verify::suite_semibrick(5)))),
    ];
    let mut failures = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("[criterion {name}] pass ({secs:.1}s)"),
            Err(msg) => {
                failures += 1;
                println!("[criterion {name}] FAIL ({secs:.1}s): {msg}");
            }
        }
    }
    if failures > 0 {
        println!("acceptance: {failures} criteria failed");
        std::process::exit(1);
    }
    println!("acceptance: all 12 criteria passed");
}
