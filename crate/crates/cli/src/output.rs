//! Report rendering: deterministic text, JSON, and CSV for suites.

use mlv_core::conj::{Status, Verdict};

pub fn print_verdicts_text(verdicts: &[Verdict], approx: bool) {
    let _ = approx;
    for v in verdicts {
        println!("{v}");
    }
    let pass = verdicts.iter().filter(|v| v.status == Status::Pass).count();
    let fail = verdicts.iter().filter(|v| v.status == Status::Fail).count();
    let indet = verdicts
        .iter()
        .filter(|v| v.status == Status::Indeterminate)
        .count();
    println!("summary: {pass} pass, {fail} fail, {indet} indeterminate");
}

pub fn print_verdicts_json(verdicts: &[Verdict]) {
    let doc = serde_json::json!({
        "schema": "mlv-report/1",
        "verdicts": verdicts,
        "allPass": verdicts.iter().all(|v| v.status != Status::Fail),
    });
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
}

pub fn print_verdicts_csv(verdicts: &[Verdict]) {
    println!("label,check,status");
    for v in verdicts {
        let status = match v.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        };
        println!("{},{},{status}", v.label, v.check);
    }
}

/// 0 if nothing failed, 1 otherwise.
pub fn exit_code(verdicts: &[Verdict]) -> i32 {
    if verdicts.iter().any(|v| v.status == Status::Fail) {
        1
    } else {
        0
    }
}
