//! Text and machine-readable renderings of reports.
//!
//! Machine classification output is one record per proper graded right
//! ideal, in canonical order, with tab-separated fields:
//!
//! ```text
//! ideal  twosided  idempotent  prime  weakly-prime  almost-prime  prime-witness  weakly-witness  almost-witness
//! ```
//!
//! Ideals are written `{0,1,3}`, flags as `1`/`0`, and witnesses as
//! `{..};{..}` for ideal pairs or `-` when the verdict is positive.

use std::fmt::Write as _;

use graded_core::audit::{AuditResult, AuditStatus};
use graded_core::primality::{ColonSide, ReportEntry};
use graded_core::{ClassificationReport, ElementSet, GradedRing, Verdict, Witness};

pub const MACHINE_HEADER: &str =
    "#ideal\ttwosided\tidempotent\tprime\tweakly-prime\talmost-prime\tprime-witness\tweakly-witness\talmost-witness";

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn bit(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

pub fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Ideals { x, y } => format!("X={x} Y={y}"),
        Witness::Elements { x, y } => format!("x={x} y={y}"),
        Witness::Colon { x, side } => {
            let side = match side {
                ColonSide::Right => "right",
                ColonSide::Left => "left",
            };
            format!("x={x} ({side} colon)")
        }
    }
}

fn witness_field(v: &Verdict) -> String {
    match &v.witness {
        None => "-".into(),
        Some(Witness::Ideals { x, y }) => format!("{x};{y}"),
        Some(Witness::Elements { x, y }) => format!("{x};{y}"),
        Some(Witness::Colon { x, .. }) => x.to_string(),
    }
}

pub fn summary(name: &str, gr: &GradedRing) -> String {
    let r = gr.ring();
    format!(
        "ring {name}: order {}, grading group of order {}, {}, {}, {} homogeneous elements",
        r.order(),
        gr.group().order(),
        if r.unity().is_some() {
            "unital"
        } else {
            "non-unital"
        },
        if r.is_commutative() {
            "commutative"
        } else {
            "non-commutative"
        },
        gr.homogeneous_elements().count(),
    )
}

fn verdict_line(out: &mut String, label: &str, v: &Verdict) {
    let _ = write!(out, "  {label}: {}", yes(v.value));
    if let Some(w) = &v.witness {
        let _ = write!(out, " (witness {})", witness_text(w));
    }
    out.push('\n');
}

fn entry_text(out: &mut String, e: &ReportEntry) {
    let f = &e.flags;
    let _ = writeln!(
        out,
        "{}  two-sided: {}, idempotent: {}",
        e.ideal,
        yes(f.is_twosided),
        yes(f.is_idempotent)
    );
    verdict_line(out, "prime", &e.prime);
    verdict_line(out, "weakly prime", &e.weakly_prime);
    verdict_line(out, "almost prime", &e.almost_prime);
}

/// Human-readable report. `ungraded` lists right ideals that are not graded.
pub fn classification_text(
    name: &str,
    gr: &GradedRing,
    report: &ClassificationReport,
    ungraded: Option<&[ElementSet]>,
) -> String {
    let mut out = summary(name, gr);
    out.push('\n');
    let _ = writeln!(out, "proper graded right ideals: {}", report.entries.len());
    for e in &report.entries {
        entry_text(&mut out, e);
    }
    if let Some(ungraded) = ungraded {
        let list: Vec<String> = ungraded.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "right ideals that are not graded: {}",
            if list.is_empty() {
                "none".into()
            } else {
                list.join(" ")
            }
        );
    }
    let _ = writeln!(out, "all prime: {}", yes(report.all_prime()));
    let _ = writeln!(out, "all weakly prime: {}", yes(report.all_weakly_prime()));
    let _ = writeln!(out, "all almost prime: {}", yes(report.all_almost_prime()));
    out
}

pub fn classification_machine(report: &ClassificationReport) -> String {
    let mut out = String::from(MACHINE_HEADER);
    out.push('\n');
    for e in &report.entries {
        let fields = [
            e.ideal.to_string(),
            bit(e.flags.is_twosided).into(),
            bit(e.flags.is_idempotent).into(),
            bit(e.prime.value).into(),
            bit(e.weakly_prime.value).into(),
            bit(e.almost_prime.value).into(),
            witness_field(&e.prime),
            witness_field(&e.weakly_prime),
            witness_field(&e.almost_prime),
        ];
        out.push_str(&fields.join("\t"));
        out.push('\n');
    }
    out
}

pub fn ideals_text(ideals: &[ElementSet]) -> String {
    let mut out = String::new();
    for s in ideals {
        let _ = writeln!(out, "{s}{}", if s.is_full() { "  (improper)" } else { "" });
    }
    out
}

pub fn audit_text(results: &[AuditResult]) -> String {
    let mut out = String::new();
    for r in results {
        let status = match &r.status {
            AuditStatus::Passed => "PASS",
            AuditStatus::Counterexample(_) => "FAIL",
        };
        let _ = writeln!(
            out,
            "{status} {} checked={} skipped={}",
            r.theorem, r.checked, r.skipped
        );
        if let AuditStatus::Counterexample(c) = &r.status {
            let _ = writeln!(
                out,
                "  counterexample in {}: {} ({})",
                c.ring, c.instance, c.detail
            );
        }
        for note in &r.notes {
            let _ = writeln!(out, "  note: {note}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graded_core::{catalog, primality, Limits};

    #[test]
    fn example2_machine_report() {
        let gr = catalog::example2();
        let report = primality::classify_all(&gr, &Limits::default()).unwrap();
        let text = classification_machine(&report);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], MACHINE_HEADER);
        assert_eq!(lines[1], "{0}\t1\t1\t0\t1\t1\t{0,1};{0,3}\t-\t-");
        assert_eq!(lines[2], "{0,1}\t0\t1\t0\t1\t1\t{0,3};{0,3}\t-\t-");
        assert_eq!(lines[3], "{0,3}\t1\t0\t1\t1\t1\t-\t-\t-");
        assert_eq!(lines.len(), 4);
    }
}
