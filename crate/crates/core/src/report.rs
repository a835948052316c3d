//! Plain-text reports: `key: value` lines under `[section]` headers.

use std::fmt::Write as _;

use crate::catalog::{LegendrianVerdict, Slot, TableRow, Verdict, CSV_HEADER};
use crate::extension::Ambient;
use crate::moves::HomotopyScript;
use crate::nu::{is_zero, obstruction_valid, NuValue, NuVerdict};

fn name(script: &HomotopyScript, i: usize) -> &str {
    script.components.get(i).map_or("?", |c| c.name.as_str())
}

pub fn nu_report(script: &HomotopyScript, value: &NuValue, amb: &Ambient) -> String {
    let mut out = String::from("[nu]\n");
    let _ = writeln!(out, "homotopy: {}", script.name);
    let _ = writeln!(out, "terms: {}", value.len());
    for (i, t) in value.terms.iter().enumerate() {
        let _ = writeln!(
            out,
            "term {}: {} {}={} {}={}",
            i + 1,
            t.sign.symbol(),
            name(script, t.pair.0),
            t.left,
            name(script, t.pair.1),
            t.right
        );
    }
    if !obstruction_valid(script) {
        out.push_str("flag: invariance unverified\n");
    }
    let verdict = is_zero(value, amb);
    let note = match verdict {
        NuVerdict::Zero if value.is_empty() => " (no inter-component double points)",
        NuVerdict::Zero => " (all terms cancel)",
        NuVerdict::Nonzero => "",
        NuVerdict::Unknown => " (undecided term comparison)",
    };
    let _ = writeln!(out, "nu = {}{note}", verdict.keyword());
    out
}

fn verdict_body(out: &mut String, v: &Verdict) {
    for slot in Slot::ALL {
        let _ = writeln!(out, "{}: {}", slot.key(), v.get(slot));
    }
    for f in &v.flags {
        let _ = writeln!(out, "flag: {f}");
    }
    out.push_str("[provenance]\n");
    for slot in Slot::ALL {
        let rules = v.rules_for(slot);
        if rules.is_empty() {
            continue;
        }
        let list: Vec<&str> = rules.iter().map(|r| r.id()).collect();
        let _ = writeln!(out, "{}: {}", slot.key(), list.join(", "));
    }
}

pub fn verdict_report(v: &Verdict) -> String {
    let mut out = String::from("[verdict]\n");
    verdict_body(&mut out, v);
    out
}

pub fn legendrian_report(v: &LegendrianVerdict) -> String {
    let mut out = String::from("[verdict]\ncategory: legendrian\n");
    let _ = writeln!(out, "loose_components: {}", v.loose_components);
    let _ = writeln!(out, "loose_link: {}", v.loose_link);
    verdict_body(&mut out, &v.verdict);
    out
}

pub fn table_report(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}
