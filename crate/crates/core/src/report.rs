//! CSV and JSON emitters for verification rows, bound reports and tables.
//!
//! Floats are written with 17 significant digits (`%.17g` style), which
//! round-trips every double exactly. Column orders:
//!
//! * verification: `family,index,n,m,engine,formula,rel_diff,verdict,source`
//! * bound reports: `bound,instance,lhs,rhs,slack,verdict,preconditions_met`
//! * fuzz summary: `bound,evaluated,holds,tight,violated,skipped`
//! * tables: `family,n,m`, then `<index>_engine,<index>_formula,<index>_verdict`
//!   for each index of the table

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serializer;

use crate::bounds::{BoundReport, BoundSummary};
use crate::closed_forms::{TableRow, VerifyCell};

/// `x` with 17 significant digits, trailing zeros removed; scientific
/// notation outside `1e-5 <= |x| < 1e17`.
pub fn fmt_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..17).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Serde helper writing an `f64` as a JSON number with 17 significant digits.
pub fn ser_g17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    if x.is_finite() {
        serde_json::Number::from_str(&fmt_g17(*x))
            .expect("formatted float is a JSON number")
            .serialize(s)
    } else {
        s.serialize_none()
    }
}

pub fn ser_g17_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => ser_g17(x, s),
        None => s.serialize_none(),
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt(m: Option<usize>) -> String {
    m.map(|m| m.to_string()).unwrap_or_default()
}

pub fn verify_csv(rows: &[VerifyCell]) -> String {
    let mut out = String::from("family,index,n,m,engine,formula,rel_diff,verdict,source\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.family,
            r.index,
            r.n,
            opt(r.m),
            fmt_g17(r.engine),
            fmt_g17(r.formula),
            fmt_g17(r.rel_diff),
            r.verdict,
            r.source
        )
        .unwrap();
    }
    out
}

pub fn verify_json(rows: &[VerifyCell]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

pub fn bounds_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from("bound,instance,lhs,rhs,slack,verdict,preconditions_met\n");
    for r in reports {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.bound,
            csv_field(&r.instance),
            fmt_g17(r.lhs),
            fmt_g17(r.rhs),
            fmt_g17(r.slack),
            r.verdict,
            r.preconditions_met
        )
        .unwrap();
    }
    out
}

/// One JSON object per line.
pub fn bounds_jsonl(reports: &[BoundReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("report serializes"));
        out.push('\n');
    }
    out
}

pub fn summary_csv(summary: &[BoundSummary]) -> String {
    let mut out = String::from("bound,evaluated,holds,tight,violated,skipped\n");
    for s in summary {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            s.bound, s.evaluated, s.holds, s.tight, s.violated, s.skipped
        )
        .unwrap();
    }
    out
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("family,n,m");
    if let Some(first) = rows.first() {
        for c in &first.columns {
            write!(out, ",{0}_engine,{0}_formula,{0}_verdict", c.index).unwrap();
        }
    }
    out.push('\n');
    for r in rows {
        write!(out, "{},{},{}", r.family, r.n, opt(r.m)).unwrap();
        for c in &r.columns {
            write!(out, ",{},{},{}", fmt_g17(c.engine), fmt_g17(c.formula), c.verdict).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn table_json(rows: &[TableRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn g17_examples() {
        assert_eq!(fmt_g17(3.0), "3");
        assert_eq!(fmt_g17(-1.5), "-1.5");
        assert_eq!(fmt_g17(0.1), "0.10000000000000001");
        assert_eq!(fmt_g17(1.2), "1.2");
        assert_eq!(fmt_g17(152.0), "152");
        assert_eq!(fmt_g17(1e20), "1e20");
        assert_eq!(fmt_g17(2.5e-7), "2.4999999999999999e-7");
        assert_eq!(fmt_g17(0.0), "0");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    proptest! {
        #[test]
        fn g17_round_trips(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            let back: f64 = fmt_g17(x).parse().unwrap();
            prop_assert!(back == x || (x == 0.0 && back == 0.0));
        }
    }
}
