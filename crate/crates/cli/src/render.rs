//! Deterministic report rendering.
//!
//! A report body is a human-readable summary followed by a `## machine`
//! section of `key=value` lines in fixed order. Every number is a base-10
//! string (values stay exact end to end; the schema has no floats), and
//! nothing execution-dependent — timing, worker count, paths created at
//! run time — is allowed in, so bodies are byte-identical across runs and
//! parallelism levels.

use std::cmp::Ordering;
use std::fmt::Write as _;

use bocheck::criterion::{CriterionResult, LogConcavityReport};
use bocheck::verify::{BoReport, PairVerdict, VerificationReport};

use crate::expect::{Exception, ExpectDiff};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub struct Body {
    text: String,
    machine: Vec<(String, String)>,
}

impl Body {
    pub fn new(command: &str) -> Self {
        let mut body = Body {
            text: String::new(),
            machine: Vec::new(),
        };
        let _ = writeln!(body.text, "# bocheck {command}");
        let _ = writeln!(body.text, "tool: bocheck {TOOL_VERSION}");
        body.kv("tool.version", TOOL_VERSION);
        body.kv("command", command);
        body
    }

    pub fn section(&mut self, title: &str) {
        let _ = writeln!(self.text, "\n## {title}");
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.text, "{}", s.as_ref());
    }

    pub fn kv(&mut self, key: &str, value: impl ToString) {
        self.machine.push((key.to_string(), value.to_string()));
    }

    pub fn finish(mut self) -> String {
        self.section("machine");
        for (k, v) in &self.machine {
            let _ = writeln!(self.text, "{k}={v}");
        }
        self.text
    }
}

pub fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn mode_name(strict: bool) -> &'static str {
    if strict {
        "strict"
    } else {
        "weak"
    }
}

pub fn indices(list: &[usize]) -> String {
    if list.is_empty() {
        "none".into()
    } else {
        list.iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn indices_csv(list: &[usize]) -> String {
    list.iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn pair_list(list: &[PairVerdict]) -> String {
    if list.is_empty() {
        "none".into()
    } else {
        list.iter()
            .map(|p| format!("({},{})", p.m, p.n))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn pair_csv(list: &[PairVerdict]) -> String {
    list.iter()
        .map(|p| format!("({},{})", p.m, p.n))
        .collect::<Vec<_>>()
        .join(";")
}

fn exception_list(list: &[Exception]) -> String {
    if list.is_empty() {
        "none".into()
    } else {
        list.iter()
            .map(|(m, n, rel)| {
                let r = if *rel == Ordering::Equal { "EQ" } else { "LT" };
                format!("({m},{n},{r})")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn config_section(body: &mut Body, seq: &str, strict: bool, pairs: &[(&str, String)]) {
    body.section("config");
    body.line(format!("seq: {seq}"));
    body.kv("cfg.seq", seq);
    body.line(format!("mode: {}", mode_name(strict)));
    body.kv("cfg.strict", strict);
    for (key, value) in pairs {
        body.line(format!("{key}: {value}"));
        body.kv(&format!("cfg.{key}"), value);
    }
}

pub fn frontier_section(body: &mut Body, scan: &LogConcavityReport) {
    body.section("log-concavity");
    body.line(format!("range: [{}, {}]", scan.lo, scan.hi));
    body.line(format!("failures (<): {}", indices(&scan.failures)));
    body.line(format!("equalities (=): {}", indices(&scan.equalities)));
    body.line(format!(
        "frontier ({}): {}",
        mode_name(scan.strict),
        scan.frontier
    ));
    body.line("note: certified within the scanned range only");
    body.kv("frontier.lo", scan.lo);
    body.kv("frontier.hi", scan.hi);
    body.kv("frontier.failures", indices_csv(&scan.failures));
    body.kv("frontier.equalities", indices_csv(&scan.equalities));
    body.kv("frontier.value", scan.frontier);
}

pub fn criterion_section(body: &mut Body, crit: &CriterionResult, br_at_n0: Option<bool>) {
    body.section("criterion");
    body.line(format!("n0: {}", crit.n0));
    body.line(format!(
        "pivot ratio alpha(n0)/alpha(n0-1): {}",
        crit.pivot_ratio
    ));
    body.line(format!(
        "condition alpha(n0)^(1/n0) vs ratio ({}): {}",
        mode_name(crit.strict),
        if crit.condition_holds { "holds" } else { "fails" }
    ));
    if let Some(br) = br_at_n0 {
        body.line(format!(
            "benfield-roy condition at (n0, 0): {}",
            if br { "holds" } else { "fails" }
        ));
    }
    let a_text = match crit.contiguous_a() {
        Some((lo, hi)) => format!("{{{lo}..{hi}}} ({} indices)", crit.a_set.len()),
        None if crit.a_set.is_empty() => "{} (empty)".to_string(),
        None => format!("{{{}}}", indices(&crit.a_set)),
    };
    body.line(format!("admissible set A: {a_text}"));
    body.line(format!(
        "uncovered columns: {}",
        indices(&crit.uncovered_columns)
    ));
    let bound = crit.n0.saturating_sub(1);
    body.line(format!(
        "covered region: (m,n >= {bound}) | (m in A, n >= {bound}) | (m >= {bound}, n in A)"
    ));
    match crit.residual_rectangle() {
        Some((lo, hi)) => body.line(format!("residual rectangle: [{lo},{hi}]^2")),
        None => body.line("residual rectangle: empty"),
    }
    if !crit.condition_holds {
        body.line("note: condition fails, coverage carries no claim; sweeps below are unconditional");
    }
    body.kv("criterion.n0", crit.n0);
    body.kv("criterion.ratio", &crit.pivot_ratio);
    body.kv("criterion.condition", crit.condition_holds);
    if let Some(br) = br_at_n0 {
        body.kv("criterion.br", br);
    }
    body.kv("criterion.a", indices_csv(&crit.a_set));
    body.kv("criterion.uncovered", indices_csv(&crit.uncovered_columns));
}

pub fn residual_section(body: &mut Body, sweep: &BoReport) {
    body.section("residual sweep");
    body.line(format!(
        "rectangle: [{},{}] x [{},{}]",
        sweep.m_range.0, sweep.m_range.1, sweep.n_range.0, sweep.n_range.1
    ));
    body.line(format!("pairs checked (canonical): {}", sweep.pairs_checked));
    body.line(format!("violations (<): {}", pair_list(&sweep.violations)));
    body.line(format!("equalities (=): {}", pair_list(&sweep.equalities)));
    body.line(format!(
        "clean ({}): {}",
        mode_name(sweep.strict),
        yes_no(sweep.clean())
    ));
    body.kv(
        "residual.rect",
        format!(
            "{}..{}x{}..{}",
            sweep.m_range.0, sweep.m_range.1, sweep.n_range.0, sweep.n_range.1
        ),
    );
    body.kv("residual.pairs", sweep.pairs_checked);
    body.kv("residual.lt", pair_csv(&sweep.violations));
    body.kv("residual.eq", pair_csv(&sweep.equalities));
    body.kv("residual.clean", sweep.clean());
}

pub fn expect_section(body: &mut Body, diff: &ExpectDiff, expect_path: &str) {
    body.section("expected exceptions");
    body.line(format!("file: {expect_path}"));
    body.line(format!("missing (expected, not found): {}", exception_list(&diff.missing)));
    body.line(format!("unexpected (found, not expected): {}", exception_list(&diff.unexpected)));
    body.line(format!("match: {}", yes_no(diff.matches())));
    body.kv("expect.match", diff.matches());
    body.kv("expect.missing", diff.missing.len());
    body.kv("expect.unexpected", diff.unexpected.len());
}

pub fn full_report_body(report: &VerificationReport, seq_label: &str) -> String {
    let mut body = Body::new("report");
    config_section(
        &mut body,
        seq_label,
        report.strict,
        &[
            ("horizon", report.horizon.to_string()),
            ("n0", report.n0.to_string()),
        ],
    );
    frontier_section(&mut body, &report.frontier);
    criterion_section(&mut body, &report.criterion, Some(report.br_at_n0));
    if let Some(sweep) = &report.residual {
        residual_section(&mut body, sweep);
    }

    if !report.uncovered.is_empty() {
        body.section("uncovered columns");
        for col in &report.uncovered {
            body.line(format!(
                "column {}: n in [{},{}], lt={} eq={} gt={}; sample: {}",
                col.a,
                col.n_range.0,
                col.n_range.1,
                col.lt,
                col.eq,
                col.gt,
                pair_list(&col.sample)
            ));
            body.kv(
                &format!("uncovered.{}", col.a),
                format!("lt={},eq={},gt={}", col.lt, col.eq, col.gt),
            );
        }
        body.line("note: no criterion coverage; checked up to the horizon only");
    }

    body.section(&format!("beta extension at n0={}", report.n0));
    body.line(format!("beta(0): {}", report.beta.beta0));
    body.line(format!(
        "beta(0) > 1: {}",
        yes_no(report.beta.beta0_vs_one == Ordering::Greater)
    ));
    body.line(format!(
        "weak log-concavity on [{}, {}]: {}",
        report.beta.scan.lo,
        report.beta.scan.hi,
        if report.beta.scan.clean() { "clean" } else { "fails" }
    ));
    match &report.beta.akk {
        Some(akk) => body.line(format!(
            "strict product conclusion on pairs m+n <= {}: {}",
            akk.n_max,
            if akk.conclusion_ok { "holds" } else { "fails" }
        )),
        None => body.line("strict product conclusion: not applicable (beta(0) <= 1)"),
    }
    body.kv("beta.zero", &report.beta.beta0);
    body.kv(
        "beta.gt1",
        report.beta.beta0_vs_one == Ordering::Greater,
    );
    body.kv("beta.logconcave", report.beta.scan.clean());
    body.kv(
        "beta.akk",
        report
            .beta
            .akk
            .as_ref()
            .map(|a| a.conclusion_ok.to_string())
            .unwrap_or_else(|| "n/a".into()),
    );

    body.section("necessary condition");
    body.line(format!(
        "range: [{}, {}]",
        report.necessary.range.0, report.necessary.range.1
    ));
    body.line(format!("failures: {}", indices(&report.necessary.failures)));
    body.kv("necessary.failures", indices_csv(&report.necessary.failures));

    body.finish()
}
