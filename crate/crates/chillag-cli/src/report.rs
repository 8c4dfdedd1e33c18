//! Report structures shared by the text and JSON outputs.  Every verdict
//! is tri-state so consumers never have to treat absence as meaning.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn failed(self) -> bool {
        self == Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ColumnSumReport {
    /// Exact value as a cyclotomic literal.
    pub value: String,
    /// integer | non-integer-rational | irrational
    pub rationality: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub lower: String,
    pub upper: String,
    pub s: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableSection {
    /// ordinary | pipartial | pim
    pub kind: String,
    pub basis_labels: Vec<String>,
    pub column_labels: Vec<String>,
    /// Exact table sum.
    pub s: String,
    pub row_sums: Vec<String>,
    pub column_sums: Vec<ColumnSumReport>,
    /// All column sums are rational integers.
    pub column_integrality: Verdict,
    /// Certificate from the u.X = v relation.
    pub bounds: BoundsReport,
    /// Direct bound statement for this basis (Solomon-style window).
    pub window: BoundsReport,
    /// Table row sums agree with the trace formula on the tensor.
    pub trace_identity: Verdict,
    /// Every Galois automorphism permutes the rows.
    pub galois_actions: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaSection {
    pub verdict: Verdict,
    pub subgroup_order: u64,
    pub index: u64,
    /// One "degree <= bound" line per projective indecomposable.
    pub details: Vec<String>,
}

impl LemmaSection {
    pub fn not_applicable() -> Self {
        LemmaSection {
            verdict: Verdict::NotApplicable,
            subgroup_order: 0,
            index: 0,
            details: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub order: u64,
    pub seed: u64,
    pub tol: f64,
    pub pi: Vec<u64>,
    pub sections: Vec<TableSection>,
    pub lemma: LemmaSection,
    pub errors: Vec<String>,
    pub overall: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColumnsReport {
    pub table: String,
    pub kind: String,
    pub group_order: u64,
    pub prime_or_pi: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub column_sums: Vec<ColumnSumReport>,
    pub irrational_columns: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub group: String,
    pub seed: u64,
    pub tol: f64,
    pub irr_residual: f64,
    pub class_residual: f64,
    pub irr_match: Verdict,
    pub class_match: Verdict,
    pub overall: Verdict,
}

pub fn render_verification(r: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("group {} (order {})\n", r.group, r.order));
    if !r.pi.is_empty() {
        let pi: Vec<String> = r.pi.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!("pi = {{{}}}\n", pi.join(",")));
    }
    for s in &r.sections {
        out.push_str(&format!("\n[{}]\n", s.kind));
        out.push_str(&format!("  s = {}\n", s.s));
        out.push_str(&format!("  row sums: {}\n", s.row_sums.join(", ")));
        let sums: Vec<String> = s
            .column_sums
            .iter()
            .map(|c| format!("{} ({})", c.value, c.rationality))
            .collect();
        out.push_str(&format!("  column sums: {}\n", sums.join(", ")));
        out.push_str(&format!("  column integrality: {}\n", s.column_integrality));
        out.push_str(&format!(
            "  bound certificate: {} <= s <= {} : {}\n",
            s.bounds.lower, s.bounds.upper, s.bounds.verdict
        ));
        if s.window.verdict != Verdict::NotApplicable {
            out.push_str(&format!(
                "  bound window: {} <= s <= {} : {}\n",
                s.window.lower, s.window.upper, s.window.verdict
            ));
        }
        out.push_str(&format!("  trace identity: {}\n", s.trace_identity));
        out.push_str(&format!("  Galois actions: {}\n", s.galois_actions));
    }
    if r.lemma.verdict != Verdict::NotApplicable {
        out.push_str(&format!(
            "\n[induced-degree bounds]\n  subgroup order {}, index {}: {}\n",
            r.lemma.subgroup_order, r.lemma.index, r.lemma.verdict
        ));
        for d in &r.lemma.details {
            out.push_str(&format!("  {d}\n"));
        }
    }
    for e in &r.errors {
        out.push_str(&format!("\nerror: {e}\n"));
    }
    out.push_str(&format!("\noverall: {}\n", r.overall));
    out
}

pub fn render_columns(r: &ColumnsReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "table {} ({}, group order {})\n",
        r.table, r.kind, r.group_order
    ));
    for (j, c) in r.column_sums.iter().enumerate() {
        out.push_str(&format!("  column {}: {} ({})\n", j + 1, c.value, c.rationality));
    }
    out.push_str(&format!(
        "irrational columns: {}\n",
        if r.irrational_columns.is_empty() {
            "none".to_string()
        } else {
            r.irrational_columns
                .iter()
                .map(|j| (j + 1).to_string())
                .collect::<Vec<_>>()
                .join(", ")
        }
    ));
    out
}

pub fn render_crosscheck(r: &CrosscheckReport) -> String {
    format!(
        "group {}\n  irr-basis table: residual {:.3e}, match {}\n  class-algebra table: residual {:.3e}, match {}\noverall: {}\n",
        r.group, r.irr_residual, r.irr_match, r.class_residual, r.class_match, r.overall
    )
}
