//! Text and JSON renderings of solver results.

use std::fmt::Write as _;

use kovacic::{NormalForm, PoleAnalysis, CaseConditions, SolveReport, SolveStatus};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One result line; field names and order are fixed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub id: Option<String>,
    pub case_used: Option<u8>,
    pub n: Option<u32>,
    pub d: Option<u64>,
    pub omega: Option<String>,
    pub p: Option<String>,
    pub y1: Option<String>,
    pub y2: Option<String>,
    pub verified: bool,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ms: Option<u64>,
}

impl SolveJson {
    pub fn from_report(rep: &SolveReport, id: Option<String>, ms: Option<u64>) -> Self {
        SolveJson {
            id,
            case_used: rep.case_used,
            n: rep.n_case3,
            d: rep.d,
            omega: rep.omega.clone(),
            p: rep.p.as_ref().map(|p| p.to_string()),
            y1: rep.y1.as_ref().map(|y| y.to_string()),
            y2: rep.y2.as_ref().map(|y| y.to_string()),
            verified: rep.verified,
            status: rep.status.as_str().to_string(),
            ms,
        }
    }

    /// A record that could not be parsed.
    pub fn error(id: Option<String>) -> Self {
        SolveJson {
            id,
            case_used: None,
            n: None,
            d: None,
            omega: None,
            p: None,
            y1: None,
            y2: None,
            verified: false,
            status: "error".into(),
            ms: None,
        }
    }
}

pub fn exit_code(status: SolveStatus) -> i32 {
    match status {
        SolveStatus::Solved => 0,
        SolveStatus::NoLiouvillian => 2,
        SolveStatus::Unsupported | SolveStatus::Algebraic | SolveStatus::BudgetExceeded => 3,
    }
}

fn or_dash<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn solve_text(rep: &SolveReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ode:      {}", rep.ode);
    if let Some(nf) = &rep.normal_form {
        let _ = writeln!(s, "r:        {}", nf.r);
    }
    let _ = writeln!(s, "cases:    {}", cases_text(&rep.cases_possible));
    let _ = writeln!(s, "status:   {}", rep.status);
    let _ = writeln!(s, "case:     {}", or_dash(&rep.case_used));
    if rep.n_case3.is_some() {
        let _ = writeln!(s, "n:        {}", or_dash(&rep.n_case3));
    }
    let _ = writeln!(s, "d:        {}", or_dash(&rep.d));
    let _ = writeln!(s, "omega:    {}", or_dash(&rep.omega));
    let _ = writeln!(s, "p:        {}", or_dash(&rep.p));
    let _ = writeln!(s, "y1:       {}", or_dash(&rep.y1));
    let _ = writeln!(s, "y2:       {}", or_dash(&rep.y2));
    let _ = writeln!(s, "verified: {}", rep.verified);
    if let Some(reason) = &rep.failure_reason {
        let _ = writeln!(s, "reason:   {reason}");
    }
    s
}

fn cases_text(c: &CaseConditions) -> String {
    let inner: Vec<String> = c.possible.iter().map(|k| k.to_string()).collect();
    format!("[{}]", inner.join(", "))
}

/// Integer poles as JSON numbers, fractional ones as strings.
fn pole_json(c: &kovacic::Rational) -> Value {
    if c.is_integer() {
        if let Ok(v) = c.to_integer().to_string().parse::<i64>() {
            return Value::from(v);
        }
    }
    Value::from(c.to_string())
}

/// Output of `analyze --json`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalyzeJson {
    pub r: String,
    /// `[pole, order]` pairs.
    pub poles: Vec<(Value, u32)>,
    /// `null` when `r = 0`.
    pub oinf: Option<i64>,
    pub cases: Vec<u8>,
}

pub fn analyze_json(nf: &NormalForm, pa: &PoleAnalysis, cases: &CaseConditions) -> AnalyzeJson {
    AnalyzeJson {
        r: nf.r.to_string(),
        poles: pa.poles.iter().map(|(c, k)| (pole_json(c), *k)).collect(),
        oinf: pa.order_at_infinity,
        cases: cases.possible.clone(),
    }
}

pub fn analyze_text(nf: &NormalForm, pa: &PoleAnalysis, cases: &CaseConditions) -> String {
    let poles: Vec<Value> = pa.poles.iter().map(|(c, k)| Value::Array(vec![pole_json(c), Value::from(*k)])).collect();
    let mut s = String::new();
    let _ = writeln!(s, "r:      {}", nf.r);
    let _ = writeln!(s, "poles:  {}", Value::Array(poles));
    let _ = writeln!(s, "oinf:   {}", pa.order_at_infinity.map_or_else(|| "none".to_string(), |o| o.to_string()));
    let _ = writeln!(s, "cases:  {}", cases_text(cases));
    s
}
