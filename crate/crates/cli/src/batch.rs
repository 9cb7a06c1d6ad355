//! JSON Lines corpus runner and statistics.

use std::collections::BTreeMap;
use std::time::Instant;

use kovacic::{solve, SolveStatus, SolverConfig};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::expr::parse_ode;
use crate::report::SolveJson;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub id: String,
    pub ode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_case: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<Vec<String>>,
}

/// Reads one record per non-blank line and rejects duplicate ids.
pub fn read_corpus(text: &str) -> Result<Vec<CorpusRecord>, String> {
    let mut out: Vec<CorpusRecord> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: CorpusRecord = serde_json::from_str(line).map_err(|e| format!("line {}: {e}", i + 1))?;
        if !seen.insert(rec.id.clone()) {
            return Err(format!("line {}: duplicate id `{}`", i + 1, rec.id));
        }
        out.push(rec);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub total: usize,
    pub solved: usize,
    pub failed: usize,
    pub unsupported: usize,
    /// Counts per status string.
    pub by_status: BTreeMap<String, usize>,
    /// Solved records per case used.
    pub per_case: BTreeMap<String, usize>,
    /// `per_case` as a percentage of `solved`.
    pub per_case_percent: BTreeMap<String, f64>,
    /// Records per set of cases whose necessary conditions hold, e.g. `{1,2}`.
    pub condition_sets: BTreeMap<String, usize>,
}

/// Outcome of one record, with the data the statistics need.
#[derive(Clone, Debug)]
pub struct RecordOutcome {
    pub json: SolveJson,
    pub cases_possible: Option<Vec<u8>>,
}

pub fn run_record(rec: &CorpusRecord, cfg: &SolverConfig, timing: bool) -> RecordOutcome {
    let start = Instant::now();
    match parse_ode(&rec.ode) {
        Err(_) => RecordOutcome { json: SolveJson::error(Some(rec.id.clone())), cases_possible: None },
        Ok(ode) => {
            let rep = solve(&ode, cfg);
            let ms = timing.then(|| start.elapsed().as_millis() as u64);
            let cases = rep.analysis.is_some().then(|| rep.cases_possible.possible.clone());
            RecordOutcome { json: SolveJson::from_report(&rep, Some(rec.id.clone()), ms), cases_possible: cases }
        }
    }
}

/// Solves every record on `jobs` threads; results keep the input order.
pub fn run_batch(records: &[CorpusRecord], cfg: &SolverConfig, jobs: usize, timing: bool) -> Vec<RecordOutcome> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    pool.install(|| records.par_iter().map(|r| run_record(r, cfg, timing)).collect())
}

fn set_key(cases: &[u8]) -> String {
    let inner: Vec<String> = cases.iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn stats(outcomes: &[RecordOutcome]) -> StatsReport {
    let mut s = StatsReport { total: outcomes.len(), ..StatsReport::default() };
    for o in outcomes {
        *s.by_status.entry(o.json.status.clone()).or_default() += 1;
        match o.json.status.as_str() {
            "solved" => {
                s.solved += 1;
                if let Some(c) = o.json.case_used {
                    *s.per_case.entry(c.to_string()).or_default() += 1;
                }
            }
            "unsupported" => s.unsupported += 1,
            _ => s.failed += 1,
        }
        if let Some(c) = &o.cases_possible {
            *s.condition_sets.entry(set_key(c)).or_default() += 1;
        }
    }
    for c in ["1", "2", "3"] {
        let n = *s.per_case.entry(c.to_string()).or_default();
        let pct = if s.solved == 0 { 0.0 } else { 100.0 * n as f64 / s.solved as f64 };
        s.per_case_percent.insert(c.to_string(), (pct * 100.0).round() / 100.0);
    }
    s
}

pub fn all_solved(outcomes: &[RecordOutcome]) -> bool {
    outcomes.iter().all(|o| o.json.status == SolveStatus::Solved.as_str() && o.json.verified)
}

/// One JSON object per line.
pub fn results_jsonl(outcomes: &[RecordOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&serde_json::to_string(&o.json).expect("serializable"));
        out.push('\n');
    }
    out
}
