//! The full pipeline: normal form, case detection, candidate search,
//! verification and solution assembly.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{Polynomial, RationalFunction};
use crate::case1::{build_omega_case1, d_candidates_case1, infinity_data_case1, pole_data_case1, solve_p_case1};
use crate::case2::{d_theta_case2, e_set_case2, e_set_infinity_case2, omega_case2, solve_p_case2};
use crate::case3::{
    d_theta_s_case3, e_set_case3, e_set_infinity_case3, omega_min_poly, p_sequence, solve_coeffs_case3, N_VALUES,
};
use crate::closedform::{
    exp_of_integral, ode_verify, recover_y1, riccati_verify, second_solution, ClosedForm, SecondSolution,
};
use crate::error::{Error, Result};
use crate::normalize::{necessary_cases, pole_analysis, to_normal_form, CaseConditions, NormalForm, OdeInput, PoleAnalysis};
use crate::omega::{Omega, OmegaCandidate, Provenance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub forced_case: Option<u8>,
    /// Only meaningful together with `forced_case = Some(3)`.
    pub forced_n: Option<u32>,
    pub max_d: u64,
    pub verify: bool,
    pub trial_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { forced_case: None, forced_n: None, max_d: 64, verify: true, trial_budget: 10_000 }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(c) = self.forced_case {
            if !(1..=3).contains(&c) {
                return Err(Error::InvalidInput(format!("case must be 1, 2 or 3, got {c}")));
            }
        }
        if let Some(n) = self.forced_n {
            if !N_VALUES.contains(&n) {
                return Err(Error::InvalidInput(format!("n must be 4, 6 or 12, got {n}")));
            }
            if self.forced_case != Some(3) {
                return Err(Error::InvalidInput("n can only be forced together with case 3".into()));
            }
        }
        if self.max_d == 0 || self.trial_budget == 0 {
            return Err(Error::InvalidInput("caps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolveStatus {
    Solved,
    NoLiouvillian,
    Unsupported,
    BudgetExceeded,
    /// Case 3 found a minimal polynomial for `omega` without a rational root.
    Algebraic,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Solved => "solved",
            SolveStatus::NoLiouvillian => "no_liouvillian",
            SolveStatus::Unsupported => "unsupported",
            SolveStatus::BudgetExceeded => "budget_exceeded",
            SolveStatus::Algebraic => "algebraic",
        }
    }
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub ode: OdeInput,
    pub normal_form: Option<NormalForm>,
    pub analysis: Option<PoleAnalysis>,
    pub cases_possible: CaseConditions,
    pub case_used: Option<u8>,
    pub n_case3: Option<u32>,
    pub d: Option<u64>,
    /// Text of `omega`; for an algebraic result, its minimal polynomial in `w`.
    pub omega: Option<String>,
    pub omega_value: Option<Omega>,
    pub provenance: Option<Provenance>,
    pub p: Option<Polynomial>,
    pub z: Option<ClosedForm>,
    pub y1: Option<ClosedForm>,
    pub y2: Option<SecondSolution>,
    pub verified: bool,
    pub status: SolveStatus,
    pub failure_reason: Option<String>,
    /// Candidates handed to an auxiliary-polynomial solver.
    pub trials: u64,
}

impl SolveReport {
    fn empty(ode: &OdeInput, status: SolveStatus) -> Self {
        SolveReport {
            ode: ode.clone(),
            normal_form: None,
            analysis: None,
            cases_possible: CaseConditions { possible: Vec::new() },
            case_used: None,
            n_case3: None,
            d: None,
            omega: None,
            omega_value: None,
            provenance: None,
            p: None,
            z: None,
            y1: None,
            y2: None,
            verified: false,
            status,
            failure_reason: None,
            trials: 0,
        }
    }
}

pub fn analyze(ode: &OdeInput) -> Result<(NormalForm, PoleAnalysis, CaseConditions)> {
    let nf = to_normal_form(ode);
    let analysis = pole_analysis(&nf.r)?;
    let cases = necessary_cases(&analysis);
    Ok((nf, analysis, cases))
}

struct Solution {
    case: u8,
    n: Option<u32>,
    d: u64,
    omega: Omega,
    provenance: Provenance,
    p: Polynomial,
    z: ClosedForm,
    y1: ClosedForm,
    verified: bool,
}

enum Outcome {
    Found(Box<Solution>),
    Algebraic { n: u32, d: u64, text: String, provenance: Provenance, p: Polynomial },
    Exhausted,
    OverBudget,
}

struct Search<'a> {
    ode: &'a OdeInput,
    nf: &'a NormalForm,
    cfg: &'a SolverConfig,
    trials: u64,
    capped: bool,
}

impl Search<'_> {
    /// Counts one trial; `false` once the budget is spent.
    fn spend(&mut self) -> bool {
        self.trials += 1;
        self.trials <= self.cfg.trial_budget
    }

    fn within_max_d(&mut self, d: u64) -> bool {
        if d > self.cfg.max_d {
            self.capped = true;
            return false;
        }
        true
    }

    /// Builds `z`, `y1` and checks both the normal form and the original
    /// equation. `w` is the logarithmic derivative of `z`.
    fn assemble(&self, omega: &Omega, p: &Polynomial, w: &Omega) -> Option<(ClosedForm, ClosedForm, bool)> {
        let z = exp_of_integral(omega, p);
        let y1 = recover_y1(&z, &self.nf.a);
        if !self.cfg.verify {
            return Some((z, y1, false));
        }
        if !riccati_verify(w, &self.nf.r) {
            return None;
        }
        let wy = y1.log_derivative()?;
        ode_verify(&wy, self.ode).then_some((z, y1, true))
    }

    fn case1(&mut self, analysis: &PoleAnalysis) -> Result<Outcome> {
        let r = &self.nf.r;
        let o_inf = analysis.order_at_infinity.expect("r is nonzero");
        let poles = analysis.poles.iter().map(|p| pole_data_case1(r, p)).collect::<Result<Vec<_>>>()?;
        let inf = infinity_data_case1(r, o_inf)?;
        let mut families = d_candidates_case1(&poles, &inf);
        families.sort_by_key(|f| std::cmp::Reverse(f.d));
        let mut seen = HashSet::new();
        for family in families {
            if !self.within_max_d(family.d) {
                continue;
            }
            let cand: OmegaCandidate = build_omega_case1(&family, &poles, &inf);
            if !seen.insert((cand.omega.clone(), cand.d)) {
                continue;
            }
            if !self.spend() {
                return Ok(Outcome::OverBudget);
            }
            let w = cand.omega.as_rational().expect("case 1 omega is rational");
            let Some(p) = solve_p_case1(w, r, cand.d) else { continue };
            let full = Omega::rational(w + &RationalFunction::from_parts(p.derivative(), p.clone()));
            if let Some((z, y1, verified)) = self.assemble(&cand.omega, &p, &full) {
                return Ok(Outcome::Found(Box::new(Solution {
                    case: 1,
                    n: None,
                    d: cand.d,
                    omega: cand.omega,
                    provenance: cand.provenance,
                    p,
                    z,
                    y1,
                    verified,
                })));
            }
        }
        Ok(Outcome::Exhausted)
    }

    fn case2(&mut self, analysis: &PoleAnalysis) -> Result<Outcome> {
        let r = &self.nf.r;
        let o_inf = analysis.order_at_infinity.expect("r is nonzero");
        let e_sets = analysis.poles.iter().map(|p| e_set_case2(r, p)).collect::<Result<Vec<_>>>()?;
        let e_inf = e_set_infinity_case2(r, o_inf);
        let mut seen = HashSet::new();
        for (family, theta) in d_theta_case2(&e_sets, &e_inf) {
            if !self.within_max_d(family.d) || !seen.insert((theta.clone(), family.d)) {
                continue;
            }
            if !self.spend() {
                return Ok(Outcome::OverBudget);
            }
            let Some(p) = solve_p_case2(&theta, r, family.d) else { continue };
            for omega in omega_case2(&theta, &p, r) {
                if let Some((z, y1, verified)) = self.assemble(&omega, &Polynomial::one(), &omega) {
                    return Ok(Outcome::Found(Box::new(Solution {
                        case: 2,
                        n: None,
                        d: family.d,
                        omega,
                        provenance: Provenance::Case2 {
                            e_infinity: family.e_infinity,
                            e_at_pole: family.e_at_pole.clone(),
                        },
                        p: p.clone(),
                        z,
                        y1,
                        verified,
                    })));
                }
            }
        }
        Ok(Outcome::Exhausted)
    }

    fn case3(&mut self, analysis: &PoleAnalysis, n: u32) -> Result<Outcome> {
        let r = &self.nf.r;
        let e_sets = analysis.poles.iter().map(|p| e_set_case3(r, p, n)).collect::<Result<Vec<_>>>()?;
        let e_inf = e_set_infinity_case3(r, n);
        for ctx in d_theta_s_case3(&e_sets, &e_inf, n) {
            if !self.within_max_d(ctx.d) {
                continue;
            }
            if !self.spend() {
                return Ok(Outcome::OverBudget);
            }
            let Some(p) = solve_coeffs_case3(&ctx, r)? else { continue };
            let seq = p_sequence(&p, &ctx, r)?;
            let (mp, root) = omega_min_poly(&seq, &ctx);
            let provenance =
                Provenance::Case3 { n, e_infinity: ctx.e_infinity, e_at_pole: ctx.e_at_pole.clone() };
            match root {
                Some(w) => {
                    let omega = Omega::rational(w);
                    if let Some((z, y1, verified)) = self.assemble(&omega, &Polynomial::one(), &omega) {
                        return Ok(Outcome::Found(Box::new(Solution {
                            case: 3,
                            n: Some(n),
                            d: ctx.d,
                            omega,
                            provenance,
                            p,
                            z,
                            y1,
                            verified,
                        })));
                    }
                }
                None => {
                    return Ok(Outcome::Algebraic { n, d: ctx.d, text: mp.to_string(), provenance, p });
                }
            }
        }
        Ok(Outcome::Exhausted)
    }
}

/// Runs the admissible cases in order and returns the first verified
/// solution.
pub fn solve(ode: &OdeInput, cfg: &SolverConfig) -> SolveReport {
    if let Err(e) = cfg.validate() {
        let mut rep = SolveReport::empty(ode, SolveStatus::Unsupported);
        rep.failure_reason = Some(e.to_string());
        return rep;
    }
    let nf = to_normal_form(ode);
    let analysis = match pole_analysis(&nf.r) {
        Ok(a) => a,
        Err(e) => {
            let mut rep = SolveReport::empty(ode, SolveStatus::Unsupported);
            rep.normal_form = Some(nf);
            rep.failure_reason = Some(e.to_string());
            return rep;
        }
    };
    let cases = necessary_cases(&analysis);
    let mut rep = SolveReport::empty(ode, SolveStatus::NoLiouvillian);
    rep.normal_form = Some(nf.clone());
    rep.analysis = Some(analysis.clone());
    rep.cases_possible = cases.clone();

    if nf.r.is_zero() {
        let z = ClosedForm::one();
        let y1 = recover_y1(&z, &nf.a);
        let verified = cfg.verify && y1.log_derivative().is_some_and(|w| ode_verify(&w, ode));
        rep.y2 = Some(second_solution(&y1, &nf.a));
        rep.case_used = Some(1);
        rep.d = Some(0);
        rep.omega = Some("0".into());
        rep.omega_value = Some(Omega::rational(RationalFunction::zero()));
        rep.p = Some(Polynomial::one());
        rep.z = Some(z);
        rep.y1 = Some(y1);
        rep.verified = verified;
        rep.status = SolveStatus::Solved;
        return rep;
    }

    let mut search = Search { ode, nf: &nf, cfg, trials: 0, capped: false };
    let order: Vec<u8> = [1u8, 2, 3]
        .into_iter()
        .filter(|c| cases.contains(*c) && cfg.forced_case.is_none_or(|f| f == *c))
        .collect();
    for case in order {
        let outcomes: Vec<Result<Outcome>> = match case {
            1 => vec![search.case1(&analysis)],
            2 => vec![search.case2(&analysis)],
            _ => {
                let ns: Vec<u32> = cfg.forced_n.map_or(N_VALUES.to_vec(), |n| vec![n]);
                let mut v = Vec::new();
                for n in ns {
                    let o = search.case3(&analysis, n);
                    let stop = !matches!(o, Ok(Outcome::Exhausted));
                    v.push(o);
                    if stop {
                        break;
                    }
                }
                v
            }
        };
        for outcome in outcomes {
            match outcome {
                Err(e) => {
                    rep.status = SolveStatus::Unsupported;
                    rep.failure_reason = Some(e.to_string());
                    rep.trials = search.trials;
                    return rep;
                }
                Ok(Outcome::Exhausted) => {}
                Ok(Outcome::OverBudget) => {
                    rep.status = SolveStatus::BudgetExceeded;
                    rep.failure_reason = Some(format!("trial budget of {} exhausted", cfg.trial_budget));
                    rep.trials = search.trials;
                    return rep;
                }
                Ok(Outcome::Algebraic { n, d, text, provenance, p }) => {
                    rep.status = SolveStatus::Algebraic;
                    rep.case_used = Some(3);
                    rep.n_case3 = Some(n);
                    rep.d = Some(d);
                    rep.omega = Some(text);
                    rep.provenance = Some(provenance);
                    rep.p = Some(p);
                    rep.failure_reason = Some("omega is algebraic without a rational root".into());
                    rep.trials = search.trials;
                    return rep;
                }
                Ok(Outcome::Found(sol)) => {
                    rep.status = SolveStatus::Solved;
                    rep.case_used = Some(sol.case);
                    rep.n_case3 = sol.n;
                    rep.d = Some(sol.d);
                    rep.omega = Some(sol.omega.to_string());
                    rep.omega_value = Some(sol.omega);
                    rep.provenance = Some(sol.provenance);
                    rep.p = Some(sol.p);
                    rep.y2 = Some(second_solution(&sol.y1, &nf.a));
                    rep.z = Some(sol.z);
                    rep.y1 = Some(sol.y1);
                    rep.verified = sol.verified;
                    rep.trials = search.trials;
                    return rep;
                }
            }
        }
    }
    rep.trials = search.trials;
    if search.capped {
        rep.status = SolveStatus::BudgetExceeded;
        rep.failure_reason = Some(format!("candidates with d > {} were skipped", cfg.max_d));
    } else {
        rep.failure_reason = Some(if rep.cases_possible.is_empty() {
            "no case satisfies the necessary conditions".into()
        } else if cfg.forced_case.is_some_and(|c| !rep.cases_possible.contains(c)) {
            "the forced case does not satisfy the necessary conditions".into()
        } else {
            "every candidate failed".into()
        });
    }
    rep
}
