//! Reduction of `A y'' + B y' + C y = 0` to `z'' = r z`, pole analysis, and
//! the necessary conditions for each case.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{factor_linear, Rational, RationalFunction, SurdNumber};
use crate::error::{Error, Result};

/// Coefficients of `A y'' + B y' + C y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OdeInput {
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub c: RationalFunction,
}

impl OdeInput {
    pub fn new(a: RationalFunction, b: RationalFunction, c: RationalFunction) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidInput("the coefficient of y'' is zero".into()));
        }
        for f in [&a, &b, &c] {
            if !f.is_rational() {
                return Err(Error::InvalidInput(format!("coefficient {f} is not rational")));
            }
        }
        Ok(OdeInput { a, b, c })
    }
}

impl fmt::Display for OdeInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, y) in [(&self.a, "y''"), (&self.b, "y'"), (&self.c, "y")] {
            if coef.is_zero() {
                continue;
            }
            let s = coef.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, s),
            };
            let factor = if body == "1" {
                String::new()
            } else if body.contains(' ') || body.contains('/') {
                format!("({body})*")
            } else {
                format!("{body}*")
            };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
                (true, false) => {}
            }
            out.push_str(&factor);
            out.push_str(y);
        }
        write!(f, "{out} = 0")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub a: RationalFunction,
    pub b: RationalFunction,
    pub r: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleAnalysis {
    /// Pole locations ascending, with orders.
    pub poles: Vec<(Rational, u32)>,
    /// `deg den - deg num`; `None` when `r` is identically zero.
    pub order_at_infinity: Option<i64>,
}

impl PoleAnalysis {
    pub fn order_of(&self, c: &Rational) -> Option<u32> {
        self.poles.iter().find(|(p, _)| p == c).map(|p| p.1)
    }
}

/// Cases whose necessary conditions hold, ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CaseConditions {
    pub possible: Vec<u8>,
}

impl CaseConditions {
    pub fn contains(&self, case: u8) -> bool {
        self.possible.contains(&case)
    }

    pub fn is_empty(&self) -> bool {
        self.possible.is_empty()
    }
}

pub fn to_normal_form(ode: &OdeInput) -> NormalForm {
    let a = &ode.b / &ode.a;
    let b = &ode.c / &ode.a;
    let quarter = SurdNumber::frac(1, 4);
    let half = SurdNumber::frac(1, 2);
    let r = &(&(&a * &a).scale(&quarter) + &a.derivative().scale(&half)) - &b;
    NormalForm { a, b, r }
}

pub fn pole_analysis(r: &RationalFunction) -> Result<PoleAnalysis> {
    if r.is_zero() {
        return Ok(PoleAnalysis { poles: Vec::new(), order_at_infinity: None });
    }
    let fact = factor_linear(r.den())?;
    if !fact.residue.is_one() {
        return Err(Error::UnsupportedPoles(r.den().to_string()));
    }
    Ok(PoleAnalysis { poles: fact.roots, order_at_infinity: r.order_at_infinity() })
}

/// `r = 0` has order `+infinity` at infinity and no poles, which only case 1
/// admits.
pub fn necessary_cases(analysis: &PoleAnalysis) -> CaseConditions {
    let Some(o_inf) = analysis.order_at_infinity else {
        return CaseConditions { possible: vec![1] };
    };
    let orders: Vec<u32> = analysis.poles.iter().map(|p| p.1).collect();
    let mut possible = Vec::new();
    if orders.iter().all(|&k| k == 1 || k % 2 == 0) && (o_inf > 2 || o_inf % 2 == 0) {
        possible.push(1);
    }
    if orders.iter().any(|&k| k == 2 || (k > 2 && k % 2 == 1)) {
        possible.push(2);
    }
    if !orders.is_empty() && orders.iter().all(|&k| k == 1 || k == 2) && o_inf >= 2 {
        possible.push(3);
    }
    CaseConditions { possible }
}
