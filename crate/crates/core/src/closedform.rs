//! Antiderivatives of rational functions, exponentials of integrals, and the
//! checks that tie a closed form back to its equation.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{
    factor::primitive_part, rational_roots, solve_polynomial_identity, solve_rational_identity, Polynomial,
    RationalFunction, SurdNumber,
};
use crate::error::{Error, Result};
use crate::normalize::OdeInput;
use crate::omega::{Omega, SurdPart};

/// `rational_part + sum c * ln(argument)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSum {
    pub rational_part: RationalFunction,
    pub log_terms: Vec<(SurdNumber, Polynomial)>,
}

impl LogSum {
    pub fn derivative(&self) -> RationalFunction {
        let mut acc = self.rational_part.derivative();
        for (c, arg) in &self.log_terms {
            acc = &acc + &RationalFunction::from_parts(arg.derivative().scale(c), arg.clone());
        }
        acc
    }

    pub fn has_logs(&self) -> bool {
        !self.log_terms.is_empty()
    }
}

impl fmt::Display for LogSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rational_part.is_zero() {
            parts.push(self.rational_part.to_string());
        }
        for (c, arg) in &self.log_terms {
            let shown = primitive_part(arg).unwrap_or_else(|| arg.clone());
            let log = format!("ln({shown})");
            parts.push(if c.is_one() {
                log
            } else if (-c).is_one() {
                format!("-{log}")
            } else {
                format!("{}*{log}", leading_scalar(c))
            });
        }
        write!(f, "{}", join_sum(&parts))
    }
}

/// `a + b - c` from the terms `a`, `b`, `-c`.
fn join_sum(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        match (i, p.strip_prefix('-')) {
            (0, _) => out.push_str(p),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            _ => {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn integrate_polynomial(p: &Polynomial) -> Polynomial {
    let mut coeffs = vec![SurdNumber::zero()];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs.push(c * &SurdNumber::frac(1, i as i64 + 1));
    }
    Polynomial::new(coeffs)
}

/// Solves `n/(dm*ds) = (p1/dm)' + p2/ds` for `p1`, `p2`.
fn hermite_split(n: &Polynomial, dm: &Polynomial, ds: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    let h = (&dm.derivative() * ds).div_exact(dm);
    let m1 = dm.degree().unwrap_or(0);
    let m2 = ds.degree().unwrap_or(0);
    let mut basis = Vec::with_capacity(m1 + m2);
    for i in 0..m1 {
        let xi = Polynomial::monomial(SurdNumber::one(), i);
        basis.push(&(&xi.derivative() * ds) - &(&xi * &h));
    }
    for j in 0..m2 {
        basis.push(dm.shift_up(j));
    }
    let sol = solve_polynomial_identity(&basis, n)?;
    Some((Polynomial::new(sol[..m1].to_vec()), Polynomial::new(sol[m1..].to_vec())))
}

/// Exact antiderivative. Logarithms are produced at rational simple poles
/// and for a remaining part of the form `k R'/R`; anything else is rejected.
pub fn integrate_rational(f: &RationalFunction) -> Result<LogSum> {
    let (q, rem) = f.polynomial_part();
    let mut rational_part = RationalFunction::from_poly(integrate_polynomial(&q));
    let mut log_terms = Vec::new();
    if rem.is_zero() {
        return Ok(LogSum { rational_part, log_terms });
    }
    let d = rem.den();
    let dm = d.gcd(&d.derivative());
    let ds = d.div_exact(&dm);
    let (p1, p2) = if dm.is_constant() {
        (Polynomial::zero(), rem.num().clone())
    } else {
        hermite_split(rem.num(), &dm, &ds).ok_or_else(|| Error::InvalidInput(format!("cannot reduce {f}")))?
    };
    rational_part = &rational_part + &RationalFunction::from_parts(p1, dm);
    let mut rest = RationalFunction::from_parts(p2.clone(), ds.clone());
    let dsp = ds.derivative();
    for c in rational_roots(&ds) {
        let at = SurdNumber::from_rational(c.clone());
        let residue = &p2.eval(&at) * &dsp.eval(&at).inv()?;
        if residue.is_zero() {
            continue;
        }
        let lin = Polynomial::linear(&c);
        rest = &rest - &RationalFunction::from_parts(Polynomial::constant(residue.clone()), lin.clone());
        log_terms.push((residue, lin));
    }
    if !rest.is_zero() {
        let rp = rest.den().derivative();
        let kappa = &rest.num().lc() * &rp.lc().inv()?;
        if rp.scale(&kappa) == *rest.num() {
            log_terms.push((kappa, rest.den().clone()));
        } else {
            return Err(Error::UnsupportedPoles(rest.den().to_string()));
        }
    }
    Ok(LogSum { rational_part, log_terms })
}

/// `exp(coeff * sqrt(radicand))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdExp {
    pub coeff: RationalFunction,
    pub radicand: Polynomial,
}

/// `constant * poly_factor * prod base^exponent * exp(exp_argument)
///  * exp(coeff*sqrt(radicand)) * prod exp(int(omega))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub constant: SurdNumber,
    /// Monic.
    pub poly_factor: Polynomial,
    /// Monic bases.
    pub power_factors: Vec<(Polynomial, SurdNumber)>,
    pub exp_argument: RationalFunction,
    pub surd_exp: Option<SurdExp>,
    /// Factors `exp(int(omega, x))` that were not integrated.
    pub implicit: Vec<Omega>,
}

impl Default for ClosedForm {
    fn default() -> Self {
        Self::one()
    }
}

impl ClosedForm {
    pub fn one() -> Self {
        ClosedForm {
            constant: SurdNumber::one(),
            poly_factor: Polynomial::one(),
            power_factors: Vec::new(),
            exp_argument: RationalFunction::zero(),
            surd_exp: None,
            implicit: Vec::new(),
        }
    }

    pub fn is_explicit(&self) -> bool {
        self.implicit.is_empty()
    }

    pub fn mul_polynomial(&mut self, p: &Polynomial) {
        if p.is_zero() {
            *self = ClosedForm { constant: SurdNumber::zero(), ..ClosedForm::one() };
            return;
        }
        self.constant = &self.constant * &p.lc();
        self.poly_factor = &self.poly_factor * &p.monic();
    }

    /// Multiplies by `base^e`. Constant factors of a non-integer power are
    /// dropped.
    pub fn mul_power(&mut self, base: &Polynomial, e: &SurdNumber) {
        if e.is_zero() {
            return;
        }
        let lc = base.lc();
        if let Some(k) = e.to_i64() {
            if let Ok(k32) = i32::try_from(k) {
                let c = if k32 >= 0 { lc.pow(k32 as u32) } else { lc.inv().expect("nonzero").pow(k32.unsigned_abs()) };
                self.constant = &self.constant * &c;
            }
        }
        if !base.is_constant() {
            self.power_factors.push((base.monic(), e.clone()));
        }
    }

    pub fn mul_rational(&mut self, f: &RationalFunction) {
        if f.is_zero() {
            self.mul_polynomial(&Polynomial::zero());
            return;
        }
        self.mul_polynomial(f.num());
        for (g, k) in f.den().squarefree_factors() {
            self.power_factors.push((g, SurdNumber::from_int(-(k as i64))));
        }
    }

    /// Multiplies by `exp(scale * l)`.
    pub fn mul_exp_logsum(&mut self, l: &LogSum, scale: &SurdNumber) {
        self.exp_argument = &self.exp_argument + &l.rational_part.scale(scale);
        for (c, arg) in &l.log_terms {
            self.mul_power(arg, &(c * scale));
        }
    }

    /// Merges equal bases and folds integer exponents into `poly_factor`.
    pub fn normalize(mut self) -> Self {
        let mut merged: Vec<(Polynomial, SurdNumber)> = Vec::new();
        for (b, e) in std::mem::take(&mut self.power_factors) {
            match merged.iter_mut().find(|(mb, _)| *mb == b) {
                Some(slot) => slot.1 = &slot.1 + &e,
                None => merged.push((b, e)),
            }
        }
        let mut out = Vec::new();
        for (b, mut e) in merged {
            if e.is_zero() {
                continue;
            }
            if let Some(k) = e.to_i64() {
                let mut k = k;
                if k > 0 {
                    self.poly_factor = &self.poly_factor * &b.pow(k as u32);
                    continue;
                }
                while k < 0 && b.divides(&self.poly_factor) {
                    self.poly_factor = self.poly_factor.div_exact(&b);
                    k += 1;
                }
                if k != 0 {
                    out.push((b, SurdNumber::from_int(k)));
                }
            } else {
                while b.divides(&self.poly_factor) {
                    self.poly_factor = self.poly_factor.div_exact(&b);
                    e = &e + &SurdNumber::one();
                }
                out.push((b, e));
            }
        }
        out.sort_by_key(|a| (a.0.deg(), a.0.to_string()));
        self.power_factors = out;
        if self.surd_exp.as_ref().is_some_and(|s| s.coeff.is_zero()) {
            self.surd_exp = None;
        }
        let (rational, mut surd): (Vec<Omega>, Vec<Omega>) =
            std::mem::take(&mut self.implicit).into_iter().partition(|w| w.surd.is_none());
        if !rational.is_empty() {
            let sum = rational.iter().fold(RationalFunction::zero(), |acc, w| &acc + &w.rational);
            if !sum.is_zero() {
                self.implicit.push(Omega::rational(sum));
            }
        }
        self.implicit.append(&mut surd);
        self
    }

    /// `y'/y` as `A + B sqrt(q)`; `None` if two different radicands occur.
    pub fn log_derivative(&self) -> Option<Omega> {
        let mut a = RationalFunction::from_parts(self.poly_factor.derivative(), self.poly_factor.clone());
        for (b, e) in &self.power_factors {
            a = &a + &RationalFunction::from_parts(b.derivative().scale(e), b.clone());
        }
        a = &a + &self.exp_argument.derivative();
        let mut surd: Option<SurdPart> = None;
        let mut add_surd = |coeff: RationalFunction, radicand: RationalFunction| -> bool {
            match &mut surd {
                None => {
                    surd = Some(SurdPart { coeff, radicand });
                    true
                }
                Some(s) if s.radicand == radicand => {
                    s.coeff = &s.coeff + &coeff;
                    true
                }
                Some(_) => false,
            }
        };
        if let Some(se) = &self.surd_exp {
            let q = RationalFunction::from_poly(se.radicand.clone());
            let half = SurdNumber::frac(1, 2);
            let coeff = &se.coeff.derivative() + &(&se.coeff * &(&q.derivative() / &q)).scale(&half);
            if !add_surd(coeff, q) {
                return None;
            }
        }
        for w in &self.implicit {
            a = &a + &w.rational;
            if let Some(s) = &w.surd {
                if !add_surd(s.coeff.clone(), s.radicand.clone()) {
                    return None;
                }
            }
        }
        Some(match surd {
            None => Omega::rational(a),
            Some(s) => Omega::with_surd(a, s.coeff, s.radicand),
        })
    }
}

/// A scalar at the start of a product.
fn leading_scalar(c: &SurdNumber) -> String {
    if c.surd_terms().len() + usize::from(!c.rational_part().is_zero()) == 1 {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Parenthesizes `s` when it has a top-level `+` or `-`.
fn as_factor(s: &str) -> String {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return format!("({s})"),
            _ => {}
        }
    }
    s.to_string()
}

fn single_term(p: &Polynomial) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

/// A base printed as its primitive integer multiple when rational.
fn base_string(b: &Polynomial) -> String {
    let shown = primitive_part(b).unwrap_or_else(|| b.clone());
    let s = shown.to_string();
    if single_term(&shown) && !s.starts_with('-') && shown.lc().is_one() {
        s
    } else {
        format!("({s})")
    }
}

fn exponent_string(e: &SurdNumber) -> String {
    match e.to_i64() {
        Some(k) if k >= 0 => k.to_string(),
        _ => format!("({e})"),
    }
}

fn paren_rf(f: &RationalFunction) -> String {
    let s = f.to_string();
    if f.is_constant() && f.as_constant().is_some_and(|c| c.is_atomic()) {
        s
    } else {
        format!("({s})")
    }
}

/// Printed up to a constant factor: rational bases appear as primitive
/// integer polynomials.
impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constant.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut negate = false;
        if !self.constant.is_one() {
            if (-&self.constant).is_one() {
                negate = true;
            } else {
                parts.push(leading_scalar(&self.constant));
            }
        }
        if !self.poly_factor.is_one() {
            parts.push(base_string(&self.poly_factor));
        }
        let lone_poly = parts.len() == 1 && self.power_factors.is_empty() && !self.poly_factor.is_one();
        for (b, e) in &self.power_factors {
            parts.push(format!("{}^{}", base_string(b), exponent_string(e)));
        }
        if !self.exp_argument.is_zero() {
            parts.push(format!("exp({})", self.exp_argument));
        }
        if let Some(s) = &self.surd_exp {
            let root = format!("sqrt({})", s.radicand);
            parts.push(match s.coeff.as_constant() {
                Some(c) if c.is_one() => format!("exp({root})"),
                Some(c) if (-&c).is_one() => format!("exp(-{root})"),
                _ => format!("exp({}*{root})", paren_rf(&s.coeff)),
            });
        }
        for w in &self.implicit {
            parts.push(format!("exp(int({w}, x))"));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        if lone_poly && parts.len() == 1 && !negate {
            let shown = primitive_part(&self.poly_factor).unwrap_or_else(|| self.poly_factor.clone());
            return write!(f, "{shown}");
        }
        write!(f, "{}{}", if negate { "-" } else { "" }, parts.join("*"))
    }
}

/// `int(B sqrt(q))` for a linear `q`: substitutes `x = (u^2 - beta)/alpha`
/// and splits the result into even and odd parts in `u`.
fn integrate_linear_surd(coeff: &RationalFunction, radicand: &RationalFunction) -> Option<(RationalFunction, SurdExp)> {
    if !radicand.is_polynomial() || radicand.num().degree() != Some(1) || !radicand.num().is_rational() {
        return None;
    }
    let q = radicand.num();
    let alpha = q.coeff(1);
    let beta = q.coeff(0);
    let alpha_inv = alpha.inv().ok()?;
    let x_of_u = Polynomial::new(vec![-(&beta * &alpha_inv), SurdNumber::zero(), alpha_inv.clone()]);
    let jac = Polynomial::monomial(&alpha_inv * &SurdNumber::from_int(2), 2);
    let g = &coeff.compose_poly(&x_of_u) * &RationalFunction::from_poly(jac);
    let h = integrate_rational(&g).ok()?;
    if h.has_logs() {
        return None;
    }
    let h = h.rational_part;
    let neg_u = Polynomial::from_ints(&[0, -1]);
    let h_neg = h.compose_poly(&neg_u);
    let half = SurdNumber::frac(1, 2);
    let even = (&h + &h_neg).scale(&half);
    let odd = (&(&h - &h_neg).scale(&half)) / &RationalFunction::x();
    let in_square = |f: &RationalFunction| -> Option<RationalFunction> {
        let n = f.num().even_part_in_square()?;
        let d = f.den().even_part_in_square()?;
        Some(RationalFunction::from_parts(n, d).compose_poly(q))
    };
    let e = in_square(&even)?;
    let o = in_square(&odd)?;
    Some((e, SurdExp { coeff: o, radicand: q.clone() }))
}

/// `p * exp(int(omega))`, explicit where the integral can be evaluated.
pub fn exp_of_integral(omega: &Omega, p: &Polynomial) -> ClosedForm {
    let mut cf = ClosedForm::one();
    cf.mul_polynomial(p);
    match integrate_rational(&omega.rational) {
        Ok(l) => cf.mul_exp_logsum(&l, &SurdNumber::one()),
        Err(_) => cf.implicit.push(Omega::rational(omega.rational.clone())),
    }
    if let Some(s) = &omega.surd {
        match integrate_linear_surd(&s.coeff, &s.radicand) {
            Some((e, se)) => {
                cf.exp_argument = &cf.exp_argument + &e;
                cf.surd_exp = Some(se);
            }
            None => cf.implicit.push(Omega::with_surd(RationalFunction::zero(), s.coeff.clone(), s.radicand.clone())),
        }
    }
    cf.normalize()
}

/// `y1 = z * exp(-1/2 int(a))`.
pub fn recover_y1(z: &ClosedForm, a: &RationalFunction) -> ClosedForm {
    let mut y = z.clone();
    match integrate_rational(a) {
        Ok(l) => y.mul_exp_logsum(&l, &SurdNumber::frac(-1, 2)),
        Err(_) => y.implicit.push(Omega::rational(a.scale(&SurdNumber::frac(-1, 2)))),
    }
    y.normalize()
}

/// `omega' + omega^2 = r`, split into rational and surd parts.
pub fn riccati_verify(omega: &Omega, r: &RationalFunction) -> bool {
    let a = &omega.rational;
    match &omega.surd {
        None => (&(&a.derivative() + &(a * a)) - r).is_zero(),
        Some(s) => {
            let (b, d) = (&s.coeff, &s.radicand);
            let rational = &(&(&a.derivative() + &(a * a)) + &(&(b * b) * d)) - r;
            let surd = &(&b.derivative() + &(a * b).scale(&SurdNumber::from_int(2)))
                + &(&(b * &d.derivative()) / &d.scale(&SurdNumber::from_int(2)));
            rational.is_zero() && surd.is_zero()
        }
    }
}

/// `A (W' + W^2) + B W + C = 0` for the logarithmic derivative `W` of a
/// solution.
pub fn ode_verify(w: &Omega, ode: &OdeInput) -> bool {
    let p = &w.rational;
    match &w.surd {
        None => (&(&(&ode.a * &(&p.derivative() + &(p * p))) + &(&ode.b * p)) + &ode.c).is_zero(),
        Some(s) => {
            let (q, d) = (&s.coeff, &s.radicand);
            let rational = &(&(&ode.a * &(&(&p.derivative() + &(p * p)) + &(&(q * q) * d))) + &(&ode.b * p)) + &ode.c;
            let inner = &(&q.derivative() + &(&(q * &d.derivative()) / &d.scale(&SurdNumber::from_int(2))))
                + &(p * q).scale(&SurdNumber::from_int(2));
            let surd = &(&ode.a * &inner) + &(&ode.b * q);
            rational.is_zero() && surd.is_zero()
        }
    }
}

/// `T` with `T' + g' T = R`, so that `int(R e^g) = T e^g`.
pub fn rational_risch(r: &RationalFunction, g: &RationalFunction, slack: usize) -> Option<RationalFunction> {
    if r.is_zero() {
        return Some(RationalFunction::zero());
    }
    let gp = g.derivative();
    if gp.is_zero() {
        return None;
    }
    let db = r.den().clone();
    let j = gp.num().deg() - gp.den().deg();
    let deg_r = r.num().deg() - r.den().deg();
    let base = if j >= 0 { db.deg() + deg_r - j } else { db.deg() + deg_r + 1 };
    let bound = base + slack as i64;
    if bound < 0 {
        return None;
    }
    let dbf = RationalFunction::from_poly(db.clone());
    let c1 = dbf.inv().ok()?;
    let c0 = &(&gp * &c1) - &(&RationalFunction::from_poly(db.derivative()) * &(&c1 * &c1));
    let n = solve_rational_identity(&[c0, c1], r, bound as usize)?;
    Some(RationalFunction::from_parts(n, db))
}

pub const DEFAULT_RISCH_SLACK: usize = 2;

/// A second solution by reduction of order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SecondSolution {
    Explicit(Box<ClosedForm>),
    /// A textual formula: either an evaluated non-exponential integral or the
    /// unevaluated reduction-of-order integral.
    Formula(String),
}

impl fmt::Display for SecondSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SecondSolution::Explicit(cf) => write!(f, "{cf}"),
            SecondSolution::Formula(s) => write!(f, "{s}"),
        }
    }
}

/// `y2 = y1 int(exp(-int(a)) / y1^2)`.
pub fn second_solution(y1: &ClosedForm, a: &RationalFunction) -> SecondSolution {
    let formula = || {
        let weight = if a.is_zero() { "1".to_string() } else { format!("exp(-int({a}, x))") };
        SecondSolution::Formula(format!("{}*int({weight}/({y1})^2, x)", as_factor(&y1.to_string())))
    };
    if !y1.implicit.is_empty() || y1.surd_exp.is_some() || y1.constant.is_zero() {
        return formula();
    }
    let Ok(la) = integrate_rational(a) else {
        return formula();
    };
    let mut integrand = ClosedForm::one();
    integrand.constant = (&y1.constant * &y1.constant).inv().expect("nonzero constant");
    integrand.power_factors.push((y1.poly_factor.clone(), SurdNumber::from_int(-2)));
    for (b, e) in &y1.power_factors {
        integrand.power_factors.push((b.clone(), e * &SurdNumber::from_int(-2)));
    }
    integrand.mul_exp_logsum(&la, &SurdNumber::from_int(-1));
    integrand.exp_argument = &integrand.exp_argument - &y1.exp_argument.scale(&SurdNumber::from_int(2));
    let integrand = integrand.normalize();
    let mut rf = RationalFunction::from_poly(integrand.poly_factor.scale(&integrand.constant));
    for (b, e) in &integrand.power_factors {
        let Some(k) = e.to_i64().and_then(|k| i32::try_from(k).ok()) else {
            return formula();
        };
        let pw = RationalFunction::from_poly(b.clone()).powi(k).expect("nonzero base");
        rf = &rf * &pw;
    }
    let g = integrand.exp_argument.clone();
    if g.is_constant() {
        let Ok(int) = integrate_rational(&rf) else {
            return formula();
        };
        if int.has_logs() {
            return SecondSolution::Formula(format!("{}*{}", as_factor(&y1.to_string()), as_factor(&int.to_string())));
        }
        let mut y2 = y1.clone();
        y2.mul_rational(&int.rational_part);
        return SecondSolution::Explicit(Box::new(y2.normalize()));
    }
    match rational_risch(&rf, &g, DEFAULT_RISCH_SLACK) {
        Some(t) if !t.is_zero() => {
            let mut y2 = y1.clone();
            y2.mul_rational(&t);
            y2.exp_argument = &y2.exp_argument + &g;
            SecondSolution::Explicit(Box::new(y2.normalize()))
        }
        _ => formula(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(n: &[i64], d: Polynomial) -> RationalFunction {
        RationalFunction::from_parts(p(n), d)
    }

    #[test]
    fn integrate_examples() {
        // 2x/(2x+1) -> x - ln(2x+1)/2
        let f = rf(&[0, 2], p(&[1, 2]));
        let l = integrate_rational(&f).unwrap();
        assert_eq!(l.rational_part, RationalFunction::x());
        assert_eq!(l.log_terms, vec![(SurdNumber::frac(-1, 2), Polynomial::linear(&rat(-1, 2)))]);
        assert_eq!(l.derivative(), f);

        // (x-2)/(2x(x-1)) -> ln x - ln(x-1)/2
        let f = rf(&[-2, 1], &p(&[0, 2]) * &p(&[-1, 1]));
        let l = integrate_rational(&f).unwrap();
        assert!(l.rational_part.is_zero());
        assert_eq!(l.derivative(), f);

        assert_eq!(integrate_rational(&RationalFunction::zero()).unwrap().derivative(), RationalFunction::zero());
    }

    #[test]
    fn integrate_higher_order_and_irreducible() {
        // 1/x^3 + 2x/(x^2-2)
        let f = &rf(&[1], p(&[0, 0, 0, 1])) + &rf(&[0, 2], p(&[-2, 0, 1]));
        let l = integrate_rational(&f).unwrap();
        assert_eq!(l.derivative(), f);
        assert_eq!(l.rational_part, rf(&[-1], p(&[0, 0, 2])));
        // arctangent terms are rejected
        assert!(integrate_rational(&rf(&[1], p(&[1, 0, 1]))).is_err());
    }

    #[test]
    fn exp_of_integral_examples() {
        let z = exp_of_integral(&Omega::rational(rf(&[0, 2], p(&[1, 2]))), &Polynomial::x());
        assert_eq!(z.to_string(), "x*(2*x + 1)^(-1/2)*exp(x)");

        let root2 = SurdNumber::surd(rat(1, 2), BigInt::from(2));
        let w = Omega::with_surd(
            rf(&[1], p(&[0, 4])),
            RationalFunction::from_parts(Polynomial::constant(root2), p(&[0, 1])),
            RationalFunction::from_poly(p(&[0, -1])),
        );
        let z = exp_of_integral(&w, &Polynomial::one());
        assert_eq!(z.to_string(), "x^(1/4)*exp(sqrt(2)*sqrt(-x))");
        assert_eq!(z.log_derivative().unwrap(), w);

        let w = Omega::rational(rf(&[5, 6], &p(&[0, 2]) * &p(&[1, 1])));
        let z = exp_of_integral(&w, &Polynomial::one());
        assert_eq!(z.to_string(), "x^(5/2)*(x + 1)^(1/2)");
    }

    #[test]
    fn recover_examples() {
        let z = exp_of_integral(&Omega::rational(rf(&[0, 2], p(&[1, 2]))), &Polynomial::x());
        let y = recover_y1(&z, &rf(&[-2], p(&[1, 2])));
        assert_eq!(y.to_string(), "x*exp(x)");

        // z = x/sqrt(x-1) with a = (5x-4)/((1-x)x) -> x^3
        let z = exp_of_integral(&Omega::rational(rf(&[-2, 1], &p(&[0, 2]) * &p(&[-1, 1]))), &Polynomial::one());
        let y = recover_y1(&z, &rf(&[-4, 5], &p(&[0, 1]) * &p(&[1, -1])));
        assert_eq!(y.to_string(), "x^3");

        // z = x^(5/2) sqrt(1+x) with a = (2x+1)/(x(1+x)) -> x^2
        let z = exp_of_integral(&Omega::rational(rf(&[5, 6], &p(&[0, 2]) * &p(&[1, 1]))), &Polynomial::one());
        let y = recover_y1(&z, &rf(&[1, 2], &p(&[0, 1]) * &p(&[1, 1])));
        assert_eq!(y.to_string(), "x^2");
    }

    #[test]
    fn riccati_examples() {
        let r = rf(&[6, 8, 4], p(&[1, 2]).pow(2));
        let w = &rf(&[1], p(&[0, 1])) + &rf(&[0, 2], p(&[1, 2]));
        assert!(riccati_verify(&Omega::rational(w), &r));
        assert!(!riccati_verify(&Omega::rational(rf(&[0, 2], p(&[1, 2]))), &r));

        let root2 = SurdNumber::surd(rat(1, 2), BigInt::from(2));
        let w = Omega::with_surd(
            rf(&[1], p(&[0, 4])),
            RationalFunction::from_parts(Polynomial::constant(root2), p(&[0, 1])),
            RationalFunction::from_poly(p(&[0, -1])),
        );
        assert!(riccati_verify(&w, &rf(&[-3, -8], p(&[0, 0, 16]))));
    }

    #[test]
    fn risch_examples() {
        let t = rational_risch(&rf(&[1, 2], p(&[0, 0, 1])), &RationalFunction::from_poly(p(&[0, -2])), 2);
        assert_eq!(t, Some(rf(&[-1], p(&[0, 1]))));
        let t = rational_risch(&RationalFunction::one(), &RationalFunction::x(), 2);
        assert_eq!(t, Some(RationalFunction::one()));
        assert_eq!(rational_risch(&rf(&[1], p(&[0, 1])), &RationalFunction::x(), 2), None);
    }

    #[test]
    fn second_solution_examples() {
        let mut y1 = ClosedForm::one();
        y1.mul_polynomial(&Polynomial::x());
        y1.exp_argument = RationalFunction::x();
        let y2 = second_solution(&y1, &rf(&[-2], p(&[1, 2])));
        assert_eq!(y2.to_string(), "-1/2*exp(-x)");

        // y'' + y' + y = 0 with y1 = exp(-x(1 + i sqrt 3)/2)
        let mut y1 = ClosedForm::one();
        let k = &SurdNumber::frac(-1, 2) + &SurdNumber::surd(rat(-1, 2), BigInt::from(-3));
        y1.exp_argument = RationalFunction::from_poly(Polynomial::monomial(k, 1));
        let y2 = second_solution(&y1, &RationalFunction::one());
        let SecondSolution::Explicit(y2) = y2 else { panic!("explicit second solution expected") };
        let expected = &SurdNumber::frac(-1, 2) + &SurdNumber::surd(rat(1, 2), BigInt::from(-3));
        assert_eq!(y2.exp_argument, RationalFunction::from_poly(Polynomial::monomial(expected, 1)));
        assert_eq!(y2.constant, SurdNumber::surd(rat(-1, 3), BigInt::from(-3)));

        let mut y1 = ClosedForm::one();
        y1.power_factors.push((Polynomial::x(), SurdNumber::frac(1, 2)));
        assert!(matches!(second_solution(&y1, &RationalFunction::x()), SecondSolution::Formula(_)));
    }
}
