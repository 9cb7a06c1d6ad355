//! Exact spot checks of a printed solution against its equation.
//!
//! A solution `y` is evaluated through its logarithmic derivatives
//! `y'/y` and `y''/y` at rational points, so that exponentials and
//! fractional powers never need a numeric value.

use kovacic::algebra::rational_roots;
use kovacic::{Error, OdeInput, Polynomial, Rational, RationalFunction, Result, SurdNumber};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::expr::{parse_expr, Expr, Func};

/// Value (when algebraic) and first two derivatives at a point.
#[derive(Clone, Debug)]
struct Jet {
    v: Option<SurdNumber>,
    d1: SurdNumber,
    d2: SurdNumber,
}

fn not_exact(what: &str) -> Error {
    Error::InvalidInput(format!("{what} has no exact value at the sample point"))
}

impl Jet {
    fn constant(c: SurdNumber) -> Self {
        Jet { v: Some(c), d1: SurdNumber::zero(), d2: SurdNumber::zero() }
    }

    fn value(&self) -> Result<&SurdNumber> {
        self.v.as_ref().ok_or_else(|| not_exact("a transcendental subterm"))
    }

    fn as_constant(&self) -> Option<&SurdNumber> {
        (self.d1.is_zero() && self.d2.is_zero()).then_some(self.v.as_ref()).flatten()
    }
}

fn inv(x: &SurdNumber) -> Result<SurdNumber> {
    x.inv()
}

/// `u^k` for an integer `k`.
fn int_power(u: &Jet, k: i64) -> Result<Jet> {
    let v = u.value()?;
    let pw = |e: i64| -> Result<SurdNumber> {
        let p = v.pow(e.unsigned_abs() as u32);
        if e < 0 {
            inv(&p)
        } else {
            Ok(p)
        }
    };
    let kk = SurdNumber::from_int(k);
    let km1 = SurdNumber::from_int(k - 1);
    let d1 = &(&kk * &pw(k - 1)?) * &u.d1;
    let d2 = &(&(&(&kk * &km1) * &pw(k - 2)?) * &(&u.d1 * &u.d1)) + &(&(&kk * &pw(k - 1)?) * &u.d2);
    Ok(Jet { v: Some(pw(k)?), d1, d2 })
}

fn sqrt_jet(u: &Jet) -> Result<Jet> {
    let v = u.value()?;
    let q = v.to_rational().ok_or_else(|| not_exact("a nested square root"))?;
    let s = SurdNumber::sqrt_of(q);
    let s_inv = inv(&s)?;
    let half = SurdNumber::frac(1, 2);
    let d1 = &(&u.d1 * &half) * &s_inv;
    let s3 = &(&s_inv * &s_inv) * &s_inv;
    let d2 = &(&(&u.d2 * &half) * &s_inv) - &(&(&(&u.d1 * &u.d1) * &SurdNumber::frac(1, 4)) * &s3);
    Ok(Jet { v: Some(s), d1, d2 })
}

fn value_jet(e: &Expr, x0: &SurdNumber) -> Result<Jet> {
    Ok(match e {
        Expr::Num(q) => Jet::constant(SurdNumber::from_rational(q.clone())),
        Expr::X => Jet { v: Some(x0.clone()), d1: SurdNumber::one(), d2: SurdNumber::zero() },
        Expr::Y(_) => return Err(Error::InvalidInput("y inside a solution".into())),
        Expr::Neg(a) => {
            let j = value_jet(a, x0)?;
            Jet { v: j.v.map(|v| -v), d1: -j.d1, d2: -j.d2 }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (ja, mut jb) = (value_jet(a, x0)?, value_jet(b, x0)?);
            if matches!(e, Expr::Sub(..)) {
                jb = Jet { v: jb.v.map(|v| -v), d1: -jb.d1, d2: -jb.d2 };
            }
            let v = match (ja.v, jb.v) {
                (Some(a), Some(b)) => Some(&a + &b),
                _ => None,
            };
            Jet { v, d1: &ja.d1 + &jb.d1, d2: &ja.d2 + &jb.d2 }
        }
        Expr::Mul(a, b) => {
            let (ja, jb) = (value_jet(a, x0)?, value_jet(b, x0)?);
            let (va, vb) = (ja.value()?, jb.value()?);
            Jet {
                v: Some(va * vb),
                d1: &(&ja.d1 * vb) + &(va * &jb.d1),
                d2: &(&(&ja.d2 * vb) + &(&(&ja.d1 * &jb.d1) * &SurdNumber::from_int(2))) + &(va * &jb.d2),
            }
        }
        Expr::Div(a, b) => {
            let (ja, jb) = (value_jet(a, x0)?, value_jet(b, x0)?);
            let vb_inv = inv(jb.value()?)?;
            let h = ja.value()? * &vb_inv;
            let h1 = &(&ja.d1 - &(&h * &jb.d1)) * &vb_inv;
            let h2 = &(&(&ja.d2 - &(&(&h1 * &jb.d1) * &SurdNumber::from_int(2))) - &(&h * &jb.d2)) * &vb_inv;
            Jet { v: Some(h), d1: h1, d2: h2 }
        }
        Expr::Pow(a, b) => {
            let (ja, jb) = (value_jet(a, x0)?, value_jet(b, x0)?);
            let ex = jb.as_constant().ok_or_else(|| not_exact("a variable exponent"))?;
            let twice = ex * &SurdNumber::from_int(2);
            match (ex.to_i64(), twice.to_i64()) {
                (Some(k), _) => int_power(&ja, k)?,
                (None, Some(m)) => {
                    let root = sqrt_jet(&ja)?;
                    int_power(&root, m)?
                }
                _ => return Err(not_exact("a fractional power")),
            }
        }
        Expr::Call(Func::Sqrt, a) => sqrt_jet(&value_jet(a, x0)?)?,
        Expr::Call(Func::Int, a) => {
            let j = value_jet(a, x0)?;
            Jet { v: None, d1: j.value()?.clone(), d2: j.d1 }
        }
        Expr::Call(Func::Ln, a) => {
            let j = value_jet(a, x0)?;
            let u_inv = inv(j.value()?)?;
            let l1 = &j.d1 * &u_inv;
            Jet { v: None, d2: &(&j.d2 * &u_inv) - &(&l1 * &l1), d1: l1 }
        }
        Expr::Call(Func::Exp, a) => {
            let j = value_jet(a, x0)?;
            match j.v {
                Some(v) if v.is_zero() => {
                    Jet { v: Some(SurdNumber::one()), d2: &j.d2 + &(&j.d1 * &j.d1), d1: j.d1 }
                }
                _ => return Err(not_exact("an exponential")),
            }
        }
    })
}

/// `(y'/y, y''/y)` at `x0`.
fn log_jet(e: &Expr, x0: &SurdNumber) -> Result<(SurdNumber, SurdNumber)> {
    let combine = |(a1, a2): (SurdNumber, SurdNumber), (b1, b2): (SurdNumber, SurdNumber)| {
        let cross = &(&a1 * &b1) * &SurdNumber::from_int(2);
        (&a1 + &b1, &(&a2 + &cross) + &b2)
    };
    let reciprocal = |(b1, b2): (SurdNumber, SurdNumber)| {
        let sq = &b1 * &b1;
        (-&b1, &(&sq * &SurdNumber::from_int(2)) - &b2)
    };
    let power = |(u1, u2): (SurdNumber, SurdNumber), ex: &SurdNumber| {
        let em1 = ex - &SurdNumber::one();
        (ex * &u1, &(&(&(ex * &em1) * &u1) * &u1) + &(ex * &u2))
    };
    Ok(match e {
        Expr::Neg(a) => log_jet(a, x0)?,
        Expr::Mul(a, b) => combine(log_jet(a, x0)?, log_jet(b, x0)?),
        Expr::Div(a, b) => combine(log_jet(a, x0)?, reciprocal(log_jet(b, x0)?)),
        Expr::Pow(a, b) => {
            let jb = value_jet(b, x0)?;
            let ex = jb.as_constant().ok_or_else(|| not_exact("a variable exponent"))?;
            power(log_jet(a, x0)?, ex)
        }
        Expr::Call(Func::Sqrt, a) => power(log_jet(a, x0)?, &SurdNumber::frac(1, 2)),
        Expr::Call(Func::Exp, a) => {
            let j = value_jet(a, x0)?;
            let sq = &j.d1 * &j.d1;
            (j.d1, &j.d2 + &sq)
        }
        _ => {
            let j = value_jet(e, x0)?;
            let v_inv = inv(j.value()?)?;
            (&j.d1 * &v_inv, &j.d2 * &v_inv)
        }
    })
}

/// `(A y'' + B y' + C y)/y` at `x0`.
pub fn residual_at(ode: &OdeInput, y: &Expr, x0: &Rational) -> Result<SurdNumber> {
    let at = SurdNumber::from_rational(x0.clone());
    let (l1, l2) = log_jet(y, &at)?;
    let (a, b, c) = (ode.a.eval(&at)?, ode.b.eval(&at)?, ode.c.eval(&at)?);
    Ok(&(&(&a * &l2) + &(&b * &l1)) + &c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericCheck {
    pub points: Vec<Rational>,
    pub residuals: Vec<SurdNumber>,
}

impl NumericCheck {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }
}

fn largest_real_root(fs: &[&RationalFunction]) -> Rational {
    let mut m = Rational::zero();
    for f in fs {
        for p in [f.num(), f.den()] {
            if p.is_rational() && !p.is_zero() {
                for r in rational_roots(p) {
                    if r > m {
                        m = r;
                    }
                }
                m = m.max(root_bound(p));
            }
        }
    }
    m
}

/// Cauchy bound on the absolute value of every root.
fn root_bound(p: &Polynomial) -> Rational {
    let Some(cs) = p.rational_coeffs() else {
        return Rational::zero();
    };
    let lc = cs.last().cloned().unwrap_or_else(Rational::one);
    let mut m = Rational::zero();
    for c in &cs[..cs.len() - 1] {
        m = m.max((c / &lc).abs());
    }
    m + Rational::one()
}

/// `count` rational points to the right of every singularity, from a
/// fixed seed.
pub fn sample_points(ode: &OdeInput, count: usize, seed: u64) -> Vec<Rational> {
    let base = largest_real_root(&[&ode.a, &ode.b, &ode.c]) + Rational::one();
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n: i64 = rng.random_range(0..40);
            let d: i64 = rng.random_range(1..9);
            &base + Rational::new(BigInt::from(n), BigInt::from(d))
        })
        .collect()
}

pub const SAMPLE_SEED: u64 = 0x5eed;

/// Parses `y_text` and evaluates the residual at five sample points.
pub fn check_solution(ode: &OdeInput, y_text: &str) -> Result<NumericCheck> {
    let y = parse_expr(y_text)?;
    let points = sample_points(ode, 5, SAMPLE_SEED);
    let residuals = points.iter().map(|x0| residual_at(ode, &y, x0)).collect::<Result<Vec<_>>>()?;
    Ok(NumericCheck { points, residuals })
}
