//! Case 3: `omega` is algebraic of degree 4, 6 or 12.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{solve_polynomial_identity, Polynomial, Rational, RationalFunction, SurdNumber};
use crate::case2::{cartesian, pole_of, theta_from, ESet, Location};
use crate::error::{Error, Result};
use crate::series::{coefficient_at_infinity, laurent_coefficients};

pub const N_VALUES: [u32; 3] = [4, 6, 12];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case3Context {
    pub n: u32,
    pub e_sets: Vec<ESet>,
    pub e_infinity: i64,
    pub e_at_pole: Vec<(Rational, i64)>,
    pub d: u64,
    pub theta: RationalFunction,
    pub s: Polynomial,
}

/// `P_n, P_{n-1}, ..., P_0, P_{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSequence {
    pub n: u32,
    pub polys: Vec<Polynomial>,
}

impl PSequence {
    /// `P_i` for `-1 <= i <= n`.
    pub fn get(&self, i: i64) -> &Polynomial {
        &self.polys[(self.n as i64 - i) as usize]
    }

    pub fn last(&self) -> &Polynomial {
        self.polys.last().expect("non-empty sequence")
    }
}

/// Integer members of `{6 + (12k/n) sqrt(1+4b) : k = -n/2..n/2}`.
fn members(b: &SurdNumber, n: u32) -> Vec<i64> {
    let Some(b) = b.to_rational() else {
        return vec![6];
    };
    let root = SurdNumber::sqrt_of(&(Rational::one() + Rational::from_integer(4.into()) * b));
    let half = n as i64 / 2;
    let mut out: Vec<i64> = (-half..=half)
        .filter_map(|k| {
            let v = &SurdNumber::from_int(6) + &(&root * &SurdNumber::frac(12 * k, n as i64));
            v.to_i64()
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn e_set_case3(r: &RationalFunction, pole: &(Rational, u32), n: u32) -> Result<ESet> {
    let values = match pole.1 {
        1 => vec![12],
        2 => {
            let b = laurent_coefficients(r, &pole.0, 2)?.pop().expect("two coefficients");
            members(&b, n)
        }
        k => return Err(Error::WrongOrder(format!("case 3 does not allow a pole of order {k}"))),
    };
    Ok(ESet { location: Location::Finite(pole.0.clone()), values })
}

/// Uses `b` = coefficient of `x^-2` at infinity.
pub fn e_set_infinity_case3(r: &RationalFunction, n: u32) -> ESet {
    let b = coefficient_at_infinity(r, -2);
    ESet { location: Location::Infinity, values: members(&b, n) }
}

pub fn d_theta_s_case3(e_sets: &[ESet], e_inf: &ESet, n: u32) -> Vec<Case3Context> {
    let s = e_sets.iter().fold(Polynomial::one(), |acc, set| &acc * &Polynomial::linear(&pole_of(set)));
    let scale = SurdNumber::frac(n as i64, 12);
    let mut out = Vec::new();
    for (ei, choice) in cartesian(e_inf, e_sets) {
        let total = n as i64 * (ei - choice.iter().sum::<i64>());
        if total < 0 || total % 12 != 0 {
            continue;
        }
        let e_at_pole: Vec<(Rational, i64)> = e_sets.iter().map(pole_of).zip(choice).collect();
        out.push(Case3Context {
            n,
            e_sets: e_sets.to_vec(),
            e_infinity: ei,
            theta: theta_from(&e_at_pole, &scale),
            e_at_pole,
            d: (total / 12) as u64,
            s: s.clone(),
        });
    }
    out.sort_by_key(|c| c.d);
    out
}

/// Builds `P_n = -p` down to `P_{-1}`.
pub fn p_sequence(p: &Polynomial, ctx: &Case3Context, r: &RationalFunction) -> Result<PSequence> {
    let s = RationalFunction::from_poly(ctx.s.clone());
    let s_theta = as_polynomial(&(&s * &ctx.theta))?;
    let s2r = as_polynomial(&(&(&s * &s) * r))?;
    let ds = ctx.s.derivative();
    let n = ctx.n as i64;
    let mut polys = vec![-p];
    let mut prev = Polynomial::zero();
    for i in (0..=n).rev() {
        let cur = polys.last().expect("non-empty").clone();
        let mut next = -(&ctx.s * &cur.derivative());
        next = &next + &(&(&ds.scale(&SurdNumber::from_int(n - i)) - &s_theta) * &cur);
        if i < n {
            let k = SurdNumber::from_int((n - i) * (i + 1));
            next = &next - &(&s2r * &prev).scale(&k);
        }
        prev = cur;
        polys.push(next);
    }
    Ok(PSequence { n: ctx.n, polys })
}

fn as_polynomial(f: &RationalFunction) -> Result<Polynomial> {
    if f.is_polynomial() {
        Ok(f.num().clone())
    } else {
        Err(Error::InvalidInput(format!("{f} is not a polynomial")))
    }
}

/// Monic `p` of degree `ctx.d` with `P_{-1} = 0`. The sequence is linear in
/// `p`, so this is a linear solve over the monomial images.
pub fn solve_coeffs_case3(ctx: &Case3Context, r: &RationalFunction) -> Result<Option<Polynomial>> {
    let d = ctx.d as usize;
    let image = |k: usize| -> Result<Polynomial> {
        Ok(p_sequence(&Polynomial::monomial(SurdNumber::one(), k), ctx, r)?.last().clone())
    };
    let basis: Vec<Polynomial> = (0..d).map(image).collect::<Result<_>>()?;
    let target = -image(d)?;
    Ok(solve_polynomial_identity(&basis, &target).map(|mut coeffs| {
        coeffs.push(SurdNumber::one());
        Polynomial::new(coeffs)
    }))
}

/// `sum_i c_i w^i` with rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    pub coeffs: Vec<RationalFunction>,
}

impl fmt::Display for MinimalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*w")?,
                _ => write!(f, "({c})*w^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl MinimalPolynomial {
    pub fn eval(&self, w: &RationalFunction) -> RationalFunction {
        self.coeffs.iter().rev().fold(RationalFunction::zero(), |acc, c| &(&acc * w) + c)
    }
}

/// The degree-`n` polynomial `sum S^i P_i/(n-i)! w^i` and, when it is a
/// perfect `n`-th power of a linear factor, its root.
pub fn omega_min_poly(seq: &PSequence, ctx: &Case3Context) -> (MinimalPolynomial, Option<RationalFunction>) {
    let n = seq.n as usize;
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut fact = vec![1i64; n + 1];
    for k in 1..=n {
        fact[k] = fact[k - 1] * k as i64;
    }
    for i in 0..=n {
        let si = ctx.s.pow(i as u32);
        let c = (&si * seq.get(i as i64)).scale(&SurdNumber::frac(1, fact[n - i]));
        coeffs.push(RationalFunction::from_poly(c));
    }
    let mp = MinimalPolynomial { coeffs };
    let cn = &mp.coeffs[n];
    if cn.is_zero() {
        return (mp, None);
    }
    let root = (&mp.coeffs[n - 1] / cn).scale(&SurdNumber::frac(-1, n as i64));
    let neg_root = -&root;
    let mut power = RationalFunction::one();
    let mut binom = 1i64;
    for k in 0..=n {
        let i = n - k;
        let expected = (cn * &power).scale(&SurdNumber::from_int(binom));
        if expected != mp.coeffs[i] {
            return (mp, None);
        }
        power = &power * &neg_root;
        binom = binom * (n - k) as i64 / (k as i64 + 1);
    }
    (mp, Some(root))
}
