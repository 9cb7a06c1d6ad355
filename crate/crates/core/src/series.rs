//! Laurent coefficients of `r` at a finite pole or at infinity, and the
//! truncated square-root series used by case 1.

use num_traits::Zero;

use crate::algebra::partial::principal_part;
use crate::algebra::{power_series_quotient, Polynomial, Rational, RationalFunction, SurdNumber};
use crate::error::{Error, Result};

/// `[sqrt r]_c = sum_{i=2}^{v} a_i/(x - c)^i` with its correction term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtPartAtPole {
    pub pole: Rational,
    pub v: u32,
    /// `a_2, ..., a_v`.
    pub terms: Vec<SurdNumber>,
    pub leading: SurdNumber,
    pub b_correction: SurdNumber,
}

impl SqrtPartAtPole {
    pub fn to_rational_function(&self) -> RationalFunction {
        let lin = Polynomial::linear(&self.pole);
        let mut acc = RationalFunction::zero();
        for (i, a) in self.terms.iter().enumerate() {
            let den = lin.pow(i as u32 + 2);
            acc = &acc + &RationalFunction::from_parts(Polynomial::constant(a.clone()), den);
        }
        acc
    }
}

/// `[sqrt r]_inf = sum_{i=0}^{v} a_i x^i` with its correction term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtPartAtInfinity {
    pub v: u32,
    /// `a_0, ..., a_v`.
    pub terms: Vec<SurdNumber>,
    pub leading: SurdNumber,
    pub b_correction: SurdNumber,
}

impl SqrtPartAtInfinity {
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.terms.clone())
    }
}

/// Order of the pole of `r` at `c` (0 when `c` is not a pole).
pub fn pole_order(r: &RationalFunction, c: &Rational) -> u32 {
    r.den().root_multiplicity(c)
}

/// `[b_1, ..., b_upto]`, where `b_n` is the coefficient of `1/(x - c)^n`.
pub fn laurent_coefficients(r: &RationalFunction, c: &Rational, upto: usize) -> Result<Vec<SurdNumber>> {
    let order = pole_order(r, c);
    if order == 0 {
        return Err(Error::NotAPole(c.to_string()));
    }
    if upto < order as usize {
        return Err(Error::WrongOrder(format!("pole at {c} has order {order}, more than the {upto} requested")));
    }
    let mut out = principal_part(r.num(), r.den(), c, order)?;
    out.resize(upto, SurdNumber::zero());
    Ok(out)
}

/// Taylor coefficients `u_0..u_{count-1}` of `(x - c)^order * r` at `c`.
fn scaled_taylor(r: &RationalFunction, c: &Rational, order: u32, count: usize) -> Result<Vec<SurdNumber>> {
    let cofactor = r.den().div_exact(&Polynomial::linear(c).pow(order));
    let shift = SurdNumber::from_rational(c.clone());
    power_series_quotient(&r.num().taylor_shift(&shift), &cofactor.taylor_shift(&shift), count)
}

/// Coefficients `u_0..u_{count-1}` of `u(y) = y^(deg num - deg den) * r(1/y)`.
fn reversed_series(r: &RationalFunction, count: usize) -> Result<Vec<SurdNumber>> {
    power_series_quotient(&r.num().reversed(), &r.den().reversed(), count)
}

/// Square-root series `s` with `s^2 = u` through `s_{count-1}`.
fn sqrt_series(u: &[SurdNumber], count: usize) -> Result<Vec<SurdNumber>> {
    let u0 = u[0]
        .to_rational()
        .ok_or_else(|| Error::InvalidInput(format!("leading coefficient {} is not rational", u[0])))?;
    let s0 = SurdNumber::sqrt_of(u0);
    let two_s0_inv = (&s0 * &SurdNumber::from_int(2)).inv()?;
    let mut s = vec![s0];
    for k in 1..count {
        let mut acc = u[k].clone();
        for i in 1..k {
            acc -= &s[i] * &s[k - i];
        }
        s.push(&acc * &two_s0_inv);
    }
    Ok(s)
}

/// `sum s_k s_l` over `k + l = target`, `k, l <= max`.
fn truncated_square_coeff(s: &[SurdNumber], target: usize, max: usize) -> SurdNumber {
    let mut acc = SurdNumber::zero();
    for k in 0..=max.min(target) {
        let l = target - k;
        if l <= max {
            acc += &s[k] * &s[l];
        }
    }
    acc
}

pub fn sqrt_part_at_pole(r: &RationalFunction, c: &Rational, order: u32) -> Result<SqrtPartAtPole> {
    if order < 4 || order % 2 == 1 {
        return Err(Error::WrongOrder(format!("expected an even order of at least 4, got {order}")));
    }
    let actual = pole_order(r, c);
    if actual != order {
        return Err(Error::WrongOrder(format!("pole at {c} has order {actual}, not {order}")));
    }
    let v = (order / 2) as usize;
    let u = scaled_taylor(r, c, order, v)?;
    let s = sqrt_series(&u, v - 1)?;
    let terms: Vec<SurdNumber> = (2..=v).map(|i| s[v - i].clone()).collect();
    let b_correction = &u[v - 1] - &truncated_square_coeff(&s, v - 1, v - 2);
    Ok(SqrtPartAtPole {
        pole: c.clone(),
        v: v as u32,
        leading: s[0].clone(),
        terms,
        b_correction,
    })
}

pub fn sqrt_part_at_infinity(r: &RationalFunction, o_inf: i64) -> Result<SqrtPartAtInfinity> {
    if o_inf > 0 || o_inf % 2 != 0 {
        return Err(Error::WrongOrder(format!("expected an even order at infinity of at most 0, got {o_inf}")));
    }
    if r.order_at_infinity() != Some(o_inf) {
        return Err(Error::WrongOrder(format!("order at infinity is {:?}, not {o_inf}", r.order_at_infinity())));
    }
    let v = (-o_inf / 2) as usize;
    let u = reversed_series(r, v + 2)?;
    let s = sqrt_series(&u, v + 1)?;
    let terms: Vec<SurdNumber> = (0..=v).map(|i| s[v - i].clone()).collect();
    let b_correction = &u[v + 1] - &truncated_square_coeff(&s, v + 1, v);
    Ok(SqrtPartAtInfinity { v: v as u32, leading: s[0].clone(), terms, b_correction })
}

/// Coefficient of `x^k` in the expansion of `r` at infinity.
pub fn coefficient_at_infinity(r: &RationalFunction, k: i64) -> SurdNumber {
    if r.is_zero() {
        return SurdNumber::zero();
    }
    let m = r.num().deg() - r.den().deg();
    let j = m - k;
    if j < 0 {
        return SurdNumber::zero();
    }
    let series = reversed_series(r, j as usize + 1).expect("reversed denominator has nonzero constant term");
    series[j as usize].clone()
}

/// `sum_n b_n/(x - c)^n` for `b = [b_1, b_2, ...]`.
pub fn principal_part_function(c: &Rational, b: &[SurdNumber]) -> RationalFunction {
    let lin = Polynomial::linear(c);
    let mut acc = RationalFunction::zero();
    for (i, coeff) in b.iter().enumerate() {
        if !coeff.is_zero() {
            let den = lin.pow(i as u32 + 1);
            acc = &acc + &RationalFunction::from_parts(Polynomial::constant(coeff.clone()), den);
        }
    }
    acc
}
