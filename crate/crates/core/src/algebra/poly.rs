use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Rational, SurdNumber};
use crate::error::{Error, Result};

/// Dense univariate polynomial over [`SurdNumber`], lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    coeffs: Vec<SurdNumber>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<SurdNumber>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        Self::new(coeffs.iter().cloned().map(SurdNumber::from_rational).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| SurdNumber::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(SurdNumber::one())
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: SurdNumber) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: SurdNumber, k: usize) -> Self {
        let mut coeffs = vec![SurdNumber::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The monic linear polynomial `x - c`.
    pub fn linear(c: &Rational) -> Self {
        Self::new(vec![SurdNumber::from_rational(-c), SurdNumber::one()])
    }

    pub fn coeffs(&self) -> &[SurdNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> SurdNumber {
        self.coeffs.get(i).cloned().unwrap_or_else(SurdNumber::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lc(&self) -> SurdNumber {
        self.coeffs.last().cloned().unwrap_or_else(SurdNumber::zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(SurdNumber::is_rational)
    }

    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.to_rational().cloned()).collect()
    }

    pub fn eval(&self, x: &SurdNumber) -> SurdNumber {
        let mut acc = SurdNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &SurdNumber::from_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &SurdNumber) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.lc();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.inv().expect("nonzero leading coefficient"))
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![SurdNumber::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Long division: `self = q*divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = divisor.lc().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![SurdNumber::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; panics if the divisor is zero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.divmod(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        matches!(other.divmod(self), Ok((_, r)) if r.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        (self * other).div_exact(&self.gcd(other)).monic()
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + c)`.
    pub fn taylor_shift(&self, c: &SurdNumber) -> Polynomial {
        if c.is_zero() {
            return self.clone();
        }
        self.compose(&Self::new(vec![c.clone(), SurdNumber::one()]))
    }

    /// Squarefree decomposition `self = lc * prod f_i^i` (Yun), returned as
    /// `(f_i, i)` with monic non-constant `f_i`.
    pub fn squarefree_factors(&self) -> Vec<(Polynomial, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let mut c = df.div_exact(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            d = &c - &b.derivative();
            if !a.is_constant() {
                out.push((a.monic(), i));
            }
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors (monic).
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_constant() {
            return Self::one();
        }
        self.monic().div_exact(&self.gcd(&self.derivative())).monic()
    }

    /// `x^deg * p(1/x)`.
    pub fn reversed(&self) -> Polynomial {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Multiplicity of `c` as a root.
    pub fn root_multiplicity(&self, c: &Rational) -> u32 {
        if self.is_zero() {
            return 0;
        }
        let lin = Self::linear(c);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            match p.divmod(&lin) {
                Ok((q, r)) if r.is_zero() => {
                    p = q;
                    m += 1;
                }
                _ => return m,
            }
        }
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Polynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// For a polynomial in `x^2` only, the polynomial in `v = x^2`.
    pub fn even_part_in_square(&self) -> Option<Polynomial> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }
}

/// First `terms` Taylor coefficients at 0 of `num/den`; needs `den(0) != 0`.
pub fn power_series_quotient(num: &Polynomial, den: &Polynomial, terms: usize) -> Result<Vec<SurdNumber>> {
    let d0_inv = den.coeff(0).inv()?;
    let mut out: Vec<SurdNumber> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = num.coeff(k);
        for j in 1..=k.min(den.coeffs.len().saturating_sub(1)) {
            acc -= &den.coeffs[j] * &out[k - j];
        }
        out.push(&acc * &d0_inv);
    }
    Ok(out)
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![SurdNumber::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

/// Writes `c*body` with `body` one of `""` (constant), `x`, `x^k`.
fn write_term(out: &mut String, first: bool, c: &SurdNumber, body: &str) {
    let (negative, mag) = match c.to_rational() {
        Some(q) => (q.is_negative(), SurdNumber::from_rational(q.abs())),
        None if c.surd_terms().len() == 1 && c.rational_part().is_zero() => {
            let neg = c.surd_terms()[0].1.is_negative();
            (neg, if neg { -c } else { c.clone() })
        }
        None => (false, c.clone()),
    };
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let mag_str = if mag.is_rational() || mag.surd_terms().len() + usize::from(!mag.rational_part().is_zero()) == 1 {
        mag.to_string()
    } else {
        format!("({mag})")
    };
    if body.is_empty() {
        out.push_str(&mag_str);
    } else if mag.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&mag_str);
        out.push('*');
        out.push_str(body);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            write_term(&mut out, first, c, &body);
            first = false;
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn divmod_examples() {
        // 4x^2+8x+6 = 1*(4x^2+4x+1) + (4x+5)
        let (q, r) = p(&[6, 8, 4]).divmod(&p(&[1, 4, 4])).unwrap();
        assert_eq!(q, p(&[1]));
        assert_eq!(r, p(&[5, 4]));
        let s = p(&[3, 0, 2, 7]);
        assert_eq!(s.divmod(&p(&[1])).unwrap(), (s.clone(), Polynomial::zero()));
        assert_eq!(p(&[0, 0, 0, 1]).divmod(&p(&[0, 1])).unwrap(), (p(&[0, 0, 1]), Polynomial::zero()));
        assert_eq!(s.divmod(&Polynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[6, 8, 4]).gcd(&p(&[1, 4, 4])), p(&[1]));
        assert_eq!(p(&[2, 4]).gcd(&Polynomial::zero()), Polynomial::from_rationals(&[Rational::new(1.into(), 2.into()), Rational::one()]));
        assert_eq!(Polynomial::zero().gcd(&Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn squarefree_factorization() {
        // x^2 (x-1)^4 (x+2)
        let f = &(&p(&[0, 0, 1]) * &p(&[-1, 1]).pow(4)) * &p(&[2, 1]);
        let sq = f.squarefree_factors();
        assert_eq!(sq, vec![(p(&[2, 1]), 1), (p(&[0, 1]), 2), (p(&[-1, 1]), 4)]);
    }

    #[test]
    fn display_grammar() {
        assert_eq!(p(&[6, 8, 4]).to_string(), "4*x^2 + 8*x + 6");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        let half = Polynomial::from_rationals(&[Rational::new((-1).into(), 2.into()), Rational::one()]);
        assert_eq!(half.to_string(), "x - 1/2");
    }
}
