use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::factor::primitive_integer_coeffs;
use super::{Polynomial, Rational, SurdNumber};
use crate::error::{Error, Result};

/// Quotient `num/den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let lc = den.lc();
        if lc.is_one() {
            return Ok(RationalFunction { num, den });
        }
        let inv = lc.inv()?;
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    /// Panics if `den` is zero.
    pub fn from_parts(num: Polynomial, den: Polynomial) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: SurdNumber) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(SurdNumber::from_int(n))
    }

    pub fn x() -> Self {
        Self::from_poly(Polynomial::x())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn as_constant(&self) -> Option<SurdNumber> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_rational(&self) -> bool {
        self.num.is_rational() && self.den.is_rational()
    }

    /// `deg den - deg num`; `None` for the zero function.
    pub fn order_at_infinity(&self) -> Option<i64> {
        (!self.num.is_zero()).then(|| self.den.deg() - self.num.deg())
    }

    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::from_parts(num, &self.den * &self.den)
    }

    pub fn scale(&self, k: &SurdNumber) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(k), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn eval(&self, x: &SurdNumber) -> Result<SurdNumber> {
        let d = self.den.eval(x);
        Ok(&self.num.eval(x) * &d.inv()?)
    }

    /// `self(inner(u))` for a polynomial `inner`.
    pub fn compose_poly(&self, inner: &Polynomial) -> Self {
        Self::from_parts(self.num.compose(inner), self.den.compose(inner))
    }

    /// Splits into polynomial part and proper remainder `(q, r/den)`.
    pub fn polynomial_part(&self) -> (Polynomial, RationalFunction) {
        let (q, r) = self.num.divmod(&self.den).expect("nonzero denominator");
        let rem = RationalFunction { num: r, den: self.den.clone() };
        (q, if rem.num.is_zero() { Self::zero() } else { rem })
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::from_parts(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        let g = self.den.gcd(&rhs.den);
        let l = self.den.div_exact(&g);
        let r = rhs.den.div_exact(&g);
        let num = &(&self.num * &r) + &(&rhs.num * &l);
        RationalFunction::from_parts(num, &l * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        RationalFunction::from_parts(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by the zero function.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_rf_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$method(&rhs)
            }
        }
    };
}

forward_rf_binop!(Add, add);
forward_rf_binop!(Sub, sub);
forward_rf_binop!(Mul, mul);
forward_rf_binop!(Div, div);

fn wrap(p: &Polynomial) -> String {
    let s = p.to_string();
    let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
    if single && !s.contains(" + ") && !s.contains(" - ") {
        s
    } else {
        format!("({s})")
    }
}

/// Rational coefficients are scaled to coprime integers, with a positive
/// leading coefficient in the denominator.
fn integer_scaled(num: &Polynomial, den: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    let (nc, dc) = (num.rational_coeffs()?, den.rational_coeffs()?);
    let mut all = nc.clone();
    all.extend(dc.iter().cloned());
    let ints = primitive_integer_coeffs(&all);
    let to_poly = |v: &[BigInt]| {
        Polynomial::new(v.iter().map(|c| SurdNumber::from_rational(Rational::from_integer(c.clone()))).collect())
    };
    Some((to_poly(&ints[..nc.len()]), to_poly(&ints[nc.len()..])))
}

fn wrap_den(p: &Polynomial) -> String {
    let s = p.to_string();
    let bare = s.chars().all(|c| c.is_ascii_digit()) || (s.starts_with('x') && !s.contains(['*', ' ']));
    if bare {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (num, den) = integer_scaled(&self.num, &self.den).unwrap_or_else(|| (self.num.clone(), self.den.clone()));
        if den.is_one() {
            return write!(f, "{num}");
        }
        write!(f, "{}/{}", wrap(&num), wrap_den(&den))
    }
}
