//! Exact scalars of the form `a0 + a1*sqrt(m1) + ... + ak*sqrt(mk)`.
//!
//! Radicands are squarefree integers other than 0 and 1; a negative radicand
//! `m` stands for `i*sqrt(|m|)`, so `sqrt(-1)` is the imaginary unit. Every
//! value has exactly one representation, which makes `==` and `Hash` exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SurdNumber {
    rational: Rational,
    /// `(radicand, coefficient)` pairs, radicands strictly increasing.
    terms: Vec<(BigInt, Rational)>,
}

impl SurdNumber {
    pub fn from_rational(q: Rational) -> Self {
        SurdNumber { rational: q, terms: Vec::new() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(Rational::new(n.into(), d.into()))
    }

    /// `coefficient * sqrt(radicand)` for an arbitrary nonzero integer radicand;
    /// square factors are pulled out.
    pub fn surd(coefficient: Rational, radicand: BigInt) -> Self {
        Self::sqrt_of(&Rational::from_integer(radicand)) * Self::from_rational(coefficient)
    }

    /// Builds a value from raw parts, normalizing radicands and dropping zeros.
    pub fn from_parts(rational: Rational, terms: impl IntoIterator<Item = (BigInt, Rational)>) -> Self {
        let mut acc = SurdNumber::from_rational(rational);
        for (m, c) in terms {
            acc += SurdNumber::surd(c, m);
        }
        acc
    }

    fn from_map(mut map: BTreeMap<BigInt, Rational>) -> Self {
        let rational = map.remove(&BigInt::one()).unwrap_or_else(Rational::zero);
        let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SurdNumber { rational, terms }
    }

    fn to_map(&self) -> BTreeMap<BigInt, Rational> {
        let mut map: BTreeMap<BigInt, Rational> = self.terms.iter().cloned().collect();
        if !self.rational.is_zero() {
            map.insert(BigInt::one(), self.rational.clone());
        }
        map
    }

    /// Exact square root of a rational number.
    pub fn sqrt_of(q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let prod = q.numer() * q.denom();
        let (square, free) = squarefree_split(&prod.abs());
        let scale = Rational::new(square, q.denom().clone());
        let radicand = if prod.is_negative() { -free } else { free };
        if radicand.is_one() {
            Self::from_rational(scale)
        } else {
            SurdNumber { rational: Rational::zero(), terms: vec![(radicand, scale)] }
        }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_terms(&self) -> &[(BigInt, Rational)] {
        &self.terms
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rational)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// The image under the automorphism flipping `sqrt(g)`, where `g` is `-1`
    /// or a prime.
    fn conjugate_at(&self, generator: &BigInt) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let flips = if generator == &BigInt::from(-1) {
                    m.is_negative()
                } else {
                    (m.abs() % generator).is_zero()
                };
                (m.clone(), if flips { -c } else { c.clone() })
            })
            .collect();
        SurdNumber { rational: self.rational.clone(), terms }
    }

    /// Multiplicative inverse. Single-surd values use conjugate
    /// rationalization; larger values are reduced one generator at a time.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.terms.is_empty() {
            return Ok(Self::from_rational(self.rational.recip()));
        }
        if self.terms.len() == 1 {
            let (m, b) = &self.terms[0];
            let a = &self.rational;
            let norm = a * a - Rational::from_integer(m.clone()) * b * b;
            let conj = SurdNumber { rational: a.clone(), terms: vec![(m.clone(), -b)] };
            return Ok(conj * Self::from_rational(norm.recip()));
        }
        let generator = if self.terms.iter().any(|(m, _)| m.is_negative()) {
            BigInt::from(-1)
        } else {
            smallest_prime_factor(&self.terms[0].0)
        };
        let conj = self.conjugate_at(&generator);
        let norm = self * &conj;
        Ok(conj * norm.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when the printed form is a single product (no top-level sum and
    /// no leading minus).
    pub fn is_atomic(&self) -> bool {
        let count = self.terms.len() + usize::from(!self.rational.is_zero());
        if count > 1 {
            return false;
        }
        match (self.terms.first(), self.rational.is_zero()) {
            (Some((_, c)), true) => !c.is_negative(),
            _ => !self.rational.is_negative() && self.rational.is_integer(),
        }
    }
}

/// Splits `n > 0` as `square^2 * free` with `free` squarefree.
pub(crate) fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut rem = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p * &p <= rem {
        let mut count = 0u32;
        while (&rem % &p).is_zero() {
            rem /= &p;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= &p;
        }
        if count % 2 == 1 {
            free *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    // rem is now 1, a prime, a product of two primes, or a prime squared
    let root = rem.sqrt();
    if &root * &root == rem {
        square *= root;
    } else {
        free *= rem;
    }
    (square, free)
}

fn smallest_prime_factor(m: &BigInt) -> BigInt {
    let n = m.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            return p;
        }
        p += 1;
    }
    n
}

/// `sqrt(m1) * sqrt(m2)` as `factor * sqrt(radicand)`; radicand 1 means rational.
fn mul_radicals(m1: &BigInt, m2: &BigInt) -> (BigInt, BigInt) {
    if m1.is_one() {
        return (BigInt::one(), m2.clone());
    }
    if m2.is_one() {
        return (BigInt::one(), m1.clone());
    }
    let (a1, a2) = (m1.abs(), m2.abs());
    let g = a1.gcd(&a2);
    let q = (&a1 / &g) * (&a2 / &g);
    match (m1.is_negative(), m2.is_negative()) {
        (false, false) => (g, q),
        (true, true) => (-g, q),
        _ => {
            if q.is_one() {
                (g, BigInt::from(-1))
            } else {
                (g, -q)
            }
        }
    }
}

impl Zero for SurdNumber {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.terms.is_empty()
    }
}

impl One for SurdNumber {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<Rational> for SurdNumber {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for SurdNumber {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a SurdNumber> for &'a SurdNumber {
    type Output = SurdNumber;
    fn add(self, rhs: &SurdNumber) -> SurdNumber {
        if self.terms.is_empty() && rhs.terms.is_empty() {
            return SurdNumber::from_rational(&self.rational + &rhs.rational);
        }
        let mut map = self.to_map();
        for (m, c) in rhs.to_map() {
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        SurdNumber::from_map(map)
    }
}

impl Neg for &SurdNumber {
    type Output = SurdNumber;
    fn neg(self) -> SurdNumber {
        SurdNumber {
            rational: -&self.rational,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Sub<&'a SurdNumber> for &'a SurdNumber {
    type Output = SurdNumber;
    fn sub(self, rhs: &SurdNumber) -> SurdNumber {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a SurdNumber> for &'a SurdNumber {
    type Output = SurdNumber;
    fn mul(self, rhs: &SurdNumber) -> SurdNumber {
        if self.terms.is_empty() && rhs.terms.is_empty() {
            return SurdNumber::from_rational(&self.rational * &rhs.rational);
        }
        let mut map: BTreeMap<BigInt, Rational> = BTreeMap::new();
        let lhs_map = self.to_map();
        let rhs_map = rhs.to_map();
        for (m1, c1) in &lhs_map {
            for (m2, c2) in &rhs_map {
                let (factor, radicand) = mul_radicals(m1, m2);
                let value = c1 * c2 * Rational::from_integer(factor);
                *map.entry(radicand).or_insert_with(Rational::zero) += value;
            }
        }
        SurdNumber::from_map(map)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<SurdNumber> for SurdNumber {
            type Output = SurdNumber;
            fn $method(self, rhs: SurdNumber) -> SurdNumber {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a SurdNumber> for SurdNumber {
            type Output = SurdNumber;
            fn $method(self, rhs: &SurdNumber) -> SurdNumber {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<SurdNumber> for &'a SurdNumber {
            type Output = SurdNumber;
            fn $method(self, rhs: SurdNumber) -> SurdNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for SurdNumber {
    type Output = SurdNumber;
    fn neg(self) -> SurdNumber {
        -&self
    }
}

/// Panics on division by zero; use [`SurdNumber::inv`] for a fallible form.
impl<'a> Div<&'a SurdNumber> for &'a SurdNumber {
    type Output = SurdNumber;
    fn div(self, rhs: &SurdNumber) -> SurdNumber {
        if self.terms.is_empty() && rhs.terms.is_empty() {
            return SurdNumber::from_rational(&self.rational / &rhs.rational);
        }
        self * &rhs.inv().expect("division by zero")
    }
}

forward_binop!(Div, div);

impl AddAssign for SurdNumber {
    fn add_assign(&mut self, rhs: SurdNumber) {
        *self = &*self + &rhs;
    }
}

impl AddAssign<&SurdNumber> for SurdNumber {
    fn add_assign(&mut self, rhs: &SurdNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign for SurdNumber {
    fn sub_assign(&mut self, rhs: SurdNumber) {
        *self = &*self - &rhs;
    }
}

impl MulAssign for SurdNumber {
    fn mul_assign(&mut self, rhs: SurdNumber) {
        *self = &*self * &rhs;
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for SurdNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        if !self.rational.is_zero() {
            pieces.push((self.rational.is_negative(), fmt_rational(&self.rational.abs())));
        }
        for (m, c) in &self.terms {
            let mag = c.abs();
            let body = if mag.is_one() {
                format!("sqrt({m})")
            } else {
                format!("{}*sqrt({m})", fmt_rational(&mag))
            };
            pieces.push((c.is_negative(), body));
        }
        for (i, (negative, body)) in pieces.iter().enumerate() {
            match (i, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}
