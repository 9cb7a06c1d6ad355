use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational, SurdNumber};
use crate::error::{Error, Result};

/// `t = lc * residue * prod (x - c)^m`, roots ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactorization {
    pub roots: Vec<(Rational, u32)>,
    pub residue: Polynomial,
}

/// Splits off every rational linear factor of `t`.
pub fn factor_linear(t: &Polynomial) -> Result<LinearFactorization> {
    if !t.is_rational() {
        return Err(Error::InvalidInput(format!("polynomial {t} has irrational coefficients")));
    }
    let mut roots = Vec::new();
    let mut residue = Polynomial::one();
    for (factor, mult) in t.squarefree_factors() {
        let mut rest = factor;
        for c in rational_roots(&rest) {
            rest = rest.div_exact(&Polynomial::linear(&c));
            roots.push((c, mult));
        }
        if !rest.is_constant() {
            residue = &residue * &rest.monic().pow(mult);
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(LinearFactorization { roots, residue })
}

/// Distinct rational roots of a polynomial with rational coefficients.
pub fn rational_roots(p: &Polynomial) -> Vec<Rational> {
    let Some(coeffs) = p.rational_coeffs() else {
        return Vec::new();
    };
    if coeffs.len() < 2 {
        return Vec::new();
    }
    let ints = primitive_integer_coeffs(&coeffs);
    let mut roots = Vec::new();
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if lowest > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[lowest..];
    if ints.len() >= 2 {
        let lead = ints.last().unwrap().abs();
        let trail = ints[0].abs();
        let num_divs = divisors(&trail);
        let den_divs = divisors(&lead);
        for q in &den_divs {
            for pnum in &num_divs {
                if !pnum.gcd(q).is_one() {
                    continue;
                }
                for sign in [1, -1] {
                    let cand = Rational::new(pnum * BigInt::from(sign), q.clone());
                    if eval_int_poly(ints, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Integer coefficients with content 1 and positive leading coefficient.
pub(crate) fn primitive_integer_coeffs(coeffs: &[Rational]) -> Vec<BigInt> {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -g } else { g };
    ints.into_iter().map(|c| c / &sign).collect()
}

/// The primitive integer multiple of a rational polynomial, as a polynomial.
pub fn primitive_part(p: &Polynomial) -> Option<Polynomial> {
    let coeffs = p.rational_coeffs()?;
    let ints = primitive_integer_coeffs(&coeffs);
    Some(Polynomial::new(
        ints.into_iter().map(|c| SurdNumber::from_rational(Rational::from_integer(c))).collect(),
    ))
}

fn eval_int_poly(coeffs: &[BigInt], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut rem = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rem {
        let mut k = 0;
        while (&rem % &p).is_zero() {
            rem /= &p;
            k += 1;
        }
        if k > 0 {
            primes.push((p.clone(), k));
        }
        p += 1;
    }
    if rem > BigInt::one() {
        primes.push((rem, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, k) in primes {
        let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..k {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}
