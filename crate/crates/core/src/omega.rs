//! Candidate logarithmic derivatives and where they came from.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{Rational, RationalFunction};

/// `rational + coeff * sqrt(radicand)`; `surd` is `None` for a rational value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Omega {
    pub rational: RationalFunction,
    pub surd: Option<SurdPart>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdPart {
    pub coeff: RationalFunction,
    pub radicand: RationalFunction,
}

impl Omega {
    pub fn rational(w: RationalFunction) -> Self {
        Omega { rational: w, surd: None }
    }

    pub fn with_surd(rational: RationalFunction, coeff: RationalFunction, radicand: RationalFunction) -> Self {
        if coeff.is_zero() || radicand.is_zero() {
            return Omega::rational(rational);
        }
        Omega { rational, surd: Some(SurdPart { coeff, radicand }) }
    }

    pub fn as_rational(&self) -> Option<&RationalFunction> {
        self.surd.is_none().then_some(&self.rational)
    }

    /// `self + f` for a rational `f`.
    pub fn add_rational(&self, f: &RationalFunction) -> Self {
        Omega { rational: &self.rational + f, surd: self.surd.clone() }
    }
}

fn paren(f: &RationalFunction) -> String {
    let s = f.to_string();
    if s.contains(' ') || s.contains('/') || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for Omega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.surd {
            None => write!(f, "{}", self.rational),
            Some(s) => {
                if !self.rational.is_zero() {
                    write!(f, "{} + ", self.rational)?;
                }
                write!(f, "{}*sqrt({})", paren(&s.coeff), s.radicand)
            }
        }
    }
}

/// How a candidate was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Signs at infinity and at each pole (`+1` or `-1`).
    Case1 { sign_at_infinity: i8, sign_at_pole: Vec<(Rational, i8)> },
    /// Chosen `e` values at infinity and at each pole.
    Case2 { e_infinity: i64, e_at_pole: Vec<(Rational, i64)> },
    Case3 { n: u32, e_infinity: i64, e_at_pole: Vec<(Rational, i64)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCandidate {
    pub omega: Omega,
    pub d: u64,
    pub provenance: Provenance,
}
