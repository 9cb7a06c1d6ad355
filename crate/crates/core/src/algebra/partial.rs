use num_traits::Zero;

use super::{factor_linear, power_series_quotient, Polynomial, Rational, RationalFunction, SurdNumber};
use crate::error::{Error, Result};

/// `polynomial_part + sum coefficient/(x - pole)^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionForm {
    pub polynomial_part: Polynomial,
    /// `(pole, exponent, coefficient)`, sorted by pole then exponent.
    pub terms: Vec<(Rational, u32, SurdNumber)>,
}

impl PartialFractionForm {
    pub fn recombine(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_poly(self.polynomial_part.clone());
        for (c, k, coeff) in &self.terms {
            let den = Polynomial::linear(c).pow(*k);
            acc = &acc + &RationalFunction::from_parts(Polynomial::constant(coeff.clone()), den);
        }
        acc
    }

    /// Coefficient of `1/(x - c)^k`, zero when absent.
    pub fn coefficient(&self, c: &Rational, k: u32) -> SurdNumber {
        self.terms
            .iter()
            .find(|(p, e, _)| p == c && *e == k)
            .map(|t| t.2.clone())
            .unwrap_or_else(SurdNumber::zero)
    }
}

/// Principal part `[b_1, ..., b_m]` of `num/den` at a root `c` of `den` of
/// multiplicity `m`.
pub(crate) fn principal_part(num: &Polynomial, den: &Polynomial, c: &Rational, m: u32) -> Result<Vec<SurdNumber>> {
    let lin = Polynomial::linear(c).pow(m);
    let (cofactor, rem) = den.divmod(&lin)?;
    if !rem.is_zero() {
        return Err(Error::NotAPole(c.to_string()));
    }
    let shift = SurdNumber::from_rational(c.clone());
    let series = power_series_quotient(&num.taylor_shift(&shift), &cofactor.taylor_shift(&shift), m as usize)?;
    // series[k] multiplies (x - c)^(k - m)
    Ok((1..=m as usize).map(|n| series[m as usize - n].clone()).collect())
}

/// Exact decomposition over rational poles.
pub fn partial_fractions(r: &RationalFunction) -> Result<PartialFractionForm> {
    let (q, rem) = r.polynomial_part();
    let mut terms = Vec::new();
    if !rem.is_zero() {
        let fact = factor_linear(rem.den())?;
        if !fact.residue.is_one() {
            return Err(Error::UnsupportedPoles(rem.den().to_string()));
        }
        for (c, m) in &fact.roots {
            let coeffs = principal_part(rem.num(), rem.den(), c, *m)?;
            for (i, b) in coeffs.into_iter().enumerate() {
                if !b.is_zero() {
                    terms.push((c.clone(), i as u32 + 1, b));
                }
            }
        }
    }
    Ok(PartialFractionForm { polynomial_part: q, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::algebra::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn two_pole_example() {
        // (7x^2+10x-1)/(4x^2(x-1)^4)
        let den = &p(&[0, 0, 4]) * &p(&[-1, 1]).pow(4);
        let r = RationalFunction::from_parts(p(&[-1, 10, 7]), den);
        let pf = partial_fractions(&r).unwrap();
        let one = rat(1, 1);
        let zero = rat(0, 1);
        assert_eq!(pf.coefficient(&one, 4), SurdNumber::from_int(4));
        assert_eq!(pf.coefficient(&one, 3), SurdNumber::from_int(-2));
        assert_eq!(pf.coefficient(&one, 2), SurdNumber::frac(7, 4));
        assert_eq!(pf.coefficient(&one, 1), SurdNumber::frac(-3, 2));
        assert_eq!(pf.coefficient(&zero, 2), SurdNumber::frac(-1, 4));
        assert_eq!(pf.coefficient(&zero, 1), SurdNumber::frac(3, 2));
        assert_eq!(pf.terms.len(), 6);
        assert!(pf.polynomial_part.is_zero());
        assert_eq!(pf.recombine(), r);
    }

    #[test]
    fn simple_pole() {
        let r = RationalFunction::from_parts(p(&[1]), p(&[0, 1]));
        let pf = partial_fractions(&r).unwrap();
        assert_eq!(pf.terms, vec![(rat(0, 1), 1, SurdNumber::one())]);
    }

    #[test]
    fn mixed_orders() {
        // (4-x)/(4x(x-1)^2) = 3/(4(x-1)^2) - 1/(x-1) + 1/x
        let den = &p(&[0, 4]) * &p(&[-1, 1]).pow(2);
        let r = RationalFunction::from_parts(p(&[4, -1]), den);
        let pf = partial_fractions(&r).unwrap();
        assert_eq!(
            pf.terms,
            vec![
                (rat(0, 1), 1, SurdNumber::one()),
                (rat(1, 1), 1, SurdNumber::from_int(-1)),
                (rat(1, 1), 2, SurdNumber::frac(3, 4)),
            ]
        );
    }

    #[test]
    fn irrational_poles_rejected() {
        let r = RationalFunction::from_parts(p(&[1]), p(&[-2, 0, 1]));
        assert!(matches!(partial_fractions(&r), Err(Error::UnsupportedPoles(_))));
    }
}
