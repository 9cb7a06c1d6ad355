//! Case 1: `omega` is rational.

use num_traits::{One, Signed, Zero};

use crate::algebra::{LinearOperator, Polynomial, Rational, RationalFunction, SurdNumber};
use crate::error::{Error, Result};
use crate::omega::{Omega, OmegaCandidate, Provenance};
use crate::series::{laurent_coefficients, sqrt_part_at_infinity, sqrt_part_at_pole};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleDataCase1 {
    pub pole: Rational,
    pub order: u32,
    pub sqrt_part: RationalFunction,
    pub alpha_plus: SurdNumber,
    pub alpha_minus: SurdNumber,
}

impl PoleDataCase1 {
    pub fn alpha(&self, sign: i8) -> &SurdNumber {
        if sign > 0 {
            &self.alpha_plus
        } else {
            &self.alpha_minus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityDataCase1 {
    pub sqrt_part: RationalFunction,
    pub alpha_plus: SurdNumber,
    pub alpha_minus: SurdNumber,
}

impl InfinityDataCase1 {
    pub fn alpha(&self, sign: i8) -> &SurdNumber {
        if sign > 0 {
            &self.alpha_plus
        } else {
            &self.alpha_minus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignFamily {
    pub sign_at_infinity: i8,
    pub sign_at_pole: Vec<(Rational, i8)>,
    pub d: u64,
}

/// `1/2 + s/2 * sqrt(1 + 4b)` for `s = +1, -1`.
fn quadratic_alphas(b: &SurdNumber) -> Result<(SurdNumber, SurdNumber)> {
    let b = b
        .to_rational()
        .ok_or_else(|| Error::InvalidInput(format!("coefficient {b} is not rational")))?;
    let disc = Rational::one() + Rational::from_integer(4.into()) * b;
    let root = &SurdNumber::sqrt_of(&disc) * &SurdNumber::frac(1, 2);
    let half = SurdNumber::frac(1, 2);
    Ok((&half + &root, &half - &root))
}

pub fn pole_data_case1(r: &RationalFunction, pole: &(Rational, u32)) -> Result<PoleDataCase1> {
    let (c, order) = (pole.0.clone(), pole.1);
    match order {
        1 => Ok(PoleDataCase1 {
            pole: c,
            order,
            sqrt_part: RationalFunction::zero(),
            alpha_plus: SurdNumber::one(),
            alpha_minus: SurdNumber::one(),
        }),
        2 => {
            let b = laurent_coefficients(r, &c, 2)?.pop().expect("two coefficients");
            let (alpha_plus, alpha_minus) = quadratic_alphas(&b)?;
            Ok(PoleDataCase1 { pole: c, order, sqrt_part: RationalFunction::zero(), alpha_plus, alpha_minus })
        }
        k if k % 2 == 0 => {
            let sp = sqrt_part_at_pole(r, &c, k)?;
            let ratio = &sp.b_correction / &sp.leading;
            let v = SurdNumber::from_int(sp.v as i64);
            let half = SurdNumber::frac(1, 2);
            Ok(PoleDataCase1 {
                pole: c,
                order,
                sqrt_part: sp.to_rational_function(),
                alpha_plus: &(&ratio + &v) * &half,
                alpha_minus: &(&v - &ratio) * &half,
            })
        }
        k => Err(Error::WrongOrder(format!("case 1 does not allow a pole of odd order {k}"))),
    }
}

pub fn infinity_data_case1(r: &RationalFunction, o_inf: i64) -> Result<InfinityDataCase1> {
    if o_inf > 2 {
        return Ok(InfinityDataCase1 {
            sqrt_part: RationalFunction::zero(),
            alpha_plus: SurdNumber::zero(),
            alpha_minus: SurdNumber::one(),
        });
    }
    if o_inf == 2 {
        let b = &r.num().lc() / &r.den().lc();
        let (alpha_plus, alpha_minus) = quadratic_alphas(&b)?;
        return Ok(InfinityDataCase1 { sqrt_part: RationalFunction::zero(), alpha_plus, alpha_minus });
    }
    if o_inf % 2 != 0 {
        return Err(Error::WrongOrder(format!("case 1 does not allow an odd order {o_inf} at infinity")));
    }
    let sp = sqrt_part_at_infinity(r, o_inf)?;
    let ratio = &sp.b_correction / &sp.leading;
    let v = SurdNumber::from_int(sp.v as i64);
    let half = SurdNumber::frac(1, 2);
    Ok(InfinityDataCase1 {
        sqrt_part: RationalFunction::from_poly(sp.to_polynomial()),
        alpha_plus: &(&ratio - &v) * &half,
        alpha_minus: &(-&(&ratio + &v)) * &half,
    })
}

/// Every sign assignment whose `d` is a non-negative integer, by ascending
/// `d` and then lexicographically with `-` before `+`.
pub fn d_candidates_case1(poles: &[PoleDataCase1], inf: &InfinityDataCase1) -> Vec<SignFamily> {
    let n = poles.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n + 1)) {
        let sign = |i: usize| -> i8 {
            if mask >> (n - i) & 1 == 0 {
                -1
            } else {
                1
            }
        };
        let mut d = inf.alpha(sign(0)).clone();
        for (i, p) in poles.iter().enumerate() {
            d -= p.alpha(sign(i + 1)).clone();
        }
        let Some(value) = d.to_integer() else { continue };
        if value.is_negative() {
            continue;
        }
        let Ok(value) = u64::try_from(value) else { continue };
        out.push(SignFamily {
            sign_at_infinity: sign(0),
            sign_at_pole: poles.iter().enumerate().map(|(i, p)| (p.pole.clone(), sign(i + 1))).collect(),
            d: value,
        });
    }
    out.sort_by_key(|f| f.d);
    out
}

pub fn build_omega_case1(family: &SignFamily, poles: &[PoleDataCase1], inf: &InfinityDataCase1) -> OmegaCandidate {
    let mut w = inf.sqrt_part.scale(&SurdNumber::from_int(family.sign_at_infinity as i64));
    for (p, (_, s)) in poles.iter().zip(&family.sign_at_pole) {
        w = &w + &p.sqrt_part.scale(&SurdNumber::from_int(*s as i64));
        let alpha = p.alpha(*s);
        if !alpha.is_zero() {
            w = &w + &RationalFunction::from_parts(Polynomial::constant(alpha.clone()), Polynomial::linear(&p.pole));
        }
    }
    OmegaCandidate {
        omega: Omega::rational(w),
        d: family.d,
        provenance: Provenance::Case1 {
            sign_at_infinity: family.sign_at_infinity,
            sign_at_pole: family.sign_at_pole.clone(),
        },
    }
}

/// Monic `p` of degree `d` with `p'' + 2 omega p' + (omega' + omega^2 - r) p = 0`.
pub fn solve_p_case1(omega: &RationalFunction, r: &RationalFunction, d: u64) -> Option<Polynomial> {
    let c0 = &(&omega.derivative() + &(omega * omega)) - r;
    let c1 = omega.scale(&SurdNumber::from_int(2));
    let op = LinearOperator::from_rational(&[c0, c1, RationalFunction::one()]);
    op.solve_monic(d as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn example_one() -> RationalFunction {
        RationalFunction::from_parts(p(&[6, 8, 4]), p(&[1, 2]).pow(2))
    }

    fn example_two() -> RationalFunction {
        RationalFunction::from_parts(p(&[-1, 10, 7]), &p(&[0, 0, 4]) * &p(&[-1, 1]).pow(4))
    }

    fn s(n: i64, d: i64) -> SurdNumber {
        SurdNumber::frac(n, d)
    }

    #[test]
    fn pole_data_examples() {
        let pd = pole_data_case1(&example_one(), &(rat(-1, 2), 2)).unwrap();
        assert!(pd.sqrt_part.is_zero());
        assert_eq!((pd.alpha_plus, pd.alpha_minus), (s(3, 2), s(-1, 2)));

        let pd = pole_data_case1(&example_two(), &(rat(1, 1), 4)).unwrap();
        assert_eq!(pd.sqrt_part, RationalFunction::from_parts(p(&[2]), p(&[-1, 1]).pow(2)));
        assert_eq!((pd.alpha_plus, pd.alpha_minus), (s(1, 2), s(3, 2)));

        let pd = pole_data_case1(&example_two(), &(rat(0, 1), 2)).unwrap();
        assert_eq!((pd.alpha_plus, pd.alpha_minus), (s(1, 2), s(1, 2)));

        let simple = RationalFunction::from_parts(p(&[3]), p(&[0, 1]));
        let pd = pole_data_case1(&simple, &(rat(0, 1), 1)).unwrap();
        assert_eq!((pd.sqrt_part, pd.alpha_plus, pd.alpha_minus), (RationalFunction::zero(), s(1, 1), s(1, 1)));

        let cubic = RationalFunction::from_parts(p(&[1]), p(&[0, 0, 0, 1]));
        assert!(pole_data_case1(&cubic, &(rat(0, 1), 3)).is_err());
    }

    #[test]
    fn infinity_data_examples() {
        let inf = infinity_data_case1(&example_one(), 0).unwrap();
        assert_eq!(inf.sqrt_part, RationalFunction::one());
        assert_eq!((inf.alpha_plus, inf.alpha_minus), (s(1, 2), s(-1, 2)));

        let inf = infinity_data_case1(&example_two(), 4).unwrap();
        assert_eq!((inf.sqrt_part, inf.alpha_plus, inf.alpha_minus), (RationalFunction::zero(), s(0, 1), s(1, 1)));

        let inf = infinity_data_case1(&RationalFunction::constant(s(-3, 4)), 0).unwrap();
        let expected = SurdNumber::surd(rat(1, 2), BigInt::from(-3));
        assert_eq!(inf.sqrt_part, RationalFunction::constant(expected));
        assert!(inf.alpha_plus.is_zero() && inf.alpha_minus.is_zero());

        assert!(infinity_data_case1(&example_one(), 1).is_err());
    }

    fn data(r: &RationalFunction, poles: &[(Rational, u32)], o_inf: i64) -> (Vec<PoleDataCase1>, InfinityDataCase1) {
        let pd = poles.iter().map(|pl| pole_data_case1(r, pl).unwrap()).collect();
        (pd, infinity_data_case1(r, o_inf).unwrap())
    }

    #[test]
    fn families_example_one() {
        let (pd, inf) = data(&example_one(), &[(rat(-1, 2), 2)], 0);
        let fams = d_candidates_case1(&pd, &inf);
        let summary: Vec<(i8, i8, u64)> = fams.iter().map(|f| (f.sign_at_infinity, f.sign_at_pole[0].1, f.d)).collect();
        assert_eq!(summary, vec![(-1, -1, 0), (1, -1, 1)]);
    }

    #[test]
    fn families_example_two() {
        let (pd, inf) = data(&example_two(), &[(rat(0, 1), 2), (rat(1, 1), 4)], 4);
        let fams = d_candidates_case1(&pd, &inf);
        assert_eq!(fams.len(), 2);
        assert!(fams.iter().all(|f| f.d == 0));
    }

    #[test]
    fn families_constant() {
        let (pd, inf) = data(&RationalFunction::constant(s(-3, 4)), &[], 0);
        let fams = d_candidates_case1(&pd, &inf);
        assert_eq!(fams.iter().map(|f| f.d).collect::<Vec<_>>(), vec![0, 0]);
    }

    #[test]
    fn omega_examples() {
        let (pd, inf) = data(&example_one(), &[(rat(-1, 2), 2)], 0);
        let fam = SignFamily { sign_at_infinity: 1, sign_at_pole: vec![(rat(-1, 2), -1)], d: 1 };
        let w = build_omega_case1(&fam, &pd, &inf).omega;
        assert_eq!(w.rational, RationalFunction::from_parts(p(&[0, 2]), p(&[1, 2])));

        let (pd, inf) = data(&example_two(), &[(rat(0, 1), 2), (rat(1, 1), 4)], 4);
        let fam = SignFamily { sign_at_infinity: 1, sign_at_pole: vec![(rat(0, 1), 1), (rat(1, 1), 1)], d: 0 };
        let w = build_omega_case1(&fam, &pd, &inf).omega;
        let den = &p(&[0, 2]) * &p(&[-1, 1]).pow(2);
        assert_eq!(w.rational, RationalFunction::from_parts(p(&[1, 1, 2]), den));

        let (pd, inf) = data(&RationalFunction::constant(s(-3, 4)), &[], 0);
        let fam = SignFamily { sign_at_infinity: -1, sign_at_pole: vec![], d: 0 };
        let w = build_omega_case1(&fam, &pd, &inf).omega;
        assert_eq!(w.rational, RationalFunction::constant(SurdNumber::surd(rat(-1, 2), BigInt::from(-3))));
    }

    #[test]
    fn p_solve_examples() {
        let w = RationalFunction::from_parts(p(&[0, 2]), p(&[1, 2]));
        assert_eq!(solve_p_case1(&w, &example_one(), 1), Some(Polynomial::x()));
        assert_eq!(solve_p_case1(&w, &example_one(), 0), None);

        let den = &p(&[0, 2]) * &p(&[-1, 1]).pow(2);
        let w = RationalFunction::from_parts(p(&[1, 1, 2]), den);
        assert_eq!(solve_p_case1(&w, &example_two(), 0), Some(Polynomial::one()));
    }
}
