//! Case 2: `omega` is quadratic over the rational functions.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{LinearOperator, Polynomial, Rational, RationalFunction, SurdNumber};
use crate::error::Result;
use crate::omega::Omega;
use crate::series::laurent_coefficients;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Finite(c) => write!(f, "{c}"),
            Location::Infinity => write!(f, "infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ESet {
    pub location: Location,
    /// Sorted, distinct.
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EFamily {
    pub e_infinity: i64,
    pub e_at_pole: Vec<(Rational, i64)>,
    pub d: u64,
}

/// Integer members of `{2, 2 + 2 sqrt(1+4b), 2 - 2 sqrt(1+4b)}`.
fn quadratic_members(b: &SurdNumber) -> Vec<i64> {
    let mut out = vec![2];
    if let Some(b) = b.to_rational() {
        let root = SurdNumber::sqrt_of(&(Rational::one() + Rational::from_integer(4.into()) * b));
        let two = SurdNumber::from_int(2);
        for s in [1, -1] {
            let v = &two + &(&root * &SurdNumber::from_int(2 * s));
            if let Some(k) = v.to_i64() {
                out.push(k);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn e_set_case2(r: &RationalFunction, pole: &(Rational, u32)) -> Result<ESet> {
    let values = match pole.1 {
        1 => vec![4],
        2 => {
            let b = laurent_coefficients(r, &pole.0, 2)?.pop().expect("two coefficients");
            quadratic_members(&b)
        }
        v => vec![v as i64],
    };
    Ok(ESet { location: Location::Finite(pole.0.clone()), values })
}

pub fn e_set_infinity_case2(r: &RationalFunction, o_inf: i64) -> ESet {
    let values = if o_inf > 2 {
        vec![0, 2, 4]
    } else if o_inf == 2 {
        quadratic_members(&(&r.num().lc() / &r.den().lc()))
    } else {
        vec![o_inf]
    };
    ESet { location: Location::Infinity, values }
}

/// Every choice of one value per set, in lexicographic order over
/// `(e_inf, e_c1, e_c2, ...)`.
pub(crate) fn cartesian(e_inf: &ESet, e_sets: &[ESet]) -> Vec<(i64, Vec<i64>)> {
    let mut out = Vec::new();
    for &ei in &e_inf.values {
        let mut partial: Vec<Vec<i64>> = vec![Vec::new()];
        for set in e_sets {
            partial = partial
                .into_iter()
                .flat_map(|prefix| {
                    set.values.iter().map(move |&v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        out.extend(partial.into_iter().map(|choice| (ei, choice)));
    }
    out
}

pub(crate) fn pole_of(set: &ESet) -> Rational {
    match &set.location {
        Location::Finite(c) => c.clone(),
        Location::Infinity => panic!("finite location expected"),
    }
}

/// `sum_c scale * e_c/(x - c)`.
pub(crate) fn theta_from(e_at_pole: &[(Rational, i64)], scale: &SurdNumber) -> RationalFunction {
    let mut theta = RationalFunction::zero();
    for (c, e) in e_at_pole {
        if *e != 0 {
            let k = &SurdNumber::from_int(*e) * scale;
            theta = &theta + &RationalFunction::from_parts(Polynomial::constant(k), Polynomial::linear(c));
        }
    }
    theta
}

pub fn d_theta_case2(e_sets: &[ESet], e_inf: &ESet) -> Vec<(EFamily, RationalFunction)> {
    let mut out = Vec::new();
    for (ei, choice) in cartesian(e_inf, e_sets) {
        let twice_d = ei - choice.iter().sum::<i64>();
        if twice_d < 0 || twice_d % 2 != 0 {
            continue;
        }
        let e_at_pole: Vec<(Rational, i64)> = e_sets.iter().map(pole_of).zip(choice).collect();
        let theta = theta_from(&e_at_pole, &SurdNumber::frac(1, 2));
        out.push((EFamily { e_infinity: ei, e_at_pole, d: (twice_d / 2) as u64 }, theta));
    }
    out.sort_by_key(|(f, _)| f.d);
    out
}

/// Monic `p` of degree `d` solving the third-order auxiliary equation.
pub fn solve_p_case2(theta: &RationalFunction, r: &RationalFunction, d: u64) -> Option<Polynomial> {
    let three = SurdNumber::from_int(3);
    let four = SurdNumber::from_int(4);
    let t1 = theta.derivative();
    let t2 = t1.derivative();
    let tt = theta * theta;
    let c0 = &(&(&(&t2 + &(theta * &t1).scale(&three)) + &(&tt * theta)) - &(r * theta).scale(&four))
        - &r.derivative().scale(&SurdNumber::from_int(2));
    let c1 = &(&tt.scale(&three) + &t1.scale(&three)) - &r.scale(&four);
    let c2 = theta.scale(&three);
    let op = LinearOperator::from_rational(&[c0, c1, c2, RationalFunction::one()]);
    op.solve_monic(d as usize)
}

/// `sqrt(f)` written as `coeff * sqrt(radicand)` with a squarefree
/// polynomial radicand; `radicand` is `None` when `f` is a perfect square.
pub fn sqrt_rational_function(f: &RationalFunction) -> (RationalFunction, Option<Polynomial>) {
    let den = f.den().clone();
    let prod = f.num() * &den;
    let lc = prod.lc();
    let mut square = Polynomial::one();
    let mut free = Polynomial::one();
    for (g, mult) in prod.squarefree_factors() {
        square = &square * &g.pow(mult / 2);
        if mult % 2 == 1 {
            free = &free * &g;
        }
    }
    let Some(c) = lc.to_rational().cloned() else {
        // irrational leading coefficient: keep the whole product under the root
        return (RationalFunction::from_parts(Polynomial::one(), den), Some(prod));
    };
    if free.is_constant() {
        let root = SurdNumber::sqrt_of(&c);
        return (RationalFunction::from_parts(square.scale(&root), den), None);
    }
    let root = SurdNumber::sqrt_of(&c.abs());
    let radicand = if c.is_negative() { -free } else { free };
    (RationalFunction::from_parts(square.scale(&root), den), Some(radicand))
}

/// `phi = theta + p'/p` and the two roots of
/// `omega^2 - phi omega + (phi'/2 + phi^2/2 - r) = 0`, `+sqrt` first.
pub fn omega_case2(theta: &RationalFunction, p: &Polynomial, r: &RationalFunction) -> [Omega; 2] {
    let phi = theta + &RationalFunction::from_parts(p.derivative(), p.clone());
    let disc = &(&r.scale(&SurdNumber::from_int(4)) - &(&phi * &phi)) - &phi.derivative().scale(&SurdNumber::from_int(2));
    let half = SurdNumber::frac(1, 2);
    let a = phi.scale(&half);
    let (coeff, radicand) = sqrt_rational_function(&disc);
    let b = coeff.scale(&half);
    match radicand {
        None => [Omega::rational(&a + &b), Omega::rational(&a - &b)],
        Some(q) => {
            let q = RationalFunction::from_poly(q);
            [Omega::with_surd(a.clone(), b.clone(), q.clone()), Omega::with_surd(a, -b, q)]
        }
    }
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
        RationalFunction::from_parts(p(&[-3, -8]), p(&[0, 0, 16]))
    }

    fn example_two() -> RationalFunction {
        RationalFunction::from_parts(p(&[4, -1]), &p(&[0, 4]) * &p(&[-1, 1]).pow(2))
    }

    #[test]
    fn e_sets() {
        assert_eq!(e_set_case2(&example_one(), &(rat(0, 1), 2)).unwrap().values, vec![1, 2, 3]);
        assert_eq!(e_set_case2(&example_two(), &(rat(1, 1), 2)).unwrap().values, vec![-2, 2, 6]);
        assert_eq!(e_set_case2(&example_two(), &(rat(0, 1), 1)).unwrap().values, vec![4]);
        assert_eq!(e_set_infinity_case2(&example_one(), 1).values, vec![1]);
        assert_eq!(e_set_infinity_case2(&example_two(), 2).values, vec![2]);
        assert_eq!(e_set_infinity_case2(&example_two(), 3).values, vec![0, 2, 4]);
    }

    #[test]
    fn e_set_members_satisfy_relation() {
        for b in [rat(3, 4), rat(-3, 16), rat(2, 1), rat(-1, 4), rat(5, 36)] {
            let r = RationalFunction::from_parts(Polynomial::from_rationals(std::slice::from_ref(&b)), p(&[0, 0, 1]));
            for m in e_set_case2(&r, &(rat(0, 1), 2)).unwrap().values {
                let lhs = rat((m - 2) * (m - 2), 4);
                assert!(m == 2 || lhs == rat(1, 1) + rat(4, 1) * &b);
            }
        }
    }

    #[test]
    fn families() {
        let e0 = e_set_case2(&example_one(), &(rat(0, 1), 2)).unwrap();
        let fams = d_theta_case2(&[e0], &e_set_infinity_case2(&example_one(), 1));
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].0.d, 0);
        assert_eq!(fams[0].1, RationalFunction::from_parts(p(&[1]), p(&[0, 2])));

        let r = example_two();
        let sets = vec![e_set_case2(&r, &(rat(0, 1), 1)).unwrap(), e_set_case2(&r, &(rat(1, 1), 2)).unwrap()];
        let fams = d_theta_case2(&sets, &e_set_infinity_case2(&r, 2));
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].0.e_at_pole, vec![(rat(0, 1), 4), (rat(1, 1), -2)]);
        let theta = &RationalFunction::from_parts(p(&[2]), p(&[0, 1])) - &RationalFunction::from_parts(p(&[1]), p(&[-1, 1]));
        assert_eq!(fams[0].1, theta);

        let single = ESet { location: Location::Finite(rat(0, 1)), values: vec![4] };
        let inf = ESet { location: Location::Infinity, values: vec![0, 2, 4] };
        let fams = d_theta_case2(&[single], &inf);
        assert_eq!(fams.len(), 1);
        assert_eq!((fams[0].0.e_infinity, fams[0].0.d), (4, 0));
        assert_eq!(fams[0].1, RationalFunction::from_parts(p(&[2]), p(&[0, 1])));
    }

    #[test]
    fn enumeration_matches_nested_loops() {
        let a = ESet { location: Location::Finite(rat(0, 1)), values: vec![-2, 2, 6] };
        let b = ESet { location: Location::Finite(rat(1, 1)), values: vec![1, 2, 3] };
        let inf = ESet { location: Location::Infinity, values: vec![0, 2, 4] };
        let mut expected = Vec::new();
        for &ei in &inf.values {
            for &ea in &a.values {
                for &eb in &b.values {
                    let t = ei - ea - eb;
                    if t >= 0 && t % 2 == 0 {
                        expected.push((t / 2, ei, ea, eb));
                    }
                }
            }
        }
        expected.sort_by_key(|e| e.0);
        let got: Vec<(i64, i64, i64, i64)> = d_theta_case2(&[a, b], &inf)
            .into_iter()
            .map(|(f, _)| (f.d as i64, f.e_infinity, f.e_at_pole[0].1, f.e_at_pole[1].1))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn p_solves() {
        let theta = RationalFunction::from_parts(p(&[1]), p(&[0, 2]));
        assert_eq!(solve_p_case2(&theta, &example_one(), 0), Some(Polynomial::one()));
        let theta2 = &RationalFunction::from_parts(p(&[2]), p(&[0, 1])) - &RationalFunction::from_parts(p(&[1]), p(&[-1, 1]));
        assert_eq!(solve_p_case2(&theta2, &example_two(), 0), Some(Polynomial::one()));
        // theta = 0, r = x: the p-equation reduces to -2 = 0
        assert_eq!(solve_p_case2(&RationalFunction::zero(), &RationalFunction::x(), 0), None);
    }

    #[test]
    fn omega_examples() {
        let theta = RationalFunction::from_parts(p(&[1]), p(&[0, 2]));
        let [w, _] = omega_case2(&theta, &Polynomial::one(), &example_one());
        assert_eq!(w.rational, RationalFunction::from_parts(p(&[1]), p(&[0, 4])));
        let s = w.surd.expect("irrational omega");
        let root2 = SurdNumber::surd(rat(1, 2), BigInt::from(2));
        assert_eq!(s.coeff, RationalFunction::from_parts(Polynomial::constant(root2), p(&[0, 1])));
        assert_eq!(s.radicand, RationalFunction::from_poly(p(&[0, -1])));

        let theta2 = &RationalFunction::from_parts(p(&[2]), p(&[0, 1])) - &RationalFunction::from_parts(p(&[1]), p(&[-1, 1]));
        let ws = omega_case2(&theta2, &Polynomial::one(), &example_two());
        let expected = RationalFunction::from_parts(p(&[-2, 1]), &p(&[0, 2]) * &p(&[-1, 1]));
        assert!(ws.iter().any(|w| w.as_rational() == Some(&expected)));

        let ws = omega_case2(&RationalFunction::zero(), &Polynomial::one(), &RationalFunction::one());
        assert_eq!(ws[0].as_rational(), Some(&RationalFunction::one()));
        assert_eq!(ws[1].as_rational(), Some(&RationalFunction::from_int(-1)));
    }
}
