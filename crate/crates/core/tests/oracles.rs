use kovacic::algebra::{partial_fractions, rat, solve_linear_system, Polynomial, Rational, RationalFunction, SurdNumber};
use kovacic::closedform::{rational_risch, riccati_verify, DEFAULT_RISCH_SLACK};
use kovacic::series::laurent_coefficients;
use kovacic::Omega;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn q(n: i64, d: i64) -> SurdNumber {
    SurdNumber::frac(n, d)
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// `b_k = D^(v-k)[(x - c)^v r](c) / (v - k)!`.
fn limit_coefficients(r: &RationalFunction, c: &Rational, v: u32) -> Vec<SurdNumber> {
    let mut g = r * &RationalFunction::from_poly(Polynomial::linear(c).pow(v));
    let at = SurdNumber::from_rational(c.clone());
    let mut derivs = Vec::new();
    for _ in 0..v {
        derivs.push(g.eval(&at).unwrap());
        g = g.derivative();
    }
    (1..=v).map(|k| &derivs[(v - k) as usize] / &q(factorial(v - k), 1)).collect()
}

fn pole_layout() -> impl Strategy<Value = Vec<(Rational, u32)>> {
    prop::collection::btree_map((-4i64..=4, 1i64..=3), 1u32..=4, 1..=3).prop_map(|m| {
        let mut out: Vec<(Rational, u32)> = Vec::new();
        for ((n, d), k) in m {
            let c = rat(n, d);
            if !out.iter().any(|(e, _)| *e == c) {
                out.push((c, k));
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn laurent_matches_limit_formula(
        poles in pole_layout(),
        num in prop::collection::vec(-6i64..=6, 1..=6),
    ) {
        let den = poles.iter().fold(Polynomial::one(), |acc, (c, k)| &acc * &Polynomial::linear(c).pow(*k));
        let r = RationalFunction::from_parts(Polynomial::from_ints(&num), den);
        prop_assume!(!r.is_zero());
        let pf = partial_fractions(&r).unwrap();
        prop_assert_eq!(pf.recombine(), r.clone());
        for (c, _) in &poles {
            let v = r.den().root_multiplicity(c);
            if v == 0 {
                continue;
            }
            let got = laurent_coefficients(&r, c, v as usize).unwrap();
            prop_assert_eq!(&got, &limit_coefficients(&r, c, v));
            for (k, b) in got.iter().enumerate() {
                prop_assert_eq!(b, &pf.coefficient(c, k as u32 + 1));
            }
        }
    }
}

fn example_one_r() -> RationalFunction {
    RationalFunction::from_parts(p(&[6, 8, 4]), p(&[1, 2]).pow(2))
}

#[test]
fn riccati_matches_pointwise_derivative() {
    // z = x e^x / sqrt(2x + 1), W = z'/z and W' written out by hand
    let w = |x: &SurdNumber| &(&SurdNumber::one() / x) + &(&(x * &q(2, 1)) / &(&(x * &q(2, 1)) + &SurdNumber::one()));
    let dw = |x: &SurdNumber| {
        let t = &(x * &q(2, 1)) + &SurdNumber::one();
        &(&q(-1, 1) / &(x * x)) + &(&q(2, 1) / &(&t * &t))
    };
    let r = example_one_r();
    for x0 in [q(1, 1), q(3, 2), q(-5, 7), q(9, 1)] {
        let lhs = &dw(&x0) + &(&w(&x0) * &w(&x0));
        assert_eq!(lhs, r.eval(&x0).unwrap());
    }
    let full = &RationalFunction::from_parts(p(&[1]), p(&[0, 1])) + &RationalFunction::from_parts(p(&[0, 2]), p(&[1, 2]));
    assert!(riccati_verify(&Omega::rational(full), &r));
    assert!(!riccati_verify(&Omega::rational(RationalFunction::from_parts(p(&[0, 2]), p(&[1, 2]))), &r));
}

#[test]
fn surd_riccati_matches_pointwise_expansion() {
    // case 2 with r = -(8x + 3)/(16 x^2): phi = 1/(2x), D = 4r - phi^2 - 2 phi'
    let r = RationalFunction::from_parts(p(&[-3, -8]), p(&[0, 0, 16]));
    let phi = RationalFunction::from_parts(p(&[1]), p(&[0, 2]));
    let d = &(&r.scale(&q(4, 1)) - &(&phi * &phi)) - &phi.derivative().scale(&q(2, 1));
    assert_eq!(d, RationalFunction::from_parts(p(&[-2]), p(&[0, 1])));
    let a = phi.scale(&q(1, 2));
    let b = RationalFunction::constant(q(1, 2));
    for x0 in [q(1, 1), q(2, 1), q(-3, 1), q(5, 4)] {
        let s = SurdNumber::sqrt_of(d.eval(&x0).unwrap().to_rational().unwrap());
        let w = &a.eval(&x0).unwrap() + &(&b.eval(&x0).unwrap() * &s);
        let dw = &(&a.derivative().eval(&x0).unwrap() + &(&b.derivative().eval(&x0).unwrap() * &s))
            + &(&(&b.eval(&x0).unwrap() * &d.derivative().eval(&x0).unwrap()) / &(&s * &q(2, 1)));
        assert_eq!(&dw + &(&w * &w), r.eval(&x0).unwrap());
    }
    assert!(riccati_verify(&Omega::with_surd(a.clone(), b.clone(), d.clone()), &r));
    assert!(!riccati_verify(&Omega::with_surd(a, b.scale(&q(2, 1)), d), &r));
}

#[test]
fn exponential_integral_has_no_rational_part() {
    let r = RationalFunction::from_parts(p(&[1]), p(&[0, 1]));
    assert_eq!(rational_risch(&r, &RationalFunction::x(), DEFAULT_RISCH_SLACK), None);
    // T = N / x^m with T' + T = 1/x means x N' - m N + x N = x^m
    for m in 0..=4usize {
        let nvars = 7;
        let rows: Vec<Vec<SurdNumber>> = (0..=nvars + 1)
            .map(|row| {
                (0..nvars)
                    .map(|j| {
                        let mut c = SurdNumber::zero();
                        if row == j {
                            c = &c + &q(j as i64 - m as i64, 1);
                        }
                        if row == j + 1 {
                            c = &c + &q(1, 1);
                        }
                        c
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<SurdNumber> = (0..=nvars + 1).map(|row| if row == m { q(1, 1) } else { q(0, 1) }).collect();
        assert!(solve_linear_system(&rows, &rhs, nvars).is_none(), "denominator x^{m}");
    }
}
