use kovacic::algebra::{partial_fractions, rat, Polynomial, RationalFunction, SurdNumber};
use kovacic::closedform::{integrate_rational, ode_verify, rational_risch, DEFAULT_RISCH_SLACK};
use kovacic::{solve, OdeInput, SolveStatus, SolverConfig};
use num_traits::{One, Zero};
use proptest::prelude::*;

const RADICANDS: [i64; 5] = [2, 3, -1, -3, 6];

fn surd() -> impl Strategy<Value = SurdNumber> {
    (-6i64..=6, 1i64..=4, prop::collection::vec((0usize..RADICANDS.len(), -4i64..=4, 1i64..=3), 0..3)).prop_map(
        |(n, d, terms)| {
            let mut acc = SurdNumber::frac(n, d);
            for (i, c, cd) in terms {
                acc += &SurdNumber::sqrt_of(&rat(RADICANDS[i], 1)) * &SurdNumber::frac(c, cd);
            }
            acc
        },
    )
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, 1i64..=3), 0..=max_len).prop_map(|c| {
        Polynomial::from_rationals(&c.into_iter().map(|(n, d)| rat(n, d)).collect::<Vec<_>>())
    })
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

/// Product of `(x - c)^k` over distinct small integer poles.
fn pole_product() -> impl Strategy<Value = Polynomial> {
    prop::collection::btree_map(-3i64..=3, 1u32..=3, 0..=3).prop_map(|m| {
        m.into_iter().fold(Polynomial::one(), |acc, (c, k)| &acc * &Polynomial::linear(&rat(c, 1)).pow(k))
    })
}

fn rational_fn() -> impl Strategy<Value = RationalFunction> {
    (poly(4), pole_product()).prop_map(|(n, d)| RationalFunction::from_parts(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn surd_ring_laws(a in surd(), b in surd(), c in surd()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn surd_inverse(a in surd()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn polynomial_divmod(a in poly(6), b in nonzero_poly(4)) {
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.deg() < b.deg());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        prop_assert!(g.divides(&ac) && g.divides(&bc) && c.divides(&g));
    }

    #[test]
    fn partial_fractions_recombine(f in rational_fn()) {
        prop_assert_eq!(partial_fractions(&f).unwrap().recombine(), f);
    }

    #[test]
    fn antiderivative_round_trip(f in rational_fn()) {
        let l = integrate_rational(&f).unwrap();
        prop_assert_eq!(l.derivative(), f);
    }

    #[test]
    fn risch_recovers_constructed_integrands(t in rational_fn(), g in poly(3)) {
        let gp = g.derivative();
        prop_assume!(!gp.is_zero());
        let gf = RationalFunction::from_poly(g);
        let r = &t.derivative() + &(&RationalFunction::from_poly(gp) * &t);
        let found = rational_risch(&r, &gf, DEFAULT_RISCH_SLACK);
        prop_assert!(found.is_some());
        let found = found.unwrap();
        prop_assert_eq!(&found.derivative() + &(&gf.derivative() * &found), r);
    }

    #[test]
    fn risch_success_implies_identity(r in rational_fn(), g in rational_fn()) {
        prop_assume!(!g.derivative().is_zero());
        if let Some(t) = rational_risch(&r, &g, DEFAULT_RISCH_SLACK) {
            prop_assert_eq!(&t.derivative() + &(&g.derivative() * &t), r);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Equations built around `y = p e^q` are solved and the result satisfies
    /// the Riccati form of the equation.
    #[test]
    fn constructed_equations_are_solved(
        roots in prop::collection::btree_map(-2i64..=2, 1u32..=2, 0..=2),
        q in prop::collection::vec(-2i64..=2, 0..=3),
        b in prop::collection::vec(-2i64..=2, 0..=2),
    ) {
        let p = roots.iter().fold(Polynomial::one(), |acc, (c, k)| &acc * &Polynomial::linear(&rat(*c, 1)).pow(*k));
        let q = Polynomial::from_ints(&q);
        let w = &RationalFunction::from_parts(p.derivative(), p) + &RationalFunction::from_poly(q.derivative());
        let b = RationalFunction::from_poly(Polynomial::from_ints(&b));
        let c = -(&(&(&w.derivative() + &(&w * &w)) + &(&b * &w)));
        let ode = OdeInput::new(RationalFunction::one(), b, c).unwrap();
        let rep = solve(&ode, &SolverConfig::default());
        prop_assert_eq!(rep.status, SolveStatus::Solved);
        prop_assert!(rep.verified);
        prop_assert!(rep.cases_possible.possible.contains(&rep.case_used.unwrap()));
        let w1 = rep.y1.unwrap().log_derivative().unwrap();
        prop_assert!(ode_verify(&w1, &ode));
    }
}
