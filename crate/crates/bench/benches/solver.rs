use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kovacic::algebra::{partial_fractions, rat, Polynomial};
use kovacic::closedform::integrate_rational;
use kovacic::normalize::{necessary_cases, pole_analysis, to_normal_form};
use kovacic::series::laurent_coefficients;
use kovacic::{solve, OdeInput, RationalFunction, SolverConfig};

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn ode(a: Polynomial, b: Polynomial, c: Polynomial) -> OdeInput {
    OdeInput::new(a.into(), b.into(), c.into()).unwrap()
}

fn equations() -> Vec<(&'static str, OdeInput, SolverConfig)> {
    let forced = |case, n| SolverConfig { forced_case: Some(case), forced_n: n, ..SolverConfig::default() };
    vec![
        ("case1_d1", ode(p(&[1, 2]), p(&[-2]), p(&[-3, -2])), SolverConfig::default()),
        ("case1_order4_pole", ode(&p(&[0, 0, 1]) * &p(&[1, -2, 1]), p(&[0, -3, -1]), p(&[4, 1])), SolverConfig::default()),
        ("case1_constant", ode(p(&[1]), p(&[1]), p(&[1])), SolverConfig::default()),
        ("case2_surd", ode(p(&[0, 0, 2]), p(&[0, -1]), p(&[1, 1])), SolverConfig::default()),
        ("case3_n4", ode(&p(&[0, 0, 1]) * &p(&[1, 1]), p(&[0, 1, 2]), p(&[-4, -6])), forced(3, Some(4))),
        ("no_solution", ode(p(&[0, 0, 0, 0, 0, 0, 1]), p(&[0]), p(&[-1])), SolverConfig::default()),
    ]
}

fn bench_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    for (name, eq, cfg) in equations() {
        group.bench_function(name, |b| b.iter(|| solve(black_box(&eq), &cfg)));
    }
    group.finish();
}

fn bench_analysis(c: &mut Criterion) {
    let eq = ode(&p(&[0, 0, 1]) * &p(&[1, -2, 1]), p(&[0, -3, -1]), p(&[4, 1]));
    c.bench_function("normal_form_and_cases", |b| {
        b.iter(|| {
            let nf = to_normal_form(black_box(&eq));
            necessary_cases(&pole_analysis(&nf.r).unwrap())
        })
    });
}

fn bench_algebra(c: &mut Criterion) {
    let den = &(&p(&[0, 1]).pow(3) * &p(&[-1, 1]).pow(4)) * &p(&[2, 1]).pow(2);
    let f = RationalFunction::from_parts(p(&[3, -1, 4, 1, -5, 9]), den);
    c.bench_function("partial_fractions", |b| b.iter(|| partial_fractions(black_box(&f)).unwrap()));
    c.bench_function("laurent_coefficients", |b| b.iter(|| laurent_coefficients(black_box(&f), &rat(1, 1), 4).unwrap()));
    c.bench_function("integrate_rational", |b| b.iter(|| integrate_rational(black_box(&f)).unwrap()));
}

criterion_group!(benches, bench_solve, bench_analysis, bench_algebra);
criterion_main!(benches);
