use num_traits::{One, Zero};

use super::{Polynomial, RationalFunction, SurdNumber};

/// Gaussian elimination over the surd field. Returns one solution with free
/// variables set to zero, or `None` when the system is inconsistent.
pub fn solve_linear_system(rows: &[Vec<SurdNumber>], rhs: &[SurdNumber], nvars: usize) -> Option<Vec<SurdNumber>> {
    let mut m: Vec<Vec<SurdNumber>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r: Vec<SurdNumber> = (0..nvars).map(|j| row.get(j).cloned().unwrap_or_else(SurdNumber::zero)).collect();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..nvars {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for v in &mut m[row][col..=nvars] {
            *v = &*v * &inv;
        }
        let pivot = m[row].clone();
        for (i, line) in m.iter_mut().enumerate() {
            if i == row || line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (v, pv) in line[col..=nvars].iter_mut().zip(&pivot[col..=nvars]) {
                *v -= &f * pv;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[nvars].is_zero()) {
        return None;
    }
    let mut x = vec![SurdNumber::zero(); nvars];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][nvars].clone();
    }
    Some(x)
}

/// Coefficients `l` with `sum l_i * basis_i = target`, if any exist.
pub fn solve_polynomial_identity(basis: &[Polynomial], target: &Polynomial) -> Option<Vec<SurdNumber>> {
    let len = basis.iter().map(|b| b.coeffs().len()).chain([target.coeffs().len()]).max().unwrap_or(0);
    let rows: Vec<Vec<SurdNumber>> = (0..len).map(|k| basis.iter().map(|b| b.coeff(k)).collect()).collect();
    let rhs: Vec<SurdNumber> = (0..len).map(|k| target.coeff(k)).collect();
    solve_linear_system(&rows, &rhs, basis.len())
}

/// A polynomial `N` of degree at most `max_deg` with
/// `sum coeffs[k] * N^(k) = rhs`, if one exists.
pub fn solve_rational_identity(coeffs: &[RationalFunction], rhs: &RationalFunction, max_deg: usize) -> Option<Polynomial> {
    let l = coeffs
        .iter()
        .chain([rhs])
        .fold(Polynomial::one(), |acc, c| acc.lcm(c.den()));
    let op: Vec<Polynomial> = coeffs.iter().map(|c| (c.num() * &l).div_exact(c.den())).collect();
    let op = LinearOperator { coeffs: op };
    let target = (rhs.num() * &l).div_exact(rhs.den());
    let basis: Vec<Polynomial> = (0..=max_deg).map(|i| op.apply(&Polynomial::monomial(SurdNumber::one(), i))).collect();
    solve_polynomial_identity(&basis, &target).map(Polynomial::new)
}

/// A linear differential operator `sum c_k * D^k` with polynomial
/// coefficients, obtained by clearing the denominators of rational ones.
#[derive(Clone, Debug)]
pub struct LinearOperator {
    coeffs: Vec<Polynomial>,
}

impl LinearOperator {
    /// `coeffs[k]` multiplies the `k`-th derivative.
    pub fn from_rational(coeffs: &[RationalFunction]) -> Self {
        let l = coeffs.iter().fold(Polynomial::one(), |acc, c| acc.lcm(c.den()));
        let coeffs = coeffs.iter().map(|c| (c.num() * &l).div_exact(c.den())).collect();
        LinearOperator { coeffs }
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        let mut deriv = p.clone();
        for c in &self.coeffs {
            if !c.is_zero() && !deriv.is_zero() {
                acc = &acc + &(c * &deriv);
            }
            deriv = deriv.derivative();
        }
        acc
    }

    /// A monic polynomial solution of degree exactly `d`, if one exists.
    pub fn solve_monic(&self, d: usize) -> Option<Polynomial> {
        let basis: Vec<Polynomial> = (0..d).map(|i| self.apply(&Polynomial::monomial(SurdNumber::one(), i))).collect();
        let target = -self.apply(&Polynomial::monomial(SurdNumber::one(), d));
        let sol = solve_polynomial_identity(&basis, &target)?;
        let mut coeffs = sol;
        coeffs.push(SurdNumber::one());
        Some(Polynomial::new(coeffs))
    }
}
