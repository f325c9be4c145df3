//! Phase-1 simplex over exact rationals. Pivoting follows Bland's rule, so
//! the method terminates on degenerate problems.

use super::Rational;
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    /// A point with `A x = b`, `x >= 0`, checked by substitution.
    Feasible(Vec<Rational>),
    Infeasible,
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Feasible(x) => Some(x),
            LpOutcome::Infeasible => None,
        }
    }
}

/// Decides feasibility of `A x = b, x >= 0`.
pub fn lp_feasible(a: &[Vec<Rational>], b: &[Rational], nvars: usize) -> Result<LpOutcome> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("{} constraint rows but {} right-hand sides", a.len(), b.len())));
    }
    if let Some((i, row)) = a.iter().enumerate().find(|(_, r)| r.len() != nvars) {
        return Err(Error::Dimension(format!("row {i} has {} coefficients, expected {nvars}", row.len())));
    }
    let m = a.len();
    if m == 0 {
        return Ok(LpOutcome::Feasible(vec![Rational::zero(); nvars]));
    }
    // Tableau columns: nvars originals, m artificials, rhs.
    let width = nvars + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t = vec![Rational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            t[j] = if flip { -v } else { v.clone() };
        }
        t[nvars + i] = Rational::from_integer(1.into());
        t[width - 1] = if flip { -rhs } else { rhs.clone() };
        tab.push(t);
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();
    // Reduced costs for minimising the sum of artificials.
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..nvars {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }
    loop {
        let Some(enter) = (0..nvars + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][width - 1] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase-1 objective is bounded below by zero, so a leaving row exists.
        let Some((r, _)) = leave else {
            return Err(Error::Internal("unbounded phase-1 problem".into()));
        };
        let piv = tab[r][enter].clone();
        for v in tab[r].iter_mut() {
            *v /= &piv;
        }
        let prow = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&prow) {
                *v -= &f * p;
            }
        }
        basis[r] = enter;
    }
    if !cost[width - 1].is_zero() {
        return Ok(LpOutcome::Infeasible);
    }
    let mut x = vec![Rational::zero(); nvars];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nvars {
            x[bv] = tab[i][width - 1].clone();
        }
    }
    verify_point(a, b, &x)?;
    Ok(LpOutcome::Feasible(x))
}

fn verify_point(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) -> Result<()> {
    if x.iter().any(Signed::is_negative) {
        return Err(Error::Internal("LP point has a negative coordinate".into()));
    }
    for (row, rhs) in a.iter().zip(b) {
        let lhs: Rational = row.iter().zip(x).map(|(c, v)| c * v).sum();
        if lhs != *rhs {
            return Err(Error::Internal("LP point violates a constraint".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        rational(n, 1)
    }

    #[test]
    fn simplex_constraint_is_feasible() {
        let out = lp_feasible(&[vec![r(1), r(1)]], &[r(1)], 2).unwrap();
        let x = out.point().unwrap();
        assert_eq!(&x[0] + &x[1], r(1));
    }

    #[test]
    fn negative_coordinate_forced_is_infeasible() {
        let out = lp_feasible(&[vec![r(1), r(1)], vec![r(1), r(-1)]], &[r(1), r(3)], 2).unwrap();
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn empty_constraints() {
        assert_eq!(lp_feasible(&[], &[], 0).unwrap(), LpOutcome::Feasible(vec![]));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(lp_feasible(&[vec![r(1)]], &[r(1), r(2)], 1).is_err());
        assert!(lp_feasible(&[vec![r(1), r(2)]], &[r(1)], 1).is_err());
    }

    #[test]
    fn redundant_and_degenerate_rows() {
        let a = vec![vec![r(1), r(1), r(0)], vec![r(2), r(2), r(0)], vec![r(0), r(0), r(1)]];
        let out = lp_feasible(&a, &[r(1), r(2), r(0)], 3).unwrap();
        assert!(out.point().is_some());
    }

    proptest! {
        #[test]
        fn returned_points_satisfy_constraints(
            coeffs in proptest::collection::vec(-3i64..4, 12),
            seed in proptest::collection::vec(0i64..3, 4),
            perturb in -1i64..2,
        ) {
            // Rows built from a known nonnegative point are feasible; the
            // perturbation may make them infeasible.
            let a: Vec<Vec<Rational>> = (0..3).map(|i| (0..4).map(|j| r(coeffs[i * 4 + j])).collect()).collect();
            let mut b: Vec<Rational> = a.iter().map(|row| row.iter().zip(&seed).map(|(c, s)| c * r(*s)).sum()).collect();
            b[0] += r(perturb);
            match lp_feasible(&a, &b, 4).unwrap() {
                LpOutcome::Feasible(x) => {
                    for (row, rhs) in a.iter().zip(&b) {
                        let lhs: Rational = row.iter().zip(&x).map(|(c, v)| c * v).sum();
                        prop_assert_eq!(&lhs, rhs);
                    }
                    prop_assert!(x.iter().all(|v| !v.is_negative()));
                }
                LpOutcome::Infeasible => prop_assert!(perturb != 0),
            }
        }
    }
}
