//! Exact feasibility solver for strictly positive gradings.
//!
//! Given atom vectors `a_1, ..., a_m` in `Z^d`, finds a rational functional
//! `w` with `w . a_j >= 1` for every atom, or reports that none exists. Such
//! a functional exists iff no nontrivial non-negative combination of atoms
//! vanishes, i.e. iff the monoid has no invertible directions.
//!
//! The search is a phase-one simplex over big rationals with Bland's rule,
//! so it terminates and never suffers rounding. Problem sizes here are tiny
//! (tens of rows and columns).

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

/// A rational weight in lowest terms.
pub type Weight = Ratio<i64>;

fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Finds `w` with `w . a_j >= 1` for all atoms, if one exists.
///
/// Free variables are split as `w = p - q` with `p, q >= 0`; surplus and
/// artificial columns complete the phase-one tableau. Feasible iff the
/// artificial objective reaches zero.
pub fn positive_grading(dim: usize, atoms: &[Vec<i64>]) -> Option<Vec<Weight>> {
    let m = atoms.len();
    if m == 0 {
        return Some(vec![Weight::one(); dim]);
    }
    let cols = 2 * dim + 2 * m;
    // Tableau rows: [p | q | surplus | artificial | rhs].
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); cols + 1];
            for j in 0..dim {
                row[j] = big(atoms[i][j]);
                row[dim + j] = big(-atoms[i][j]);
            }
            row[2 * dim + i] = big(-1);
            row[2 * dim + m + i] = big(1);
            row[cols] = big(1);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * dim + m + i).collect();

    // Objective: minimize the sum of artificial variables. Reduced costs
    // start as the negated column sums of the tableau.
    let mut cost = vec![BigRational::zero(); cols + 1];
    for row in &t {
        for (c, v) in cost.iter_mut().zip(row) {
            *c -= v;
        }
    }
    for c in cost.iter_mut().take(cols).skip(2 * dim + m) {
        *c += BigRational::one();
    }

    // Bland: first column with negative reduced cost.
    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        // Ratio test; ties broken by smallest basis variable (Bland).
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = &t[l][cols] / &t[l][enter];
                        let cand = &t[i][cols] / &t[i][enter];
                        cand < cur || (cand == cur && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let leave = leave?; // objective bounded below, so this always exists
        let pivot = t[leave][enter].clone();
        for v in t[leave].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..m {
            if i != leave && !t[i][enter].is_zero() {
                let factor = t[i][enter].clone();
                let pivot_row = t[leave].clone();
                for (v, pv) in t[i].iter_mut().zip(&pivot_row) {
                    *v -= &factor * pv;
                }
            }
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for (c, tv) in cost.iter_mut().zip(&t[leave]) {
                *c -= &factor * tv;
            }
        }
        basis[leave] = enter;
    }

    // Optimal artificial objective is -cost[rhs]; zero means feasible.
    if !cost[cols].is_zero() {
        return None;
    }

    let mut solution = vec![BigRational::zero(); cols];
    for (i, &b) in basis.iter().enumerate() {
        solution[b] = t[i][cols].clone();
    }
    let grading = (0..dim)
        .map(|j| {
            let v = &solution[j] - &solution[dim + j];
            let numer = i64::try_from(v.numer()).expect("grading numerator exceeds i64");
            let denom = i64::try_from(v.denom()).expect("grading denominator exceeds i64");
            Weight::new(numer, denom)
        })
        .collect();
    Some(grading)
}
