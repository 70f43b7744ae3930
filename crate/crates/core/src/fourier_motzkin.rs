//! Exact Fourier–Motzkin feasibility for homogeneous linear systems.
//!
//! Systems are given by equalities `c·x = 0`, weak inequalities `c·x >= 0`
//! and strict inequalities `c·x > 0` over the rationals. Equalities are
//! substituted away by Gaussian elimination first; the remaining variables
//! are then eliminated one at a time by pairing lower and upper bounds.

use num_rational::BigRational;
use num_traits::Zero;

type Row = Vec<BigRational>;

#[derive(Clone)]
struct Constraint {
    coeffs: Row,
    strict: bool,
}

/// Decides whether a homogeneous system of equalities and (weak/strict)
/// inequalities has a rational solution.
pub fn feasible(eqs: &[Row], weak: &[Row], strict: &[Row]) -> bool {
    let dim = eqs
        .iter()
        .chain(weak)
        .chain(strict)
        .map(|r| r.len())
        .max()
        .unwrap_or(0);
    let pad = |r: &Row| {
        let mut v = r.clone();
        v.resize(dim, BigRational::zero());
        v
    };
    let mut eqs: Vec<Row> = eqs.iter().map(pad).collect();
    let mut cons: Vec<Constraint> = weak
        .iter()
        .map(|r| Constraint {
            coeffs: pad(r),
            strict: false,
        })
        .chain(strict.iter().map(|r| Constraint {
            coeffs: pad(r),
            strict: true,
        }))
        .collect();

    // Substitute equalities away.
    let mut eliminated = vec![false; dim];
    let mut e = 0;
    while e < eqs.len() {
        let Some(k) = (0..dim).find(|&k| !eliminated[k] && !eqs[e][k].is_zero()) else {
            // 0 = 0 row; drop it.
            e += 1;
            continue;
        };
        let pivot = eqs[e].clone();
        let pk = pivot[k].clone();
        let reduce = |row: &mut Row| {
            if row[k].is_zero() {
                return;
            }
            let f = &row[k] / &pk;
            for j in 0..dim {
                let v = &row[j] - &f * &pivot[j];
                row[j] = v;
            }
        };
        for other in e + 1..eqs.len() {
            let mut row = eqs[other].clone();
            reduce(&mut row);
            eqs[other] = row;
        }
        for c in cons.iter_mut() {
            reduce(&mut c.coeffs);
        }
        eliminated[k] = true;
        e += 1;
    }

    // Fourier–Motzkin over the remaining variables.
    for k in 0..dim {
        if eliminated[k] {
            continue;
        }
        let mut lowers: Vec<Constraint> = Vec::new();
        let mut uppers: Vec<Constraint> = Vec::new();
        let mut rest: Vec<Constraint> = Vec::new();
        for c in cons.drain(..) {
            if c.coeffs[k].is_zero() {
                rest.push(c);
            } else if c.coeffs[k] > BigRational::zero() {
                lowers.push(c);
            } else {
                uppers.push(c);
            }
        }
        for lo in &lowers {
            for up in &uppers {
                // lo: a·x >= 0 with a_k > 0; up: b·x >= 0 with b_k < 0.
                // a_k * b + (-b_k) * a eliminates x_k.
                let ak = lo.coeffs[k].clone();
                let mbk = -up.coeffs[k].clone();
                let mut combo = vec![BigRational::zero(); dim];
                for (j, slot) in combo.iter_mut().enumerate() {
                    *slot = &ak * &up.coeffs[j] + &mbk * &lo.coeffs[j];
                }
                rest.push(Constraint {
                    coeffs: combo,
                    strict: lo.strict || up.strict,
                });
            }
        }
        cons = rest;
    }

    // All variables gone: a surviving strict constraint reads 0 > 0.
    !cons.iter().any(|c| c.strict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: &[i64]) -> Row {
        v.iter()
            .map(|&x| BigRational::from_integer(BigInt::from(x)))
            .collect()
    }

    #[test]
    fn strict_alone_is_feasible() {
        assert!(feasible(&[], &[], &[q(&[1])]));
    }

    #[test]
    fn opposing_strict_weak_is_infeasible() {
        // x > 0 and -x >= 0
        assert!(!feasible(&[], &[q(&[-1])], &[q(&[1])]));
    }

    #[test]
    fn equality_substitution() {
        // x = y, x >= 0, y > 0 is feasible; adding -x >= 0 kills it.
        assert!(feasible(&[q(&[1, -1])], &[q(&[1, 0])], &[q(&[0, 1])]));
        assert!(!feasible(
            &[q(&[1, -1])],
            &[q(&[1, 0]), q(&[-1, 0])],
            &[q(&[0, 1])]
        ));
    }

    #[test]
    fn two_dimensional_wedge() {
        // x >= 0, y >= 0, x + y > 0 feasible; x > 0 with x <= -y, y >= 0 not.
        assert!(feasible(&[], &[q(&[1, 0]), q(&[0, 1])], &[q(&[1, 1])]));
        assert!(!feasible(&[], &[q(&[-1, -1]), q(&[0, 1])], &[q(&[1, 0])]));
    }
}
