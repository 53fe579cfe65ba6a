//! Rational reconstruction of a zeta function from point counts via the
//! exponential trace-formula series and a Pade solve over Q.

use num::{BigRational, One, Zero};

use super::ZetaError;
use crate::ratpoly::RatPoly;

/// A reduced rational function Z(t) = num/den with num(0) = den(0) = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaFunction {
    pub num: RatPoly,
    pub den: RatPoly,
}

impl std::fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl ZetaFunction {
    /// Power series of t Z'(t)/Z(t) = sum_k N_k t^k to the given order;
    /// entry k-1 is N_k.
    pub fn counts(&self, order: usize) -> Vec<BigRational> {
        let deriv = |p: &RatPoly| -> RatPoly {
            RatPoly::new(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c * BigRational::from_integer((k as i64).into()))
                    .collect(),
            )
        };
        // t (num' den - num den') / (num den)
        let n = self.num.mul(&self.den);
        let d = deriv(&self.num).mul(&self.den).sub(&self.num.mul(&deriv(&self.den)));
        // series division: (t * d) / n up to `order`
        let mut series = vec![BigRational::zero(); order + 1];
        let mut rem: Vec<BigRational> = (0..=order).map(|k| if k >= 1 { d.coeff(k - 1) } else { BigRational::zero() }).collect();
        let n0 = n.coeff(0);
        for k in 0..=order {
            let c = &rem[k] / &n0;
            series[k] = c.clone();
            for j in k..=order {
                let sub = &c * n.coeff(j - k);
                rem[j] -= sub;
            }
        }
        series[1..].to_vec()
    }
}

/// Exponential of a series with zero constant term, to the given order.
fn exp_series(s: &[BigRational], order: usize) -> Vec<BigRational> {
    // z' = s' z with z_0 = 1: k z_k = sum_{j=1..k} j s_j z_{k-j}
    let mut z = vec![BigRational::zero(); order + 1];
    z[0] = BigRational::one();
    for k in 1..=order {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            let sj = s.get(j).cloned().unwrap_or_else(BigRational::zero);
            acc += BigRational::from_integer((j as i64).into()) * sj * &z[k - j];
        }
        z[k] = acc / BigRational::from_integer((k as i64).into());
    }
    z
}

/// Reconstruct Z(t) = N(t)/D(t) from counts N_1..N_m with deg N <= deg_num,
/// deg D <= deg_den and N(0) = D(0) = 1, such that
/// exp(sum N_k t^k / k) = Z(t) to order m. Requires m >= deg_num + deg_den + 1
/// so at least one surplus count validates the result.
pub fn zeta_from_counts(
    counts: &[BigRational],
    deg_num: usize,
    deg_den: usize,
) -> Result<ZetaFunction, ZetaError> {
    let m = counts.len();
    if m < deg_num + deg_den + 1 {
        return Err(ZetaError::NotEnoughCounts {
            have: m,
            need: deg_num + deg_den + 1,
        });
    }
    // z = exp(sum N_k t^k / k) mod t^{m+1}
    let mut s = vec![BigRational::zero(); m + 1];
    for (k, c) in counts.iter().enumerate() {
        s[k + 1] = c / BigRational::from_integer((k as i64 + 1).into());
    }
    let z = exp_series(&s, m);

    // Solve for D = 1 + d_1 t + ... + d_{deg_den} t^{deg_den} from the
    // coefficient equations of z*D in degrees deg_num+1 .. deg_num+deg_den,
    // i.e. sum_{i=0..deg_den} z_{j-i} d_i = 0 (d_0 = 1).
    let rows = deg_den;
    let mut aug: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let j = deg_num + 1 + r;
        let mut row: Vec<BigRational> = (1..=deg_den)
            .map(|i| {
                if j >= i {
                    z[j - i].clone()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        row.push(-z[j].clone());
        aug.push(row);
    }
    // Gaussian elimination allowing an underdetermined system; free
    // variables are set to zero. Inconsistency means no rational function
    // of the requested shape matches.
    let cols = deg_den;
    let mut pivot_of_col = vec![None; cols];
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !aug[r][c].is_zero()) else {
            continue;
        };
        aug.swap(p, rank);
        let inv = aug[rank][c].clone().recip();
        for x in aug[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r == rank || aug[r][c].is_zero() {
                continue;
            }
            let f = aug[r][c].clone();
            for j in 0..=cols {
                let sub = &f * &aug[rank][j];
                aug[r][j] -= sub;
            }
        }
        pivot_of_col[c] = Some(rank);
        rank += 1;
    }
    for r in rank..rows {
        if !aug[r][cols].is_zero() {
            return Err(ZetaError::Inconsistent);
        }
    }
    let mut d_coeffs = vec![BigRational::one()];
    for c in 0..cols {
        match pivot_of_col[c] {
            Some(r) => d_coeffs.push(aug[r][cols].clone()),
            None => d_coeffs.push(BigRational::zero()),
        }
    }
    let den = RatPoly::new(d_coeffs);

    // Numerator coefficients from the product.
    let mut n_coeffs = vec![BigRational::one()];
    for j in 1..=deg_num {
        let mut acc = BigRational::zero();
        for i in 0..=j.min(deg_den) {
            acc += &z[j - i] * den.coeff(i);
        }
        n_coeffs.push(acc);
    }
    let num = RatPoly::new(n_coeffs);

    // Validate every count, including the surplus ones: z * den = num to
    // order m.
    for j in 0..=m {
        let mut acc = BigRational::zero();
        for i in 0..=j.min(deg_den) {
            acc += &z[j - i] * den.coeff(i);
        }
        if acc != num.coeff(j) {
            return Err(ZetaError::ValidationFailed { at: j });
        }
    }

    // Reduce a possible common factor.
    let g = RatPoly::gcd(&num, &den);
    let (num, den) = if g.degree().unwrap_or(0) > 0 {
        (num.div_rem(&g).0, den.div_rem(&g).0)
    } else {
        (num, den)
    };
    let scale = num.coeff(0);
    let num = num.scale(&scale.recip());
    let den = den.scale(&scale.recip());
    debug_assert!(den.coeff(0).is_one());
    Ok(ZetaFunction { num, den })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn projective_line_over_f2() {
        let counts = vec![q(3), q(5), q(9), q(17)];
        let z = zeta_from_counts(&counts, 0, 2).unwrap();
        assert_eq!(z.num, poly(&[1]));
        assert_eq!(z.den, poly(&[1, -3, 2])); // (1-t)(1-2t)
    }

    #[test]
    fn single_point() {
        let counts = vec![q(1), q(1), q(1)];
        let z = zeta_from_counts(&counts, 0, 1).unwrap();
        assert_eq!(z.den, poly(&[1, -1]));
        assert_eq!(z.num, poly(&[1]));
    }

    #[test]
    fn projective_plane_over_f3() {
        let counts: Vec<BigRational> =
            (1..=5).map(|k| q(1) + q(3).pow(k) + q(9).pow(k)).collect();
        let z = zeta_from_counts(&counts, 0, 3).unwrap();
        // (1-t)(1-3t)(1-9t)
        let expected = poly(&[1, -1]).mul(&poly(&[1, -3])).mul(&poly(&[1, -9]));
        assert_eq!(z.den, expected.scale(&expected.coeff(0).recip()));
        assert_eq!(z.num, poly(&[1]));
    }

    #[test]
    fn surplus_validation_catches_corruption() {
        let mut counts = vec![q(3), q(5), q(9), q(17)];
        counts[3] = q(18);
        assert!(matches!(
            zeta_from_counts(&counts, 0, 2),
            Err(ZetaError::ValidationFailed { .. })
        ));
        // no rational function of degree (0, 1) matches P^1 counts
        let counts = vec![q(3), q(5), q(9)];
        assert!(matches!(
            zeta_from_counts(&counts, 0, 1),
            Err(ZetaError::ValidationFailed { .. }) | Err(ZetaError::Inconsistent)
        ));
        assert!(matches!(
            zeta_from_counts(&[q(3)], 0, 2),
            Err(ZetaError::NotEnoughCounts { .. })
        ));
    }

    #[test]
    fn counts_round_trip() {
        let z = ZetaFunction {
            num: poly(&[1, 2, 5]),
            den: poly(&[1, -1]).mul(&poly(&[1, -5])),
        };
        let counts = z.counts(6);
        let z2 = zeta_from_counts(&counts, 2, 2).unwrap();
        assert_eq!(z2, z);
    }
}
