//! Dense univariate polynomials over Q, used for Euler factors and zeta
//! numerators/denominators in the variable `t`.

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

/// Coefficients in ascending order; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPoly(Vec<BigRational>);

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        RatPoly(coeffs)
    }

    pub fn zero() -> Self {
        RatPoly(Vec::new())
    }

    pub fn one() -> Self {
        RatPoly(vec![BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    /// 1 - c t
    pub fn one_minus_ct(c: BigRational) -> Self {
        RatPoly::new(vec![BigRational::one(), -c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.0.len().max(other.0.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.0.iter().map(|k| k * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> RatPoly {
        let mut acc = RatPoly::one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: (quotient, remainder).
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.0[dd].clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lc;
            if !c.is_zero() {
                quo[k - dd] = c.clone();
                for j in 0..=dd {
                    let sub = &d.0[j] * &c;
                    rem[k - dd + j] -= sub;
                }
            }
        }
        (RatPoly::new(quo), RatPoly::new(rem))
    }

    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut f, mut g) = (a.clone(), b.clone());
        while !g.is_zero() {
            let (_, r) = f.div_rem(&g);
            f = g;
            g = r;
        }
        if let Some(d) = f.degree() {
            let lc = f.0[d].clone();
            f = f.scale(&lc.recip());
        }
        f
    }

    /// Substitute t -> t^k.
    pub fn compose_t_pow(&self, k: usize) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); (self.0.len() - 1) * k + 1];
        for (i, c) in self.0.iter().enumerate() {
            out[i * k] = c.clone();
        }
        RatPoly::new(out)
    }

    /// Coefficient-reversal to a fixed degree n: t^n * p(1/t).
    pub fn reverse_to_degree(&self, n: usize) -> RatPoly {
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, c) in self.0.iter().enumerate() {
            assert!(i <= n, "degree exceeds reversal bound");
            out[n - i] = c.clone();
        }
        RatPoly::new(out)
    }
}

impl Serialize for RatPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RatPoly::new(coeffs))
    }
}

impl std::fmt::Display for RatPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if k == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> RatPoly {
        RatPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    #[test]
    fn div_rem_exact_and_remainder() {
        let a = p(&[1, -3, 2]); // (1-t)(1-2t)
        let (q, r) = a.div_rem(&p(&[1, -1]));
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, -2]));
        let (_, r2) = a.div_rem(&p(&[1, 1]));
        assert!(!r2.is_zero());
    }

    #[test]
    fn reversal_and_composition() {
        let a = p(&[1, 2, 5]);
        assert_eq!(a.reverse_to_degree(2), p(&[5, 2, 1]));
        assert_eq!(a.compose_t_pow(2), p(&[1, 0, 2, 0, 5]));
    }

    #[test]
    fn gcd_monic() {
        let a = p(&[1, -1]).mul(&p(&[1, -2]));
        let b = p(&[1, -1]).mul(&p(&[2, 3]));
        let g = RatPoly::gcd(&a, &b);
        // monic form of (1 - t) is (t - 1)
        assert_eq!(g, p(&[-1, 1]));
    }
}
