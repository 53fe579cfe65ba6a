//! Global L-objects (zeta words and finite Euler products) and exact
//! leading-Laurent-term extraction at integer points.

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use super::bernoulli::{zeta_at_integer, ZetaAt};
use super::ZetaError;
use crate::frob::EulerFactor;
use crate::period::PeriodValue;
use crate::ratpoly::RatPoly;

/// Order and first nonzero Laurent coefficient at a point. Positive order
/// means a zero, negative order a pole.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentLeading {
    pub order: i64,
    pub leading: PeriodValue,
}

impl LaurentLeading {
    pub fn unit() -> Self {
        LaurentLeading {
            order: 0,
            leading: PeriodValue::one(),
        }
    }

    pub fn mul(&self, other: &LaurentLeading) -> LaurentLeading {
        LaurentLeading {
            order: self.order + other.order,
            leading: self.leading.mul(&other.leading),
        }
    }

    pub fn pow(&self, e: i64) -> LaurentLeading {
        LaurentLeading {
            order: self.order * e,
            leading: self.leading.pow(e).expect("leading is nonzero"),
        }
    }
}

/// A formal product `prod_a zeta(s + a)^{e_a}` times finitely many explicit
/// Euler factors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct ZetaWord {
    /// Merged (shift, exponent) pairs, exponents nonzero.
    #[serde(default)]
    pub shifts: Vec<(i64, i64)>,
    #[serde(default)]
    pub factors: Vec<EulerFactor>,
}

impl ZetaWord {
    pub fn one() -> Self {
        ZetaWord::default()
    }

    pub fn zeta_shift(a: i64, e: i64) -> Self {
        ZetaWord {
            shifts: vec![(a, e)],
            factors: Vec::new(),
        }
    }

    pub fn from_factors(factors: Vec<EulerFactor>) -> Self {
        ZetaWord {
            shifts: Vec::new(),
            factors,
        }
    }

    /// Merge shifts (adding exponents) and keep factors concatenated.
    pub fn normalized(&self) -> ZetaWord {
        let mut shifts: Vec<(i64, i64)> = Vec::new();
        for &(a, e) in &self.shifts {
            if let Some(s) = shifts.iter_mut().find(|s| s.0 == a) {
                s.1 += e;
            } else {
                shifts.push((a, e));
            }
        }
        shifts.retain(|&(_, e)| e != 0);
        shifts.sort_unstable();
        ZetaWord {
            shifts,
            factors: self.factors.clone(),
        }
    }

    pub fn mul(&self, other: &ZetaWord) -> ZetaWord {
        let mut shifts = self.shifts.clone();
        shifts.extend(other.shifts.iter().copied());
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        ZetaWord { shifts, factors }.normalized()
    }

    /// The combined local factor at a place (p, f) as a reduced rational
    /// function (numerator, denominator) in t, both with constant term 1.
    pub fn local_function(&self, p: u64, f: u32) -> (RatPoly, RatPoly) {
        let mut num = RatPoly::one();
        let mut den = RatPoly::one();
        for fac in &self.factors {
            if fac.p != p || fac.f != f {
                continue;
            }
            // contribution P(t)^{-e}
            if fac.exponent >= 0 {
                den = den.mul(&fac.poly.pow(fac.exponent as u32));
            } else {
                num = num.mul(&fac.poly.pow((-fac.exponent) as u32));
            }
        }
        let g = RatPoly::gcd(&num, &den);
        if let Some(d) = g.degree() {
            if d > 0 {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        // normalize constant terms to 1
        let c = num.coeff(0);
        if !c.is_zero() && !c.is_one() {
            num = num.scale(&c.recip());
            den = den.scale(&c.recip());
        }
        let c = den.coeff(0);
        if !c.is_zero() && !c.is_one() {
            let inv = c.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        (num, den)
    }

    /// Places (p, f) carrying explicit factors.
    pub fn places(&self) -> Vec<(u64, u32)> {
        let mut places: Vec<(u64, u32)> = self.factors.iter().map(|f| (f.p, f.f)).collect();
        places.sort_unstable();
        places.dedup();
        places
    }
}

/// Multiplicity of the root t0 = N^{-s0} in P and the cofactor value:
/// P(t) = (1 - N^{s0} t)^m * Ptilde(t) with Ptilde(t0) != 0.
fn split_vanishing(poly: &RatPoly, n: &BigRational, s0: i64) -> (u32, BigRational) {
    let t0 = if s0 >= 0 {
        n.pow(s0 as i32).recip()
    } else {
        n.pow((-s0) as i32)
    };
    let lin = RatPoly::one_minus_ct(t0.recip());
    let mut m = 0u32;
    let mut p = poly.clone();
    while p.eval(&t0).is_zero() {
        let (q, r) = p.div_rem(&lin);
        assert!(r.is_zero(), "root division must be exact");
        p = q;
        m += 1;
    }
    (m, p.eval(&t0))
}

/// Leading Laurent data of a finite product of Euler factors at s = s0.
/// A factor P(t)^{-e} at norm N contributes order -e*m and leading
/// (f log_p)^{-e*m} Ptilde(t0)^{-e} where m is the vanishing order of P at
/// t0 = N^{-s0}.
pub fn euler_leading(factors: &[EulerFactor], s0: i64) -> Result<LaurentLeading, ZetaError> {
    let mut acc = LaurentLeading::unit();
    for fac in factors {
        if fac.poly.coeff(0) != BigRational::one() {
            return Err(ZetaError::BadFactor(format!(
                "Euler polynomial must have constant term 1, got {}",
                fac.poly
            )));
        }
        let n = fac.norm();
        let (m, value) = split_vanishing(&fac.poly, &n, s0);
        let log_n = PeriodValue::log_prime(fac.p)
            .map_err(|e| ZetaError::BadFactor(e.to_string()))?
            .mul(&PeriodValue::from_int(fac.f as i64));
        let contrib = LaurentLeading {
            order: m as i64,
            leading: log_n
                .pow(m as i64)
                .expect("log is nonzero")
                .mul(&PeriodValue::from_rational(value)),
        }
        .pow(-fac.exponent);
        acc = acc.mul(&contrib);
    }
    Ok(acc)
}

/// Leading Laurent data of a zeta word at s = s0: Bernoulli-exact zeta data
/// per shift, times the explicit Euler factors.
pub fn zetaword_leading(word: &ZetaWord, s0: i64) -> Result<LaurentLeading, ZetaError> {
    let word = word.normalized();
    let mut acc = LaurentLeading::unit();
    for &(a, e) in &word.shifts {
        let one = match zeta_at_integer(s0 + a) {
            ZetaAt::SimplePole => LaurentLeading {
                order: -1,
                leading: PeriodValue::one(),
            },
            ZetaAt::Value(v) => LaurentLeading {
                order: 0,
                leading: v,
            },
            ZetaAt::SimpleZero(deriv) => LaurentLeading {
                order: 1,
                leading: deriv,
            },
        };
        acc = acc.mul(&one.pow(e));
    }
    acc = acc.mul(&euler_leading(&word.factors, s0)?);
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frob::{euler_poly, twist, FrobModule};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn log2() -> PeriodValue {
        PeriodValue::log_prime(2).unwrap()
    }

    #[test]
    fn euler_leading_examples() {
        // (1-t)^{-1} at p=2, s0=0: order -1, leading 1/log_2
        let f = euler_poly(&FrobModule::trivial(2, 1).unwrap());
        let l = euler_leading(&[f], 0).unwrap();
        assert_eq!(l.order, -1);
        assert_eq!(l.leading, log2().inv().unwrap());

        // (1-2t)^{-1} at p=2, s0=0: order 0, leading -1
        let f = euler_poly(&FrobModule::scalar(2, 1, q(2)).unwrap());
        let l = euler_leading(&[f], 0).unwrap();
        assert_eq!(l.order, 0);
        assert_eq!(l.leading, PeriodValue::from_int(-1));

        // [(1-t)(1-2t)]^{-1} at p=2, s0=0: order -1, leading -1/log_2
        let f = euler_poly(&FrobModule::diagonal(2, 1, &[q(1), q(2)]).unwrap());
        let l = euler_leading(&[f], 0).unwrap();
        assert_eq!(l.order, -1);
        assert_eq!(l.leading, log2().inv().unwrap().neg());
    }

    #[test]
    fn euler_leading_respects_residue_degree() {
        // Trivial module over q = 4: the factor (1 - t)^{-1} with
        // t = 4^{-s} has residue 1/log 4 = 1/(2 log_2) at s = 0, and the
        // pushdown to f = 1 must give the same leading data.
        let v = FrobModule::trivial(2, 2).unwrap();
        let l = euler_leading(&[euler_poly(&v)], 0).unwrap();
        assert_eq!(l.order, -1);
        let expected = log2().mul(&PeriodValue::from_int(2)).inv().unwrap();
        assert_eq!(l.leading, expected);
        let pushed = euler_leading(&[euler_poly(&crate::frob::pushdown(&v))], 0).unwrap();
        assert_eq!(pushed, l);
    }

    #[test]
    fn twist_shifts_leading_point() {
        for n in -3i64..=3 {
            let v = FrobModule::diagonal(3, 1, &[q(1), q(3), q(9)]).unwrap();
            for s0 in -2i64..=2 {
                let twisted = euler_leading(&[euler_poly(&twist(&v, n))], s0).unwrap();
                let moved = euler_leading(&[euler_poly(&v)], s0 + n).unwrap();
                assert_eq!(twisted, moved, "twist {n} at s0 {s0}");
            }
        }
    }

    #[test]
    fn zetaword_examples() {
        // zeta(s) at 0: order 0, leading -1/2
        let l = zetaword_leading(&ZetaWord::zeta_shift(0, 1), 0).unwrap();
        assert_eq!(l.order, 0);
        assert_eq!(l.leading, PeriodValue::rational(-1, 2));
        // zeta(s+1) at 0: order -1, leading 1
        let l = zetaword_leading(&ZetaWord::zeta_shift(1, 1), 0).unwrap();
        assert_eq!(l.order, -1);
        assert!(l.leading.is_one());
        // zeta(s-1) at 0: order 0, leading -1/12
        let l = zetaword_leading(&ZetaWord::zeta_shift(-1, 1), 0).unwrap();
        assert_eq!(l.order, 0);
        assert_eq!(l.leading, PeriodValue::rational(-1, 12));
        // zeta(s)^2 at s = -2: double zero with symbolic leading
        let l = zetaword_leading(&ZetaWord::zeta_shift(0, 2), -2).unwrap();
        assert_eq!(l.order, 2);
        assert!(l.leading.has_opaque_symbol());
    }

    #[test]
    fn zetaword_normalization_merges_shifts() {
        let w = ZetaWord {
            shifts: vec![(1, 1), (0, 2), (1, -1)],
            factors: vec![],
        };
        let n = w.normalized();
        assert_eq!(n.shifts, vec![(0, 2)]);
    }
}
