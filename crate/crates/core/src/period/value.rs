//! Canonical elements of the period field `Q(symbols)(i)`.

use std::fmt;

use num::{BigRational, One};
#[cfg(test)]
use num::Zero;
use serde::{Deserialize, Serialize};

use super::poly::{poly_to_string, Poly};
use super::symbols::{SymbolId, SymbolTable};
use super::PeriodError;

/// An element `(re + im*i) / den` of the period field, in canonical form:
/// `den` is i-free and monic, the fraction is reduced, and `i^2 = -1` has
/// been applied. Values are immutable; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodValue {
    re: Poly,
    im: Poly,
    den: Poly,
}

impl PeriodValue {
    fn make(re: Poly, im: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if re.is_zero() && im.is_zero() {
            return PeriodValue {
                re: Poly::zero(),
                im: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&Poly::gcd(&re, &im), &den);
        let (mut re, mut im, mut den) = if g.is_constant() {
            (re, im, den)
        } else {
            (
                re.div_exact(&g).unwrap(),
                im.div_exact(&g).unwrap(),
                den.div_exact(&g).unwrap(),
            )
        };
        let lc = den.leading().unwrap().1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            re = re.scale(&inv);
            im = im.scale(&inv);
            den = den.scale(&inv);
        }
        PeriodValue { re, im, den }
    }

    pub fn zero() -> Self {
        PeriodValue {
            re: Poly::zero(),
            im: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        PeriodValue::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        PeriodValue {
            re: Poly::constant(q),
            im: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        PeriodValue::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0);
        PeriodValue::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn symbol(id: SymbolId) -> Self {
        PeriodValue {
            re: Poly::symbol(id),
            im: Poly::zero(),
            den: Poly::one(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        PeriodValue {
            re: Poly::zero(),
            im: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn pi() -> Self {
        PeriodValue::symbol(SymbolTable::pi())
    }

    pub fn log_prime(p: u64) -> Result<Self, PeriodError> {
        Ok(PeriodValue::symbol(SymbolTable::log_prime(p)?))
    }

    /// `(2*pi*i)^n`.
    pub fn two_pi_i_pow(n: i64) -> Self {
        let base = PeriodValue::from_int(2).mul(&PeriodValue::pi()).mul(&PeriodValue::i());
        base.pow(n).expect("2*pi*i is nonzero")
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.den.is_one() && self.re == Poly::one()
    }

    pub fn add(&self, other: &PeriodValue) -> PeriodValue {
        let re = self.re.mul(&other.den).add(&other.re.mul(&self.den));
        let im = self.im.mul(&other.den).add(&other.im.mul(&self.den));
        PeriodValue::make(re, im, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &PeriodValue) -> PeriodValue {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PeriodValue {
        PeriodValue {
            re: self.re.neg(),
            im: self.im.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &PeriodValue) -> PeriodValue {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        PeriodValue::make(re, im, self.den.mul(&other.den))
    }

    pub fn div(&self, other: &PeriodValue) -> Result<PeriodValue, PeriodError> {
        if other.is_zero() {
            return Err(PeriodError::DivisionByZero);
        }
        // 1/((c + d i)/e) = e (c - d i) / (c^2 + d^2)
        let norm = other.re.mul(&other.re).add(&other.im.mul(&other.im));
        let re = self.re.mul(&other.re).add(&self.im.mul(&other.im));
        let im = self.im.mul(&other.re).sub(&self.re.mul(&other.im));
        Ok(PeriodValue::make(
            re.mul(&other.den),
            im.mul(&other.den),
            self.den.mul(&norm),
        ))
    }

    pub fn inv(&self) -> Result<PeriodValue, PeriodError> {
        PeriodValue::one().div(self)
    }

    pub fn pow(&self, n: i64) -> Result<PeriodValue, PeriodError> {
        if n == 0 {
            return Ok(PeriodValue::one());
        }
        if self.is_zero() {
            if n < 0 {
                return Err(PeriodError::ZeroToNegativePower);
            }
            return Ok(PeriodValue::zero());
        }
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = PeriodValue::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The conjugation involution: symbol-wise conjugation, i -> -i.
    pub fn conj(&self) -> PeriodValue {
        PeriodValue::make(self.re.conj(), self.im.conj().neg(), self.den.conj())
    }

    /// x is real iff conj(x) = x.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.im.is_zero() || !self.den.is_one() {
            return None;
        }
        self.re.as_constant()
    }

    /// Decidable congruence modulo Q^x: returns q with self = q * other when
    /// the quotient is a rational constant; q = 0 exactly when self = 0.
    pub fn rational_ratio(&self, other: &PeriodValue) -> Result<Option<BigRational>, PeriodError> {
        Ok(self.div(other)?.as_rational())
    }

    /// Symbols occurring anywhere in the canonical form.
    pub fn symbols(&self) -> Vec<SymbolId> {
        let mut ids: Vec<SymbolId> = self
            .re
            .symbol_ids()
            .into_iter()
            .chain(self.im.symbol_ids())
            .chain(self.den.symbol_ids())
            .collect();
        ids.sort();
        ids.dedup();
        ids
    }

    /// True when the value involves a symbol of unknown rationality status.
    pub fn has_opaque_symbol(&self) -> bool {
        self.symbols().into_iter().any(SymbolTable::is_opaque)
    }

    /// Non-normative decimal approximation; None when a symbol has no
    /// assigned numeric value (real part only makes sense for real values).
    pub fn approx_f64(&self, assign: &dyn Fn(SymbolId) -> Option<f64>) -> Option<(f64, f64)> {
        let re = self.re.eval_f64(assign)?;
        let im = self.im.eval_f64(assign)?;
        let den = self.den.eval_f64(assign)?;
        if den == 0.0 {
            return None;
        }
        Some((re / den, im / den))
    }
}

impl fmt::Display for PeriodValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let re = poly_to_string(&self.re, false);
        let im = poly_to_string(&self.im, true);
        let num = match (re.is_empty(), im.is_empty()) {
            (false, true) => re,
            (true, false) => im,
            (false, false) => {
                if im.starts_with('-') {
                    format!("{} - {}", re, &im[1..])
                } else {
                    format!("{re} + {im}")
                }
            }
            (true, true) => unreachable!(),
        };
        if self.den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({})/({})", num, poly_to_string(&self.den, false))
        }
    }
}

impl Serialize for PeriodValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PeriodValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_period(&s).map_err(serde::de::Error::custom)
    }
}
