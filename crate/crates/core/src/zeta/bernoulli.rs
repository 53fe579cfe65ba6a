//! Bernoulli numbers and exact Riemann zeta data at integer arguments.

use num::{BigInt, BigRational, One, Zero};

use crate::period::{PeriodValue, SymbolTable};

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Bernoulli numbers with the convention B_1 = -1/2, via the defining
/// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
pub fn bernoulli(n: usize) -> BigRational {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m + 1, j)) * bj;
        }
        b.push(-acc / BigRational::from_integer((m as i64 + 1).into()));
    }
    b[n].clone()
}

/// Exact zeta data at an integer argument.
pub enum ZetaAt {
    /// Simple pole with residue 1 (argument 1).
    SimplePole,
    /// Nonzero value.
    Value(PeriodValue),
    /// Simple zero with leading coefficient zeta'(u) kept symbolic
    /// (negative even arguments).
    SimpleZero(PeriodValue),
}

/// Zeta at an integer: pole at 1 with residue 1; zeta(0) = -1/2;
/// zeta(-n) = -B_{n+1}/(n+1) exactly for odd n >= 1 and a simple zero with
/// symbolic derivative at even -n; zeta(2k) = rational * pi^{2k}; zeta at
/// odd arguments >= 3 stays an opaque symbol.
pub fn zeta_at_integer(u: i64) -> ZetaAt {
    if u == 1 {
        return ZetaAt::SimplePole;
    }
    if u == 0 {
        return ZetaAt::Value(PeriodValue::rational(-1, 2));
    }
    if u < 0 {
        let n = (-u) as usize;
        if n % 2 == 0 {
            // trivial zero; leading coefficient is zeta'(-n)
            let sym = SymbolTable::zetaprime_neg(n as i64).expect("even argument");
            return ZetaAt::SimpleZero(PeriodValue::symbol(sym));
        }
        let v = -bernoulli(n + 1) / BigRational::from_integer((n as i64 + 1).into());
        return ZetaAt::Value(PeriodValue::from_rational(v));
    }
    if u % 2 == 0 {
        // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
        let k = (u / 2) as usize;
        let mut fact = BigRational::one();
        for j in 1..=(2 * k) {
            fact *= BigRational::from_integer((j as i64).into());
        }
        let sign = if k % 2 == 0 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        let two_pow = BigRational::from_integer(BigInt::from(2).pow(2 * k as u32));
        let coeff = sign * bernoulli(2 * k) * two_pow
            / (BigRational::from_integer(2.into()) * fact);
        let value = PeriodValue::from_rational(coeff)
            .mul(&PeriodValue::pi().pow(u).expect("pi nonzero"));
        return ZetaAt::Value(value);
    }
    let sym = SymbolTable::zeta_odd(u).expect("odd argument >= 3");
    ZetaAt::Value(PeriodValue::symbol(sym))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qr(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn bernoulli_table() {
        assert_eq!(bernoulli(0), qr(1, 1));
        assert_eq!(bernoulli(1), qr(-1, 2));
        assert_eq!(bernoulli(2), qr(1, 6));
        assert_eq!(bernoulli(3), qr(0, 1));
        assert_eq!(bernoulli(4), qr(-1, 30));
        assert_eq!(bernoulli(12), qr(-691, 2730));
    }

    #[test]
    fn zeta_values() {
        match zeta_at_integer(0) {
            ZetaAt::Value(v) => assert_eq!(v, PeriodValue::rational(-1, 2)),
            _ => panic!("zeta(0) is a value"),
        }
        match zeta_at_integer(-1) {
            ZetaAt::Value(v) => assert_eq!(v, PeriodValue::rational(-1, 12)),
            _ => panic!(),
        }
        match zeta_at_integer(-3) {
            ZetaAt::Value(v) => assert_eq!(v, PeriodValue::rational(1, 120)),
            _ => panic!(),
        }
        assert!(matches!(zeta_at_integer(1), ZetaAt::SimplePole));
        assert!(matches!(zeta_at_integer(-2), ZetaAt::SimpleZero(_)));
        assert!(matches!(zeta_at_integer(-4), ZetaAt::SimpleZero(_)));
        match zeta_at_integer(2) {
            ZetaAt::Value(v) => {
                let expected = PeriodValue::pi()
                    .pow(2)
                    .unwrap()
                    .mul(&PeriodValue::rational(1, 6));
                assert_eq!(v, expected);
            }
            _ => panic!(),
        }
        match zeta_at_integer(3) {
            ZetaAt::Value(v) => assert!(v.has_opaque_symbol()),
            _ => panic!(),
        }
    }
}
