//! Archimedean Gamma factors and their exact pole/leading data at integers.
//!
//! Gamma_R(s) = pi^{-s/2} Gamma(s/2) and Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s).
//! At integer arguments every value and residue is a rational times an
//! integer power of pi, so the leading data stays in the period field.

use num::{BigInt, BigRational, One};
use serde::{Deserialize, Serialize};

use super::HodgeError;
use crate::period::PeriodValue;
use crate::zeta::LaurentLeading;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GammaKind {
    GammaR,
    GammaC,
}

/// A finite product of shifted Gamma factors: entries (kind, a, e) mean
/// Gamma_kind(s + a)^e, merged with nonzero exponents.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct GammaProduct {
    pub entries: Vec<(GammaKind, i64, i64)>,
}

impl GammaProduct {
    pub fn one() -> Self {
        GammaProduct::default()
    }

    pub fn push(&mut self, kind: GammaKind, shift: i64, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(e) = self
            .entries
            .iter_mut()
            .find(|(k, a, _)| *k == kind && *a == shift)
        {
            e.2 += exp;
        } else {
            self.entries.push((kind, shift, exp));
        }
        self.entries.retain(|&(_, _, e)| e != 0);
        self.entries.sort_unstable();
    }

    pub fn mul(&self, other: &GammaProduct) -> GammaProduct {
        let mut out = self.clone();
        for &(k, a, e) in &other.entries {
            out.push(k, a, e);
        }
        out
    }
}

impl std::fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(k, a, e) in &self.entries {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            let name = match k {
                GammaKind::GammaR => "Gamma_R",
                GammaKind::GammaC => "Gamma_C",
            };
            let arg = match a.cmp(&0) {
                std::cmp::Ordering::Equal => "s".to_string(),
                std::cmp::Ordering::Greater => format!("s + {a}"),
                std::cmp::Ordering::Less => format!("s - {}", -a),
            };
            if e == 1 {
                write!(f, "{name}({arg})")?;
            } else {
                write!(f, "{name}({arg})^{e}")?;
            }
        }
        Ok(())
    }
}

/// One pure layer of Hodge data for the archimedean recipe.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeLayer {
    pub weight: i64,
    /// (p, q, h^{pq}) with p + q = weight.
    pub hodge_numbers: Vec<(i64, i64, usize)>,
    /// Dimensions of the (+1, -1) eigenspaces of Finf on the (p,p) part.
    pub finf_pp: Option<(usize, usize)>,
}

/// The archimedean factor of a list of pure layers:
/// prod_{p<q} Gamma_C(s-p)^{h^{pq}}
/// prod_p Gamma_R(s-p)^{h^{p,+(-1)^p}} Gamma_R(s-p+1)^{h^{p,-(-1)^p}}.
pub fn arch_factor(layers: &[HodgeLayer]) -> Result<GammaProduct, HodgeError> {
    let mut out = GammaProduct::one();
    for layer in layers {
        let mut pp_total = 0usize;
        for &(p, q, h) in &layer.hodge_numbers {
            if p + q != layer.weight {
                return Err(HodgeError::MalformedHodgeNumbers(format!(
                    "h^({p},{q}) does not match weight {}",
                    layer.weight
                )));
            }
            let sym = layer
                .hodge_numbers
                .iter()
                .find(|&&(p2, q2, _)| p2 == q && q2 == p)
                .map(|&(_, _, n)| n)
                .unwrap_or(0);
            if sym != h {
                return Err(HodgeError::MalformedHodgeNumbers(format!(
                    "h^({p},{q}) = {h} but h^({q},{p}) = {sym}"
                )));
            }
            if p < q {
                out.push(GammaKind::GammaC, -p, h as i64);
            }
            if p == q {
                pp_total += h;
            }
        }
        if pp_total > 0 {
            let (plus, minus) = layer.finf_pp.ok_or_else(|| {
                HodgeError::MalformedHodgeNumbers(
                    "layer has a (p,p) part but no Finf eigenvalue dimensions".into(),
                )
            })?;
            if plus + minus != pp_total {
                return Err(HodgeError::MalformedHodgeNumbers(format!(
                    "Finf eigenvalue dims {plus}+{minus} do not sum to h^(p,p) = {pp_total}"
                )));
            }
            let p = layer.weight / 2;
            if layer.weight % 2 != 0 {
                return Err(HodgeError::MalformedHodgeNumbers(
                    "(p,p) part requires an even weight".into(),
                ));
            }
            // the invariant slot pairs with the eigenvalue (+1)^p sign
            let (inv_dim, anti_dim) = if p.rem_euclid(2) == 0 {
                (plus, minus)
            } else {
                (minus, plus)
            };
            out.push(GammaKind::GammaR, -p, inv_dim as i64);
            out.push(GammaKind::GammaR, -p + 1, anti_dim as i64);
        }
    }
    Ok(out)
}

fn factorial(n: u64) -> BigRational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// Exact order and leading coefficient of Gamma_R(s) at the integer u.
fn gamma_r_at(u: i64) -> LaurentLeading {
    if u > 0 {
        // Gamma_R(2k) = (k-1)!/pi^k, Gamma_R(2k+1) = (2k)!/(4^k k! pi^k)
        let (coeff, pi_pow) = if u % 2 == 0 {
            let k = (u / 2) as u64;
            (factorial(k - 1), -(k as i64))
        } else {
            let k = ((u - 1) / 2) as u64;
            let four_k = BigRational::from_integer(BigInt::from(4).pow(k as u32));
            (factorial(2 * k) / (four_k * factorial(k)), -(k as i64))
        };
        LaurentLeading {
            order: 0,
            leading: PeriodValue::from_rational(coeff)
                .mul(&PeriodValue::pi().pow(pi_pow).unwrap()),
        }
    } else if u % 2 == 0 {
        // simple pole at u = -2m: residue of Gamma(s/2) is 2(-1)^m/m!,
        // times pi^{m}
        let m = (-u / 2) as u64;
        let sign = if m % 2 == 0 { 2 } else { -2 };
        let coeff = BigRational::from_integer(sign.into()) / factorial(m);
        LaurentLeading {
            order: -1,
            leading: PeriodValue::from_rational(coeff)
                .mul(&PeriodValue::pi().pow(m as i64).unwrap()),
        }
    } else {
        // finite: u = -(2m+1): pi^{m+1} (-4)^{m+1} (m+1)! / (2m+2)!
        let m = ((-u - 1) / 2) as u64;
        let n = m + 1;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let four_n = BigRational::from_integer(BigInt::from(4).pow(n as u32) * BigInt::from(sign));
        let coeff = four_n * factorial(n) / factorial(2 * n);
        LaurentLeading {
            order: 0,
            leading: PeriodValue::from_rational(coeff)
                .mul(&PeriodValue::pi().pow(n as i64).unwrap()),
        }
    }
}

/// Exact order and leading coefficient of Gamma_C(s) at the integer u.
fn gamma_c_at(u: i64) -> LaurentLeading {
    if u > 0 {
        // 2 (2 pi)^{-u} (u-1)!
        let coeff = BigRational::from_integer(2.into()) * factorial(u as u64 - 1)
            / BigRational::from_integer(BigInt::from(2).pow(u as u32));
        LaurentLeading {
            order: 0,
            leading: PeriodValue::from_rational(coeff)
                .mul(&PeriodValue::pi().pow(-u).unwrap()),
        }
    } else {
        // simple pole at u = -m with residue (-1)^m/m!; factor 2 (2 pi)^m
        let m = (-u) as u64;
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let coeff = BigRational::from_integer(BigInt::from(2).pow(m as u32 + 1) * BigInt::from(sign))
            / factorial(m);
        LaurentLeading {
            order: -1,
            leading: PeriodValue::from_rational(coeff)
                .mul(&PeriodValue::pi().pow(m as i64).unwrap()),
        }
    }
}

/// Exact leading Laurent data of a Gamma product at an integer point.
pub fn gamma_leading(g: &GammaProduct, s0: i64) -> LaurentLeading {
    let mut acc = LaurentLeading::unit();
    for &(kind, a, e) in &g.entries {
        let one = match kind {
            GammaKind::GammaR => gamma_r_at(s0 + a),
            GammaKind::GammaC => gamma_c_at(s0 + a),
        };
        acc = acc.mul(&one.pow(e));
    }
    acc
}
