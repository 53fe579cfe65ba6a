//! Non-normative decimal approximations of period symbols.

use mlv_core::period::{PeriodValue, SymbolId, SymbolTable};

/// Numeric zeta(k) for k >= 2 by direct summation with an integral tail.
fn zeta_f64(k: i64) -> f64 {
    let n = 100_000u64;
    let mut acc = 0.0f64;
    for j in 1..=n {
        acc += (j as f64).powi(-(k as i32));
    }
    // tail: integral_n^inf x^{-k} dx = n^{1-k}/(k-1)
    acc + (n as f64).powi(1 - k as i32) / (k as f64 - 1.0)
}

fn symbol_value(id: SymbolId) -> Option<f64> {
    let name = SymbolTable::name(id);
    if name == "pi" {
        return Some(std::f64::consts::PI);
    }
    if let Some(p) = name.strip_prefix("log_").and_then(|s| s.parse::<u64>().ok()) {
        return Some((p as f64).ln());
    }
    if let Some(k) = name.strip_prefix("zeta_odd_").and_then(|s| s.parse::<i64>().ok()) {
        return Some(zeta_f64(k));
    }
    if let Some(n) = name
        .strip_prefix("zetaprime_neg_")
        .and_then(|s| s.parse::<i64>().ok())
    {
        // zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2^{2k+1} pi^{2k})
        let k = n / 2;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let fact: f64 = (1..=n).map(|j| j as f64).product();
        let val = sign * fact * zeta_f64(n + 1)
            / (2f64.powi(n as i32 + 1) * std::f64::consts::PI.powi(n as i32));
        return Some(val);
    }
    None
}

/// Decimal hint for a period value, when every symbol has a known value.
pub fn hint(v: &PeriodValue) -> Option<String> {
    let (re, im) = v.approx_f64(&symbol_value)?;
    if im.abs() > 1e-12 {
        Some(format!("~ {re:.10} + {im:.10}i"))
    } else {
        Some(format!("~ {re:.10}"))
    }
}
