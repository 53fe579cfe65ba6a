//! Motivic datum records, motivic cohomology with compact support via the
//! cone of the regulator, and the pole-order / special-value / finite-field
//! / Soule / triangle checks with pass-fail-indeterminate verdicts.

pub mod catalog;
pub mod schema;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frob::EulerFactor;
use crate::hodge::{weak_complex, HodgeDatum, HodgeError, WeakComplex};
use crate::linalg::PMatrix;
use crate::period::{PeriodError, PeriodValue};
use crate::qdet::{cone_shifted, det_pairing, GradedMap, QComplex, QdetError};
use crate::zeta::{euler_leading, zetaword_leading, LaurentLeading, ZetaError, ZetaWord};

#[derive(Debug, Error)]
pub enum ConjError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("missing K-rank table{0}")]
    MissingRanks(String),
    #[error("the declared L-objects do not form a triangle: {0}")]
    NotATriangle(String),
    #[error("unknown builtin datum `{0}`")]
    UnknownDatum(String),
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Qdet(#[from] QdetError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Period(#[from] PeriodError),
}

/// The global L-object of a datum: a zeta word (Tate data over Z) or a
/// finite list of Euler factors (data supported at finite places).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum LObject {
    #[serde(rename = "word")]
    Word(ZetaWord),
    #[serde(rename = "factors")]
    Factors(Vec<EulerFactor>),
}

impl LObject {
    pub fn as_word(&self) -> ZetaWord {
        match self {
            LObject::Word(w) => w.normalized(),
            LObject::Factors(f) => ZetaWord::from_factors(f.clone()),
        }
    }

    pub fn leading(&self, s0: i64) -> Result<LaurentLeading, ConjError> {
        Ok(match self {
            LObject::Word(w) => zetaword_leading(w, s0)?,
            LObject::Factors(f) => euler_leading(f, s0)?,
        })
    }
}

/// A bundle of motivic-cohomology data, Hodge data, regulator and pairing
/// matrices, and an L-object: the unit the conjecture harness checks.
#[derive(Debug, Clone)]
pub struct MotivicDatum {
    pub label: String,
    /// Motivic cohomology of M (rational working bases).
    pub h_m: QComplex,
    /// Motivic cohomology of the Verdier dual D(M).
    pub h_dm: QComplex,
    /// Hodge realization per cohomological degree; empty for data supported
    /// at finite places.
    pub hodge: Vec<(i64, HodgeDatum)>,
    /// Regulator matrices h_m^i (x) R -> Hw^i in the working bases; omitted
    /// degrees are zero maps.
    pub regulators: BTreeMap<i64, PMatrix>,
    /// Pairing matrices pi^i on the compact-support model.
    pub pairings: BTreeMap<i64, PMatrix>,
    pub lobject: LObject,
    /// K'-rank tables per twist m (entry i is rk K'_i), for the Soule check.
    pub k_ranks: Option<BTreeMap<i64, Vec<i64>>>,
}

impl MotivicDatum {
    pub fn validate(&self) -> Result<(), ConjError> {
        if self.hodge.is_empty() && !self.regulators.is_empty() {
            return Err(ConjError::InvalidDatum(
                "regulators must be empty when the Hodge data is empty".into(),
            ));
        }
        Ok(())
    }
}

/// Compact support cohomology: the cone of the regulator shifted so that
/// H_c^i = coker(rho^{i-1}) (+) ker(rho^i), with Q-structures induced by
/// the cone rule. Returns the weak complex alongside.
pub fn compact_support(d: &MotivicDatum) -> Result<(QComplex, WeakComplex), ConjError> {
    d.validate()?;
    let wx = weak_complex(&d.hodge)?;
    let mut maps: BTreeMap<i64, PMatrix> = BTreeMap::new();
    for deg in d.h_m.support().into_iter().chain(wx.complex.support()) {
        let rows = wx.complex.dim(deg);
        let cols = d.h_m.dim(deg);
        let m = match d.regulators.get(&deg) {
            Some(m) => m.clone(),
            None => PMatrix::zero(rows, cols),
        };
        if m.rows() != rows || m.cols() != cols {
            return Err(ConjError::ShapeMismatch(format!(
                "regulator at degree {deg} is {}x{}, expected {rows}x{cols}",
                m.rows(),
                m.cols()
            )));
        }
        maps.insert(deg, m);
    }
    let rho = GradedMap::new(d.h_m.clone(), wx.complex.clone(), maps)
        .map_err(|e| ConjError::ShapeMismatch(e.to_string()))?;
    Ok((cone_shifted(&rho, 1)?.complex, wx))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

/// Outcome of one check, with the computed quantities in the report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub label: String,
    pub check: String,
    pub status: Status,
    pub details: Vec<String>,
}

impl Verdict {
    fn new(label: &str, check: &str, status: Status, details: Vec<String>) -> Self {
        Verdict {
            label: label.to_string(),
            check: check.to_string(),
            status,
            details,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Indeterminate => "INDETERMINATE",
        };
        write!(f, "[{tag}] {} :: {}", self.label, self.check)?;
        for d in &self.details {
            write!(f, "\n    {d}")?;
        }
        Ok(())
    }
}

/// Pole order check: ord_{s=s0} L(M, s) = -chi(D(M)).
pub fn check_pole_order(d: &MotivicDatum, s0: i64) -> Result<Verdict, ConjError> {
    let leading = d.lobject.leading(s0)?;
    let chi = d.h_dm.euler_char();
    let ok = leading.order == -chi;
    Ok(Verdict::new(
        &d.label,
        "pole_order",
        if ok { Status::Pass } else { Status::Fail },
        vec![
            format!("ord_(s={s0}) L = {}", leading.order),
            format!("chi(DM) = {chi}, predicted order = {}", -chi),
            format!("leading = {}", leading.leading),
        ],
    ))
}

/// Special value check: L^*(M, s0) * det(pi_M) is a nonzero rational.
/// Degenerate pairings yield a fail verdict (perfectness is part of the
/// statement being checked); opaque symbols yield an indeterminate one.
pub fn check_special_value(d: &MotivicDatum, s0: i64) -> Result<Verdict, ConjError> {
    let (hc, _) = compact_support(d)?;
    let leading = d.lobject.leading(s0)?;
    let det = match det_pairing(&hc, &d.h_dm, &d.pairings) {
        Ok(v) => v,
        Err(QdetError::PairingDegenerate(msg)) => {
            return Ok(Verdict::new(
                &d.label,
                "special_value",
                Status::Fail,
                vec![format!("perfectness fails: {msg}")],
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let product = leading.leading.mul(&det);
    let ratio = product.rational_ratio(&PeriodValue::one())?;
    let mut details = vec![
        format!("L* = {}", leading.leading),
        format!("det pi = {det}"),
        format!("L* . det pi = {product}"),
    ];
    let status = match ratio {
        Some(q) => {
            details.push(format!("rational ratio to 1: {q}"));
            Status::Pass
        }
        None if product.has_opaque_symbol() => {
            details.push("comparison depends on opaque zeta symbols".into());
            Status::Indeterminate
        }
        None => {
            details.push("L* . det pi is not rational".into());
            Status::Fail
        }
    };
    Ok(Verdict::new(&d.label, "special_value", status, details))
}

/// Finite-field value check: ord = -chi(DM) and L* = (log p)^{-chi(DM)}
/// modulo nonzero rationals, for a datum supported at one prime.
pub fn check_fp_value(d: &MotivicDatum) -> Result<Verdict, ConjError> {
    if !d.hodge.is_empty() {
        return Err(ConjError::InvalidDatum(
            "fp check requires empty Hodge data".into(),
        ));
    }
    let factors = match &d.lobject {
        LObject::Factors(f) => f.clone(),
        LObject::Word(w) if w.shifts.is_empty() => w.factors.clone(),
        _ => {
            return Err(ConjError::InvalidDatum(
                "fp check requires a finite Euler factor list".into(),
            ))
        }
    };
    let primes: std::collections::BTreeSet<u64> = factors.iter().map(|f| f.p).collect();
    if primes.len() != 1 {
        return Err(ConjError::InvalidDatum(format!(
            "fp check requires factors at one prime, got {primes:?}"
        )));
    }
    let p = *primes.iter().next().unwrap();
    let leading = euler_leading(&factors, 0)?;
    let chi = d.h_dm.euler_char();
    let target = PeriodValue::log_prime(p)?.pow(-chi)?;
    let ratio = leading.leading.rational_ratio(&target)?;
    let ord_ok = leading.order == -chi;
    let val_ok = matches!(&ratio, Some(q) if !num::Zero::is_zero(q));
    let status = if ord_ok && val_ok { Status::Pass } else { Status::Fail };
    Ok(Verdict::new(
        &d.label,
        "fp_value",
        status,
        vec![
            format!("ord = {}, -chi(DM) = {}", leading.order, -chi),
            format!("L* = {}", leading.leading),
            format!("target (log_{p})^{} ; rational ratio: {:?}", -chi, ratio.map(|q| q.to_string())),
        ],
    ))
}

/// Soule check at s = m: the pole order of the zeta object equals
/// sum_i (-1)^{i+1} rk K'_i(Y)_(m).
pub fn check_soule(d: &MotivicDatum, m: i64) -> Result<Verdict, ConjError> {
    let ranks = d
        .k_ranks
        .as_ref()
        .ok_or_else(|| ConjError::MissingRanks(format!(" on `{}`", d.label)))?;
    let table = ranks
        .get(&m)
        .ok_or_else(|| ConjError::MissingRanks(format!(" for twist m = {m} on `{}`", d.label)))?;
    let leading = d.lobject.leading(m)?;
    let sum: i64 = table
        .iter()
        .enumerate()
        .map(|(i, &r)| if i % 2 == 0 { -r } else { r })
        .sum();
    let ok = leading.order == sum;
    Ok(Verdict::new(
        &d.label,
        &format!("soule(m={m})"),
        if ok { Status::Pass } else { Status::Fail },
        vec![
            format!("ord_(s={m}) zeta = {}", leading.order),
            format!("sum (-1)^(i+1) rk K'_i = {sum}"),
        ],
    ))
}

/// Triangle check: d2's L-object must be the product of d1's and d3's;
/// orders add and leadings multiply exactly. Zeta-shift mismatch breaks the
/// triangle declaration; a corrupted Euler factor yields a fail verdict
/// with the differing place as witness.
pub fn check_triangle(
    d1: &MotivicDatum,
    d2: &MotivicDatum,
    d3: &MotivicDatum,
) -> Result<Verdict, ConjError> {
    let merged = d1.lobject.as_word().mul(&d3.lobject.as_word());
    let mid = d2.lobject.as_word();
    if merged.shifts != mid.shifts {
        return Err(ConjError::NotATriangle(format!(
            "zeta shifts differ: outer product {:?}, middle {:?}",
            merged.shifts, mid.shifts
        )));
    }
    let mut places = merged.places();
    places.extend(mid.places());
    places.sort_unstable();
    places.dedup();
    let mut witness = Vec::new();
    for (p, f) in places {
        let lhs = merged.local_function(p, f);
        let rhs = mid.local_function(p, f);
        if lhs != rhs {
            witness.push(format!(
                "factor mismatch at (p, f) = ({p}, {f}): outer ({})/({}), middle ({})/({})",
                lhs.0, lhs.1, rhs.0, rhs.1
            ));
        }
    }
    let l1 = d1.lobject.leading(0)?;
    let l2 = d2.lobject.leading(0)?;
    let l3 = d3.lobject.leading(0)?;
    let mut details = vec![
        format!("orders: {} + {} vs {}", l1.order, l3.order, l2.order),
        format!(
            "leadings: ({}) . ({}) vs {}",
            l1.leading, l3.leading, l2.leading
        ),
    ];
    let product = l1.mul(&l3);
    let ok = witness.is_empty() && product.order == l2.order && product.leading == l2.leading;
    details.extend(witness);
    Ok(Verdict::new(
        &format!("{} | {} | {}", d1.label, d2.label, d3.label),
        "triangle",
        if ok { Status::Pass } else { Status::Fail },
        details,
    ))
}
