//! Weak Hodge cohomology of explicit Hodge-structure data via the cone of
//! the period map, the weak duality pairing, and archimedean Gamma factors.
//!
//! A Hodge datum records a rational Betti space with an involution, a
//! filtered rational de Rham space, and an invertible period matrix sending
//! de Rham coordinates to Betti coordinates. The complexified space carries
//! the antilinear involution v -> Finf(conj v); in the de Rham frame this is
//! plain coefficient conjugation, so the fixed part C_c^G consists of the
//! vectors with real (conjugation-fixed) de Rham coordinates and inherits
//! the de Rham Q-structure.

mod gamma;

pub use gamma::{arch_factor, gamma_leading, GammaKind, GammaProduct, HodgeLayer};

use std::collections::BTreeMap;

use num::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{echelon, LinalgError, PMatrix};
use crate::period::{PeriodError, PeriodValue};
use crate::qdet::{cone_shifted, GradedMap, QComplex, QdetError, QSpace};

#[derive(Debug, Error, PartialEq)]
pub enum HodgeError {
    #[error("invalid Hodge datum: {0}")]
    InvalidDatum(String),
    #[error("malformed Hodge numbers: {0}")]
    MalformedHodgeNumbers(String),
    #[error("duality degenerate: {0}")]
    DualityDegenerate(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Qdet(#[from] QdetError),
    #[error(transparent)]
    Period(#[from] PeriodError),
}

/// Weight data: a single pure weight or a list of pure layers (weight, rank).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Weight {
    Pure(i64),
    Layers(Vec<(i64, usize)>),
}

impl Weight {
    pub fn pure_weight(&self) -> Option<i64> {
        match self {
            Weight::Pure(w) => Some(*w),
            Weight::Layers(l) if l.len() == 1 => Some(l[0].0),
            _ => None,
        }
    }

    fn dual_twist(&self) -> Weight {
        match self {
            Weight::Pure(w) => Weight::Pure(-w - 2),
            Weight::Layers(l) => {
                let mut out: Vec<(i64, usize)> = l.iter().map(|&(w, r)| (-w - 2, r)).collect();
                out.sort_unstable();
                Weight::Layers(out)
            }
        }
    }
}

/// Decreasing Hodge filtration given by its jumps: `dim F^p` is the largest
/// recorded dimension among entries with index >= p (zero when none).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Filtration {
    jumps: Vec<(i64, usize)>,
}

impl Filtration {
    pub fn new(mut jumps: Vec<(i64, usize)>) -> Result<Self, HodgeError> {
        jumps.sort_unstable();
        jumps.dedup();
        for w in jumps.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(HodgeError::InvalidDatum(format!(
                    "filtration lists index {} twice",
                    w[0].0
                )));
            }
            if w[0].1 <= w[1].1 {
                return Err(HodgeError::InvalidDatum(
                    "filtration dimensions must strictly decrease along jumps".into(),
                ));
            }
        }
        Ok(Filtration { jumps })
    }

    pub fn dim_at(&self, p: i64) -> usize {
        self.jumps
            .iter()
            .filter(|&&(q, _)| q >= p)
            .map(|&(_, d)| d)
            .max()
            .unwrap_or(0)
    }

    pub fn jumps(&self) -> &[(i64, usize)] {
        &self.jumps
    }

    /// The filtration of the (1)-twisted dual on rank d:
    /// dim F^p = d - dim_at(-p).
    fn dual_twist(&self, d: usize) -> Filtration {
        let lo = self.jumps.iter().map(|&(p, _)| -p).min().unwrap_or(0) - 2;
        let hi = self.jumps.iter().map(|&(p, _)| -p).max().unwrap_or(0) + 2;
        let f = |p: i64| d - self.dim_at(-p);
        let mut jumps = Vec::new();
        for p in lo..=hi {
            if f(p) > f(p + 1) {
                jumps.push((p, f(p)));
            }
        }
        Filtration { jumps }
    }
}

/// A Hodge-structure datum in explicit matrix form.
#[derive(Debug, Clone, PartialEq)]
pub struct HodgeDatum {
    pub rank: usize,
    pub weight: Weight,
    /// Rational involution on the Betti space (infinite Frobenius).
    pub finf: PMatrix,
    /// Hodge filtration of the de Rham space; F^p is spanned by the first
    /// dim F^p de Rham basis vectors.
    pub filtration: Filtration,
    /// Period matrix: de Rham coordinates to Betti coordinates.
    pub comparison: PMatrix,
}

impl HodgeDatum {
    pub fn new(
        rank: usize,
        weight: Weight,
        finf: PMatrix,
        filtration: Filtration,
        comparison: PMatrix,
    ) -> Result<Self, HodgeError> {
        if finf.rows() != rank || finf.cols() != rank {
            return Err(HodgeError::InvalidDatum("Finf must be rank x rank".into()));
        }
        if !finf.all_rational() {
            return Err(HodgeError::InvalidDatum("Finf must be rational".into()));
        }
        if finf.mul(&finf) != PMatrix::identity(rank) {
            return Err(HodgeError::InvalidDatum("Finf^2 must be the identity".into()));
        }
        if comparison.rows() != rank || comparison.cols() != rank {
            return Err(HodgeError::InvalidDatum("comparison must be rank x rank".into()));
        }
        if filtration.dim_at(i64::MIN / 2) > rank {
            return Err(HodgeError::InvalidDatum("filtration exceeds the rank".into()));
        }
        if comparison.det()?.is_zero() {
            return Err(HodgeError::InvalidDatum("comparison must be invertible".into()));
        }
        // Equivariance of the comparison: conj(P) = Finf P. This makes the
        // de Rham-frame conjugation agree with v -> Finf(conj v).
        let conj_p = PMatrix::from_fn(rank, rank, |i, j| comparison[(i, j)].conj());
        if conj_p != finf.mul(&comparison) {
            return Err(HodgeError::InvalidDatum(
                "comparison must satisfy conj(P) = Finf * P".into(),
            ));
        }
        Ok(HodgeDatum {
            rank,
            weight,
            finf,
            filtration,
            comparison,
        })
    }

    /// The Tate object 1(n): rank 1, weight -2n, filtration jump at -n,
    /// Finf = (-1)^n, comparison (2 pi i)^n.
    pub fn tate(n: i64) -> HodgeDatum {
        let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
        HodgeDatum::new(
            1,
            Weight::Pure(-2 * n),
            PMatrix::new(1, 1, vec![PeriodValue::from_int(sign)]),
            Filtration::new(vec![(-n, 1)]).unwrap(),
            PMatrix::new(1, 1, vec![PeriodValue::two_pi_i_pow(n)]),
        )
        .expect("Tate datum is valid")
    }

    /// A weight-one rank-two datum with h^{10} = h^{01} = 1 and a generic
    /// symbolic period matrix, shaped like H^1 of an elliptic curve.
    pub fn elliptic_h1() -> HodgeDatum {
        use crate::period::{Conjugation, SymbolTable};
        let sym = |name: &str| {
            PeriodValue::symbol(SymbolTable::declare(name, Conjugation::Fixed).unwrap())
        };
        let (a, b, c, d) = (sym("ell_a"), sym("ell_b"), sym("ell_c"), sym("ell_d"));
        let i = PeriodValue::i();
        let comparison = PMatrix::new(
            2,
            2,
            vec![a, b, c.mul(&i), d.mul(&i)],
        );
        HodgeDatum::new(
            2,
            Weight::Pure(1),
            rational_matrix(&[&[1, 0], &[0, -1]]),
            Filtration::new(vec![(0, 2), (1, 1)]).unwrap(),
            comparison,
        )
        .expect("elliptic datum is valid")
    }

    /// Direct sum, reordering the de Rham basis so each F^p stays a prefix.
    pub fn direct_sum(&self, other: &HodgeDatum) -> Result<HodgeDatum, HodgeError> {
        let d = self.rank + other.rank;
        let block = |a: &PMatrix, b: &PMatrix| {
            PMatrix::from_fn(d, d, |i, j| {
                if i < self.rank && j < self.rank {
                    a[(i, j)].clone()
                } else if i >= self.rank && j >= self.rank {
                    b[(i - self.rank, j - self.rank)].clone()
                } else {
                    PeriodValue::zero()
                }
            })
        };
        let mut ps: Vec<i64> = self
            .filtration
            .jumps()
            .iter()
            .chain(other.filtration.jumps())
            .map(|&(p, _)| p)
            .collect();
        ps.sort_unstable();
        ps.dedup();
        let mut jumps = Vec::new();
        for &p in &ps {
            let dim = self.filtration.dim_at(p) + other.filtration.dim_at(p);
            if dim > 0 {
                jumps.push((p, dim));
            }
        }
        // Keep only genuine jumps.
        let dim_at = |p: i64| -> usize {
            jumps
                .iter()
                .filter(|&&(q, _)| q >= p)
                .map(|&(_, x)| x)
                .max()
                .unwrap_or(0)
        };
        let jumps: Vec<(i64, usize)> = jumps
            .iter()
            .copied()
            .filter(|&(p, _)| dim_at(p) > dim_at(p + 1))
            .collect();
        // Order the de Rham basis by the filtration level at which each
        // vector enters, deepest level first (stable on original index).
        let enter_level = |filt: &Filtration, k: usize| -> i64 {
            filt.jumps()
                .iter()
                .filter(|&&(_, dim)| dim > k)
                .map(|&(p, _)| p)
                .max()
                .expect("every basis vector enters the filtration")
        };
        let mut order: Vec<(i64, usize)> = (0..self.rank)
            .map(|k| (enter_level(&self.filtration, k), k))
            .chain((0..other.rank).map(|k| (enter_level(&other.filtration, k), self.rank + k)))
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let comparison_block = block(&self.comparison, &other.comparison);
        let comparison =
            PMatrix::from_fn(d, d, |i, j| comparison_block[(i, order[j].1)].clone());
        let weight = match (&self.weight, &other.weight) {
            (Weight::Pure(a), Weight::Pure(b)) if a == b => Weight::Pure(*a),
            (wa, wb) => {
                let mut layers = Vec::new();
                let mut push = |w: &Weight, r: usize| match w {
                    Weight::Pure(x) => layers.push((*x, r)),
                    Weight::Layers(l) => layers.extend(l.iter().copied()),
                };
                push(wa, self.rank);
                push(wb, other.rank);
                layers.sort_unstable();
                Weight::Layers(layers)
            }
        };
        HodgeDatum::new(
            d,
            weight,
            block(&self.finf, &other.finf),
            Filtration::new(jumps)?,
            comparison,
        )
    }

    /// The datum of h^dual(1): dual Betti data twisted by 1(1), annihilator
    /// filtration shifted by one, inverse-transposed comparison times
    /// 2 pi i. Both dual bases are reversed so the filtration stays a prefix.
    pub fn dual_twist(&self) -> HodgeDatum {
        let d = self.rank;
        let rev = |m: &PMatrix| PMatrix::from_fn(d, d, |i, j| m[(d - 1 - i, d - 1 - j)].clone());
        let finf_t = self.finf.transpose();
        let finf = rev(&finf_t).scale(&PeriodValue::from_int(-1));
        let p_inv_t = self
            .comparison
            .inverse()
            .expect("comparison invertible")
            .transpose();
        let comparison = rev(&p_inv_t).scale(&PeriodValue::two_pi_i_pow(1));
        HodgeDatum::new(
            d,
            self.weight.dual_twist(),
            finf,
            self.filtration.dual_twist(d),
            comparison,
        )
        .expect("dual datum is valid")
    }

    /// Conjugate by rational base changes: Betti basis by B, de Rham basis
    /// by D (which must preserve the filtration prefixes, e.g. upper
    /// triangular).
    pub fn base_change(&self, b: &PMatrix, d_mat: &PMatrix) -> Result<HodgeDatum, HodgeError> {
        let d = self.rank;
        if !b.all_rational() || !d_mat.all_rational() {
            return Err(HodgeError::InvalidDatum("base changes must be rational".into()));
        }
        let b_inv = b
            .inverse()
            .map_err(|_| HodgeError::InvalidDatum("Betti base change must be invertible".into()))?;
        let finf = b_inv.mul(&self.finf).mul(b);
        let comparison = b_inv.mul(&self.comparison).mul(d_mat);
        for &(p, _) in self.filtration.jumps() {
            let k = self.filtration.dim_at(p);
            for i in k..d {
                for j in 0..k {
                    if !d_mat[(i, j)].is_zero() {
                        return Err(HodgeError::InvalidDatum(format!(
                            "de Rham base change does not preserve F^{p}"
                        )));
                    }
                }
            }
        }
        HodgeDatum::new(d, self.weight.clone(), finf, self.filtration.clone(), comparison)
    }
}

/// Weak cohomology of one Hodge datum, with the bases needed downstream.
#[derive(Debug, Clone)]
pub struct WeakCohomology {
    pub hw0: QSpace,
    pub hw1: QSpace,
    pub alpha_rank: usize,
    /// Images in C_c (de Rham frame) of the kernel basis vectors of alpha.
    pub hw0_vectors: PMatrix,
    /// Coker representatives: unit de Rham-frame vectors at these indices.
    pub hw1_rows: Vec<usize>,
    /// Projects a C_c^G vector (de Rham frame) to coker coordinates.
    pub hw1_projection: PMatrix,
}

/// Kernel and cokernel of the period map
/// `alpha : C_B^G (x) R (+) F^0 C_dR (x) R -> C_c^G`
/// with Q-structures induced by the cone rule; the target carries the de
/// Rham Q-structure.
pub fn weak_cohomology(h: &HodgeDatum) -> Result<WeakCohomology, HodgeError> {
    let d = h.rank;
    // Betti invariants: rational kernel of (Finf - Id).
    let finf_minus = {
        let mut m = h.finf.clone();
        for i in 0..d {
            m[(i, i)] = m[(i, i)].sub(&PeriodValue::one());
        }
        m
    };
    let inv = echelon(&finf_minus)?.kernel;
    let g = inv.cols();
    let f0 = h.filtration.dim_at(0);
    // alpha = [P^{-1} inv | -(F^0 embedding)] in the de Rham frame.
    let p_inv = h
        .comparison
        .inverse()
        .map_err(|_| HodgeError::InvalidDatum("comparison must be invertible".into()))?;
    let betti_block = p_inv.mul(&inv);
    if !betti_block.all_real() {
        return Err(HodgeError::InvalidDatum(
            "Betti invariants have non-real de Rham coordinates".into(),
        ));
    }
    let alpha = PMatrix::from_fn(d, g + f0, |i, j| {
        if j < g {
            betti_block[(i, j)].clone()
        } else if i + g == j {
            PeriodValue::from_int(-1)
        } else {
            PeriodValue::zero()
        }
    });
    let source = QComplex::single(0, QSpace::new(g + f0, PeriodValue::one())?);
    let target = QComplex::single(0, QSpace::new(d, PeriodValue::one())?);
    let map = GradedMap::new(source, target, [(0, alpha)])?;
    let cone = cone_shifted(&map, 1)?;
    let pieces = cone.pieces.get(&0).expect("degree 0 splitting data");
    let ker = &pieces.ker_basis;
    // Image of a kernel element in C_c: its F^0 part read as the leading
    // de Rham coordinates.
    let hw0_vectors = PMatrix::from_fn(d, ker.cols(), |i, j| {
        if i < f0 {
            ker[(g + i, j)].clone()
        } else {
            PeriodValue::zero()
        }
    });
    Ok(WeakCohomology {
        hw0: cone.complex.piece(0),
        hw1: cone.complex.piece(1),
        alpha_rank: g + f0 - ker.cols(),
        hw0_vectors,
        hw1_rows: pieces.coker_rows.clone(),
        hw1_projection: pieces.coker_projection.clone(),
    })
}

/// Pair a vector of `h` with a vector of `h.dual_twist()` (both in de Rham
/// frames) through the Betti evaluation, read in the de Rham frame of 1(1).
pub fn duality_value(
    h: &HodgeDatum,
    hd: &HodgeDatum,
    v_dr: &[PeriodValue],
    w_dr: &[PeriodValue],
) -> Result<PeriodValue, HodgeError> {
    let d = h.rank;
    let v_b = h.comparison.mul_vec(v_dr);
    let w_b = hd.comparison.mul_vec(w_dr);
    let mut acc = PeriodValue::zero();
    for i in 0..d {
        acc = acc.add(&v_b[i].mul(&w_b[d - 1 - i]));
    }
    let value = acc.div(&PeriodValue::two_pi_i_pow(1))?;
    if !value.is_real() {
        return Err(HodgeError::DualityDegenerate(
            "pairing value is not real".into(),
        ));
    }
    Ok(value)
}

/// The weak duality package of a datum.
#[derive(Debug, Clone)]
pub struct WeakDuality {
    pub dual: HodgeDatum,
    pub wc: WeakCohomology,
    pub wc_dual: WeakCohomology,
    /// Matrix of Hw^0(h) x Hw^1(h^dual(1)) -> R.
    pub pairing_hw0: PMatrix,
    /// Matrix of Hw^1(h) x Hw^0(h^dual(1)) -> R.
    pub pairing_hw1: PMatrix,
}

/// Construct h^dual(1), compute both weak cohomologies, and return the
/// induced pairing matrices, asserting perfectness.
pub fn weak_duality(h: &HodgeDatum) -> Result<WeakDuality, HodgeError> {
    let hd = h.dual_twist();
    let wc = weak_cohomology(h)?;
    let wcd = weak_cohomology(&hd)?;
    let d = h.rank;
    if wc.hw0.dim() != wcd.hw1.dim() || wc.hw1.dim() != wcd.hw0.dim() {
        return Err(HodgeError::DualityDegenerate(format!(
            "rank mismatch: Hw0/Hw1 = {}/{} against dual Hw1/Hw0 = {}/{}",
            wc.hw0.dim(),
            wc.hw1.dim(),
            wcd.hw1.dim(),
            wcd.hw0.dim()
        )));
    }
    let unit = |rows: &[usize], j: usize| -> Vec<PeriodValue> {
        let mut v = vec![PeriodValue::zero(); d];
        v[rows[j]] = PeriodValue::one();
        v
    };
    let mut pairing_hw0 = PMatrix::zero(wc.hw0.dim(), wcd.hw1.dim());
    for a in 0..wc.hw0.dim() {
        let v = wc.hw0_vectors.column(a);
        for b in 0..wcd.hw1.dim() {
            pairing_hw0[(a, b)] = duality_value(h, &hd, &v, &unit(&wcd.hw1_rows, b))?;
        }
    }
    let mut pairing_hw1 = PMatrix::zero(wc.hw1.dim(), wcd.hw0.dim());
    for a in 0..wc.hw1.dim() {
        let v = unit(&wc.hw1_rows, a);
        for b in 0..wcd.hw0.dim() {
            pairing_hw1[(a, b)] = duality_value(h, &hd, &v, &wcd.hw0_vectors.column(b))?;
        }
    }
    for (name, m) in [("Hw0", &pairing_hw0), ("Hw1", &pairing_hw1)] {
        if m.rows() > 0 && m.det()?.is_zero() {
            return Err(HodgeError::DualityDegenerate(format!(
                "{name} pairing matrix is singular"
            )));
        }
    }
    Ok(WeakDuality {
        dual: hd,
        wc,
        wc_dual: wcd,
        pairing_hw0,
        pairing_hw1,
    })
}

/// The weak cohomology complex of Hodge data indexed by cohomological
/// degree: Hw^i = Hw^1(H^{i-1}) (+) Hw^0(H^i), the Hw^1 part listed first
/// in the working basis.
#[derive(Debug, Clone)]
pub struct WeakComplex {
    pub complex: QComplex,
    /// Per degree i: (dim of Hw^1(H^{i-1}), dim of Hw^0(H^i)).
    pub parts: BTreeMap<i64, (usize, usize)>,
    pub cohomologies: BTreeMap<i64, WeakCohomology>,
}

pub fn weak_complex(hodge: &[(i64, HodgeDatum)]) -> Result<WeakComplex, HodgeError> {
    let mut cohomologies = BTreeMap::new();
    for (deg, h) in hodge {
        if cohomologies.insert(*deg, weak_cohomology(h)?).is_some() {
            return Err(HodgeError::InvalidDatum(format!(
                "duplicate Hodge degree {deg}"
            )));
        }
    }
    let mut parts = BTreeMap::new();
    let mut pieces = Vec::new();
    let mut all: Vec<i64> = cohomologies.keys().flat_map(|&i| [i, i + 1]).collect();
    all.sort_unstable();
    all.dedup();
    for i in all {
        let hw1_prev = cohomologies
            .get(&(i - 1))
            .map(|c| c.hw1.clone())
            .unwrap_or_else(QSpace::trivial);
        let hw0_here = cohomologies
            .get(&i)
            .map(|c| c.hw0.clone())
            .unwrap_or_else(QSpace::trivial);
        let total = hw1_prev.sum(&hw0_here);
        if total.dim() > 0 {
            parts.insert(i, (hw1_prev.dim(), hw0_here.dim()));
            pieces.push((i, total));
        }
    }
    Ok(WeakComplex {
        complex: QComplex::from_pieces(pieces),
        parts,
        cohomologies,
    })
}

/// Hodge numbers and the Finf split on the diagonal part, derived from a
/// pure datum; fails when the split cannot be inferred.
pub fn derive_layer(h: &HodgeDatum) -> Result<HodgeLayer, HodgeError> {
    let w = h.weight.pure_weight().ok_or_else(|| {
        HodgeError::MalformedHodgeNumbers("archimedean layer needs a pure weight".into())
    })?;
    let mut hodge_numbers = Vec::new();
    let mut ps: Vec<i64> = h.filtration.jumps().iter().map(|&(p, _)| p).collect();
    ps.sort_unstable();
    for &p in &ps {
        let hp = h.filtration.dim_at(p) - h.filtration.dim_at(p + 1);
        if hp > 0 {
            hodge_numbers.push((p, w - p, hp));
        }
    }
    let total: usize = hodge_numbers.iter().map(|&(_, _, n)| n).sum();
    if total != h.rank {
        return Err(HodgeError::MalformedHodgeNumbers(
            "filtration does not exhaust the rank".into(),
        ));
    }
    for &(p, q, hp) in &hodge_numbers {
        let sym = hodge_numbers
            .iter()
            .find(|&&(p2, q2, _)| p2 == q && q2 == p)
            .map(|&(_, _, n)| n)
            .unwrap_or(0);
        if sym != hp {
            return Err(HodgeError::MalformedHodgeNumbers(format!(
                "h^({p},{q}) = {hp} but h^({q},{p}) = {sym}"
            )));
        }
    }
    let diag = hodge_numbers.iter().find(|&&(p, q, _)| p == q).copied();
    let finf_pp = match diag {
        None => None,
        Some((_, _, hpp)) => {
            let eig_dim = |sign: i64| -> Result<usize, HodgeError> {
                let mut m = h.finf.clone();
                for i in 0..h.rank {
                    m[(i, i)] = m[(i, i)].sub(&PeriodValue::from_int(sign));
                }
                Ok(echelon(&m)?.kernel.cols())
            };
            let plus = eig_dim(1)?;
            let minus = eig_dim(-1)?;
            // Each (p,q)+(q,p) pair with p < q contributes one +1 and one
            // -1 eigenvector; the remainder sits on the (p,p) part.
            let off_pairs: usize = hodge_numbers
                .iter()
                .filter(|&&(p, q, _)| p < q)
                .map(|&(_, _, n)| n)
                .sum();
            let infer = |x: usize| {
                x.checked_sub(off_pairs).ok_or_else(|| {
                    HodgeError::MalformedHodgeNumbers(
                        "cannot infer the Finf split on the (p,p) part".into(),
                    )
                })
            };
            let pp_plus = infer(plus)?;
            let pp_minus = infer(minus)?;
            if pp_plus + pp_minus != hpp {
                return Err(HodgeError::MalformedHodgeNumbers(
                    "Finf eigenvalue dimensions do not sum to h^(p,p)".into(),
                ));
            }
            Some((pp_plus, pp_minus))
        }
    };
    Ok(HodgeLayer {
        weight: w,
        hodge_numbers,
        finf_pp,
    })
}

/// Rational matrix helper for the catalog and tests.
pub fn rational_matrix(rows: &[&[i64]]) -> PMatrix {
    let data: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    PMatrix::from_rationals(&data)
}

#[cfg(test)]
mod tests;
