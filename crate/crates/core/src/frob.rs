//! Frobenius modules at finite places: Euler-factor polynomials, algebra
//! operations, pushdown along residue-field extensions, and finite-field
//! epsilon constants.

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ratpoly::RatPoly;

#[derive(Debug, Error, PartialEq)]
pub enum FrobError {
    #[error("operands live at different places: ({0}, {1}) vs ({2}, {3})")]
    PlaceMismatch(u64, u32, u64, u32),
    #[error("the Frobenius matrix must be invertible")]
    NotInvertible,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("epsilon constants require residue degree 1, got f = {0}")]
    ResidueDegree(u32),
    #[error("matrix must be square and nonempty")]
    BadMatrix,
}

fn check_prime(p: u64) -> Result<(), FrobError> {
    let ok = p >= 2 && !(2..p).take_while(|d| d * d <= p).any(|d| p % d == 0);
    if ok {
        Ok(())
    } else {
        Err(FrobError::NotPrime(p))
    }
}

/// An invertible rational matrix recording the inverse (geometric) Frobenius
/// action at a finite place with residue field of q = p^f elements.
/// Serialized as `{p, f, matrix}` with rational entries as strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FrobModuleFile", into = "FrobModuleFile")]
pub struct FrobModule {
    pub p: u64,
    pub f: u32,
    pub phi: Vec<Vec<BigRational>>,
}

#[derive(Serialize, Deserialize)]
struct FrobModuleFile {
    p: u64,
    f: u32,
    #[serde(with = "rational_matrix")]
    matrix: Vec<Vec<BigRational>>,
}

impl TryFrom<FrobModuleFile> for FrobModule {
    type Error = FrobError;
    fn try_from(file: FrobModuleFile) -> Result<Self, FrobError> {
        FrobModule::new(file.p, file.f, file.matrix)
    }
}

impl From<FrobModule> for FrobModuleFile {
    fn from(m: FrobModule) -> Self {
        FrobModuleFile {
            p: m.p,
            f: m.f,
            matrix: m.phi,
        }
    }
}

/// A local factor: the contribution at the place is `P(t)^{-exponent}` with
/// `t = N(p)^{-s}` and `P(0) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EulerFactor {
    pub p: u64,
    pub f: u32,
    pub poly: RatPoly,
    pub exponent: i64,
}

impl EulerFactor {
    pub fn norm(&self) -> BigRational {
        BigRational::from_integer(num::BigInt::from(self.p).pow(self.f))
    }
}

pub(crate) mod rational_matrix {
    use num::BigRational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = m
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigRational>>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|c| c.parse::<BigRational>().map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            for l in 0..k {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

fn mat_trace(a: &[Vec<BigRational>]) -> BigRational {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Determinant over Q by fraction Gaussian elimination.
pub(crate) fn mat_det(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let piv = m[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &piv;
            for j in col..n {
                let sub = &factor * &m[col][j];
                m[r][j] -= sub;
            }
        }
    }
    det
}

fn mat_inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let inv = m[col][col].recip();
        for j in 0..2 * n {
            m[col][j] *= &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..2 * n {
                let sub = &factor * &m[col][j];
                m[r][j] -= sub;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

impl FrobModule {
    pub fn new(p: u64, f: u32, phi: Vec<Vec<BigRational>>) -> Result<Self, FrobError> {
        check_prime(p)?;
        if f == 0 {
            return Err(FrobError::ResidueDegree(0));
        }
        if phi.is_empty() || phi.iter().any(|r| r.len() != phi.len()) {
            return Err(FrobError::BadMatrix);
        }
        if mat_det(&phi).is_zero() {
            return Err(FrobError::NotInvertible);
        }
        Ok(FrobModule { p, f, phi })
    }

    /// Rank-1 module with the given eigenvalue.
    pub fn scalar(p: u64, f: u32, c: BigRational) -> Result<Self, FrobError> {
        FrobModule::new(p, f, vec![vec![c]])
    }

    /// The trivial module at (p, f).
    pub fn trivial(p: u64, f: u32) -> Result<Self, FrobError> {
        FrobModule::scalar(p, f, BigRational::one())
    }

    /// Diagonal module with the given eigenvalues.
    pub fn diagonal(p: u64, f: u32, eigen: &[BigRational]) -> Result<Self, FrobError> {
        let n = eigen.len();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for (i, e) in eigen.iter().enumerate() {
            m[i][i] = e.clone();
        }
        FrobModule::new(p, f, m)
    }

    pub fn rank(&self) -> usize {
        self.phi.len()
    }

    /// N(p) = p^f.
    pub fn norm(&self) -> BigRational {
        BigRational::from_integer(num::BigInt::from(self.p).pow(self.f))
    }

    pub fn det(&self) -> BigRational {
        mat_det(&self.phi)
    }
}

/// Characteristic Euler factor `P(t) = det(Id - phi t)` via the trace
/// recurrence (Faddeev-LeVerrier): exact over Q.
pub fn euler_poly(v: &FrobModule) -> EulerFactor {
    let n = v.rank();
    // Newton's identities on power sums s_k = tr(phi^k):
    // det(Id - phi t) = sum a_k t^k with a_0 = 1,
    // k a_k = -sum_{j=1..k} s_j a_{k-j}.
    let mut cur = v.phi.clone();
    let mut traces = Vec::with_capacity(n);
    for k in 0..n {
        if k > 0 {
            cur = mat_mul(&cur, &v.phi);
        }
        traces.push(mat_trace(&cur));
    }
    let mut coeffs = vec![BigRational::one()];
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            acc += &traces[j - 1] * &coeffs[k - j];
        }
        coeffs.push(-acc / BigRational::from_integer(k.into()));
    }
    EulerFactor {
        p: v.p,
        f: v.f,
        poly: RatPoly::new(coeffs),
        exponent: 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobOp {
    Sum,
    Tensor,
    Dual,
}

/// Direct sum, tensor product, or dual of Frobenius modules at one place.
pub fn frob_algebra(v: &FrobModule, w: Option<&FrobModule>, op: FrobOp) -> Result<FrobModule, FrobError> {
    match op {
        FrobOp::Dual => {
            let inv = mat_inverse(&v.phi).ok_or(FrobError::NotInvertible)?;
            let n = inv.len();
            let mut t = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    t[i][j] = inv[j][i].clone();
                }
            }
            FrobModule::new(v.p, v.f, t)
        }
        FrobOp::Sum | FrobOp::Tensor => {
            let w = w.expect("binary operation needs two operands");
            if v.p != w.p || v.f != w.f {
                return Err(FrobError::PlaceMismatch(v.p, v.f, w.p, w.f));
            }
            let (n, m) = (v.rank(), w.rank());
            let phi = match op {
                FrobOp::Sum => {
                    let mut out = vec![vec![BigRational::zero(); n + m]; n + m];
                    for i in 0..n {
                        for j in 0..n {
                            out[i][j] = v.phi[i][j].clone();
                        }
                    }
                    for i in 0..m {
                        for j in 0..m {
                            out[n + i][n + j] = w.phi[i][j].clone();
                        }
                    }
                    out
                }
                FrobOp::Tensor => {
                    let mut out = vec![vec![BigRational::zero(); n * m]; n * m];
                    for i in 0..n {
                        for j in 0..n {
                            for k in 0..m {
                                for l in 0..m {
                                    out[i * m + k][j * m + l] = &v.phi[i][j] * &w.phi[k][l];
                                }
                            }
                        }
                    }
                    out
                }
                FrobOp::Dual => unreachable!(),
            };
            FrobModule::new(v.p, v.f, phi)
        }
    }
}

/// Tate twist: phi -> N(p)^{-n} phi, so that L(M(n), s) = L(M, n + s).
pub fn twist(v: &FrobModule, n: i64) -> FrobModule {
    let q = v.norm();
    let scale = if n >= 0 {
        q.pow(n as i32).recip()
    } else {
        q.pow((-n) as i32)
    };
    let phi = v
        .phi
        .iter()
        .map(|row| row.iter().map(|c| c * &scale).collect())
        .collect();
    FrobModule { p: v.p, f: v.f, phi }
}

/// Induction to residue degree 1: the block companion matrix B with
/// det(Id - B t) = det(Id - phi t^f).
pub fn pushdown(v: &FrobModule) -> FrobModule {
    let f = v.f as usize;
    if f == 1 {
        return v.clone();
    }
    let r = v.rank();
    let n = r * f;
    let mut b = vec![vec![BigRational::zero(); n]; n];
    // Cyclic block structure: block row 0 holds phi in the last block
    // column; block row i holds an identity in block column i-1.
    for i in 0..r {
        for j in 0..r {
            b[i][(f - 1) * r + j] = v.phi[i][j].clone();
        }
    }
    for blk in 1..f {
        for i in 0..r {
            b[blk * r + i][(blk - 1) * r + i] = BigRational::one();
        }
    }
    let out = FrobModule {
        p: v.p,
        f: 1,
        phi: b,
    };
    debug_assert_eq!(
        euler_poly(&out).poly,
        euler_poly(v).poly.compose_t_pow(f),
        "pushdown characteristic polynomial identity"
    );
    out
}

/// The epsilon constants (a, b) with `L(V, s) = a b^s L(V^dual, -s)` as an
/// identity of rational expressions in p^{-s}: a = (-1)^n / det(phi) and
/// b = p^n for rank n. The identity is verified by exact cross-multiplied
/// polynomial comparison.
pub fn epsilon_constants(v: &FrobModule) -> Result<(BigRational, BigRational), FrobError> {
    if v.f != 1 {
        return Err(FrobError::ResidueDegree(v.f));
    }
    let n = v.rank();
    let det = v.det();
    let sign = if n % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    let a = sign / &det;
    let b = BigRational::from_integer(num::BigInt::from(v.p).pow(n as u32));
    // Identity <=> x^n P_dual(1/x) = a P(x): the left side is the
    // coefficient reversal of the dual Euler polynomial.
    let p_v = euler_poly(v).poly;
    let p_dual = euler_poly(&frob_algebra(v, None, FrobOp::Dual)?).poly;
    let lhs = p_dual.reverse_to_degree(n);
    let rhs = p_v.scale(&a);
    assert_eq!(lhs, rhs, "epsilon identity must hold symbolically");
    Ok((a, b))
}
