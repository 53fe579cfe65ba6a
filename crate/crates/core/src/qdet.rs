//! Complexes with Q-structures and their determinant calculus: total
//! determinants, determinants of maps and pairings, and the Q-structure on
//! mapping cones.
//!
//! A complex is stored in cohomology form (zero differentials). The
//! Q-structure of each graded piece is a single scalar, the coordinate of
//! the rational generator of the top exterior power relative to the working
//! basis. Determinant conventions are frozen here: tensor factors ordered by
//! increasing degree, a-side before b-side in pairings.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::linalg::{echelon, LinalgError, PMatrix};
use crate::period::{PeriodError, PeriodValue};

#[derive(Debug, Error, PartialEq)]
pub enum QdetError {
    #[error("map is not an isomorphism in degree 0")]
    NotInvertible,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("pairing degenerate: {0}")]
    PairingDegenerate(String),
    #[error("q-structure generator must be real and nonzero")]
    BadGenerator,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Period(#[from] PeriodError),
}

/// A real vector space of known dimension with a Q-structure generator.
/// A zero-dimensional space carries the canonical generator 1.
#[derive(Debug, Clone, PartialEq)]
pub struct QSpace {
    dim: usize,
    qgen: PeriodValue,
}

impl QSpace {
    pub fn new(dim: usize, qgen: PeriodValue) -> Result<Self, QdetError> {
        if dim == 0 {
            return Ok(QSpace {
                dim: 0,
                qgen: PeriodValue::one(),
            });
        }
        if qgen.is_zero() || !qgen.is_real() {
            return Err(QdetError::BadGenerator);
        }
        Ok(QSpace { dim, qgen })
    }

    pub fn trivial() -> Self {
        QSpace {
            dim: 0,
            qgen: PeriodValue::one(),
        }
    }

    pub fn line(qgen: PeriodValue) -> Result<Self, QdetError> {
        QSpace::new(1, qgen)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn qgen(&self) -> &PeriodValue {
        &self.qgen
    }

    /// Direct sum: dimensions add, generators multiply.
    pub fn sum(&self, other: &QSpace) -> QSpace {
        QSpace {
            dim: self.dim + other.dim,
            qgen: self.qgen.mul(&other.qgen),
        }
    }
}

/// A finite graded family of Q-structured spaces.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct QComplex {
    graded: BTreeMap<i64, QSpace>,
}

impl QComplex {
    pub fn empty() -> Self {
        QComplex {
            graded: BTreeMap::new(),
        }
    }

    pub fn from_pieces(pieces: impl IntoIterator<Item = (i64, QSpace)>) -> Self {
        let mut graded = BTreeMap::new();
        for (deg, sp) in pieces {
            if sp.dim() > 0 {
                let prev = graded.insert(deg, sp);
                assert!(prev.is_none(), "duplicate degree {deg}");
            }
        }
        QComplex { graded }
    }

    pub fn single(degree: i64, space: QSpace) -> Self {
        QComplex::from_pieces([(degree, space)])
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.graded.keys().copied()
    }

    pub fn piece(&self, degree: i64) -> QSpace {
        self.graded.get(&degree).cloned().unwrap_or_else(QSpace::trivial)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.graded.get(&degree).map(|s| s.dim()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.graded.is_empty()
    }

    pub fn support(&self) -> Vec<i64> {
        self.graded.keys().copied().collect()
    }

    /// Translate: degree i moves to i + n.
    pub fn shift(&self, n: i64) -> QComplex {
        QComplex {
            graded: self.graded.iter().map(|(&d, s)| (d + n, s.clone())).collect(),
        }
    }

    /// Euler characteristic of dimensions.
    pub fn euler_char(&self) -> i64 {
        self.graded
            .iter()
            .map(|(&d, s)| if d.rem_euclid(2) == 0 { s.dim() as i64 } else { -(s.dim() as i64) })
            .sum()
    }

    /// Total determinant: the alternating product of the generators.
    pub fn det_total(&self) -> PeriodValue {
        let mut acc = PeriodValue::one();
        for (&d, s) in &self.graded {
            if d.rem_euclid(2) == 0 {
                acc = acc.mul(s.qgen());
            } else {
                acc = acc.mul(&s.qgen().inv().expect("qgen nonzero"));
            }
        }
        acc
    }
}

/// Per-degree matrices between two complexes in cohomology form. The matrix
/// in degree i maps source_i coordinates to target_i coordinates.
#[derive(Debug, Clone)]
pub struct GradedMap {
    pub source: QComplex,
    pub target: QComplex,
    maps: BTreeMap<i64, PMatrix>,
}

impl GradedMap {
    pub fn new(
        source: QComplex,
        target: QComplex,
        maps: impl IntoIterator<Item = (i64, PMatrix)>,
    ) -> Result<Self, QdetError> {
        let maps: BTreeMap<i64, PMatrix> = maps.into_iter().collect();
        for (&d, m) in &maps {
            if m.rows() != target.dim(d) || m.cols() != source.dim(d) {
                return Err(QdetError::ShapeMismatch(format!(
                    "degree {d}: matrix is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.dim(d),
                    source.dim(d)
                )));
            }
            if !m.all_real() {
                return Err(QdetError::ShapeMismatch(format!(
                    "degree {d}: matrix entries must be real"
                )));
            }
        }
        for d in source.support().into_iter().chain(target.support()) {
            if source.dim(d) > 0 && target.dim(d) > 0 && !maps.contains_key(&d) {
                return Err(QdetError::ShapeMismatch(format!(
                    "degree {d}: missing matrix between nonzero pieces"
                )));
            }
        }
        Ok(GradedMap { source, target, maps })
    }

    pub fn zero(source: QComplex, target: QComplex) -> Self {
        let maps = source
            .support()
            .into_iter()
            .chain(target.support())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|d| (d, PMatrix::zero(target.dim(d), source.dim(d))))
            .collect::<Vec<_>>();
        GradedMap::new(source, target, maps).expect("zero map shapes")
    }

    pub fn matrix(&self, degree: i64) -> PMatrix {
        self.maps
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| PMatrix::zero(self.target.dim(degree), self.source.dim(degree)))
    }
}

/// det of a map between degree-0 Q-lines: the image of 1 under
/// `Q = det A (x) det^{-1} B -> det A_R (x) det^{-1} B_R = R`.
pub fn det_of_map(f: &GradedMap) -> Result<PeriodValue, QdetError> {
    let degs: Vec<i64> = f.source.support().into_iter().chain(f.target.support()).collect();
    if degs.iter().any(|&d| d != 0) {
        return Err(QdetError::ShapeMismatch(
            "det_of_map requires complexes concentrated in degree 0".into(),
        ));
    }
    let a = f.source.piece(0);
    let b = f.target.piece(0);
    if a.dim() != b.dim() {
        return Err(QdetError::NotInvertible);
    }
    let m = f.matrix(0);
    let det = m.det()?;
    if a.dim() > 0 && det.is_zero() {
        return Err(QdetError::NotInvertible);
    }
    let det = if a.dim() == 0 { PeriodValue::one() } else { det };
    Ok(det.mul(a.qgen()).mul(&b.qgen().inv()?))
}

/// Splitting data for one degree of a cone reduction.
#[derive(Debug, Clone)]
pub struct ConePieces {
    /// Kernel of f in this source degree: columns are source coordinates.
    pub ker_basis: PMatrix,
    /// Non-pivot row indices of the target; their classes form the cokernel
    /// basis in this target degree.
    pub coker_rows: Vec<usize>,
    /// Rows of M_W^{-1} projecting a target vector to cokernel coordinates.
    pub coker_projection: PMatrix,
}

/// A reduced mapping cone: the cohomology complex plus per-degree bases.
#[derive(Debug, Clone)]
pub struct ConeReduction {
    pub complex: QComplex,
    /// Splitting data per map degree i (kernel of f_i, cokernel of f_i).
    pub pieces: BTreeMap<i64, ConePieces>,
    /// Cone degree holding coker(f_i): i + shift + ... (see `cone_shifted`).
    shift: i64,
}

impl ConeReduction {
    /// The cone degree carrying coker(f_i).
    pub fn coker_degree(&self, i: i64) -> i64 {
        i + self.shift
    }

    /// The cone degree carrying ker(f_i).
    pub fn ker_degree(&self, i: i64) -> i64 {
        i - 1 + self.shift
    }
}

/// Cone of a graded map between zero-differential complexes, with the
/// Q-structure `d_target (x) d_source^{-1}` distributed over the cohomology
/// pieces via first-pivot splittings.
///
/// H^i(cone) = coker(f_i) (+) ker(f_{i+1}); `shift` translates the result
/// (shift = -1 gives cone[-1], so H^0 = ker and H^1 = coker for a map of
/// spaces in degree 0). The alternating product of the returned generators
/// equals (det target / det source)^((-1)^shift) exactly whenever the cone
/// has a nonzero piece; per-degree generators are honest splitting-induced
/// coordinates up to one folded correction factor in the lowest nonzero
/// degree.
pub fn cone_shifted(f: &GradedMap, shift: i64) -> Result<ConeReduction, QdetError> {
    let mut degrees: Vec<i64> = f
        .source
        .support()
        .into_iter()
        .chain(f.target.support())
        .collect();
    degrees.sort_unstable();
    degrees.dedup();

    let mut pieces: BTreeMap<i64, ConePieces> = BTreeMap::new();
    // Raw splitting-induced generator per (cone degree): product over the
    // pieces landing there.
    let mut raw: BTreeMap<i64, (usize, PeriodValue)> = BTreeMap::new();
    let mut mul_into = |deg: i64, dim: usize, q: PeriodValue| {
        let entry = raw.entry(deg).or_insert((0, PeriodValue::one()));
        entry.0 += dim;
        entry.1 = entry.1.mul(&q);
    };

    for &i in &degrees {
        let s_dim = f.source.dim(i);
        let t_dim = f.target.dim(i);
        let m = f.matrix(i);
        let ech = echelon(&m)?;
        let ker_dim = s_dim - ech.rank;
        let coker_dim = t_dim - ech.rank;

        // M_V = [kernel basis | pivot unit columns]; qgen factor for the
        // kernel piece is qv / det(M_V).
        let mv = {
            let mut unit = PMatrix::zero(s_dim, ech.pivot_cols.len());
            for (j, &c) in ech.pivot_cols.iter().enumerate() {
                unit[(c, j)] = PeriodValue::one();
            }
            ech.kernel.hcat(&unit)
        };
        let det_mv = if s_dim == 0 { PeriodValue::one() } else { mv.det()? };
        if det_mv.is_zero() {
            return Err(QdetError::ShapeMismatch(format!(
                "degree {i}: degenerate kernel splitting"
            )));
        }
        let q_ker = f.source.piece(i).qgen().div(&det_mv)?;

        // M_W = [image basis A[:,J] | non-pivot-row unit columns]; qgen
        // factor for the cokernel piece is qw / det(M_W).
        let coker_rows: Vec<usize> =
            (0..t_dim).filter(|r| !ech.pivot_rows.contains(r)).collect();
        let mw = {
            let img = m.select_columns(&ech.pivot_cols);
            let mut unit = PMatrix::zero(t_dim, coker_rows.len());
            for (j, &r) in coker_rows.iter().enumerate() {
                unit[(r, j)] = PeriodValue::one();
            }
            img.hcat(&unit)
        };
        let (det_mw, mw_inv) = if t_dim == 0 {
            (PeriodValue::one(), PMatrix::identity(0))
        } else {
            (mw.det()?, mw.inverse()?)
        };
        if det_mw.is_zero() {
            return Err(QdetError::ShapeMismatch(format!(
                "degree {i}: degenerate cokernel splitting"
            )));
        }
        let q_coker = f.target.piece(i).qgen().div(&det_mw)?;
        let coker_projection =
            PMatrix::from_fn(coker_dim, t_dim, |r, c| mw_inv[(ech.rank + r, c)].clone());

        pieces.insert(
            i,
            ConePieces {
                ker_basis: ech.kernel,
                coker_rows,
                coker_projection,
            },
        );
        mul_into(i + shift, coker_dim, q_coker);
        mul_into(i - 1 + shift, ker_dim, q_ker);
    }

    // Desired total: (det target / det source)^((-1)^shift).
    let ratio = f.target.det_total().div(&f.source.det_total())?;
    let desired = if shift.rem_euclid(2) == 0 { ratio } else { ratio.inv()? };

    // Current total over nonzero-dimensional degrees; fold the correction
    // into the lowest nonzero degree.
    let mut current = PeriodValue::one();
    for (&d, (dim, q)) in &raw {
        if *dim == 0 {
            continue;
        }
        current = if d.rem_euclid(2) == 0 {
            current.mul(q)
        } else {
            current.mul(&q.inv()?)
        };
    }
    let delta = desired.div(&current)?;
    let lowest = raw.iter().find(|(_, (dim, _))| *dim > 0).map(|(&d, _)| d);

    let mut graded: Vec<(i64, QSpace)> = Vec::new();
    for (&d, (dim, q)) in &raw {
        if *dim == 0 {
            continue;
        }
        let mut q = q.clone();
        if Some(d) == lowest {
            let adj = if d.rem_euclid(2) == 0 { delta.clone() } else { delta.inv()? };
            q = q.mul(&adj);
        }
        graded.push((d, QSpace::new(*dim, q)?));
    }
    Ok(ConeReduction {
        complex: QComplex::from_pieces(graded),
        pieces,
        shift,
    })
}

/// The cone with its induced Q-structure (unshifted).
pub fn cone_qstructure(f: &GradedMap) -> Result<QComplex, QdetError> {
    Ok(cone_shifted(f, 0)?.complex)
}

/// Test of triangle multiplicativity: det(b) = det(a) det(c) exactly. The
/// witness must exhibit b as a degreewise extension of c by a.
pub fn is_multiplicative(
    a: &QComplex,
    b: &QComplex,
    c: &QComplex,
    witness: &GradedMap,
) -> Result<bool, QdetError> {
    let mut degrees: Vec<i64> = a.support();
    degrees.extend(b.support());
    degrees.extend(c.support());
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        if b.dim(d) != a.dim(d) + c.dim(d) {
            return Err(QdetError::ShapeMismatch(format!(
                "degree {d}: dim b = {} but dim a + dim c = {}",
                b.dim(d),
                a.dim(d) + c.dim(d)
            )));
        }
        let w = witness.matrix(d);
        if w.rows() != b.dim(d) || w.cols() != a.dim(d) {
            return Err(QdetError::ShapeMismatch(format!(
                "degree {d}: witness must map a into b"
            )));
        }
        if a.dim(d) > 0 {
            let e = echelon(&w)?;
            if e.rank != a.dim(d) {
                return Err(QdetError::ShapeMismatch(format!(
                    "degree {d}: witness is not injective"
                )));
            }
        }
    }
    let lhs = b.det_total();
    let rhs = a.det_total().mul(&c.det_total());
    Ok(lhs == rhs)
}

/// Determinant of a collection of perfect pairings
/// `pi^i : H^i(a) x H^{-i}(b) -> R`: the image of 1 under
/// `Q -> det a (x) det b -> R`, i.e. the alternating product of
/// `det(pi^i) qgen_a,i qgen_b,-i`.
pub fn det_pairing(
    a: &QComplex,
    b: &QComplex,
    pairings: &BTreeMap<i64, PMatrix>,
) -> Result<PeriodValue, QdetError> {
    let mut degrees: Vec<i64> = a.support();
    degrees.extend(b.support().iter().map(|&d| -d));
    degrees.sort_unstable();
    degrees.dedup();
    let mut acc = PeriodValue::one();
    for d in degrees {
        let da = a.dim(d);
        let db = b.dim(-d);
        if da != db {
            return Err(QdetError::PairingDegenerate(format!(
                "degree {d}: dim a_{d} = {da} but dim b_{} = {db}",
                -d
            )));
        }
        if da == 0 {
            continue;
        }
        let m = pairings.get(&d).ok_or_else(|| {
            QdetError::PairingDegenerate(format!("degree {d}: missing pairing matrix"))
        })?;
        if m.rows() != da || m.cols() != db {
            return Err(QdetError::PairingDegenerate(format!(
                "degree {d}: pairing matrix is {}x{}, expected {da}x{db}",
                m.rows(),
                m.cols()
            )));
        }
        let det = m.det()?;
        if det.is_zero() {
            return Err(QdetError::PairingDegenerate(format!(
                "degree {d}: pairing matrix is singular"
            )));
        }
        let factor = det.mul(a.piece(d).qgen()).mul(b.piece(-d).qgen());
        acc = if d.rem_euclid(2) == 0 {
            acc.mul(&factor)
        } else {
            acc.mul(&factor.inv()?)
        };
    }
    Ok(acc)
}
