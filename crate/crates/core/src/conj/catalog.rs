//! The shipped catalog of motivic data: Tate data over Z, projective spaces
//! and an elliptic curve supported at small primes, and Soule rank tables.
//!
//! Motivic cohomology ranks and regulator matrices are inputs with
//! documented provenance, not computed: ranks of K-groups of Z and of
//! projective spaces over finite fields are classical (Quillen, Borel), and
//! the elliptic numerator at p = 5 is the counted one for the bundled curve
//! y^2 z = x^3 - x z^2.

use std::collections::BTreeMap;

use num::BigRational;

use super::{ConjError, LObject, MotivicDatum};
use crate::frob::{euler_poly, EulerFactor, FrobModule};
use crate::hodge::{weak_duality, HodgeDatum};
use crate::linalg::PMatrix;
use crate::period::PeriodValue;
use crate::qdet::{QComplex, QSpace};
use crate::zeta::ZetaWord;

fn qline(degree: i64) -> QComplex {
    QComplex::single(degree, QSpace::line(PeriodValue::one()).unwrap())
}

/// 1 over Z: motivic cohomology Q in degree 0, regulator the identity onto
/// Hw^0(1(0)), L-object zeta(s). D(1) = 1(1)[2] has no rational cohomology,
/// so the compact-support complex is exact and det pi = 1. Carries the
/// K-rank table of Spec Z in twist 1 (rk K'_0 = 1) for the Soule check.
pub fn tate_0() -> MotivicDatum {
    let mut regulators = BTreeMap::new();
    regulators.insert(0, PMatrix::identity(1));
    MotivicDatum {
        label: "tate_0".into(),
        h_m: qline(0),
        h_dm: QComplex::empty(),
        hodge: vec![(0, HodgeDatum::tate(0))],
        regulators,
        pairings: BTreeMap::new(),
        lobject: LObject::Word(ZetaWord::zeta_shift(0, 1)),
        k_ranks: Some(BTreeMap::from([(1, vec![1])])),
    }
}

/// 1(1) over Z: no rational motivic cohomology, Hodge realization 1(1), so
/// H_c^2 = Hw^1(1(1)); D(1(1)) = 1[2] contributes Q in degree -2. The
/// pairing matrix is the weak duality value of the coker basis against the
/// image of 1 under the regulator of D(M), computed honestly here.
pub fn tate_1() -> MotivicDatum {
    let h = HodgeDatum::tate(1);
    let wd = weak_duality(&h).expect("Tate duality is perfect");
    // H_c^2 basis = Hw^1(1(1)) coker basis; H^{-2}(DM) = H^0(1) maps by the
    // regulator (the identity onto the kernel basis of alpha_{1(0)}).
    assert_eq!(wd.pairing_hw1.rows(), 1);
    let mut pairings = BTreeMap::new();
    pairings.insert(2, wd.pairing_hw1.clone());
    MotivicDatum {
        label: "tate_1".into(),
        h_m: QComplex::empty(),
        h_dm: qline(-2),
        hodge: vec![(0, h)],
        regulators: BTreeMap::new(),
        pairings,
        lobject: LObject::Word(ZetaWord::zeta_shift(1, 1)),
        k_ranks: None,
    }
}

fn pow_q(p: u64, e: i64) -> BigRational {
    let base = BigRational::from_integer(num::BigInt::from(p));
    if e >= 0 {
        base.pow(e as i32)
    } else {
        base.pow((-e) as i32).recip()
    }
}

/// The Frobenius module of i_* M(P^n)(m) at p: inverse Frobenius eigenvalues
/// p^{j-m}, j = 0..n.
pub fn frob_projective_space(p: u64, n: usize, m: i64) -> FrobModule {
    let eigen: Vec<BigRational> = (0..=n as i64).map(|j| pow_q(p, j - m)).collect();
    FrobModule::diagonal(p, 1, &eigen).expect("eigenvalues are nonzero")
}

/// i_* M(P^n)(m) at p: rational cohomology Q in degree 2m exactly when
/// 0 <= m <= n (the Chow group CH^m(P^n)), the duality pairing is
/// multiplication by log p, and the L-object is the Euler factor
/// prod_j (1 - p^{j-m} t)^{-1}.
pub fn fp_projective_space(p: u64, n: usize, m: i64) -> MotivicDatum {
    let in_range = 0 <= m && m <= n as i64;
    let (h_m, h_dm, pairings) = if in_range {
        let mut pairings = BTreeMap::new();
        pairings.insert(
            2 * m,
            PMatrix::new(1, 1, vec![PeriodValue::log_prime(p).unwrap()]),
        );
        (qline(2 * m), qline(-2 * m), pairings)
    } else {
        (QComplex::empty(), QComplex::empty(), BTreeMap::new())
    };
    MotivicDatum {
        label: format!("fp_pn_m({p},{n},{m})"),
        h_m,
        h_dm,
        hodge: Vec::new(),
        regulators: BTreeMap::new(),
        pairings,
        lobject: LObject::Factors(vec![euler_poly(&frob_projective_space(p, n, m))]),
        // The Soule check compares the untwisted zeta against the rank
        // table, so the table ships on the m = 0 datum only:
        // rk K'_0(P^n)_(j) = 1 for 0 <= j <= n (Chow groups of P^n).
        k_ranks: if m == 0 {
            Some((0..=n as i64).map(|j| (j, vec![1])).collect())
        } else {
            None
        },
    }
}

/// The point Spec F_p, as i_* Mc(Spec F_p) = fp_pn_m(p, 0, 0).
pub fn fp_point(p: u64) -> MotivicDatum {
    let mut d = fp_projective_space(p, 0, 0);
    d.label = format!("fp_pt({p})");
    d
}

/// i_* Mc(A^1_{F_p}): factor (1 - p t)^{-1}, no rational cohomology at m=0,
/// K-rank 1 in twist 1.
pub fn fp_affine_line(p: u64) -> MotivicDatum {
    let frob = FrobModule::scalar(p, 1, BigRational::from_integer(p.into())).unwrap();
    MotivicDatum {
        label: format!("fp_a1({p})"),
        h_m: QComplex::empty(),
        h_dm: QComplex::empty(),
        hodge: Vec::new(),
        regulators: BTreeMap::new(),
        pairings: BTreeMap::new(),
        lobject: LObject::Factors(vec![euler_poly(&frob)]),
        k_ranks: Some(BTreeMap::from([(1, vec![1])])),
    }
}

/// The bundled elliptic curve y^2 z = x^3 - x z^2 over F_5 (trace a = -2):
/// i_* M(E)(m) with numerator 1 + 2t + 5t^2 twisted by m.
pub fn fp_elliptic(p: u64, m: i64) -> Result<MotivicDatum, ConjError> {
    if p != 5 {
        return Err(ConjError::UnknownDatum(format!(
            "fp_elliptic({p},{m}): only the bundled curve at p = 5 ships"
        )));
    }
    let a = BigRational::from_integer((-2).into());
    // numerator coefficients of 1 - a t + p t^2, twisted: t -> p^{-m} t
    let num = EulerFactor {
        p,
        f: 1,
        poly: crate::ratpoly::RatPoly::new(vec![
            BigRational::from_integer(1.into()),
            -&a * pow_q(p, -m),
            pow_q(p, 1 - 2 * m),
        ]),
        exponent: -1,
    };
    let den0 = EulerFactor {
        p,
        f: 1,
        poly: crate::ratpoly::RatPoly::one_minus_ct(pow_q(p, -m)),
        exponent: 1,
    };
    let den1 = EulerFactor {
        p,
        f: 1,
        poly: crate::ratpoly::RatPoly::one_minus_ct(pow_q(p, 1 - m)),
        exponent: 1,
    };
    let in_range = m == 0 || m == 1;
    let (h_m, h_dm, pairings) = if in_range {
        let mut pairings = BTreeMap::new();
        pairings.insert(
            2 * m,
            PMatrix::new(1, 1, vec![PeriodValue::log_prime(p).unwrap()]),
        );
        (qline(2 * m), qline(-2 * m), pairings)
    } else {
        (QComplex::empty(), QComplex::empty(), BTreeMap::new())
    };
    Ok(MotivicDatum {
        label: format!("fp_elliptic({p},{m})"),
        h_m,
        h_dm,
        hodge: Vec::new(),
        regulators: BTreeMap::new(),
        pairings,
        lobject: LObject::Factors(vec![den0, num, den1]),
        k_ranks: if m == 0 {
            Some(BTreeMap::from([(0, vec![1]), (1, vec![1])]))
        } else {
            None
        },
    })
}

/// Spec Z with the Borel rank table in twist 1: rk K'_0(Z)_(1) = 1.
pub fn spec_z_soule() -> MotivicDatum {
    let mut d = tate_0();
    d.label = "spec_z_soule".into();
    d
}

fn parse_args(name: &str, prefix: &str) -> Option<Vec<i64>> {
    let rest = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    rest.split(',')
        .map(|s| s.trim().parse::<i64>().ok())
        .collect()
}

/// Lookup in the shipped catalog by name, e.g. `tate_0`, `fp_pn_m(2,1,0)`,
/// `fp_pt(3)`, `fp_a1(5)`, `fp_elliptic(5,0)`, `spec_z_soule`.
pub fn builtin_datum(name: &str) -> Result<MotivicDatum, ConjError> {
    match name {
        "tate_0" => return Ok(tate_0()),
        "tate_1" => return Ok(tate_1()),
        "spec_z_soule" => return Ok(spec_z_soule()),
        _ => {}
    }
    if let Some(args) = parse_args(name, "fp_pn_m") {
        if let [p, n, m] = args[..] {
            if ![2, 3, 5].contains(&p) || !(0..=3).contains(&n) {
                return Err(ConjError::UnknownDatum(name.to_string()));
            }
            return Ok(fp_projective_space(p as u64, n as usize, m));
        }
    }
    if let Some(args) = parse_args(name, "fp_pt") {
        if let [p] = args[..] {
            if [2, 3, 5].contains(&p) {
                return Ok(fp_point(p as u64));
            }
        }
    }
    if let Some(args) = parse_args(name, "fp_a1") {
        if let [p] = args[..] {
            if [2, 3, 5].contains(&p) {
                return Ok(fp_affine_line(p as u64));
            }
        }
    }
    if let Some(args) = parse_args(name, "fp_elliptic") {
        if let [p, m] = args[..] {
            return fp_elliptic(p as u64, m);
        }
    }
    Err(ConjError::UnknownDatum(name.to_string()))
}

/// Names of every datum in the shipped catalog (the default suite).
pub fn catalog_names() -> Vec<String> {
    let mut names = vec![
        "tate_0".to_string(),
        "tate_1".to_string(),
        "spec_z_soule".to_string(),
    ];
    for p in [2u64, 3, 5] {
        names.push(format!("fp_pt({p})"));
        names.push(format!("fp_a1({p})"));
        for n in 0..=3usize {
            for m in -2..=(n as i64 + 2) {
                names.push(format!("fp_pn_m({p},{n},{m})"));
            }
        }
    }
    for m in 0..=1 {
        names.push(format!("fp_elliptic(5,{m})"));
    }
    names
}
