//! Shared random generators for the integration suites.

use num::{BigRational, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use mlv_core::frob::FrobModule;
use mlv_core::hodge::HodgeDatum;
use mlv_core::linalg::PMatrix;
use mlv_core::period::PeriodValue;
use mlv_core::qdet::{GradedMap, QComplex, QSpace};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn rand_rational(rng: &mut ChaCha8Rng) -> BigRational {
    q(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn rand_nonzero_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let x = rand_rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random real period value: rational, or a rational multiple of log_2,
/// log_3 or pi.
pub fn rand_real_period(rng: &mut ChaCha8Rng) -> PeriodValue {
    let base = PeriodValue::from_rational(rand_rational(rng));
    match rng.gen_range(0..4) {
        0 => base,
        1 => base.mul(&PeriodValue::log_prime(2).unwrap()),
        2 => base.mul(&PeriodValue::log_prime(3).unwrap()),
        _ => base.mul(&PeriodValue::pi()),
    }
}

pub fn rand_nonzero_real_period(rng: &mut ChaCha8Rng) -> PeriodValue {
    loop {
        let x = rand_real_period(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn rand_complex(rng: &mut ChaCha8Rng, degrees: std::ops::RangeInclusive<i64>) -> QComplex {
    let pieces: Vec<(i64, QSpace)> = degrees
        .filter_map(|d| {
            let dim = rng.gen_range(0..=3usize);
            if dim == 0 {
                None
            } else {
                Some((d, QSpace::new(dim, rand_nonzero_real_period(rng)).unwrap()))
            }
        })
        .collect();
    QComplex::from_pieces(pieces)
}

pub fn rand_map(rng: &mut ChaCha8Rng) -> GradedMap {
    let source = rand_complex(rng, -1..=1);
    let target = rand_complex(rng, -1..=1);
    let mut maps = Vec::new();
    for d in -1..=1 {
        let rows = target.dim(d);
        let cols = source.dim(d);
        if rows == 0 && cols == 0 {
            continue;
        }
        let m = PMatrix::from_fn(rows, cols, |_, _| {
            if rng.gen_bool(0.3) {
                PeriodValue::zero()
            } else {
                rand_real_period(rng)
            }
        });
        maps.push((d, m));
    }
    GradedMap::new(source, target, maps).unwrap()
}

/// Random invertible rational matrix.
pub fn rand_rational_gl(rng: &mut ChaCha8Rng, n: usize) -> PMatrix {
    let mut upper = PMatrix::identity(n);
    let mut lower = PMatrix::identity(n);
    for i in 0..n {
        upper[(i, i)] = PeriodValue::from_rational(rand_nonzero_rational(rng));
        for j in i + 1..n {
            upper[(i, j)] = PeriodValue::from_rational(rand_rational(rng));
            lower[(j, i)] = PeriodValue::from_rational(rand_rational(rng));
        }
    }
    lower.mul(&upper)
}

pub fn rand_upper_triangular(rng: &mut ChaCha8Rng, n: usize) -> PMatrix {
    let mut upper = PMatrix::identity(n);
    for i in 0..n {
        upper[(i, i)] = PeriodValue::from_rational(rand_nonzero_rational(rng));
        for j in i + 1..n {
            upper[(i, j)] = PeriodValue::from_rational(rand_rational(rng));
        }
    }
    upper
}

/// Random small Hodge data: sums of Tate twists mixed by rational base
/// changes, optionally with the symbolic elliptic block appended unmixed.
pub fn rand_hodge(rng: &mut ChaCha8Rng) -> HodgeDatum {
    let tate_blocks = rng.gen_range(0..=3usize);
    let with_elliptic = tate_blocks == 0 || rng.gen_bool(0.3);
    let tate_part = (0..tate_blocks)
        .map(|_| HodgeDatum::tate(rng.gen_range(-2..=2)))
        .reduce(|a, b| a.direct_sum(&b).unwrap())
        .map(|d| {
            let n = d.rank;
            let b = rand_rational_gl(rng, n);
            let upper = rand_upper_triangular(rng, n);
            d.base_change(&b, &upper).unwrap()
        });
    match (tate_part, with_elliptic) {
        (Some(t), true) => t.direct_sum(&HodgeDatum::elliptic_h1()).unwrap(),
        (Some(t), false) => t,
        (None, _) => HodgeDatum::elliptic_h1(),
    }
}

pub fn rand_frob(rng: &mut ChaCha8Rng, max_rank: usize, max_f: u32) -> FrobModule {
    let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
    let f = rng.gen_range(1..=max_f);
    let n = rng.gen_range(1..=max_rank);
    loop {
        let m: Vec<Vec<BigRational>> = (0..n)
            .map(|_| (0..n).map(|_| q(rng.gen_range(-3..=3), 1)).collect())
            .collect();
        if let Ok(v) = FrobModule::new(p, f, m) {
            return v;
        }
    }
}
