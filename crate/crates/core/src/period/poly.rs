//! Multivariate polynomials with rational coefficients over the symbol table.
//!
//! Terms are kept sorted in descending lexicographic order, where symbols
//! declared earlier are more significant. Division and gcd are exact; gcd
//! uses a primitive polynomial remainder sequence recursing on the most
//! significant variable present.

use num::{BigRational, One, Zero};
use num::Signed;

use super::symbols::{Conjugation, SymbolId, SymbolTable};

/// A monomial: sorted (symbol id, positive exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct Mono(pub Vec<(u32, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Mono(out)
    }

    /// self / other, if other divides self.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let oe = other.0[j].1;
                j += 1;
                if oe > e {
                    return None;
                }
                if e > oe {
                    out.push((v, e - oe));
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    pub fn exponent_of(&self, var: u32) -> u32 {
        self.0
            .iter()
            .find(|&&(v, _)| v == var)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn without(&self, var: u32) -> Mono {
        Mono(self.0.iter().copied().filter(|&(v, _)| v != var).collect())
    }

    /// Lexicographic order: earlier-declared symbols are more significant.
    fn cmp_lex(&self, other: &Mono) -> std::cmp::Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return std::cmp::Ordering::Greater;
                    }
                    if va > vb {
                        return std::cmp::Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cmp_lex(other)
    }
}

/// Polynomial: terms sorted by descending monomial, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Poly {
    pub terms: Vec<(Mono, BigRational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::one(), c)],
            }
        }
    }

    pub fn symbol(id: SymbolId) -> Self {
        Poly {
            terms: vec![(Mono(vec![(id.0, 1)]), BigRational::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return Some(self.terms[0].1.clone());
        }
        None
    }

    fn from_unsorted(mut terms: Vec<(Mono, BigRational)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca * cb));
            }
        }
        Poly::from_unsorted(terms)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn leading(&self) -> Option<&(Mono, BigRational)> {
        self.terms.first()
    }

    /// Exact multivariate division; None if the division leaves a remainder.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo: Vec<(Mono, BigRational)> = Vec::new();
        let (lm, lc) = other.leading().unwrap();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(lm)?;
            let qc = rc / lc;
            let t = Poly {
                terms: vec![(qm.clone(), qc.clone())],
            };
            rem = rem.sub(&t.mul(other));
            quo.push((qm, qc));
        }
        Some(Poly::from_unsorted(quo))
    }

    pub fn variables(&self) -> Vec<u32> {
        let mut vars: Vec<u32> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.0.iter().map(|&(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn degree_in(&self, var: u32) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent_of(var))
            .max()
            .unwrap_or(0)
    }

    /// Coefficients as a univariate polynomial in `var`; index = exponent.
    fn coeffs_in(&self, var: u32) -> Vec<Poly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent_of(var) as usize;
            let rest = Poly {
                terms: vec![(m.without(var), c.clone())],
            };
            out[e] = out[e].add(&rest);
        }
        out
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    /// Content with respect to `var`: gcd of the univariate coefficients.
    fn content_in(&self, var: u32) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(var) {
            if !c.is_zero() {
                g = Poly::gcd(&g, &c);
            }
        }
        g
    }

    /// Pseudo-remainder of self by other with respect to `var`.
    fn pseudo_rem(&self, other: &Poly, var: u32) -> Poly {
        let db = other.degree_in(var);
        let mut r = self.clone();
        let b_coeffs = other.coeffs_in(var);
        let lc_b = b_coeffs[db as usize].clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let r_coeffs = r.coeffs_in(var);
            let lc_r = r_coeffs[dr as usize].clone();
            // lc_b * r - lc_r * x^(dr-db) * other
            let shift = Poly {
                terms: vec![(Mono(vec![(var, dr - db)]), BigRational::one())],
            };
            let shift = if dr == db { Poly::one() } else { shift };
            r = r.mul(&lc_b).sub(&other.mul(&shift).mul(&lc_r));
            debug_assert!(r.is_zero() || r.degree_in(var) < dr);
        }
        r
    }

    /// The largest monomial dividing every term.
    fn common_monomial(&self) -> Mono {
        let mut iter = self.terms.iter();
        let mut acc = match iter.next() {
            None => return Mono::one(),
            Some((m, _)) => m.clone(),
        };
        for (m, _) in iter {
            if acc.is_one() {
                break;
            }
            let mut out = Vec::new();
            for &(v, e) in &acc.0 {
                let other = m.exponent_of(v);
                if other > 0 {
                    out.push((v, e.min(other)));
                }
            }
            acc = Mono(out);
        }
        acc
    }

    /// Monic gcd; gcd(0, 0) = 0, and any nonzero constant input gives 1.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        // Strip the common monomial factors first; the stripped parts often
        // divide each other outright, which avoids the remainder sequence.
        let ma = a.common_monomial();
        let mb = b.common_monomial();
        if !ma.is_one() || !mb.is_one() {
            let mono_gcd = {
                let mut out = Vec::new();
                for &(v, e) in &ma.0 {
                    let other = mb.exponent_of(v);
                    if other > 0 {
                        out.push((v, e.min(other)));
                    }
                }
                Mono(out)
            };
            let strip = |p: &Poly, m: &Mono| Poly {
                terms: p
                    .terms
                    .iter()
                    .map(|(mm, c)| (mm.div(m).expect("common factor divides"), c.clone()))
                    .collect(),
            };
            let inner = Poly::gcd(&strip(a, &ma), &strip(b, &mb));
            let g = Poly {
                terms: vec![(mono_gcd, BigRational::one())],
            };
            return g.mul(&inner).monic();
        }
        if a.terms.len() == 1 || b.terms.len() == 1 {
            // coprime after monomial stripping
            return Poly::one();
        }
        if b.div_exact(a).is_some() {
            return a.monic();
        }
        if a.div_exact(b).is_some() {
            return b.monic();
        }
        let va = a.variables();
        let vb = b.variables();
        let var = *va.iter().chain(vb.iter()).min().unwrap();
        if !va.contains(&var) || !vb.contains(&var) {
            // The most significant variable occurs in only one argument, so
            // the gcd cannot involve it: recurse against the content.
            let (with, without) = if va.contains(&var) { (a, b) } else { (b, a) };
            return Poly::gcd(&with.content_in(var), without);
        }
        let cont_a = a.content_in(var);
        let cont_b = b.content_in(var);
        let cont = Poly::gcd(&cont_a, &cont_b);
        let pa = a.div_exact(&cont_a).unwrap();
        let pb = b.div_exact(&cont_b).unwrap();
        let (mut f, mut g) = if pa.degree_in(var) >= pb.degree_in(var) {
            (pa, pb)
        } else {
            (pb, pa)
        };
        loop {
            let r = f.pseudo_rem(&g, var);
            if r.is_zero() {
                break;
            }
            let rc = r.content_in(var);
            f = g;
            g = r.div_exact(&rc).unwrap();
        }
        // Drop the content the PRS may have accumulated in g.
        let gc = g.content_in(var);
        let g = g.div_exact(&gc).unwrap();
        cont.mul(&g).monic()
    }

    /// Apply the symbol-wise conjugation: negated symbols change sign.
    pub fn conj(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let odd: u32 = m
                    .0
                    .iter()
                    .filter(|&&(v, _)| SymbolTable::conjugation(SymbolId(v)) == Conjugation::Negated)
                    .map(|&(_, e)| e)
                    .sum();
                let c = if odd % 2 == 1 { -c } else { c.clone() };
                (m.clone(), c)
            })
            .collect();
        Poly { terms }
    }

    pub fn symbol_ids(&self) -> Vec<SymbolId> {
        self.variables().into_iter().map(SymbolId).collect()
    }

    pub fn eval_f64(&self, assign: &dyn Fn(SymbolId) -> Option<f64>) -> Option<f64> {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut v = num::ToPrimitive::to_f64(c)?;
            for &(sym, e) in &m.0 {
                v *= assign(SymbolId(sym))?.powi(e as i32);
            }
            total += v;
        }
        Some(total)
    }
}

/// Render a polynomial using `*`, `^` and explicit rational coefficients.
pub(crate) fn poly_to_string(p: &Poly, imag: bool) -> String {
    if p.is_zero() {
        return String::new();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || (m.is_one() && !imag) {
            let s = if abs.denom().is_one() {
                format!("{}", abs.numer())
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            factors.push(s);
        }
        for &(v, e) in &m.0 {
            let name = SymbolTable::name(SymbolId(v));
            if e == 1 {
                factors.push(name);
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        if imag {
            factors.push("i".to_string());
        }
        out.push_str(&factors.join("*"));
    }
    out
}
