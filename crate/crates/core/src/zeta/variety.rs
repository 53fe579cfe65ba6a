//! Variety specifications and brute-force point counting over finite fields.

use serde::{Deserialize, Serialize};

use super::gf::GaloisField;
use super::ZetaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarietyKind {
    Affine,
    Projective,
}

/// A term of an integer polynomial: coefficient and one exponent per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntTerm {
    pub coeff: i64,
    pub exps: Vec<u32>,
}

/// An integer-coefficient polynomial in variables x0..x{n-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    pub nvars: usize,
    pub terms: Vec<IntTerm>,
}

impl IntPoly {
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.exps.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.exps.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }
}

/// Parse a polynomial in variables `x0..xN` with `+ - * ^` and integer
/// constants, e.g. `x1^2*x2 - x0^3 + x0*x2^2`.
pub fn parse_int_poly(src: &str, nvars: usize) -> Result<IntPoly, ZetaError> {
    struct P<'a> {
        src: &'a [u8],
        pos: usize,
        nvars: usize,
    }
    impl<'a> P<'a> {
        fn skip_ws(&mut self) {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }
        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.src.get(self.pos).copied()
        }
        fn err(&self, msg: &str) -> ZetaError {
            ZetaError::Parse(format!("{msg} at byte {}", self.pos))
        }
        fn expr(&mut self) -> Result<Vec<IntTerm>, ZetaError> {
            let mut terms = self.term()?;
            loop {
                match self.peek() {
                    Some(b'+') => {
                        self.pos += 1;
                        terms.extend(self.term()?);
                    }
                    Some(b'-') => {
                        self.pos += 1;
                        let mut t = self.term()?;
                        for x in &mut t {
                            x.coeff = -x.coeff;
                        }
                        terms.extend(t);
                    }
                    _ => return Ok(terms),
                }
            }
        }
        fn term(&mut self) -> Result<Vec<IntTerm>, ZetaError> {
            let mut acc = self.factor()?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                let f = self.factor()?;
                let mut out = Vec::new();
                for a in &acc {
                    for b in &f {
                        let exps = a
                            .exps
                            .iter()
                            .zip(&b.exps)
                            .map(|(x, y)| x + y)
                            .collect();
                        out.push(IntTerm {
                            coeff: a.coeff * b.coeff,
                            exps,
                        });
                    }
                }
                acc = out;
            }
            Ok(acc)
        }
        fn factor(&mut self) -> Result<Vec<IntTerm>, ZetaError> {
            let mut base = self.atom()?;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| self.err("bad exponent"))?;
                let mut acc = vec![IntTerm {
                    coeff: 1,
                    exps: vec![0; self.nvars],
                }];
                for _ in 0..e {
                    let mut out = Vec::new();
                    for a in &acc {
                        for b in &base {
                            let exps = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
                            out.push(IntTerm {
                                coeff: a.coeff * b.coeff,
                                exps,
                            });
                        }
                    }
                    acc = out;
                }
                base = acc;
            }
            Ok(base)
        }
        fn atom(&mut self) -> Result<Vec<IntTerm>, ZetaError> {
            match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    let mut t = self.factor()?;
                    for x in &mut t {
                        x.coeff = -x.coeff;
                    }
                    Ok(t)
                }
                Some(b'(') => {
                    self.pos += 1;
                    let t = self.expr()?;
                    if self.peek() != Some(b')') {
                        return Err(self.err("expected )"));
                    }
                    self.pos += 1;
                    Ok(t)
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let n: i64 = std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| self.err("integer too large"))?;
                    Ok(vec![IntTerm {
                        coeff: n,
                        exps: vec![0; self.nvars],
                    }])
                }
                Some(b'x') => {
                    self.pos += 1;
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let idx: usize = std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| self.err("bad variable index"))?;
                    if idx >= self.nvars {
                        return Err(ZetaError::Parse(format!(
                            "variable x{idx} out of range (have x0..x{})",
                            self.nvars - 1
                        )));
                    }
                    let mut exps = vec![0; self.nvars];
                    exps[idx] = 1;
                    Ok(vec![IntTerm { coeff: 1, exps }])
                }
                _ => Err(self.err("expected term")),
            }
        }
    }
    let mut p = P {
        src: src.as_bytes(),
        pos: 0,
        nvars,
    };
    let terms = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    // merge duplicate monomials
    let mut merged: Vec<IntTerm> = Vec::new();
    for t in terms {
        if let Some(m) = merged.iter_mut().find(|m| m.exps == t.exps) {
            m.coeff += t.coeff;
        } else {
            merged.push(t);
        }
    }
    merged.retain(|t| t.coeff != 0);
    Ok(IntPoly {
        nvars,
        terms: merged,
    })
}

/// A desk-scale variety: affine (variables x0..x{n-1}) or projective
/// (homogeneous coordinates x0..xn).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VarietySpec {
    pub kind: VarietyKind,
    pub ambient_dim: usize,
    pub equations: Vec<String>,
}

impl VarietySpec {
    pub fn affine(ambient_dim: usize, equations: &[&str]) -> Self {
        VarietySpec {
            kind: VarietyKind::Affine,
            ambient_dim,
            equations: equations.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn projective(ambient_dim: usize, equations: &[&str]) -> Self {
        VarietySpec {
            kind: VarietyKind::Projective,
            ambient_dim,
            equations: equations.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        match self.kind {
            VarietyKind::Affine => self.ambient_dim,
            VarietyKind::Projective => self.ambient_dim + 1,
        }
    }

    pub fn parsed_equations(&self) -> Result<Vec<IntPoly>, ZetaError> {
        let polys: Vec<IntPoly> = self
            .equations
            .iter()
            .map(|e| parse_int_poly(e, self.nvars()))
            .collect::<Result<_, _>>()?;
        if self.kind == VarietyKind::Projective {
            for (i, p) in polys.iter().enumerate() {
                if !p.is_homogeneous() {
                    return Err(ZetaError::Parse(format!(
                        "equation {i} is not homogeneous"
                    )));
                }
            }
        }
        Ok(polys)
    }

    /// Number of candidate points the enumeration will visit over F_q.
    pub fn candidates(&self, q: u64) -> u128 {
        match self.kind {
            VarietyKind::Affine => (q as u128).pow(self.ambient_dim as u32),
            VarietyKind::Projective => {
                let mut total = 0u128;
                for j in 0..=self.ambient_dim {
                    total += (q as u128).pow((self.ambient_dim - j) as u32);
                }
                total
            }
        }
    }
}

struct CompiledTerm {
    coeff: u32,
    /// (variable index, index into the power tables)
    pows: Vec<(usize, usize)>,
}

struct Compiled {
    eqs: Vec<Vec<CompiledTerm>>,
    /// one table per distinct exponent: x -> x^e
    tables: Vec<Vec<u32>>,
}

fn compile(polys: &[IntPoly], gf: &GaloisField) -> Compiled {
    let mut exponents: Vec<u32> = Vec::new();
    let mut table_index = |e: u32, exps: &mut Vec<u32>| -> usize {
        if let Some(i) = exps.iter().position(|&x| x == e) {
            i
        } else {
            exps.push(e);
            exps.len() - 1
        }
    };
    let eqs = polys
        .iter()
        .map(|p| {
            p.terms
                .iter()
                .map(|t| CompiledTerm {
                    coeff: gf.from_int(t.coeff),
                    pows: t
                        .exps
                        .iter()
                        .enumerate()
                        .filter(|&(_, &e)| e > 0)
                        .map(|(i, &e)| (i, table_index(e, &mut exponents)))
                        .collect(),
                })
                .filter(|t| t.coeff != 0)
                .collect()
        })
        .collect();
    Compiled {
        eqs,
        tables: exponents.into_iter().map(|e| gf.pow_table(e)).collect(),
    }
}

#[inline]
fn vanishes(c: &Compiled, point: &[u32], gf: &GaloisField) -> bool {
    for eq in &c.eqs {
        let mut acc = 0u32;
        for term in eq {
            let mut v = term.coeff;
            for &(var, tbl) in &term.pows {
                let x = c.tables[tbl][point[var] as usize];
                if x == 0 {
                    v = 0;
                    break;
                }
                v = gf.mul(v, x);
            }
            if v != 0 {
                acc = gf.add(acc, v);
            }
        }
        if acc != 0 {
            return false;
        }
    }
    true
}

/// Exact number of F_{p^k}-points by brute-force enumeration (projective:
/// one representative per scaling orbit, leading coordinate 1).
pub fn point_count(spec: &VarietySpec, p: u64, k: u32, budget: u64) -> Result<u64, ZetaError> {
    let q = p
        .checked_pow(k)
        .ok_or_else(|| ZetaError::BudgetExceeded { candidates: u128::MAX, budget })?;
    let candidates = spec.candidates(q);
    if candidates > budget as u128 {
        return Err(ZetaError::BudgetExceeded { candidates, budget });
    }
    let polys = spec.parsed_equations()?;
    let gf = GaloisField::new(p, k);
    let compiled = compile(&polys, &gf);
    let mut count = 0u64;
    match spec.kind {
        VarietyKind::Affine => {
            let n = spec.ambient_dim;
            if n == 0 {
                return Ok(if compiled.eqs.iter().all(|e| e.is_empty()) { 1 } else { 0 });
            }
            let mut point = vec![0u32; n];
            loop {
                if vanishes(&compiled, &point, &gf) {
                    count += 1;
                }
                // mixed-radix increment
                let mut i = 0;
                loop {
                    if i == n {
                        return Ok(count);
                    }
                    point[i] += 1;
                    if (point[i] as u64) < q {
                        break;
                    }
                    point[i] = 0;
                    i += 1;
                }
            }
        }
        VarietyKind::Projective => {
            let n = spec.ambient_dim;
            // Representatives: x_j = 1, x_i = 0 for i < j, x_i free for i > j.
            for lead in 0..=n {
                let free = n - lead;
                let mut point = vec![0u32; n + 1];
                point[lead] = 1;
                if free == 0 {
                    if vanishes(&compiled, &point, &gf) {
                        count += 1;
                    }
                    continue;
                }
                loop {
                    if vanishes(&compiled, &point, &gf) {
                        count += 1;
                    }
                    let mut i = lead + 1;
                    loop {
                        if i == n + 1 {
                            break;
                        }
                        point[i] += 1;
                        if (point[i] as u64) < q {
                            break;
                        }
                        point[i] = 0;
                        i += 1;
                    }
                    if i == n + 1 {
                        break;
                    }
                }
            }
            Ok(count)
        }
    }
}
