//! Small finite fields F_{p^k} with exp/log tables for fast multiplication.
//!
//! Elements are encoded as base-p digit vectors packed into a `u32`
//! (coefficients of the residue polynomial, least significant digit first).

/// Arithmetic tables for F_q, q = p^k.
pub struct GaloisField {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    /// exp[i] = g^i for a generator g; length q-1.
    exp: Vec<u32>,
    /// log[code] = i with exp[i] = code; log[0] unused.
    log: Vec<u32>,
    /// Base-p digit add tables are implicit; kept as p and k.
    digits: u32,
}

fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce modulo the monic modulus
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for j in 0..k {
            let sub = (c * modulus[j]) % p;
            prod[d - k + j] = (prod[d - k + j] + p * p - sub) % p;
        }
    }
    prod.truncate(k.max(1));
    while prod.len() < k.max(1) {
        prod.push(0);
    }
    prod
}

fn encode(digits: &[u64], p: u64) -> u32 {
    let mut code = 0u64;
    for &d in digits.iter().rev() {
        code = code * p + d;
    }
    code as u32
}

fn find_irreducible(p: u64, k: u32) -> Vec<u64> {
    // Monic polynomial of degree k over F_p with no roots in any proper
    // subfield: test gcd(x^(p^d) - x, f) for d <= k/2 via repeated powering.
    if k == 1 {
        return vec![0, 1];
    }
    let kk = k as usize;
    'cand: for code in 0..p.pow(k) {
        let mut f = vec![0u64; kk + 1];
        let mut c = code;
        for digit in f.iter_mut().take(kk) {
            *digit = c % p;
            c /= p;
        }
        f[kk] = 1;
        // f must not be divisible by x
        if f[0] == 0 {
            continue;
        }
        // compute x^(p^d) mod f iteratively; require x^(p^k) = x and
        // x^(p^d) != x for all proper divisors d of k.
        let x = vec![0u64, 1];
        let mut xp = x.clone();
        xp.resize(kk, 0);
        for d in 1..=k {
            // xp := xp^p mod f
            let mut acc = vec![1u64];
            acc.resize(kk, 0);
            let mut base = xp.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mul_mod(&acc, &base, &f, p);
                }
                base = poly_mul_mod(&base, &base, &f, p);
                e >>= 1;
            }
            xp = acc;
            let mut xx = x.clone();
            xx.resize(kk, 0);
            let is_x = xp == xx;
            if d < k && k % d == 0 && is_x {
                continue 'cand;
            }
            if d == k && !is_x {
                continue 'cand;
            }
        }
        return f;
    }
    unreachable!("irreducible polynomial of degree {k} over F_{p} exists");
}

impl GaloisField {
    pub fn new(p: u64, k: u32) -> GaloisField {
        assert!(k >= 1);
        let q = p.pow(k);
        let modulus = find_irreducible(p, k);
        // find a generator of the multiplicative group by trial
        let order = q - 1;
        let mut factors = Vec::new();
        let mut n = order;
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                factors.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        let kk = k as usize;
        let pow = |base: &[u64], mut e: u64| -> Vec<u64> {
            let mut acc = vec![1u64];
            acc.resize(kk.max(1), 0);
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mul_mod(&acc, &b, &modulus, p);
                }
                b = poly_mul_mod(&b, &b, &modulus, p);
                e >>= 1;
            }
            acc
        };
        let mut gen = None;
        'search: for code in 1..q {
            let mut g = vec![0u64; kk.max(1)];
            let mut c = code;
            for digit in g.iter_mut() {
                *digit = c % p;
                c /= p;
            }
            for &f in &factors {
                let e = pow(&g, order / f);
                let one = {
                    let mut o = vec![0u64; kk.max(1)];
                    o[0] = 1;
                    o
                };
                if e == one {
                    continue 'search;
                }
            }
            gen = Some(g);
            break;
        }
        let gen = gen.expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u64; kk.max(1)];
        cur[0] = 1;
        for i in 0..order {
            let code = encode(&cur, p);
            exp.push(code);
            log[code as usize] = i as u32;
            cur = poly_mul_mod(&cur, &gen, &modulus, p);
        }
        GaloisField {
            p,
            k,
            q,
            exp,
            log,
            digits: k,
        }
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    /// Embed an integer (the image of n mod p).
    pub fn from_int(&self, n: i64) -> u32 {
        let r = n.rem_euclid(self.p as i64) as u64;
        r as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            return if (s as u64) >= self.p { s - self.p as u32 } else { s };
        }
        let mut out = 0u64;
        let (mut a, mut b) = (a as u64, b as u64);
        let mut mult = 1u64;
        for _ in 0..self.digits {
            let mut s = a % self.p + b % self.p;
            if s >= self.p {
                s -= self.p;
            }
            out += s * mult;
            mult *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let mut i = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        if i >= order {
            i -= order;
        }
        self.exp[i as usize]
    }

    #[inline]
    pub fn pow(&self, a: u32, e: u32) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = self.q - 1;
        let i = (self.log[a as usize] as u64 * e as u64) % order;
        self.exp[i as usize]
    }

    /// Table of x -> x^e over all field elements.
    pub fn pow_table(&self, e: u32) -> Vec<u32> {
        (0..self.q as u32).map(|x| self.pow(x, e)).collect()
    }

    /// Iterate over all field elements (codes 0..q).
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.q as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arith() {
        let f = GaloisField::new(5, 1);
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.pow(2, 4), 1);
    }

    #[test]
    fn extension_field_axioms() {
        for (p, k) in [(2u64, 4u32), (3, 2), (5, 2)] {
            let f = GaloisField::new(p, k);
            // multiplicative order of every nonzero element divides q-1
            for a in 1..f.q as u32 {
                assert_eq!(f.pow(a, (f.q - 1) as u32), 1, "fermat in F_{}^{}", p, k);
            }
            // distributivity on a sample
            let els: Vec<u32> = f.elements().collect();
            for &a in els.iter().take(6) {
                for &b in els.iter().take(6) {
                    for &c in els.iter().take(6) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
