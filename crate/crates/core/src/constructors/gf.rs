//! GF(p^f) arithmetic via materialized add/mul tables.
//!
//! The modulus is the lexicographically first monic irreducible polynomial
//! of degree `f` over `F_p`, found by exhaustive search: deterministic and
//! cheap for the field sizes in scope (q ≤ 32 at default caps).

use super::ConstructError;
use crate::numtheory::prime_power_decompose;

/// A field `GF(p^f)` defined by a validated monic irreducible modulus,
/// stored as its coefficient list `c₀..c_f` (little-endian, `c_f = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFieldSpec {
    pub p: u64,
    pub f: u32,
    pub modulus: Vec<u64>,
}

impl FiniteFieldSpec {
    /// Field of size `q = p^f`. Errors when `q` is not a prime power.
    pub fn for_size(q: u64) -> Result<Self, ConstructError> {
        let (p, f) = prime_power_decompose(q).ok_or(ConstructError::NotPrimePower { q })?;
        let modulus = first_irreducible(p, f);
        debug_assert!(is_irreducible(&modulus, p));
        Ok(FiniteFieldSpec { p, f, modulus })
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.f)
    }
}

// ---- polynomial arithmetic over F_p, little-endian coefficient vectors ----

fn trim(poly: &mut Vec<u64>) {
    while poly.last() == Some(&0) {
        poly.pop();
    }
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    trim(&mut a);
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p);
    while a.len() > db {
        let da = a.len() - 1;
        let factor = a[da] * lead_inv % p;
        for i in 0..=db {
            let idx = da - db + i;
            a[idx] = (a[idx] + p - factor * b[i] % p) % p;
        }
        trim(&mut a);
    }
    a
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ca * cb) % p;
        }
    }
    trim(&mut out);
    out
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) works.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// `x^(p^e) mod m`, by repeated `p`-th powering.
fn x_pow_p_tower(e: u32, m: &[u64], p: u64) -> Vec<u64> {
    let mut x = vec![0u64, 1];
    x = poly_rem(x, m, p);
    for _ in 0..e {
        x = poly_pow(&x, p, m, p);
    }
    x
}

fn poly_pow(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            result = poly_rem(poly_mul(&result, &base, p), m, p);
        }
        base = poly_rem(poly_mul(&base, &base, p), m, p);
        exp >>= 1;
    }
    result
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let ca = a.get(i).copied().unwrap_or(0);
        let cb = b.get(i).copied().unwrap_or(0);
        *o = (ca + p - cb) % p;
    }
    trim(&mut out);
    out
}

/// Irreducibility over F_p: roots for degree ≤ 3, the `x^{p^i} - x` gcd
/// criterion in general.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let f = (m.len() - 1) as u32;
    if f == 1 {
        return true;
    }
    if f <= 3 {
        // a polynomial of degree 2 or 3 is reducible iff it has a root
        return (0..p).all(|x| {
            let mut acc = 0u64;
            for &c in m.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc != 0
        });
    }
    // x^(p^f) ≡ x (mod m), and gcd(x^(p^(f/d)) - x, m) = 1 for prime d | f.
    let xq = x_pow_p_tower(f, m, p);
    let x = poly_rem(vec![0, 1], m, p);
    if poly_sub(&xq, &x, p) != Vec::<u64>::new() {
        return false;
    }
    let mut d = 2;
    let mut rest = f;
    let mut prime_divs = Vec::new();
    while d * d <= rest {
        if rest % d == 0 {
            prime_divs.push(d);
            while rest % d == 0 {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        prime_divs.push(rest);
    }
    for d in prime_divs {
        let xe = x_pow_p_tower(f / d, m, p);
        let g = poly_gcd(poly_sub(&xe, &x, p), m.to_vec(), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree `f`, scanning lower coefficients as
/// base-`p` digits of `0, 1, 2, ...`.
fn first_irreducible(p: u64, f: u32) -> Vec<u64> {
    let count = p.pow(f);
    for k in 0..count {
        let mut coeffs = Vec::with_capacity(f as usize + 1);
        let mut rest = k;
        for _ in 0..f {
            coeffs.push(rest % p);
            rest /= p;
        }
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of each degree exists over F_p")
}

/// Field arithmetic tables. Elements are indices `0..q`, with index
/// `Σ cᵢ pⁱ` standing for the residue `Σ cᵢ xⁱ`; 0 and 1 are the field's
/// zero and one.
#[derive(Debug, Clone)]
pub struct GfTable {
    pub spec: FiniteFieldSpec,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

impl GfTable {
    pub fn new(q: u64) -> Result<Self, ConstructError> {
        let spec = FiniteFieldSpec::for_size(q)?;
        let (p, f) = (spec.p, spec.f);
        let q = q as usize;
        let digits = |mut k: usize| -> Vec<u64> {
            let mut d = Vec::with_capacity(f as usize);
            for _ in 0..f {
                d.push((k as u64) % p);
                k /= p as usize;
            }
            d
        };
        let undigits = |coeffs: &[u64]| -> usize {
            coeffs
                .iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        for i in 0..q {
            let di = digits(i);
            let negd: Vec<u64> = di.iter().map(|&c| (p - c) % p).collect();
            neg[i] = undigits(&negd) as u16;
            for j in 0..q {
                let dj = digits(j);
                let sum: Vec<u64> = di.iter().zip(&dj).map(|(&a, &b)| (a + b) % p).collect();
                add[i * q + j] = undigits(&sum) as u16;
                let mut prod = poly_rem(poly_mul(&di, &dj, p), &spec.modulus, p);
                prod.resize(f as usize, 0);
                mul[i * q + j] = undigits(&prod) as u16;
            }
        }
        Ok(GfTable {
            spec,
            q,
            add,
            mul,
            neg,
        })
    }

    pub fn size(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, mut a: usize, mut e: u64) -> usize {
        let mut acc = 1usize;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_moduli() {
        // x^2 + 1 is the first irreducible quadratic over F_3.
        assert_eq!(FiniteFieldSpec::for_size(9).unwrap().modulus, vec![1, 0, 1]);
        // x^2 + x + 1 over F_2.
        assert_eq!(FiniteFieldSpec::for_size(4).unwrap().modulus, vec![1, 1, 1]);
        assert!(FiniteFieldSpec::for_size(12).is_err());
    }

    #[test]
    fn field_axioms_sampled() {
        for q in [4u64, 8, 9, 16, 25, 27, 32] {
            let gf = GfTable::new(q).unwrap();
            let q = gf.size();
            for a in 0..q {
                assert_eq!(gf.add(a, 0), a);
                assert_eq!(gf.mul(a, 1), a);
                assert_eq!(gf.add(a, gf.neg(a)), 0);
                for b in 0..q {
                    assert_eq!(gf.add(a, b), gf.add(b, a));
                    assert_eq!(gf.mul(a, b), gf.mul(b, a));
                    for c in [0, 1, q - 1, (a + b) % q] {
                        assert_eq!(gf.mul(a, gf.add(b, c)), gf.add(gf.mul(a, b), gf.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_has_order_q_minus_1() {
        for q in [5u64, 8, 9, 13, 16] {
            let gf = GfTable::new(q).unwrap();
            for a in 1..gf.size() {
                assert_eq!(gf.pow(a, q - 1), 1, "a={a} in GF({q})");
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        for q in [4u64, 9, 8, 27] {
            let gf = GfTable::new(q).unwrap();
            let p = gf.spec.p;
            let frob: Vec<usize> = (0..gf.size()).map(|a| gf.pow(a, p)).collect();
            // bijective
            let mut seen = vec![false; gf.size()];
            for &v in &frob {
                assert!(!seen[v]);
                seen[v] = true;
            }
            // additive and multiplicative
            for a in 0..gf.size() {
                for b in 0..gf.size() {
                    assert_eq!(frob[gf.add(a, b)], gf.add(frob[a], frob[b]));
                    assert_eq!(frob[gf.mul(a, b)], gf.mul(frob[a], frob[b]));
                }
            }
        }
    }
}
