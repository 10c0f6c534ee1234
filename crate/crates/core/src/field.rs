//! Finite fields `GF(p^k)`.
//!
//! Elements are `u32` integers encoding polynomials in the defining
//! polynomial's root: `a_0 + a_1 p + a_2 p^2 + ...` stands for
//! `a_0 + a_1 x + a_2 x^2 + ...`. Prime fields are just residues. The
//! defining polynomial is the least primitive monic polynomial of degree `k`
//! (coefficients compared from the constant term), so `x` generates the
//! multiplicative group.

use crate::arith;
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Largest field order handled with lookup tables.
pub const TABLE_CAP: u64 = 1 << 20;
/// Largest extension degree.
pub const DEGREE_CAP: u32 = 12;

pub type F = u32;

struct Inner {
    p: u32,
    k: u32,
    q: u64,
    /// defining polynomial, constant term first, monic of degree k
    poly: Vec<u32>,
    /// exp[i] = x^i, stored twice over for index sums without reduction
    exp: Vec<u32>,
    /// log[a] for a != 0
    log: Vec<u32>,
    /// zech[n] = log(1 + x^n), u32::MAX when 1 + x^n = 0
    zech: Vec<u32>,
    /// primitive element as an encoded value (prime fields without tables)
    primitive: u32,
}

#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.k)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.k == other.0.k && self.0.poly == other.0.poly
    }
}

impl Eq for Field {}

fn digits(mut a: u64, p: u64, k: u32) -> Vec<u32> {
    let mut d = vec![0u32; k as usize];
    for x in d.iter_mut() {
        *x = (a % p) as u32;
        a /= p;
    }
    d
}

fn undigits(d: &[u32], p: u64) -> u64 {
    d.iter().rev().fold(0u64, |acc, &x| acc * p + x as u64)
}

/// Powers of `x` modulo `poly`; `None` unless `x` has order exactly `q-1`.
fn power_table(p: u64, k: u32, poly: &[u32]) -> Option<Vec<u32>> {
    let q = p.pow(k);
    let mut cur = vec![0u32; k as usize];
    cur[0] = 1;
    let mut out = Vec::with_capacity(q as usize - 1);
    for i in 0..q - 1 {
        let v = undigits(&cur, p);
        if i > 0 && v == 1 {
            return None;
        }
        out.push(v as u32);
        // multiply by x
        let top = cur[k as usize - 1] as u64;
        for j in (1..k as usize).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..k as usize {
                let sub = top * poly[j] as u64 % p;
                cur[j] = ((cur[j] as u64 + p - sub) % p) as u32;
            }
        }
    }
    if undigits(&cur, p) == 1 {
        Some(out)
    } else {
        None
    }
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = arith::prime_divisors(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&r| arith::pow_mod(g, (p - 1) / r, p) != 1))
        .expect("prime has a primitive root")
}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !arith::is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        if k == 0 || k > DEGREE_CAP {
            return Err(Error::CapExceeded {
                what: "extension degree",
                value: k as u64,
                cap: DEGREE_CAP as u64,
            });
        }
        let q = match p.checked_pow(k) {
            Some(q) => q,
            None => {
                return Err(Error::CapExceeded {
                    what: "field order",
                    value: u64::MAX,
                    cap: TABLE_CAP,
                })
            }
        };
        if k == 1 && q > TABLE_CAP {
            let g = primitive_root(p);
            return Ok(Field(Arc::new(Inner {
                p: p as u32,
                k,
                q,
                poly: vec![(p - g) as u32, 1],
                exp: Vec::new(),
                log: Vec::new(),
                zech: Vec::new(),
                primitive: g as u32,
            })));
        }
        if q > TABLE_CAP {
            return Err(Error::CapExceeded {
                what: "field order",
                value: q,
                cap: TABLE_CAP,
            });
        }
        let (poly, powers) = if k == 1 {
            let g = primitive_root(p);
            let mut pw = Vec::with_capacity(q as usize - 1);
            let mut x = 1u64;
            for _ in 0..q - 1 {
                pw.push(x as u32);
                x = x * g % p;
            }
            (vec![(p - g) as u32 % p as u32, 1], pw)
        } else {
            let mut found = None;
            for c in 0..q {
                let mut poly = digits(c, p, k);
                if poly[0] == 0 {
                    continue;
                }
                poly.push(1);
                if let Some(pw) = power_table(p, k, &poly) {
                    found = Some((poly, pw));
                    break;
                }
            }
            found.ok_or(Error::InvalidField("no primitive polynomial".into()))?
        };
        let n = (q - 1) as usize;
        let mut exp = powers.clone();
        exp.extend_from_slice(&powers);
        let mut log = vec![u32::MAX; q as usize];
        for (i, &v) in powers.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let mut zech = vec![u32::MAX; n];
        for (i, z) in zech.iter_mut().enumerate() {
            let s = add_digits(powers[i] as u64, 1, p, k);
            if s != 0 {
                *z = log[s as usize];
            }
        }
        let primitive = if n == 1 { 1 } else { powers[1] };
        Ok(Field(Arc::new(Inner {
            p: p as u32,
            k,
            q,
            poly,
            exp,
            log,
            zech,
            primitive,
        })))
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.0.p as u64
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Defining polynomial, constant term first.
    pub fn poly(&self) -> &[u32] {
        &self.0.poly
    }

    fn tabled(&self) -> bool {
        !self.0.exp.is_empty()
    }

    #[inline]
    pub fn add(&self, a: F, b: F) -> F {
        let i = &*self.0;
        if i.k == 1 {
            let s = a as u64 + b as u64;
            return if s >= i.q { (s - i.q) as F } else { s as F };
        }
        if i.p == 2 {
            return a ^ b;
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let n = i.q as u32 - 1;
        let la = i.log[a as usize];
        let lb = i.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = i.zech[d as usize];
        if z == u32::MAX {
            0
        } else {
            i.exp[(la + z) as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: F) -> F {
        let i = &*self.0;
        if a == 0 || i.p == 2 {
            return a;
        }
        if i.k == 1 {
            return (i.q - a as u64) as F;
        }
        let n = i.q as u32 - 1;
        let la = i.log[a as usize];
        i.exp[(la + n / 2) as usize]
    }

    #[inline]
    pub fn sub(&self, a: F, b: F) -> F {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: F, b: F) -> F {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = &*self.0;
        if i.exp.is_empty() {
            return (a as u64 * b as u64 % i.q) as F;
        }
        i.exp[(i.log[a as usize] + i.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: F) -> Result<F> {
        if a == 0 {
            return Err(Error::Singular("inverse of zero".into()));
        }
        let i = &*self.0;
        if !self.tabled() {
            return Ok(arith::inv_mod(a as u64, i.q).expect("prime modulus") as F);
        }
        let n = i.q as u32 - 1;
        let la = i.log[a as usize];
        Ok(i.exp[((n - la) % n) as usize])
    }

    pub fn div(&self, a: F, b: F) -> Result<F> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: F, e: u64) -> F {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let i = &*self.0;
        if !self.tabled() {
            return arith::pow_mod(a as u64, e, i.q) as F;
        }
        let n = i.q - 1;
        let l = (i.log[a as usize] as u64 * (e % n)) % n;
        i.exp[l as usize]
    }

    /// The fixed primitive element (`x` for extension fields).
    pub fn primitive(&self) -> F {
        self.0.primitive
    }

    /// Discrete logarithm to the base of the primitive element.
    pub fn log(&self, a: F) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let i = &*self.0;
        if self.tabled() {
            return Some(i.log[a as usize] as u64);
        }
        // baby-step giant-step for large prime fields
        let n = i.q - 1;
        let m = arith::isqrt(n) + 1;
        let mut baby = std::collections::HashMap::new();
        let mut x = 1u64;
        for j in 0..m {
            baby.entry(x).or_insert(j);
            x = x * i.primitive as u64 % i.q;
        }
        let step = arith::pow_mod(arith::inv_mod(i.primitive as u64, i.q)?, m, i.q);
        let mut y = a as u64;
        for t in 0..m {
            if let Some(&j) = baby.get(&y) {
                return Some((t * m + j) % n);
            }
            y = y * step % i.q;
        }
        None
    }

    /// `primitive^e`.
    pub fn exp(&self, e: u64) -> F {
        let n = self.0.q - 1;
        if self.tabled() {
            self.0.exp[(e % n) as usize]
        } else {
            arith::pow_mod(self.0.primitive as u64, e % n, self.0.q) as F
        }
    }

    /// A primitive `m`-th root of unity, if `m | q-1`.
    pub fn root_of_unity(&self, m: u64) -> Option<F> {
        let n = self.0.q - 1;
        if m == 0 || !n.is_multiple_of(m) {
            return None;
        }
        Some(self.exp(n / m))
    }

    pub fn from_int(&self, a: i64) -> F {
        let p = self.0.p as i64;
        a.rem_euclid(p) as F
    }

    pub fn is_valid(&self, a: u64) -> bool {
        a < self.0.q
    }

    pub fn elements(&self) -> impl Iterator<Item = F> {
        0..self.0.q as F
    }

    /// Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: F) -> F {
        self.pow(a, self.0.p as u64)
    }

    /// `a^(1/p)`, the inverse of Frobenius.
    pub fn pth_root(&self, a: F) -> F {
        self.pow(a, self.0.q / self.0.p as u64)
    }
}

fn add_digits(a: u64, b: u64, p: u64, k: u32) -> u64 {
    let (da, db) = (digits(a, p, k), digits(b, p, k));
    let s: Vec<u32> = da
        .iter()
        .zip(&db)
        .map(|(&x, &y)| ((x as u64 + y as u64) % p) as u32)
        .collect();
    undigits(&s, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gf4_tables() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.order(), 4);
        // x^2 + x + 1
        assert_eq!(f.poly(), &[1, 1, 1]);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn gf9_negation_and_roots() {
        let f = Field::new(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), 0);
        }
        let w = f.root_of_unity(8).unwrap();
        assert_eq!(f.pow(w, 8), 1);
        assert_ne!(f.pow(w, 4), 1);
        assert!(f.root_of_unity(5).is_none());
    }

    #[test]
    fn large_prime_field() {
        let f = Field::prime(1_000_003).unwrap();
        let a = 123_456;
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        let l = f.log(a).unwrap();
        assert_eq!(f.exp(l), a);
    }

    #[test]
    fn prime_field_log_matches_exp() {
        let f = Field::prime(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.exp(f.log(a).unwrap()), a);
        }
    }

    fn fields() -> impl Strategy<Value = Field> {
        prop::sample::select(vec![(2u64, 1u32), (2, 3), (3, 1), (3, 2), (5, 2), (7, 1), (2, 4)])
            .prop_map(|(p, k)| Field::new(p, k).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(f in fields(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
            let q = f.order() as u32;
            let (a, b, c) = (a % q, b % q, c % q);
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.sub(f.add(a, b), b), a);
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                prop_assert_eq!(f.pth_root(f.frobenius(a)), a);
            }
        }
    }
}
