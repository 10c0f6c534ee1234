//! Univariate polynomials over a finite field and their factorization.

use crate::field::{Field, F};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Vec<F>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn x() -> Self {
        Poly(vec![0, 1])
    }

    pub fn from_coeffs(mut c: Vec<F>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> F {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, f: &Field, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| f.add(*self.0.get(i).unwrap_or(&0), *o.0.get(i).unwrap_or(&0)))
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, f: &Field, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| f.sub(*self.0.get(i).unwrap_or(&0), *o.0.get(i).unwrap_or(&0)))
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, f: &Field, c: F) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &Field, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn divrem(&self, f: &Field, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.deg();
        if self.0.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = f.inv(d.lead()).unwrap();
        let mut r = self.0.clone();
        let mut q = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            q[i - dd] = c;
            let nc = f.neg(c);
            for (j, &b) in d.0.iter().enumerate() {
                r[i - dd + j] = f.add(r[i - dd + j], f.mul(nc, b));
            }
        }
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, f: &Field, d: &Poly) -> Poly {
        self.divrem(f, d).1
    }

    pub fn monic(&self, f: &Field) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(f, f.inv(self.lead()).unwrap())
    }

    pub fn gcd(&self, f: &Field, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        let c = self
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, f.from_int(i as i64)))
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn eval(&self, f: &Field, x: F) -> F {
        self.0.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`.
    pub fn powmod(&self, f: &Field, mut e: u128, m: &Poly) -> Poly {
        let mut r = Poly::one().rem(f, m);
        let mut b = self.rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(f, &b).rem(f, m);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(f, &b).rem(f, m);
            }
        }
        r
    }

    /// Roots in the field (distinct).
    pub fn roots(&self, f: &Field, seed: u64) -> Vec<F> {
        let mut r: Vec<F> = factor(f, self, seed)
            .into_iter()
            .filter(|(g, _)| g.deg() == 1)
            .map(|(g, _)| f.neg(g.0[0]))
            .collect();
        r.sort_unstable();
        r
    }
}

fn pth_root_poly(f: &Field, a: &Poly) -> Poly {
    let p = f.p() as usize;
    let c = (0..=a.deg() / p).map(|i| f.pth_root(a.0[i * p])).collect();
    Poly::from_coeffs(c)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with
/// `a = prod g^e`, each `g` squarefree.
fn squarefree(f: &Field, a: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if a.deg() == 0 {
        return out;
    }
    let d = a.derivative(f);
    if d.is_zero() {
        for (g, e) in squarefree(f, &pth_root_poly(f, a)) {
            out.push((g, e * f.p() as u32));
        }
        return out;
    }
    let mut c = a.gcd(f, &d);
    let mut w = a.divrem(f, &c).0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(f, &c);
        let z = w.divrem(f, &y).0;
        if z.deg() > 0 {
            out.push((z.monic(f), i));
        }
        i += 1;
        w = y;
        c = c.divrem(f, &w).0;
    }
    if c.deg() > 0 {
        for (g, e) in squarefree(f, &pth_root_poly(f, &c.monic(f))) {
            out.push((g, e * f.p() as u32));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial.
fn ddf(f: &Field, a: &Poly) -> Vec<(Poly, usize)> {
    let q = f.order() as u128;
    let mut out = Vec::new();
    let mut rest = a.clone();
    let mut h = Poly::x().rem(f, &rest);
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.powmod(f, q, &rest);
        let g = rest.gcd(f, &h.sub(f, &Poly::x()));
        if g.deg() > 0 {
            out.push((g.clone(), d));
            rest = rest.divrem(f, &g).0;
            h = h.rem(f, &rest);
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let dd = rest.deg();
        out.push((rest.monic(f), dd));
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
fn edf(f: &Field, a: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = a.deg();
    if n == d {
        out.push(a.monic(f));
        return;
    }
    let q = f.order() as u128;
    loop {
        let r = Poly::from_coeffs((0..n).map(|_| rng.gen_range(0..q as u32)).collect());
        if r.deg() == 0 {
            continue;
        }
        let t = if f.p() == 2 {
            // r + r^2 + ... + r^(2^(k d - 1))
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..(f.k() as usize * d) {
                cur = cur.mul(f, &cur).rem(f, a);
                acc = acc.add(f, &cur);
            }
            acc
        } else {
            // r^((q^d - 1)/2) = (r^(1 + q + ... + q^(d-1)))^((q - 1)/2)
            let mut cur = r.rem(f, a);
            let mut norm = cur.clone();
            for _ in 1..d {
                cur = cur.powmod(f, q, a);
                norm = norm.mul(f, &cur).rem(f, a);
            }
            norm.powmod(f, (q - 1) / 2, a).sub(f, &Poly::one())
        };
        let g = a.gcd(f, &t);
        if g.deg() > 0 && g.deg() < n {
            let other = a.divrem(f, &g).0;
            edf(f, &g, d, rng, out);
            edf(f, &other.monic(f), d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
pub fn factor(f: &Field, a: &Poly, seed: u64) -> Vec<(Poly, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    if a.deg() == 0 {
        return out;
    }
    for (g, e) in squarefree(f, &a.monic(f)) {
        for (h, d) in ddf(f, &g) {
            let mut parts = Vec::new();
            edf(f, &h, d, &mut rng, &mut parts);
            out.extend(parts.into_iter().map(|x| (x, e)));
        }
    }
    out.sort_by(|(x, _), (y, _)| (x.deg(), &x.0).cmp(&(y.deg(), &y.0)));
    // merge repeated factors from separate squarefree parts
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (g, e) in out {
        match merged.last_mut() {
            Some((h, m)) if *h == g => *m += e,
            _ => merged.push((g, e)),
        }
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn product(f: &Field, fs: &[(Poly, u32)]) -> Poly {
        let mut r = Poly::one();
        for (g, e) in fs {
            for _ in 0..*e {
                r = r.mul(f, g);
            }
        }
        r
    }

    /// irreducible iff no root in any extension up to deg/2, checked by brute
    /// force divisibility by every monic polynomial of lower degree
    fn irreducible_brute(f: &Field, a: &Poly) -> bool {
        let q = f.order();
        let n = a.deg();
        for d in 1..=n / 2 {
            for c in 0..q.pow(d as u32) {
                let mut co = Vec::new();
                let mut x = c;
                for _ in 0..d {
                    co.push((x % q) as F);
                    x /= q;
                }
                co.push(1);
                if a.rem(f, &Poly::from_coeffs(co)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn factors_x_q_minus_x() {
        let f = Field::new(2, 2).unwrap();
        // x^4 - x splits into four linear factors over GF(4)
        let mut c = vec![0; 5];
        c[4] = 1;
        c[1] = f.neg(1);
        let a = Poly::from_coeffs(c);
        let fs = factor(&f, &a, 1);
        assert_eq!(fs.len(), 4);
        assert!(fs.iter().all(|(g, e)| g.deg() == 1 && *e == 1));
    }

    #[test]
    fn repeated_factor_in_characteristic_p() {
        let f = Field::prime(3).unwrap();
        // (x + 1)^3 (x^2 + 1)
        let l = Poly::from_coeffs(vec![1, 1]);
        let q = Poly::from_coeffs(vec![1, 0, 1]);
        let a = l.mul(&f, &l).mul(&f, &l).mul(&f, &q);
        let fs = factor(&f, &a, 7);
        assert_eq!(fs, vec![(l, 3), (q, 1)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factorization_recomposes(
            pk in prop::sample::select(vec![(2u64, 1u32), (3, 1), (2, 2), (5, 1), (3, 2)]),
            coeffs in prop::collection::vec(0u32..25, 2..9),
            seed in 0u64..100,
        ) {
            let f = Field::new(pk.0, pk.1).unwrap();
            let q = f.order() as u32;
            let mut c: Vec<F> = coeffs.iter().map(|&x| x % q).collect();
            *c.last_mut().unwrap() = 1;
            let a = Poly::from_coeffs(c);
            prop_assume!(a.deg() >= 1);
            let fs = factor(&f, &a, seed);
            prop_assert_eq!(product(&f, &fs), a.clone());
            for (g, _) in &fs {
                prop_assert!(irreducible_brute(&f, g));
            }
        }
    }
}
