//! Normalized 2-cocycles with values in `Z/m` (exponents of a fixed
//! primitive `m`-th root of unity), trivial action.

use crate::arith;
use crate::error::{Error, Result};
use crate::group::Elt;
use crate::quotient::Quotient;
use crate::subgroup::Subgroup;
use crate::zmod;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Largest group order for which `verify_cocycle` checks every triple.
pub const EXHAUSTIVE_CAP: usize = 200;
/// Number of sampled triples above `EXHAUSTIVE_CAP`.
pub const SAMPLE_TRIPLES: usize = 1_000_000;
/// Largest group order accepted by `h2_group`.
pub const H2_CAP: u64 = 60;

/// A dense cocycle table indexed by positions in `group.elements()`.
#[derive(Clone, Debug)]
pub struct Cocycle {
    group: Subgroup,
    modulus: u64,
    table: Vec<u64>,
}

impl PartialEq for Cocycle {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.modulus == other.modulus && self.table == other.table
    }
}

/// Where `verify_cocycle` found a failure. Triples are parent elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `alpha(1, g) != 0` or `alpha(g, 1) != 0`
    Normalization { g: Elt },
    Identity { g1: Elt, g2: Elt, g3: Elt },
}

impl Cocycle {
    pub fn zero(group: &Subgroup, modulus: u64) -> Self {
        let n = group.elements().len();
        Cocycle {
            group: group.clone(),
            modulus,
            table: vec![0; n * n],
        }
    }

    /// Wraps a raw table (row-major over positions); values are reduced
    /// mod `modulus` but otherwise unchecked.
    pub fn from_table(group: &Subgroup, modulus: u64, table: Vec<u64>) -> Result<Self> {
        let n = group.elements().len();
        if table.len() != n * n {
            return Err(Error::Dimension(format!(
                "cocycle table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        if modulus == 0 {
            return Err(Error::Precondition("modulus must be positive".into()));
        }
        Ok(Cocycle {
            group: group.clone(),
            modulus,
            table: table.into_iter().map(|x| x % modulus).collect(),
        })
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    fn n(&self) -> usize {
        self.group.elements().len()
    }

    /// Value at positions `(i, j)`.
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.table[i * self.n() + j]
    }

    pub fn set_at(&mut self, i: usize, j: usize, v: u64) {
        let n = self.n();
        self.table[i * n + j] = v % self.modulus;
    }

    /// Value at parent elements `(a, b)`.
    pub fn get(&self, a: Elt, b: Elt) -> u64 {
        let i = self.group.position(a).expect("element of the cocycle's group");
        let j = self.group.position(b).expect("element of the cocycle's group");
        self.at(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&x| x == 0)
    }

    fn check_compatible(&self, other: &Cocycle) -> Result<()> {
        if self.group != other.group || self.modulus != other.modulus {
            return Err(Error::Precondition("cocycles on different groups or moduli".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cocycle) -> Result<Cocycle> {
        self.check_compatible(other)?;
        let m = self.modulus;
        Ok(Cocycle {
            group: self.group.clone(),
            modulus: m,
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(&a, &b)| (a + b) % m)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Cocycle) -> Result<Cocycle> {
        self.add(&other.scale(other.modulus - 1))
    }

    pub fn scale(&self, c: u64) -> Cocycle {
        let m = self.modulus;
        Cocycle {
            group: self.group.clone(),
            modulus: m,
            table: self.table.iter().map(|&a| a * (c % m) % m).collect(),
        }
    }

    /// The same roots of unity written with a modulus `new` divisible by the
    /// current one.
    pub fn lift_to(&self, new: u64) -> Result<Cocycle> {
        if !new.is_multiple_of(self.modulus) {
            return Err(Error::Precondition(format!(
                "{} does not divide {}",
                self.modulus, new
            )));
        }
        let f = new / self.modulus;
        Ok(Cocycle {
            group: self.group.clone(),
            modulus: new,
            table: self.table.iter().map(|&a| a * f).collect(),
        })
    }

    /// Pointwise equality as root-of-unity valued maps.
    pub fn same_values(&self, other: &Cocycle) -> bool {
        if self.group != other.group {
            return false;
        }
        let l = arith::lcm(self.modulus, other.modulus);
        match (self.lift_to(l), other.lift_to(l)) {
            (Ok(a), Ok(b)) => a.table == b.table,
            _ => false,
        }
    }

    /// Restriction to a subgroup (a slice of the table).
    pub fn restrict(&self, h: &Subgroup) -> Result<Cocycle> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup("restriction outside the cocycle's group".into()));
        }
        let pos: Vec<usize> = h
            .elements()
            .iter()
            .map(|&e| self.group.position(e).unwrap())
            .collect();
        let mut table = Vec::with_capacity(pos.len() * pos.len());
        for &i in &pos {
            for &j in &pos {
                table.push(self.at(i, j));
            }
        }
        Ok(Cocycle {
            group: h.clone(),
            modulus: self.modulus,
            table,
        })
    }

    /// Transports along a bijection of groups: `result(phi a, phi b) = self(a, b)`
    /// where `phi` maps positions of `self.group` to positions of `target`.
    pub fn transport(&self, target: &Subgroup, phi: &[usize]) -> Cocycle {
        let n = self.n();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[phi[i] * n + phi[j]] = self.at(i, j);
            }
        }
        Cocycle {
            group: target.clone(),
            modulus: self.modulus,
            table,
        }
    }
}

/// `df(g, h) = f(g) + f(h) - f(gh)` for `f` indexed by positions.
pub fn coboundary(group: &Subgroup, modulus: u64, f: &[u64]) -> Result<Cocycle> {
    let n = group.elements().len();
    if f.len() != n {
        return Err(Error::Dimension("1-cochain length".into()));
    }
    if !f[0].is_multiple_of(modulus) {
        return Err(Error::Precondition("f(1) must be 0".into()));
    }
    let t = group.parent().table()?;
    let el = group.elements();
    let m = modulus;
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let k = group.position(t.mul(el[i], el[j])).unwrap();
            table[i * n + j] = (f[i] % m + f[j] % m + m - f[k] % m) % m;
        }
    }
    Ok(Cocycle {
        group: group.clone(),
        modulus,
        table,
    })
}

/// Checks normalization and the cocycle identity; every triple for groups
/// up to `EXHAUSTIVE_CAP`, a fixed pseudo-random sample above.
pub fn verify_cocycle(alpha: &Cocycle) -> std::result::Result<(), Violation> {
    let g = &alpha.group;
    let n = g.elements().len();
    let el = g.elements();
    let t = g.parent().table().expect("enumerated");
    for i in 0..n {
        if alpha.at(0, i) != 0 || alpha.at(i, 0) != 0 {
            return Err(Violation::Normalization { g: el[i] });
        }
    }
    // product table over positions
    let prod: Vec<usize> = (0..n * n)
        .map(|k| g.position(t.mul(el[k / n], el[k % n])).unwrap())
        .collect();
    let m = alpha.modulus;
    let bad = |a: usize, b: usize, c: usize| {
        let ab = prod[a * n + b];
        let bc = prod[b * n + c];
        (alpha.at(a, b) + alpha.at(ab, c)) % m != (alpha.at(b, c) + alpha.at(a, bc)) % m
    };
    let found = if n <= EXHAUSTIVE_CAP {
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                for c in 0..n {
                    if bad(a, b, c) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x636f6379);
        let mut hit = None;
        for _ in 0..SAMPLE_TRIPLES {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if bad(a, b, c) {
                hit = Some((a, b, c));
                break;
            }
        }
        hit
    };
    match found {
        Some((a, b, c)) => Err(Violation::Identity {
            g1: el[a],
            g2: el[b],
            g3: el[c],
        }),
        None => Ok(()),
    }
}

/// Least `N >= 1` with `N alpha = 0`.
pub fn cocycle_order(alpha: &Cocycle) -> u64 {
    let m = alpha.modulus;
    alpha
        .table
        .iter()
        .fold(1, |acc, &a| arith::lcm(acc, m / arith::gcd(a, m)))
}

/// Invariant factors of `H^2(G, Z/m)` (trivial action), ascending; the
/// empty list is the trivial group.
///
/// A normalized cocycle is determined by its rows at the generators, and it
/// is a cocycle as soon as the identity holds with a generator in first
/// place, so the computation runs on `|gens| * |G|` unknowns.
pub fn h2_group(group: &Subgroup, m: u64) -> Result<Vec<u64>> {
    let n = group.elements().len();
    if n as u64 > H2_CAP {
        return Err(Error::CapExceeded {
            what: "group order for H^2",
            value: n as u64,
            cap: H2_CAP,
        });
    }
    if m == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    if m == 1 || n == 1 {
        return Ok(Vec::new());
    }
    let t = group.parent().table()?;
    let el = group.elements();
    let gens = group.gens();
    let r = gens.len();
    let nv = r * n;
    let pos = |e: Elt| group.position(e).unwrap();
    let gpos: Vec<usize> = gens.iter().map(|&s| pos(s)).collect();
    let mul = |i: usize, j: usize| pos(t.mul(el[i], el[j]));
    let var = |k: usize, y: usize| k * n + y;

    // linear forms for alpha(x, y), indexed [x][y]
    let zero = vec![0u64; nv];
    let mut lf: Vec<Vec<Vec<u64>>> = vec![vec![zero.clone(); n]; n];
    for (x, parent, k) in group.word_tree().into_iter().skip(1) {
        // alpha(s p, y) = alpha(p, y) + alpha(s, p y) - alpha(s, p)
        for y in 0..n {
            let mut v = lf[parent][y].clone();
            v[var(k, mul(parent, y))] = (v[var(k, mul(parent, y))] + 1) % m;
            v[var(k, parent)] = (v[var(k, parent)] + m - 1) % m;
            lf[x][y] = v;
        }
    }
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for k in 0..r {
        let mut v = zero.clone();
        v[var(k, 0)] = 1;
        rows.push(v);
    }
    for (k, &s) in gpos.iter().enumerate() {
        for g2 in 0..n {
            let sg2 = mul(s, g2);
            for g3 in 0..n {
                // alpha(g2,g3) - alpha(s g2, g3) + alpha(s, g2 g3) - alpha(s, g2)
                let mut v = lf[g2][g3].clone();
                for (a, &b) in v.iter_mut().zip(&lf[sg2][g3]) {
                    *a = (*a + m - b) % m;
                }
                let g23 = mul(g2, g3);
                v[var(k, g23)] = (v[var(k, g23)] + 1) % m;
                v[var(k, g2)] = (v[var(k, g2)] + m - 1) % m;
                if v.iter().any(|&a| a != 0) {
                    rows.push(v);
                }
            }
        }
    }
    // coboundaries of the point masses f = e_x, x != 1
    let mut gens_b = Vec::new();
    for x in 1..n {
        let mut v = zero.clone();
        for (k, &s) in gpos.iter().enumerate() {
            for y in 0..n {
                let mut c = 0i64;
                if s == x {
                    c += 1;
                }
                if y == x {
                    c += 1;
                }
                if mul(s, y) == x {
                    c -= 1;
                }
                v[var(k, y)] = c.rem_euclid(m as i64) as u64;
            }
        }
        gens_b.push(v);
    }
    Ok(zmod::subquotient_invariants(&rows, &gens_b, nv, m))
}

/// `lambda o ds` on `X/Z`: `alpha(a, b) = lambda(s(a) s(b) s(ab)^-1)` for the
/// least-element section `s` of the quotient. `lambda` is indexed by parent
/// elements and only read on the kernel.
pub fn section_cocycle(q: &Quotient, lambda: &dyn Fn(Elt) -> u64, modulus: u64) -> Result<Cocycle> {
    section_cocycle_with(q, &q.section(), lambda, modulus)
}

/// As `section_cocycle`, for an explicit normalized section.
pub fn section_cocycle_with(
    q: &Quotient,
    s: &[Elt],
    lambda: &dyn Fn(Elt) -> u64,
    modulus: u64,
) -> Result<Cocycle> {
    let t = q.source.parent().table()?;
    let qt = q.group.table()?;
    let n = qt.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let z = t.mul(t.mul(s[a], s[b]), t.inv(s[qt.mul(a, b)]));
            if !q.kernel.contains(z) {
                return Err(Error::Precondition(
                    "s(a)s(b)s(ab)^-1 lies outside the kernel".into(),
                ));
            }
            table[a * n + b] = lambda(z) % modulus;
        }
    }
    let group = Subgroup::whole(&q.group)?;
    Cocycle::from_table(&group, modulus, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::quotient::quotient_group;
    use crate::subgroup::center;
    use proptest::prelude::*;

    /// |Z^2| / |B^2| by enumerating every normalized 2-cochain.
    fn h2_order_brute(g: &Subgroup, m: u64) -> u64 {
        let n = g.elements().len();
        let free: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect();
        let total = m.pow(free.len() as u32);
        let mut cocycles = 0;
        for code in 0..total {
            let mut table = vec![0; n * n];
            let mut c = code;
            for &(i, j) in &free {
                table[i * n + j] = c % m;
                c /= m;
            }
            let a = Cocycle::from_table(g, m, table).unwrap();
            if verify_cocycle(&a).is_ok() {
                cocycles += 1;
            }
        }
        // |B^2| = |C^1| / |Hom(G, Z/m)|
        let mut homs = 0;
        let f_total = m.pow((n - 1) as u32);
        let mut boundaries = std::collections::BTreeSet::new();
        for code in 0..f_total {
            let mut f = vec![0; n];
            let mut c = code;
            for x in f.iter_mut().skip(1) {
                *x = c % m;
                c /= m;
            }
            let d = coboundary(g, m, &f).unwrap();
            if d.is_zero() {
                homs += 1;
            }
            boundaries.insert(d.table().to_vec());
        }
        assert_eq!(boundaries.len() as u64 * homs, f_total);
        cocycles / boundaries.len() as u64
    }

    fn whole(g: &crate::PermutationGroup) -> Subgroup {
        Subgroup::whole(g).unwrap()
    }

    #[test]
    fn coboundary_on_c2() {
        let g = whole(&library::cyclic(2));
        let d = coboundary(&g, 4, &[0, 1]).unwrap();
        assert_eq!(d.table(), &[0, 0, 0, 2]);
        assert_eq!(cocycle_order(&d), 2);
        assert!(coboundary(&g, 4, &[1, 0]).is_err());
    }

    #[test]
    fn broken_normalization_is_reported() {
        let g = whole(&library::symmetric(3));
        let mut a = Cocycle::zero(&g, 3);
        a.set_at(0, 2, 1);
        let v = verify_cocycle(&a).unwrap_err();
        assert_eq!(v, Violation::Normalization { g: g.elements()[2] });
    }

    #[test]
    fn identity_violation_carries_a_triple() {
        let g = whole(&library::cyclic(3));
        let mut a = Cocycle::zero(&g, 3);
        a.set_at(1, 1, 1);
        match verify_cocycle(&a) {
            Err(Violation::Identity { g1, g2, g3 }) => {
                let t = g.parent().table().unwrap();
                let lhs = (a.get(g1, g2) + a.get(t.mul(g1, g2), g3)) % 3;
                let rhs = (a.get(g2, g3) + a.get(g1, t.mul(g2, g3))) % 3;
                assert_ne!(lhs, rhs);
            }
            other => panic!("expected an identity violation, got {other:?}"),
        }
    }

    #[test]
    fn h2_small_cases_match_brute_force() {
        let c2 = whole(&library::cyclic(2));
        let c3 = whole(&library::cyclic(3));
        let c4 = whole(&library::cyclic(4));
        let v4 = whole(&library::by_name("C2xC2").unwrap());
        assert_eq!(h2_group(&c2, 2).unwrap(), vec![2]);
        assert_eq!(h2_group(&c3, 2).unwrap(), Vec::<u64>::new());
        for (g, m) in [(&c2, 2), (&c2, 4), (&c3, 3), (&c3, 6), (&c4, 2), (&v4, 2)] {
            let order: u64 = h2_group(g, m).unwrap().iter().product();
            assert_eq!(order, h2_order_brute(g, m), "order {} m {m}", g.order());
        }
        assert_eq!(h2_group(&v4, 2).unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn h2_of_s3_and_q8() {
        // S3: Hom(M, Z/2) + Ext(C2, Z/2) with trivial multiplier
        let s3 = whole(&library::symmetric(3));
        assert_eq!(h2_group(&s3, 2).unwrap(), vec![2]);
        assert_eq!(h2_group(&s3, 3).unwrap(), Vec::<u64>::new());
        // Q8 has trivial multiplier: Ext(C2 x C2, Z/2)
        let q8 = whole(&library::quaternion());
        assert_eq!(h2_group(&q8, 2).unwrap(), vec![2, 2]);
    }

    #[test]
    fn section_cocycle_of_c4_over_c2() {
        let g = library::cyclic(4);
        let x = whole(&g);
        let z = Subgroup::generated(&g, &[g.table().unwrap().pow(g.table().unwrap().gens()[0], 2)])
            .unwrap();
        assert_eq!(z.order(), 2);
        let q = quotient_group(&x, &z).unwrap();
        let zgen = z.elements()[1];
        let a = section_cocycle(&q, &|e| u64::from(e == zgen), 2).unwrap();
        assert!(verify_cocycle(&a).is_ok());
        assert_eq!(a.at(1, 1), 1);
        assert_eq!(cocycle_order(&a), 2);
        let trivial = section_cocycle(&q, &|_| 0, 2).unwrap();
        assert!(trivial.is_zero());
    }

    #[test]
    fn section_cocycle_with_trivial_center() {
        let g = library::symmetric(3);
        let x = whole(&g);
        let z = center(&x);
        let q = quotient_group(&x, &z).unwrap();
        let a = section_cocycle(&q, &|e| u64::from(e != 0), 5).unwrap();
        assert!(a.is_zero());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn coboundaries_are_additive_cocycles(
            f1 in prop::collection::vec(0u64..6, 6),
            f2 in prop::collection::vec(0u64..6, 6),
        ) {
            let g = whole(&library::symmetric(3));
            let mut f1 = f1; f1[0] = 0;
            let mut f2 = f2; f2[0] = 0;
            let sum: Vec<u64> = f1.iter().zip(&f2).map(|(a, b)| (a + b) % 6).collect();
            let d1 = coboundary(&g, 6, &f1).unwrap();
            let d2 = coboundary(&g, 6, &f2).unwrap();
            prop_assert!(verify_cocycle(&d1).is_ok());
            prop_assert_eq!(coboundary(&g, 6, &sum).unwrap(), d1.add(&d2).unwrap());
            prop_assert_eq!(6 % cocycle_order(&d1), 0);
        }

        #[test]
        fn restriction_stays_a_cocycle(f in prop::collection::vec(0u64..4, 24)) {
            let g = library::symmetric(4);
            let x = whole(&g);
            let mut f = f; f[0] = 0;
            let d = coboundary(&x, 4, &f).unwrap();
            let h = crate::subgroup::sylow(&x, 2).unwrap();
            prop_assert!(verify_cocycle(&d.restrict(&h).unwrap()).is_ok());
        }
    }
}
