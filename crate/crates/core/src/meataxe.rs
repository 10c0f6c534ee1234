//! Submodule search (Holt-Rees variant of the MeatAxe), composition
//! factors, and homomorphism spaces.

use crate::error::{Error, Result};
use crate::field::{Field, F};
use crate::matrix::{spin, Mat, Subspace};
use crate::poly::factor;
use crate::rep::Rep;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Attempts per split before giving up.
pub const RETRY_BUDGET: usize = 64;
const POOL_CAP: usize = 12;
const FULL_SYSTEM_CAP: usize = 1024;

#[derive(Debug, Clone)]
pub enum Split {
    Irreducible,
    /// A proper nonzero stable subspace.
    Reducible(Subspace),
}

fn random_vec(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Vec<F> {
    let q = f.order();
    (0..n).map(|_| rng.gen_range(0..q) as F).collect()
}

/// Finds a proper submodule or proves irreducibility over the given field.
pub fn split(f: &Field, n: usize, gens: &[Mat], rng: &mut ChaCha8Rng) -> Result<Split> {
    if n <= 1 {
        return Ok(Split::Irreducible);
    }
    if gens.is_empty() {
        let mut e = vec![0; n];
        e[0] = 1;
        return Ok(Split::Reducible(Subspace::spanned_by(f, n, &[e])));
    }
    let transposed: Vec<Mat> = gens.iter().map(Mat::transpose).collect();
    let mut pool: Vec<Mat> = gens.to_vec();
    let q = f.order();
    for _ in 0..RETRY_BUDGET {
        let a = rng.gen_range(0..pool.len());
        let b = rng.gen_range(0..pool.len());
        let prod = pool[a].mul(f, &pool[b]);
        if pool.len() < POOL_CAP {
            pool.push(prod);
        } else {
            let i = rng.gen_range(gens.len()..POOL_CAP);
            pool[i] = prod;
        }
        let mut theta = Mat::zeros(n, n);
        for m in &pool {
            if rng.gen_bool(0.5) {
                let c = rng.gen_range(1..q) as F;
                theta = theta.add_scaled(f, c, m);
            }
        }
        let cp = theta.charpoly(f);
        let mut facs = factor(f, &cp, rng.gen());
        facs.sort_by_key(|(p, _)| p.deg());
        let smallest = facs.first().map_or(0, |(p, _)| p.deg());
        for (fac, _) in facs.iter().take(3) {
            let d = fac.deg();
            if d > smallest.max(4) {
                break;
            }
            let nf = theta.eval_poly(f, fac);
            let ker = nf.nullspace(f);
            if ker.is_empty() {
                continue;
            }
            let s = spin(f, n, gens, &[ker[0].clone()]);
            if s.dim() < n {
                return Ok(Split::Reducible(s));
            }
            let kt = nf.left_nullspace(f);
            let st = spin(f, n, &transposed, &[kt[0].clone()]);
            if st.dim() < n {
                return Ok(Split::Reducible(st.annihilator(f)));
            }
            if ker.len() == d {
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::RetryBudget(RETRY_BUDGET))
}

/// Composition factors of a module, in the order found.
pub fn composition_factors(rep: &Rep, seed: u64) -> Result<Vec<Rep>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stack = vec![rep.clone()];
    let mut out = Vec::new();
    while let Some(m) = stack.pop() {
        match split(m.field(), m.dim(), m.gens(), &mut rng)? {
            Split::Irreducible => out.push(m),
            Split::Reducible(s) => {
                stack.push(m.quotient(&s)?);
                stack.push(m.sub(&s)?);
            }
        }
    }
    Ok(out)
}

/// Factors up to isomorphism with multiplicities.
pub fn distinct_factors(rep: &Rep, seed: u64) -> Result<Vec<(Rep, usize)>> {
    let mut out: Vec<(Rep, usize)> = Vec::new();
    for m in composition_factors(rep, seed)? {
        let mut found = false;
        for (r, c) in out.iter_mut() {
            if is_isomorphic_simple(r, &m)? {
                *c += 1;
                found = true;
                break;
            }
        }
        if !found {
            out.push((m, 1));
        }
    }
    Ok(out)
}

/// Vector generating the module, found among standard and random vectors.
fn cyclic_vector(f: &Field, n: usize, gens: &[Mat]) -> Option<Vec<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    for i in 0..n.min(4) {
        let mut e = vec![0; n];
        e[i] = 1;
        if spin(f, n, gens, &[e.clone()]).dim() == n {
            return Some(e);
        }
    }
    for _ in 0..16 {
        let v = random_vec(f, n, &mut rng);
        if spin(f, n, gens, std::slice::from_ref(&v)).dim() == n {
            return Some(v);
        }
    }
    None
}

/// Basis of `{J : J a_i = b_i J}` (J maps the `a`-space to the `b`-space).
pub fn hom_space(f: &Field, a: &[Mat], b: &[Mat]) -> Result<Vec<Mat>> {
    if a.len() != b.len() {
        return Err(Error::Dimension("different numbers of generators".into()));
    }
    if a.is_empty() {
        return Err(Error::Precondition(
            "dimensions are unknown without generators; use hom_space_dims".into(),
        ));
    }
    let da = a[0].rows();
    let db = b[0].rows();
    if da == 0 || db == 0 {
        return Ok(Vec::new());
    }
    match cyclic_vector(f, da, a) {
        Some(v) => Ok(hom_by_spin(f, a, b, &v)),
        None if da * db <= FULL_SYSTEM_CAP => Ok(hom_full(f, a, b)),
        None => Err(Error::CapExceeded {
            what: "hom system size",
            value: (da * db) as u64,
            cap: FULL_SYSTEM_CAP as u64,
        }),
    }
}

/// Hom space of explicit dimensions; with no generators every linear map
/// qualifies.
pub fn hom_space_dims(f: &Field, da: usize, db: usize, a: &[Mat], b: &[Mat]) -> Result<Vec<Mat>> {
    if !a.is_empty() {
        return hom_space(f, a, b);
    }
    Ok((0..db * da)
        .map(|i| {
            let mut m = Mat::zeros(db, da);
            m.set(i / da, i % da, 1);
            m
        })
        .collect())
}

/// Spin method: with `v` generating `a`, a homomorphism is fixed by `w = J v`,
/// and the relations among the spun images become linear conditions on `w`.
fn hom_by_spin(f: &Field, a: &[Mat], b: &[Mat], v: &[F]) -> Vec<Mat> {
    let da = a[0].rows();
    let db = b[0].rows();
    // spun basis with provenance: vecs[i] = a[k] vecs[parent]
    let mut sub = Subspace::new(da);
    let mut vecs = vec![v.to_vec()];
    let mut tree: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
    sub.insert(f, v.to_vec());
    let mut i = 0;
    while i < vecs.len() {
        for (k, m) in a.iter().enumerate() {
            let w = m.mul_vec(f, &vecs[i]);
            if sub.insert(f, w.clone()) {
                vecs.push(w);
                tree.push((i, k));
            }
        }
        i += 1;
    }
    debug_assert_eq!(vecs.len(), da);
    let basis = Mat::from_cols(da, &vecs);
    let binv = basis.inverse(f).expect("spun vectors form a basis");
    // L_i maps w to the image of vecs[i]
    let mut ls: Vec<Mat> = Vec::with_capacity(da);
    for &(p, k) in &tree {
        if p == usize::MAX {
            ls.push(Mat::identity(db));
        } else {
            ls.push(b[k].mul(f, &ls[p]));
        }
    }
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (k, m) in a.iter().enumerate() {
        for i in 0..da {
            let c = binv.mul_vec(f, &m.mul_vec(f, &vecs[i]));
            let mut e = b[k].mul(f, &ls[i]);
            for (j, &cj) in c.iter().enumerate() {
                if cj != 0 {
                    e = e.add_scaled(f, f.neg(cj), &ls[j]);
                }
            }
            for r in 0..db {
                let row = e.row(r);
                if row.iter().any(|&x| x != 0) {
                    rows.push(row.to_vec());
                }
            }
        }
    }
    let ws = if rows.is_empty() {
        (0..db)
            .map(|i| {
                let mut e = vec![0; db];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        Mat::from_rows(rows).expect("rectangular").nullspace(f)
    };
    ws.iter()
        .map(|w| {
            let cols: Vec<Vec<F>> = ls.iter().map(|l| l.mul_vec(f, w)).collect();
            Mat::from_cols(db, &cols).mul(f, &binv)
        })
        .collect()
}

/// Direct linear system in the `da * db` entries of `J`.
fn hom_full(f: &Field, a: &[Mat], b: &[Mat]) -> Vec<Mat> {
    let da = a[0].rows();
    let db = b[0].rows();
    let nv = da * db;
    let mut rows = Vec::new();
    // (J A - B J)[r][c] = sum_t J[r][t] A[t][c] - sum_t B[r][t] J[t][c]
    for (ma, mb) in a.iter().zip(b) {
        for r in 0..db {
            for c in 0..da {
                let mut row = vec![0; nv];
                for t in 0..da {
                    let x = ma.get(t, c);
                    row[r * da + t] = f.add(row[r * da + t], x);
                }
                for t in 0..db {
                    let x = mb.get(r, t);
                    row[t * da + c] = f.sub(row[t * da + c], x);
                }
                rows.push(row);
            }
        }
    }
    Mat::from_rows(rows)
        .expect("rectangular")
        .nullspace(f)
        .into_iter()
        .map(|v| Mat::from_flat(db, da, v).expect("shape"))
        .collect()
}

/// Dimension of the endomorphism algebra.
pub fn end_dim(rep: &Rep) -> Result<usize> {
    Ok(hom_space_dims(rep.field(), rep.dim(), rep.dim(), rep.gens(), rep.gens())?.len())
}

pub fn is_absolutely_irreducible(rep: &Rep, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(matches!(split(rep.field(), rep.dim(), rep.gens(), &mut rng)?, Split::Irreducible)
        && end_dim(rep)? == 1)
}

/// `b` on the generators of `a` when both are modules of the same subgroup
/// presented by different generating sets.
fn aligned(a: &Rep, b: &Rep) -> Result<Rep> {
    if a.group() != b.group() || a.group().gens() == b.group().gens() {
        return Ok(b.clone());
    }
    let gens = a
        .group()
        .gens()
        .iter()
        .map(|&s| b.image(s).cloned())
        .collect::<Result<_>>()?;
    Ok(b.with_group(a.group(), gens))
}

fn quick_reject(a: &Rep, b: &Rep) -> bool {
    if a.dim() != b.dim() || a.gens().len() != b.gens().len() {
        return true;
    }
    let f = a.field();
    a.gens()
        .iter()
        .zip(b.gens())
        .any(|(x, y)| x.trace(f) != y.trace(f))
}

/// Isomorphism test valid when at least one side is irreducible.
pub fn is_isomorphic_simple(a: &Rep, b: &Rep) -> Result<bool> {
    let b = &aligned(a, b)?;
    if quick_reject(a, b) {
        return Ok(false);
    }
    Ok(!hom_space_dims(a.field(), a.dim(), b.dim(), a.gens(), b.gens())?.is_empty())
}

/// Invertible `J` with `J a(g) = b(g) J`, searched in the Hom space. Exact
/// when either module is irreducible; otherwise a search over the basis and
/// seeded random combinations.
pub fn isomorphism(a: &Rep, b: &Rep) -> Result<Option<Mat>> {
    let b = &aligned(a, b)?;
    if quick_reject(a, b) {
        return Ok(None);
    }
    Ok(invertible_intertwiner(a.field(), a.dim(), a.gens(), b.gens())?.0)
}

/// An invertible element of `Hom(a, b)` between spaces of equal dimension
/// `n`, together with the dimension of the Hom space.
pub fn invertible_intertwiner(
    f: &Field,
    n: usize,
    a: &[Mat],
    b: &[Mat],
) -> Result<(Option<Mat>, usize)> {
    let homs = hom_space_dims(f, n, n, a, b)?;
    for h in &homs {
        if h.is_invertible(f) {
            return Ok((Some(h.clone()), homs.len()));
        }
    }
    if homs.len() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x150);
        let q = f.order();
        for _ in 0..64 {
            let mut j = Mat::zeros(n, n);
            for h in &homs {
                j = j.add_scaled(f, rng.gen_range(0..q) as F, h);
            }
            if j.is_invertible(f) {
                return Ok((Some(j), homs.len()));
            }
        }
    }
    Ok((None, homs.len()))
}

pub fn is_isomorphic(a: &Rep, b: &Rep) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::subgroup::Subgroup;
    use proptest::prelude::*;

    fn dims(r: &Rep, seed: u64) -> Vec<usize> {
        let mut d: Vec<usize> = composition_factors(r, seed)
            .unwrap()
            .iter()
            .map(Rep::dim)
            .collect();
        d.sort();
        d
    }

    #[test]
    fn regular_s3_mod_2_and_3() {
        let g = library::symmetric(3);
        let x = Subgroup::whole(&g).unwrap();
        let r2 = Rep::regular(&x, &Field::prime(2).unwrap()).unwrap();
        assert_eq!(dims(&r2, 1), vec![1, 1, 2, 2]);
        let r3 = Rep::regular(&x, &Field::prime(3).unwrap()).unwrap();
        assert_eq!(dims(&r3, 1), vec![1, 1, 1, 1, 1, 1]);
        let d = distinct_factors(&r3, 5).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|(_, c)| *c == 3));
    }

    #[test]
    fn c3_over_gf2_is_not_split() {
        let g = library::cyclic(3);
        let x = Subgroup::whole(&g).unwrap();
        let f2 = Field::prime(2).unwrap();
        let d = distinct_factors(&Rep::regular(&x, &f2).unwrap(), 0).unwrap();
        let two = d.iter().find(|(r, _)| r.dim() == 2).unwrap();
        assert_eq!(end_dim(&two.0).unwrap(), 2);
        let f4 = Field::new(2, 2).unwrap();
        let d4 = distinct_factors(&Rep::regular(&x, &f4).unwrap(), 0).unwrap();
        assert_eq!(d4.len(), 3);
    }

    #[test]
    fn hom_methods_agree() {
        let g = library::symmetric(3);
        let x = Subgroup::whole(&g).unwrap();
        let f = Field::prime(5).unwrap();
        let r = Rep::regular(&x, &f).unwrap();
        let a = hom_by_spin(&f, r.gens(), r.gens(), &{
            let mut e = vec![0; 6];
            e[0] = 1;
            e
        });
        let b = hom_full(&f, r.gens(), r.gens());
        assert_eq!(a.len(), 6);
        assert_eq!(b.len(), 6);
        for j in &a {
            for m in r.gens() {
                assert_eq!(j.mul(&f, m), m.mul(&f, j));
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn conjugates_are_isomorphic(seed in any::<u64>()) {
            let g = library::dihedral(8);
            let x = Subgroup::whole(&g).unwrap();
            let f = Field::prime(3).unwrap();
            let fs = distinct_factors(&Rep::regular(&x, &f).unwrap(), 3).unwrap();
            let two = fs.iter().find(|(r, _)| r.dim() == 2).unwrap().0.clone();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let j = loop {
                let m = Mat::from_flat(2, 2, random_vec(&f, 4, &mut rng)).unwrap();
                if m.is_invertible(&f) { break m; }
            };
            let c = two.conjugate_by(&j).unwrap();
            let iso = isomorphism(&two, &c).unwrap().unwrap();
            for (a, b) in two.gens().iter().zip(c.gens()) {
                prop_assert_eq!(iso.mul(&f, a), b.mul(&f, &iso));
            }
        }
    }
}
