//! Simple modules in characteristic p over finite splitting fields,
//! restriction counts, fixed points and central characters.

use crate::arith;
use crate::classes::classes_of;
use crate::error::{Error, Result};
use crate::field::{Field, DEGREE_CAP, F};
use crate::group::Elt;
use crate::matrix::{Mat, Subspace};
use crate::meataxe;
use crate::rep::Rep;
use crate::subgroup::{normalizer, sylow, Subgroup};
use serde::Serialize;

/// Largest module the meataxe is asked to chop.
pub const CHOP_CAP: usize = 2000;
/// Groups up to this order are chopped through their regular module.
pub const REGULAR_CAP: u64 = 300;

pub use crate::meataxe::{is_isomorphic, isomorphism};

/// Number of p-regular conjugacy classes.
pub fn brauer_count(g: &Subgroup, p: u64) -> Result<usize> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(classes_of(g)?
        .iter()
        .filter(|c| c.element_order % p != 0)
        .count())
}

/// Composition factors up to isomorphism, with multiplicities.
pub fn chop(m: &Rep, seed: u64) -> Result<Vec<(Rep, usize)>> {
    if m.dim() > CHOP_CAP {
        return Err(Error::CapExceeded {
            what: "module dimension",
            value: m.dim() as u64,
            cap: CHOP_CAP as u64,
        });
    }
    meataxe::distinct_factors(m, seed)
}

/// Degree `k` such that `GF(p^k)` contains all roots of unity of order
/// dividing the p'-part of the exponent; such a field splits `g` and all
/// of its subgroups and sections.
pub fn splitting_degree(g: &Subgroup, p: u64) -> Result<u32> {
    let mut e = 1;
    for &x in g.elements() {
        e = arith::lcm(e, g.parent().table()?.element_order(x));
    }
    let e = arith::p_prime_part(e, p);
    Ok(if e == 1 { 1 } else { arith::mult_order(p % e, e) as u32 })
}

pub fn splitting_field(g: &Subgroup, p: u64) -> Result<Field> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let k = splitting_degree(g, p)?;
    if k > DEGREE_CAP {
        return Err(Error::CapExceeded {
            what: "splitting field degree",
            value: k as u64,
            cap: DEGREE_CAP as u64,
        });
    }
    Field::new(p, k)
}

/// Canonical p-regular class representatives of `g`.
pub fn p_regular_reps(g: &Subgroup, p: u64) -> Result<Vec<Elt>> {
    Ok(classes_of(g)?
        .into_iter()
        .filter(|c| c.element_order % p != 0)
        .map(|c| c.representative)
        .collect())
}

/// Module whose composition factors include every simple module.
fn source_module(g: &Subgroup, f: &Field) -> Result<Rep> {
    if g.order() <= REGULAR_CAP {
        Rep::regular(g, f)
    } else {
        // every simple S is a quotient of F[G/P] since S^P != 0
        let p = sylow(g, f.p())?;
        Rep::on_cosets(g, &p, f)
    }
}

fn sort_canonical(g: &Subgroup, p: u64, mods: &mut [Rep]) -> Result<()> {
    let reps = p_regular_reps(g, p)?;
    let mut keyed: Vec<((usize, Vec<F>), Rep)> = mods
        .iter()
        .map(|m| Ok(((m.dim(), m.traces(&reps)?), m.clone())))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    for (slot, (_, m)) in mods.iter_mut().zip(keyed) {
        *slot = m;
    }
    Ok(())
}

/// Simple modules over a field that is known to split `g`; an error if any
/// factor fails to be absolutely irreducible.
pub fn simple_modules_over(g: &Subgroup, f: &Field, seed: u64) -> Result<Vec<Rep>> {
    match try_simple_modules(g, f, seed)? {
        Some(m) => Ok(m),
        None => Err(Error::Precondition(format!(
            "{f:?} does not split the group"
        ))),
    }
}

fn try_simple_modules(g: &Subgroup, f: &Field, seed: u64) -> Result<Option<Vec<Rep>>> {
    let p = f.p();
    let src = source_module(g, f)?;
    let mut mods = Vec::new();
    for (m, _) in chop(&src, seed)? {
        if meataxe::end_dim(&m)? != 1 {
            return Ok(None);
        }
        mods.push(m);
    }
    let expected = brauer_count(g, p)?;
    if mods.len() != expected {
        return Err(Error::Consistency(format!(
            "{} simple modules found, {expected} p-regular classes",
            mods.len()
        )));
    }
    sort_canonical(g, p, &mut mods)?;
    Ok(Some(mods))
}

/// Simple modules over the smallest `GF(p^k)`, `k` running through the
/// divisors of the splitting degree, over which all factors are absolutely
/// irreducible.
pub fn simple_modules(g: &Subgroup, p: u64, seed: u64) -> Result<Vec<Rep>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let top = splitting_degree(g, p)?;
    for k in (1..=top).filter(|k| top % k == 0) {
        if k > DEGREE_CAP {
            break;
        }
        let f = Field::new(p, k)?;
        if let Some(m) = try_simple_modules(g, &f, seed)? {
            return Ok(m);
        }
    }
    Err(Error::CapExceeded {
        what: "splitting field degree",
        value: top as u64,
        cap: DEGREE_CAP as u64,
    })
}

/// Number of simple `g`-modules (over `zeta`'s field) whose socle on
/// restriction to `h` contains `zeta`.
pub fn restrict_and_count(g: &Subgroup, h: &Subgroup, zeta: &Rep, seed: u64) -> Result<usize> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    if zeta.group() != h {
        return Err(Error::Precondition("zeta is not a module of H".into()));
    }
    let f = zeta.field();
    let mut n = 0;
    for chi in simple_modules_over(g, f, seed)? {
        let res = chi.restrict(h)?;
        if !meataxe::hom_space_dims(f, zeta.dim(), res.dim(), zeta.gens(), res.gens())?.is_empty() {
            n += 1;
        }
    }
    Ok(n)
}

fn check_p_subgroup(v: &Rep, q: &Subgroup) -> Result<()> {
    if !q.is_p_group(v.field().p()) {
        return Err(Error::Precondition("Q is not a p-group".into()));
    }
    if !q.is_subgroup_of(v.group()) {
        return Err(Error::NotSubgroup("Q is not contained in X".into()));
    }
    Ok(())
}

fn fixed_space_of(v: &Rep, elems: &[Elt]) -> Result<Subspace> {
    let f = v.field();
    let n = v.dim();
    let id = Mat::identity(n);
    let mut rows: Vec<Vec<F>> = Vec::new();
    for &e in elems {
        let d = v.image(e)?.sub(f, &id);
        for r in 0..n {
            rows.push(d.row(r).to_vec());
        }
    }
    let basis = if rows.is_empty() {
        (0..n).map(|i| id.col(i)).collect()
    } else {
        Mat::from_rows(rows)?.nullspace(f)
    };
    Ok(Subspace::spanned_by(f, n, &basis))
}

/// `V^Q` as the intersection of the fixed spaces of the generators of `Q`.
pub fn fixed_space(v: &Rep, q: &Subgroup) -> Result<Subspace> {
    check_p_subgroup(v, q)?;
    fixed_space_of(v, q.gens())
}

/// `V^Q` computed from every element of `Q`.
pub fn fixed_space_enumerated(v: &Rep, q: &Subgroup) -> Result<Subspace> {
    check_p_subgroup(v, q)?;
    fixed_space_of(v, q.elements())
}

/// The `N_X(Q)`-module `V^Q`.
pub fn fixed_point_module(v: &Rep, q: &Subgroup) -> Result<Rep> {
    let s = fixed_space(v, q)?;
    let n = normalizer(v.group(), q)?;
    v.restrict(&n)?.sub(&s)
}

/// Scalar by which each element of `z` acts, indexed like `z.elements()`.
pub fn central_character(v: &Rep, z: &Subgroup) -> Result<Vec<F>> {
    if !z.is_subgroup_of(v.group()) {
        return Err(Error::NotSubgroup("Z is not contained in the group of V".into()));
    }
    z.elements()
        .iter()
        .map(|&e| {
            v.image(e)?.as_scalar().ok_or_else(|| {
                Error::Precondition(format!("element {e} does not act as a scalar"))
            })
        })
        .collect()
}

/// Stable handle for a simple module in a canonical list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrauerLabel {
    pub index: usize,
    pub dimension: usize,
    /// index of the central character among those occurring, in order of
    /// first appearance
    pub central: usize,
}

/// Labels for a canonical list, with central characters taken on `z`.
pub fn labels(mods: &[Rep], z: &Subgroup) -> Result<Vec<BrauerLabel>> {
    let mut seen: Vec<Vec<F>> = Vec::new();
    mods.iter()
        .enumerate()
        .map(|(index, m)| {
            let nu = central_character(m, z)?;
            let central = match seen.iter().position(|s| *s == nu) {
                Some(i) => i,
                None => {
                    seen.push(nu);
                    seen.len() - 1
                }
            };
            Ok(BrauerLabel {
                index,
                dimension: m.dim(),
                central,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::subgroup::center;

    fn whole(g: &crate::PermutationGroup) -> Subgroup {
        Subgroup::whole(g).unwrap()
    }

    fn dims(m: &[Rep]) -> Vec<usize> {
        m.iter().map(Rep::dim).collect()
    }

    #[test]
    fn counts() {
        let s3 = whole(&library::symmetric(3));
        assert_eq!(brauer_count(&s3, 3).unwrap(), 2);
        assert_eq!(brauer_count(&s3, 5).unwrap(), 3);
        assert_eq!(brauer_count(&whole(&library::sl2(3)), 3).unwrap(), 3);
    }

    #[test]
    fn simple_module_lists() {
        let s3 = whole(&library::symmetric(3));
        assert_eq!(dims(&simple_modules(&s3, 3, 1).unwrap()), vec![1, 1]);
        assert_eq!(dims(&simple_modules(&s3, 2, 1).unwrap()), vec![1, 2]);
        let sl = whole(&library::sl2(3));
        assert_eq!(dims(&simple_modules(&sl, 3, 1).unwrap()), vec![1, 2, 3]);
        let c2 = whole(&library::cyclic(2));
        assert_eq!(dims(&simple_modules(&c2, 2, 1).unwrap()), vec![1]);
        // C3 needs GF(4) in characteristic 2
        let c3 = whole(&library::cyclic(3));
        let m = simple_modules(&c3, 2, 1).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m[0].field().k(), 2);
    }

    #[test]
    fn maschke_sum_of_squares() {
        let s4 = whole(&library::symmetric(4));
        let m = simple_modules(&s4, 5, 2).unwrap();
        assert_eq!(m.iter().map(|r| r.dim() * r.dim()).sum::<usize>(), 24);
    }

    #[test]
    fn seed_independent_factors() {
        let a4 = whole(&library::alternating(4));
        let f = Field::new(2, 2).unwrap();
        let r = Rep::regular(&a4, &f).unwrap();
        let a = chop(&r, 1).unwrap();
        let b = chop(&r, 99).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, cx) in &a {
            let (_, cy) = b.iter().find(|(y, _)| is_isomorphic(x, y).unwrap()).unwrap();
            assert_eq!(cx, cy);
        }
        let total: usize = a.iter().map(|(m, c)| m.dim() * c).sum();
        assert_eq!(total, 12);
    }

    #[test]
    fn restriction_counts() {
        let s3g = library::symmetric(3);
        let s3 = whole(&s3g);
        let a3 = crate::subgroup::derived(&s3);
        let f = Field::new(2, 2).unwrap();
        let zetas = simple_modules_over(&a3, &f, 0).unwrap();
        let nontrivial = zetas.iter().find(|z| !z.gens()[0].is_identity()).unwrap();
        assert_eq!(restrict_and_count(&s3, &a3, nontrivial, 0).unwrap(), 1);
        let triv = Subgroup::trivial(&s3g).unwrap();
        let zt = Rep::trivial(&triv, &f);
        assert_eq!(restrict_and_count(&s3, &triv, &zt, 0).unwrap(), 2);
        let chis = simple_modules_over(&s3, &f, 0).unwrap();
        for chi in &chis {
            assert_eq!(restrict_and_count(&s3, &s3, chi, 0).unwrap(), 1);
        }
    }

    #[test]
    fn fixed_points_of_sl23() {
        let g = library::sl2(3);
        let x = whole(&g);
        let mods = simple_modules(&x, 3, 0).unwrap();
        let nat = &mods[1];
        let u = sylow(&x, 3).unwrap();
        let fp = fixed_point_module(nat, &u).unwrap();
        assert_eq!(fp.dim(), 1);
        assert_eq!(fp.group().order(), 6);
        for m in &mods {
            let a = fixed_space(m, &u).unwrap();
            let b = fixed_space_enumerated(m, &u).unwrap();
            assert!(a.dim() >= 1);
            assert_eq!(a.basis(), b.basis());
        }
        let t = Subgroup::trivial(&g).unwrap();
        assert_eq!(fixed_point_module(nat, &t).unwrap().dim(), 2);
        assert!(fixed_space(nat, &center(&x)).is_err());
    }

    #[test]
    fn central_characters_multiply() {
        let x = whole(&library::sl2(5));
        let z = center(&x);
        let t = x.parent().table().unwrap();
        let mods = simple_modules(&x, 5, 0).unwrap();
        assert_eq!(dims(&mods), vec![1, 2, 3, 4, 5]);
        for m in &mods {
            let nu = central_character(m, &z).unwrap();
            let f = m.field();
            for (i, &a) in z.elements().iter().enumerate() {
                for (j, &b) in z.elements().iter().enumerate() {
                    let k = z.position(t.mul(a, b)).unwrap();
                    assert_eq!(nu[k], f.mul(nu[i], nu[j]));
                }
            }
            // -I acts as (-1)^(dim - 1)
            let minus = if m.dim() % 2 == 0 { f.neg(1) } else { 1 };
            assert_eq!(nu[1], minus);
        }
        let l = labels(&mods, &z).unwrap();
        assert_eq!(l.iter().map(|b| b.central).collect::<Vec<_>>(), vec![0, 1, 0, 1, 0]);
    }
}
