//! Projective representations with cocycles in exponent form.
//!
//! Over `GF(q)` every cocycle value is a power of the field's primitive
//! element `w`, so a cocycle is stored as exponents modulo `m = q - 1`.

use crate::arith;
use crate::auts::Automorphism;
use crate::cocycle::{cocycle_order, Cocycle};
use crate::error::{Error, Result};
use crate::field::{Field, F};
use crate::group::{Elt, PermutationGroup};
use crate::matrix::{Mat, Subspace};
use crate::meataxe;
use crate::quotient::{normalized_section, quotient_group, Quotient};
use crate::rep::Rep;
use crate::subgroup::{is_perfect, Subgroup};
use crate::zmod;
use rayon::prelude::*;

/// Table of matrices on a group with its cocycle, indexed by positions.
#[derive(Clone, Debug)]
pub struct ProjRep {
    group: Subgroup,
    field: Field,
    dim: usize,
    table: Vec<Mat>,
    cocycle: Cocycle,
}

impl PartialEq for ProjRep {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.field == other.field && self.table == other.table
    }
}

/// Order of the multiplicative group, the modulus of every cocycle over `f`.
pub fn modulus(f: &Field) -> u64 {
    f.order() - 1
}

/// Scalar `c` with `a = c b`, if any.
fn proportion(f: &Field, a: &Mat, b: &Mat) -> Option<F> {
    let (pos, &bv) = b.data().iter().enumerate().find(|(_, &x)| x != 0)?;
    let c = f.div(a.data()[pos], bv).ok()?;
    if c == 0 {
        return None;
    }
    a.data()
        .iter()
        .zip(b.data())
        .all(|(&x, &y)| x == f.mul(c, y))
        .then_some(c)
}

/// The unique cocycle with `P(g) P(h) = w^alpha(g,h) P(gh)`, checked on
/// every pair.
pub fn extract_cocycle(group: &Subgroup, f: &Field, table: &[Mat]) -> Result<Cocycle> {
    let el = group.elements();
    let n = el.len();
    if table.len() != n {
        return Err(Error::Dimension(format!("{} matrices for {n} elements", table.len())));
    }
    if !table[0].is_identity() {
        return Err(Error::NotProjective("P(1) is not the identity".into()));
    }
    let t = group.parent().table()?;
    let rows: Vec<Result<Vec<u64>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = group.position(t.mul(el[i], el[j])).unwrap();
                    let prod = table[i].mul(f, &table[j]);
                    let c = proportion(f, &prod, &table[k]).ok_or_else(|| {
                        Error::NotProjective(format!(
                            "P({})P({}) is not a scalar multiple of P({})",
                            el[i], el[j], el[k]
                        ))
                    })?;
                    Ok(f.log(c).expect("nonzero"))
                })
                .collect()
        })
        .collect();
    let mut data = Vec::with_capacity(n * n);
    for r in rows {
        data.extend(r?);
    }
    Cocycle::from_table(group, modulus(f), data)
}

impl ProjRep {
    pub fn from_table(group: &Subgroup, field: &Field, table: Vec<Mat>) -> Result<Self> {
        let cocycle = extract_cocycle(group, field, &table)?;
        let dim = table[0].rows();
        Ok(ProjRep {
            group: group.clone(),
            field: field.clone(),
            dim,
            table,
            cocycle,
        })
    }

    /// Trusted constructor; `verify` rechecks the table against the cocycle.
    pub(crate) fn from_parts(group: &Subgroup, field: &Field, table: Vec<Mat>, cocycle: Cocycle) -> Self {
        let dim = table[0].rows();
        ProjRep {
            group: group.clone(),
            field: field.clone(),
            dim,
            table,
            cocycle,
        }
    }

    /// A linear representation, with zero cocycle.
    pub fn from_rep(rep: &Rep) -> Self {
        let m = modulus(rep.field());
        ProjRep {
            group: rep.group().clone(),
            field: rep.field().clone(),
            dim: rep.dim(),
            table: rep.images().to_vec(),
            cocycle: Cocycle::zero(rep.group(), m),
        }
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &[Mat] {
        &self.table
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn at(&self, e: Elt) -> &Mat {
        &self.table[self.group.position(e).expect("element of the group")]
    }

    pub fn gen_images(&self) -> Vec<Mat> {
        self.group.gens().iter().map(|&s| self.at(s).clone()).collect()
    }

    pub fn is_linear(&self) -> bool {
        self.cocycle.is_zero()
    }

    /// The linear representation, when the cocycle vanishes.
    pub fn to_rep(&self) -> Result<Rep> {
        if !self.is_linear() {
            return Err(Error::Precondition("cocycle is not zero".into()));
        }
        Ok(Rep::new_unchecked(&self.group, &self.field, self.dim, self.gen_images()))
    }

    /// Checks `P(1) = 1` and `P(g)P(h) = w^alpha(g,h) P(gh)` on every pair.
    pub fn verify(&self) -> Result<()> {
        let c = extract_cocycle(&self.group, &self.field, &self.table)?;
        if c != self.cocycle {
            return Err(Error::Consistency("stored cocycle differs from the table".into()));
        }
        Ok(())
    }

    /// `beta P` for `beta = w^b`, `b` indexed by positions with `b(1) = 0`;
    /// the cocycle changes by the coboundary of `b`.
    pub fn scaled(&self, b: &[u64]) -> Result<ProjRep> {
        let f = &self.field;
        let m = modulus(f);
        let d = crate::cocycle::coboundary(&self.group, m, b)?;
        let table = self
            .table
            .iter()
            .zip(b)
            .map(|(p, &e)| p.scale(f, f.exp(e % m.max(1))))
            .collect();
        Ok(ProjRep {
            group: self.group.clone(),
            field: f.clone(),
            dim: self.dim,
            table,
            cocycle: self.cocycle.add(&d)?,
        })
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<ProjRep> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup("restriction to a non-subgroup".into()));
        }
        let table = h.elements().iter().map(|&e| self.at(e).clone()).collect();
        Ok(ProjRep {
            group: h.clone(),
            field: self.field.clone(),
            dim: self.dim,
            table,
            cocycle: self.cocycle.restrict(h)?,
        })
    }

    /// Action on a subspace stable under every `P(g)`; the cocycle is unchanged.
    pub fn sub(&self, s: &Subspace) -> Result<ProjRep> {
        let f = &self.field;
        let table = self
            .table
            .iter()
            .map(|g| {
                let cols = s
                    .basis()
                    .iter()
                    .map(|b| {
                        s.coords(f, &g.mul_vec(f, b))
                            .ok_or_else(|| Error::Consistency("subspace is not stable".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Mat::from_cols(s.dim(), &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ProjRep {
            group: self.group.clone(),
            field: f.clone(),
            dim: s.dim(),
            table,
            cocycle: self.cocycle.clone(),
        })
    }
}

/// Solves `N (delta + d beta) = 0` restricted to generator rows (enough for
/// a cocycle), with `beta` forced to vanish where `fixed` holds.
pub(crate) fn solve_correction(
    group: &Subgroup,
    delta: &Cocycle,
    n_mult: u64,
    fixed: &dyn Fn(usize) -> bool,
) -> Result<Option<Vec<u64>>> {
    let m = delta.modulus();
    let el = group.elements();
    let n = el.len();
    if m == 1 {
        return Ok(Some(vec![0; n]));
    }
    let t = group.parent().table()?;
    let mut var = vec![usize::MAX; n];
    let mut nv = 0;
    for (i, v) in var.iter_mut().enumerate() {
        if i != 0 && !fixed(i) {
            *v = nv;
            nv += 1;
        }
    }
    let nm = n_mult % m;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &s in group.gens() {
        let i = group.position(s).unwrap();
        for j in 0..n {
            let k = group.position(t.mul(s, el[j])).unwrap();
            let mut row = vec![0u64; nv];
            for (pos, sign) in [(i, 1i64), (j, 1), (k, -1)] {
                if var[pos] != usize::MAX {
                    let c = if sign > 0 { nm } else { (m - nm) % m };
                    row[var[pos]] = (row[var[pos]] + c) % m;
                }
            }
            rows.push(row);
            rhs.push((m - nm * delta.at(i, j) % m) % m);
        }
    }
    let sol = if nv == 0 {
        rhs.iter().all(|&r| r == 0).then(Vec::new)
    } else {
        zmod::solve(&rows, &rhs, nv, m)
    };
    Ok(sol.map(|x| {
        (0..n)
            .map(|i| if var[i] == usize::MAX { 0 } else { x[var[i]] })
            .collect()
    }))
}

/// Result of an equivalence search.
#[derive(Clone, Debug)]
pub struct Equivalence {
    /// `J w^beta(x) P'(x) J^-1 = P(x)`
    pub j: Mat,
    pub beta: Vec<u64>,
    /// dimension of the intertwiner space after the cocycle correction
    pub hom_dim: usize,
}

/// Searches `J` with `J P'(x) J^-1` proportional to `P(x)` for all `x`: the
/// cocycles are first matched up to a coboundary, then the corrected pair
/// is compared as modules on the generators.
pub fn equivalence(p: &ProjRep, p2: &ProjRep) -> Result<Option<Equivalence>> {
    if p.group != p2.group || p.field != p2.field {
        return Err(Error::Precondition("projective representations of different groups".into()));
    }
    if p.dim != p2.dim {
        return Ok(None);
    }
    // alpha' + d beta = alpha
    let delta = p2.cocycle.sub(&p.cocycle)?;
    let Some(beta) = solve_correction(&p.group, &delta, 1, &|_| false)? else {
        return Ok(None);
    };
    let corrected = p2.scaled(&beta)?;
    if corrected.cocycle != p.cocycle {
        return Err(Error::Consistency("coboundary correction failed".into()));
    }
    let f = &p.field;
    let a = corrected.gen_images();
    let b = p.gen_images();
    let (j, hom_dim) = meataxe::invertible_intertwiner(f, p.dim, &a, &b)?;
    Ok(j.map(|j| Equivalence { j, beta, hom_dim }))
}

pub fn are_equivalent(p: &ProjRep, p2: &ProjRep) -> Result<bool> {
    Ok(equivalence(p, p2)?.is_some())
}

/// Checks a claimed equivalence on every element.
pub fn check_equivalence(p: &ProjRep, p2: &ProjRep, j: &Mat) -> Result<bool> {
    let f = &p.field;
    let ji = j.inverse(f)?;
    Ok(p.table
        .iter()
        .zip(&p2.table)
        .all(|(a, b)| proportion(f, &j.mul(f, b).mul(f, &ji), a).is_some()))
}

/// Scales so the first nonzero entry (row-major) is 1.
fn normalize_scalar(f: &Field, j: &Mat) -> Result<Mat> {
    let c = j
        .first_nonzero()
        .ok_or_else(|| Error::Singular("zero intertwiner".into()))?;
    Ok(j.scale(f, f.inv(c)?))
}

/// `V o ad_t` on `X`, with the transported cocycle.
fn conjugated(v: &ProjRep, t_elt: Elt) -> Result<ProjRep> {
    let x = &v.group;
    let tab = x.parent().table()?;
    let ti = tab.inv(t_elt);
    let phi: Vec<usize> = x
        .elements()
        .iter()
        .map(|&y| {
            x.position(tab.mul(tab.mul(t_elt, y), ti))
                .ok_or_else(|| Error::NotNormal("X is not normalized by G".into()))
        })
        .collect::<Result<_>>()?;
    let n = phi.len();
    let table = phi.iter().map(|&k| v.table[k].clone()).collect();
    let mut data = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = v.cocycle.at(phi[i], phi[j]);
        }
    }
    let cocycle = Cocycle::from_table(x, v.cocycle.modulus(), data)?;
    Ok(ProjRep::from_parts(x, &v.field, table, cocycle))
}

/// Extension of a `G`-stable irreducible projective representation of a
/// perfect normal subgroup `X`, using the canonical transversal.
pub fn extend_projective(v: &ProjRep, g: &Subgroup) -> Result<ProjRep> {
    let reps = normalized_section(g, &v.group)?.reps;
    extend_projective_with(v, g, &reps, true)
}

/// As `extend_projective` with an explicit transversal, listed in the
/// coset order of `normalized_section`. With `require_perfect` off the
/// construction is attempted anyway and only the result is checked.
pub fn extend_projective_with(
    v: &ProjRep,
    g: &Subgroup,
    transversal: &[Elt],
    require_perfect: bool,
) -> Result<ProjRep> {
    let x = &v.group;
    if !x.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("X is not contained in G".into()));
    }
    if !x.is_normal_in(g) {
        return Err(Error::NotNormal("X is not normal in G".into()));
    }
    if require_perfect && !is_perfect(x) {
        return Err(Error::Precondition("X is not perfect".into()));
    }
    let sec = normalized_section(g, x)?;
    if transversal.len() != sec.reps.len()
        || transversal.iter().enumerate().any(|(i, &t)| sec.coset_of[t] != i)
        || transversal[0] != 0
    {
        return Err(Error::Precondition("not a normalized transversal of G/X".into()));
    }
    let f = &v.field;
    let mut js: Vec<Mat> = Vec::with_capacity(transversal.len());
    for &t in transversal {
        if t == 0 {
            js.push(Mat::identity(v.dim));
            continue;
        }
        // J V(y) J^-1 ~ V(t y t^-1)
        let vt = conjugated(v, t)?;
        let eq = equivalence(&vt, v)?.ok_or_else(|| {
            Error::Precondition(format!("V is not stable under conjugation by {t}"))
        })?;
        if eq.hom_dim != 1 {
            return Err(Error::Precondition(format!(
                "intertwiner space has dimension {}; V is not absolutely irreducible",
                eq.hom_dim
            )));
        }
        js.push(normalize_scalar(f, &eq.j)?);
    }
    let tab = g.parent().table()?;
    let table: Vec<Mat> = g
        .elements()
        .iter()
        .map(|&e| {
            let c = sec.coset_of[e];
            let y = tab.mul(e, tab.inv(transversal[c]));
            v.at(y).mul(f, &js[c])
        })
        .collect();
    ProjRep::from_table(g, f, table)
}

/// `N = lcm(gcd(|G|, m), order of the cocycle on X)`: it kills
/// `H^2(G, Z/m)` and the restricted cocycle, and is prime to `p`.
pub fn finite_order_bound(v: &ProjRep, x: &Subgroup) -> Result<u64> {
    let m = modulus(&v.field);
    let ox = cocycle_order(&v.cocycle.restrict(x)?);
    Ok(arith::lcm(arith::gcd(v.group.order(), m.max(1)), ox))
}

/// Rescales by `beta` with `beta(X) = 1` so that the cocycle has order
/// dividing `N`; the restriction to `X` is unchanged.
pub fn normalize_finite_order(v: &ProjRep, x: &Subgroup, n_mult: u64) -> Result<ProjRep> {
    let f = &v.field;
    let p = f.p();
    if n_mult == 0 || n_mult.is_multiple_of(p) {
        return Err(Error::Precondition(format!("N = {n_mult} is not prime to {p}")));
    }
    if !x.is_subgroup_of(&v.group) {
        return Err(Error::NotSubgroup("X is not contained in the group".into()));
    }
    let m = modulus(f);
    if m == 1 {
        return Ok(v.clone());
    }
    let alpha = &v.cocycle;
    if !alpha.restrict(x)?.scale(n_mult).is_zero() {
        return Err(Error::Precondition("N does not kill the cocycle on X".into()));
    }
    let g = &v.group;
    let el = g.elements();
    let in_x = |i: usize| x.contains(el[i]);
    // N alpha = d gamma
    let neg_n_alpha = alpha.scale(m - n_mult % m);
    let gamma = solve_correction(g, &neg_n_alpha, 1, &|_| false)?
        .ok_or_else(|| Error::NoSolution(format!("N = {n_mult} alpha is not a coboundary")))?;
    // beta^N = gamma^-1 pointwise, where roots exist in the field
    let d = arith::gcd(n_mult, m);
    let md = m / d;
    let mut beta = vec![0u64; el.len()];
    let mut pointwise = true;
    for i in 0..el.len() {
        let target = (m - gamma[i] % m) % m;
        if !target.is_multiple_of(d) {
            pointwise = false;
            break;
        }
        if in_x(i) && target != 0 {
            pointwise = false;
            break;
        }
        let inv = arith::inv_mod((n_mult / d) % md.max(1), md.max(1)).unwrap_or(0);
        beta[i] = (target / d) * inv % md.max(1);
    }
    if !pointwise {
        // any beta vanishing on X with N (alpha + d beta) = 0
        beta = solve_correction(g, alpha, n_mult, &in_x)?.ok_or_else(|| {
            Error::NoSolution("required N-th roots do not exist in the field".into())
        })?;
    }
    let out = v.scaled(&beta)?;
    if !out.cocycle.scale(n_mult).is_zero() {
        return Err(Error::Consistency("normalized cocycle order does not divide N".into()));
    }
    for &e in x.elements() {
        if out.at(e) != v.at(e) {
            return Err(Error::Consistency("normalization changed the restriction to X".into()));
        }
    }
    Ok(out)
}

/// Normalization with the least `N` dividing `finite_order_bound` for
/// which one exists.
pub fn normalize_minimal(v: &ProjRep, x: &Subgroup) -> Result<(ProjRep, u64)> {
    let bound = finite_order_bound(v, x)?;
    let x_order = cocycle_order(&v.cocycle.restrict(x)?);
    for n in arith::divisors(bound) {
        if n % x_order != 0 {
            continue;
        }
        match normalize_finite_order(v, x, n) {
            Ok(out) => return Ok((out, n)),
            Err(Error::NoSolution(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoSolution(format!("no normalization with N dividing {bound}")))
}

/// `P o tau^-1`, with cocycle `alpha o (tau^-1 x tau^-1)`.
pub fn aut_twist(p: &ProjRep, tau: &Automorphism) -> Result<ProjRep> {
    if tau.group() != &p.group {
        return Err(Error::NotAutomorphism("automorphism of a different group".into()));
    }
    let inv = tau.inverse();
    let phi = inv.map();
    let n = phi.len();
    let table = phi.iter().map(|&k| p.table[k].clone()).collect();
    let mut data = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = p.cocycle.at(phi[i], phi[j]);
        }
    }
    let cocycle = Cocycle::from_table(&p.group, p.cocycle.modulus(), data)?;
    Ok(ProjRep::from_parts(&p.group, &p.field, table, cocycle))
}

/// Table on `X/Z'` when `P` is constant on `Z'`-cosets.
pub fn deflate_projrep(p: &ProjRep, zp: &Subgroup) -> Result<(ProjRep, Quotient)> {
    let x = &p.group;
    let t = x.parent().table()?;
    for &z in zp.elements() {
        for &e in x.elements() {
            if t.mul(z, e) != t.mul(e, z) {
                return Err(Error::Precondition("Z' is not central".into()));
            }
        }
    }
    let q = quotient_group(x, zp)?;
    for c in &q.cosets {
        let first = p.at(c[0]);
        if let Some(&bad) = c.iter().find(|&&e| p.at(e) != first) {
            return Err(Error::Precondition(format!(
                "P is not constant on the coset of {bad}"
            )));
        }
    }
    let qg = Subgroup::whole(&q.group)?;
    let section = q.section();
    let table = section.iter().map(|&e| p.at(e).clone()).collect();
    Ok((ProjRep::from_table(&qg, &p.field, table)?, q))
}

/// Pulls a projective representation of `q.group` back to `q.source`.
pub fn inflate_projrep(p: &ProjRep, q: &Quotient) -> Result<ProjRep> {
    if !p.group.parent().same_as(&q.group) {
        return Err(Error::Precondition("not a projective representation of the quotient".into()));
    }
    let table = q
        .source
        .elements()
        .iter()
        .map(|&e| p.at(q.projection[e]).clone())
        .collect();
    ProjRep::from_table(&q.source, &p.field, table)
}

/// Wreath product `A wr S_n` as built by `library::wreath_product`, with
/// each element split as `((a_1, .., a_n), sigma)`.
#[derive(Clone, Debug)]
pub struct WreathParts {
    pub group: PermutationGroup,
    /// per element: `a_j` (elements of `A`) and `sigma` (block images)
    pub parts: Vec<(Vec<Elt>, Vec<usize>)>,
}

/// Splits every element: it sends point `(i, x)` to `(sigma(i), a_sigma(i)(x))`,
/// so that products follow `(a, sigma)(a', sigma') = (a_j a'_sigma^-1(j), sigma sigma')`.
pub fn wreath_parts(a: &PermutationGroup, n: usize) -> Result<WreathParts> {
    let w = crate::library::wreath_product(a, n)?;
    let d = a.degree();
    let ta = a.table()?;
    let tw = w.table()?;
    let parts = tw
        .elements()
        .map(|e| {
            let p = tw.perm(e);
            let sigma: Vec<usize> = (0..n).map(|i| p.apply(i * d) / d).collect();
            let mut comps = vec![0; n];
            for i in 0..n {
                let j = sigma[i];
                let imgs: Vec<u32> = (0..d).map(|x| (p.apply(i * d + x) - j * d) as u32).collect();
                let q = crate::perm::Perm::from_images(imgs)?;
                comps[j] = ta
                    .index_of(&q)
                    .ok_or_else(|| Error::Consistency("block component outside A".into()))?;
            }
            Ok((comps, sigma))
        })
        .collect::<Result<_>>()?;
    Ok(WreathParts { group: w, parts })
}

/// Tensor-place permutation sending `v_1 (x) .. (x) v_n` to
/// `v_sigma^-1(1) (x) .. (x) v_sigma^-1(n)`.
fn place_permutation(dim: usize, sigma: &[usize]) -> Mat {
    let n = sigma.len();
    let total = dim.pow(n as u32);
    let mut inv = vec![0; n];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    let imgs: Vec<u32> = (0..total)
        .map(|idx| {
            // digits, first factor most significant
            let mut digits = vec![0; n];
            let mut r = idx;
            for k in (0..n).rev() {
                digits[k] = r % dim;
                r /= dim;
            }
            let mut out = 0;
            for k in 0..n {
                out = out * dim + digits[inv[k]];
            }
            out as u32
        })
        .collect();
    Mat::permutation(&imgs)
}

/// Cap on `n * dim^n` for tensor constructions.
pub const TENSOR_CAP: usize = 4096;

/// `((a_1..a_n) sigma) -> (P(a_1) (x) .. (x) P(a_n)) o sigma_V` on `A wr S_n`.
pub fn wreath_tensor(p1: &ProjRep, n: usize) -> Result<(ProjRep, WreathParts)> {
    let a = p1.group.parent();
    if p1.group.order() != a.order() {
        return Err(Error::Precondition("P1 must be defined on its whole parent group".into()));
    }
    let size = n * p1.dim.pow(n as u32);
    if n == 0 || size > TENSOR_CAP {
        return Err(Error::CapExceeded {
            what: "wreath tensor size",
            value: size as u64,
            cap: TENSOR_CAP as u64,
        });
    }
    let parts = wreath_parts(a, n)?;
    let f = &p1.field;
    let wg = Subgroup::whole(&parts.group)?;
    let tw = parts.group.table()?;
    let pos_of: Vec<usize> = wg.elements().to_vec();
    let table = pos_of
        .iter()
        .map(|&e| {
            let (comps, sigma) = &parts.parts[e];
            let mut m = p1.at(comps[0]).clone();
            for &c in &comps[1..] {
                m = m.kron(f, p1.at(c));
            }
            m.mul(f, &place_permutation(p1.dim, sigma))
        })
        .collect();
    debug_assert_eq!(tw.len(), pos_of.len());
    Ok((ProjRep::from_table(&wg, f, table)?, parts))
}

/// The product formula for the wreath cocycle at a pair of elements.
pub fn wreath_formula(alpha: &Cocycle, parts: &WreathParts, e: Elt, e2: Elt) -> u64 {
    let (a, sigma) = &parts.parts[e];
    let (a2, _) = &parts.parts[e2];
    let n = sigma.len();
    let mut inv = vec![0; n];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    let m = alpha.modulus();
    (0..n).fold(0, |acc, i| (acc + alpha.get(a[i], a2[inv[i]])) % m)
}
