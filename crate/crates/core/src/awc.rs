//! Radical subgroups, weights and the weight count, and checks of the
//! cohomological condition on pairs of simple modules.

use crate::arith;
use crate::auts::{AutGroup, Automorphism};
use crate::error::{Error, Result};
use crate::field::{Field, F};
use crate::group::Elt;
use crate::meataxe;
use crate::modrep::{
    brauer_count, central_character, fixed_point_module, fixed_space, restrict_and_count,
    simple_modules_over, splitting_field,
};
use crate::ordchar::defect_zero_count;
use crate::projrep::{extend_projective_with, solve_correction, ProjRep};
use crate::quotient::{normalized_section, quotient_group};
use crate::rep::Rep;
use crate::subgroup::{
    center, centralizer, conjugating_element, core_p, derived, is_perfect, left_cosets, normalizer,
    p_subgroup_classes, Subgroup,
};
use serde::Serialize;
use std::collections::BTreeMap;

/// Representatives of the classes of p-subgroups `Q` with `O_p(N_G(Q)) = Q`.
pub fn radical_p_subgroups(g: &Subgroup, p: u64) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for q in p_subgroup_classes(g, p)? {
        let n = normalizer(g, &q)?;
        if core_p(&n, p)? == q {
            out.push(q);
        }
    }
    Ok(out)
}

/// Brauer characters of the abelian group `z`, as scalar lists on
/// `z.elements()`, sorted.
pub fn central_characters(z: &Subgroup, f: &Field, seed: u64) -> Result<Vec<Vec<F>>> {
    if z.order() == 1 {
        return Ok(vec![vec![1]]);
    }
    let mut out = simple_modules_over(z, f, seed)?
        .iter()
        .map(|m| central_character(m, z))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn nu_index(nus: &[Vec<F>], m: &Rep, z: &Subgroup) -> Result<usize> {
    let c = central_character(m, z)?;
    nus.iter()
        .position(|n| *n == c)
        .ok_or_else(|| Error::Consistency("central character not among those of Z(G)".into()))
}

/// Traces at every element, indexed like `rep.group().elements()`.
pub fn trace_vector(rep: &Rep) -> Vec<F> {
    let f = rep.field();
    rep.images().iter().map(|m| m.trace(f)).collect()
}



/// `IBr(G)` over a fixed splitting field, with central characters on `Z(G)`.
#[derive(Clone, Debug)]
pub struct IbrSet {
    pub group: Subgroup,
    pub prime: u64,
    pub field: Field,
    pub center: Subgroup,
    pub nus: Vec<Vec<F>>,
    pub modules: Vec<Rep>,
    /// index into `nus` per module
    pub central: Vec<usize>,
}

pub fn ibr_over(g: &Subgroup, p: u64, f: &Field, seed: u64) -> Result<IbrSet> {
    let z = center(g);
    let nus = central_characters(&z, f, seed)?;
    let modules = simple_modules_over(g, f, seed)?;
    let central = modules
        .iter()
        .map(|m| nu_index(&nus, m, &z))
        .collect::<Result<_>>()?;
    Ok(IbrSet {
        group: g.clone(),
        prime: p,
        field: f.clone(),
        center: z,
        nus,
        modules,
        central,
    })
}

pub fn ibr(g: &Subgroup, p: u64, seed: u64) -> Result<IbrSet> {
    ibr_over(g, p, &splitting_field(g, p)?, seed)
}

/// A weight `(Q, psi)`: `psi` is a simple `N_G(Q)`-module with `Q` in its
/// kernel, projective over `N_G(Q)/Q`.
#[derive(Clone, Debug)]
pub struct Weight {
    pub radical: usize,
    pub q: Subgroup,
    pub normalizer: Subgroup,
    pub module: Rep,
    /// position among the simple modules of `N_G(Q)/Q`
    pub index: usize,
    pub central: usize,
}

#[derive(Clone, Debug)]
pub struct RadicalData {
    pub q: Subgroup,
    pub normalizer: Subgroup,
    pub defect_zero: usize,
}

#[derive(Clone, Debug)]
pub struct AlpSet {
    pub group: Subgroup,
    pub prime: u64,
    pub field: Field,
    pub center: Subgroup,
    pub nus: Vec<Vec<F>>,
    pub radicals: Vec<RadicalData>,
    pub weights: Vec<Weight>,
}

impl AlpSet {
    /// Weight indices grouped by central character.
    pub fn partition(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.central).or_default().push(i);
        }
        out
    }
}

pub fn weights_over(g: &Subgroup, p: u64, f: &Field, seed: u64) -> Result<AlpSet> {
    let z = center(g);
    let nus = central_characters(&z, f, seed)?;
    let mut radicals = Vec::new();
    let mut weights = Vec::new();
    for (ri, q) in radical_p_subgroups(g, p)?.into_iter().enumerate() {
        let n = normalizer(g, &q)?;
        let quo = quotient_group(&n, &q)?;
        let qg = Subgroup::whole(&quo.group)?;
        let full = arith::p_part(qg.order(), p);
        let (dz, _) = defect_zero_count(&quo.group, p)?;
        let mut count = 0;
        for (index, m) in simple_modules_over(&qg, f, seed)?.iter().enumerate() {
            if arith::p_part(m.dim() as u64, p) != full {
                continue;
            }
            let module = m.inflate(&quo)?;
            let central = nu_index(&nus, &module, &z)?;
            weights.push(Weight {
                radical: ri,
                q: q.clone(),
                normalizer: n.clone(),
                module,
                index,
                central,
            });
            count += 1;
        }
        if count != dz {
            return Err(Error::Consistency(format!(
                "{count} projective simple modules of N/Q but {dz} defect-zero characters"
            )));
        }
        radicals.push(RadicalData {
            q,
            normalizer: n,
            defect_zero: dz,
        });
    }
    Ok(AlpSet {
        group: g.clone(),
        prime: p,
        field: f.clone(),
        center: z,
        nus,
        radicals,
        weights,
    })
}

pub fn weights(g: &Subgroup, p: u64, seed: u64) -> Result<AlpSet> {
    weights_over(g, p, &splitting_field(g, p)?, seed)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NuCount {
    pub nu: usize,
    pub ibr: usize,
    pub alp: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RadicalSummary {
    pub order: u64,
    pub normalizer_order: u64,
    pub weights: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AwcReport {
    pub group_order: u64,
    pub prime: u64,
    pub field_order: u64,
    pub ibr_count: usize,
    pub alp_count: usize,
    pub equal: bool,
    pub per_nu: Vec<NuCount>,
    pub per_nu_equal: bool,
    pub radicals: Vec<RadicalSummary>,
}

/// Compares `|IBr(G)|` (by p-regular classes) with `|Alp(G)|`, overall and
/// per central character.
pub fn awc_report(ibr: &IbrSet, alp: &AlpSet) -> Result<AwcReport> {
    let ibr_count = brauer_count(&ibr.group, ibr.prime)?;
    if ibr_count != ibr.modules.len() {
        return Err(Error::Consistency("module list disagrees with the class count".into()));
    }
    if ibr.nus != alp.nus {
        return Err(Error::Precondition("IBr and Alp computed over different data".into()));
    }
    let per_nu: Vec<NuCount> = (0..ibr.nus.len())
        .map(|nu| NuCount {
            nu,
            ibr: ibr.central.iter().filter(|&&c| c == nu).count(),
            alp: alp.weights.iter().filter(|w| w.central == nu).count(),
        })
        .collect();
    let radicals = alp
        .radicals
        .iter()
        .enumerate()
        .map(|(i, r)| RadicalSummary {
            order: r.q.order(),
            normalizer_order: r.normalizer.order(),
            weights: alp.weights.iter().filter(|w| w.radical == i).count(),
        })
        .collect();
    Ok(AwcReport {
        group_order: ibr.group.order(),
        prime: ibr.prime,
        field_order: ibr.field.order(),
        ibr_count,
        alp_count: alp.weights.len(),
        equal: ibr_count == alp.weights.len(),
        per_nu_equal: per_nu.iter().all(|c| c.ibr == c.alp),
        per_nu,
        radicals,
    })
}

pub fn awc_check(g: &Subgroup, p: u64, seed: u64) -> Result<AwcReport> {
    let f = splitting_field(g, p)?;
    awc_report(&ibr_over(g, p, &f, seed)?, &weights_over(g, p, &f, seed)?)
}

/// `chi -> chi o tau^-1` on `IBr(G)`, matched by traces.
pub fn ibr_permutation(ibr: &IbrSet, tau: &Automorphism) -> Result<Vec<usize>> {
    if tau.group() != &ibr.group {
        return Err(Error::NotAutomorphism("automorphism of a different group".into()));
    }
    let inv = tau.inverse();
    let tr: Vec<Vec<F>> = ibr.modules.iter().map(trace_vector).collect();
    tr.iter()
        .map(|t| {
            let twisted: Vec<F> = inv.map().iter().map(|&k| t[k]).collect();
            tr.iter()
                .position(|u| *u == twisted)
                .ok_or_else(|| Error::Consistency("twisted module not in IBr(G)".into()))
        })
        .collect()
}

/// Image of each weight under `tau`, conjugated back to the listed radical
/// representative.
pub fn weight_permutation(alp: &AlpSet, tau: &Automorphism) -> Result<Vec<usize>> {
    if tau.group() != &alp.group {
        return Err(Error::NotAutomorphism("automorphism of a different group".into()));
    }
    let g = &alp.group;
    let t = g.parent().table()?;
    let inv = tau.inverse();
    let tr: Vec<Vec<F>> = alp.weights.iter().map(|w| trace_vector(&w.module)).collect();
    alp.weights
        .iter()
        .enumerate()
        .map(|(wi, w)| {
            let tq = tau.image_of(&w.q)?;
            let (ri, c) = alp
                .radicals
                .iter()
                .enumerate()
                .filter(|(_, r)| r.q.order() == tq.order())
                .find_map(|(i, r)| conjugating_element(g, &tq, &r.q).map(|c| (i, c)))
                .ok_or_else(|| Error::Consistency("image of a radical subgroup is not radical".into()))?;
            let ci = t.inv(c);
            let n = &alp.radicals[ri].normalizer;
            let src = &w.normalizer;
            let twisted: Vec<F> = n
                .elements()
                .iter()
                .map(|&y| {
                    let pre = inv.apply(t.mul(t.mul(ci, y), c));
                    tr[wi][src.position(pre).expect("normalizer maps onto normalizer")]
                })
                .collect();
            alp.weights
                .iter()
                .enumerate()
                .position(|(j, v)| v.radical == ri && tr[j] == twisted)
                .ok_or_else(|| Error::Consistency("twisted weight not in Alp(G)".into()))
        })
        .collect()
}

/// `Omega` as pairs `(index in IBr(G), index in Alp(G))`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OmegaBijection {
    pub pairs: Vec<(usize, usize)>,
}

impl OmegaBijection {
    pub fn weight_of(&self, chi: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == chi).map(|p| p.1)
    }
}

/// Pairs of equal central character, matched in list order; enough when
/// each block of the partition is handled by one radical class.
pub fn omega_by_partition(ibr: &IbrSet, alp: &AlpSet) -> Result<OmegaBijection> {
    let mut pairs = Vec::new();
    for (nu, ws) in alp.partition() {
        let cs: Vec<usize> = (0..ibr.modules.len()).filter(|&i| ibr.central[i] == nu).collect();
        if cs.len() != ws.len() {
            return Err(Error::NoSolution(format!("block {nu} has unequal sizes")));
        }
        pairs.extend(cs.into_iter().zip(ws));
    }
    pairs.sort_unstable();
    Ok(OmegaBijection { pairs })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    Certified,
    RefutedHypothesis(String),
    NotEstablished(String),
}

impl Outcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, Outcome::Certified)
    }
}

/// Projective representations witnessing the condition for `(chi, psi)`.
#[derive(Clone, Debug)]
pub struct ConditionCertificate {
    pub aut: AutGroup,
    /// representatives of `X/Z(X)`, identity first
    pub section: Vec<Elt>,
    /// on `Aut(X)_chi`
    pub p: ProjRep,
    /// on `Aut(X)_{Y,psi}`
    pub q: ProjRep,
    /// `Aut(X)_{Y,psi,chi}`
    pub common: Subgroup,
}

#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub outcome: Outcome,
    pub method: &'static str,
    pub certificate: Option<ConditionCertificate>,
}

impl ConditionReport {
    fn not_established(method: &'static str, why: String) -> Self {
        ConditionReport {
            outcome: Outcome::NotEstablished(why),
            method,
            certificate: None,
        }
    }

    fn refuted(method: &'static str, why: String) -> Self {
        ConditionReport {
            outcome: Outcome::RefutedHypothesis(why),
            method,
            certificate: None,
        }
    }
}

/// Coset representatives of `Z` in `X`, preferring elements of `prefer`;
/// the identity comes first.
pub fn central_section(x: &Subgroup, z: &Subgroup, prefer: Option<&Subgroup>) -> Result<Vec<Elt>> {
    Ok(left_cosets(x, z)?
        .iter()
        .map(|c| {
            prefer
                .and_then(|q| c.iter().copied().find(|&e| q.contains(e)))
                .unwrap_or(c[0])
        })
        .collect())
}

/// Automorphisms in `within` that stabilize `y` and fix the isomorphism type
/// of the simple module `rep` of `y`.
pub fn aut_stabilizer(aut: &AutGroup, within: &Subgroup, y: &Subgroup, rep: &Rep) -> Result<Subgroup> {
    if rep.group() != y {
        return Err(Error::Precondition("module of a different subgroup".into()));
    }
    let tr = trace_vector(rep);
    let el = aut.x.elements();
    let t = aut.group.table()?;
    let keep: Vec<Elt> = within
        .elements()
        .iter()
        .copied()
        .filter(|&a| {
            let p = t.perm(a);
            y.elements().iter().enumerate().all(|(i, &u)| {
                let img = el[p.apply(aut.x.position(u).unwrap())];
                y.position(img).is_some_and(|j| tr[j] == tr[i])
            })
        })
        .collect();
    Subgroup::from_elements(&aut.group, keep)
}

/// `a -> M(s(a))` on the inner automorphisms coming from `y`, where
/// `reps` are the section values lying in `y`.
fn inner_projrep(aut: &AutGroup, y: &Subgroup, reps: &[Elt], m: &Rep) -> Result<ProjRep> {
    let i = aut.inner_from(y)?;
    let mut table = vec![None; i.elements().len()];
    for &r in reps {
        let e = aut.conj_element(r)?;
        let pos = i
            .position(e)
            .ok_or_else(|| Error::Consistency("inner automorphism outside the inner group".into()))?;
        table[pos] = Some(m.image(r)?.clone());
    }
    let table = table
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Consistency("section does not cover Y/Z".into()))?;
    ProjRep::from_table(&i, m.field(), table)
}

fn extend_over(v: &ProjRep, g: &Subgroup) -> Result<ProjRep> {
    let reps = normalized_section(g, v.group())?.reps;
    extend_projective_with(v, g, &reps, false)
}

fn same_on(p: &ProjRep, v: &ProjRep) -> bool {
    v.group()
        .elements()
        .iter()
        .zip(v.table())
        .all(|(&e, m)| p.at(e) == m)
}

/// Condition check by extension of `L o s` and `M o t` from the inner
/// automorphisms, then a coboundary correction of `Q` trivial on `Y/Z`.
pub fn coho_condition_check(
    x: &Subgroup,
    y: &Subgroup,
    chi: &Rep,
    psi: &Rep,
    aut: &AutGroup,
) -> Result<ConditionReport> {
    condition_generic(x, y, chi, psi, aut, None)
}

fn condition_generic(
    x: &Subgroup,
    y: &Subgroup,
    chi: &Rep,
    psi: &Rep,
    aut: &AutGroup,
    prefer: Option<&Subgroup>,
) -> Result<ConditionReport> {
    const METHOD: &str = "extension";
    let z = center(x);
    if !z.is_subgroup_of(y) || !y.is_subgroup_of(x) {
        return Err(Error::Precondition("need Z(X) <= Y <= X".into()));
    }
    if chi.group() != x || psi.group() != y || chi.field() != psi.field() {
        return Err(Error::Precondition("chi must be a module of X and psi of Y over one field".into()));
    }
    if &aut.x != x {
        return Err(Error::Precondition("automorphism group of a different group".into()));
    }
    let section = central_section(x, &z, prefer)?;
    let whole = aut.whole()?;
    let a_chi = aut_stabilizer(aut, &whole, x, chi)?;
    let a_psi = aut_stabilizer(aut, &whole, y, psi)?;
    let v = inner_projrep(aut, x, &section, chi)?;
    let p = match extend_over(&v, &a_chi) {
        Ok(p) => p,
        Err(e) => return Ok(ConditionReport::not_established(METHOD, format!("P: {e}"))),
    };
    let yreps: Vec<Elt> = section.iter().copied().filter(|&r| y.contains(r)).collect();
    let w = inner_projrep(aut, y, &yreps, psi)?;
    let same = if y == x { meataxe::isomorphism(chi, psi)? } else { None };
    let mut q = if let Some(j) = same {
        // transport P along chi -> psi
        let f = chi.field();
        let ji = j.inverse(f)?;
        let table = p.table().iter().map(|m| j.mul(f, m).mul(f, &ji)).collect();
        ProjRep::from_table(p.group(), f, table)?
    } else {
        match extend_over(&w, &a_psi) {
            Ok(q) => q,
            Err(e) => return Ok(ConditionReport::not_established(METHOD, format!("Q: {e}"))),
        }
    };
    let common = a_chi.intersect(&a_psi);
    let pc = p.restrict(&common)?;
    let qc = q.restrict(&common)?;
    if pc.cocycle() != qc.cocycle() {
        let delta = qc.cocycle().sub(pc.cocycle())?;
        let el = common.elements();
        let inner_y = w.group();
        let Some(beta_c) = solve_correction(&common, &delta, 1, &|i| inner_y.contains(el[i]))? else {
            return Ok(ConditionReport::not_established(
                METHOD,
                "cocycles of P and Q differ by a class not trivial relative to Y/Z".into(),
            ));
        };
        let mut beta = vec![0; a_psi.elements().len()];
        for (i, &e) in el.iter().enumerate() {
            beta[a_psi.position(e).unwrap()] = beta_c[i];
        }
        q = q.scaled(&beta)?;
    }
    if !same_on(&p, &v) || !same_on(&q, &w) {
        return Err(Error::Consistency("extension changed the inner restriction".into()));
    }
    if p.restrict(&common)?.cocycle() != q.restrict(&common)?.cocycle() {
        return Err(Error::Consistency("corrected cocycles still differ".into()));
    }
    Ok(ConditionReport {
        outcome: Outcome::Certified,
        method: METHOD,
        certificate: Some(ConditionCertificate {
            aut: aut.clone(),
            section,
            p,
            q,
            common,
        }),
    })
}

/// The fixed-point criterion: `X` perfect, `Q` radical, `V^Q` simple over
/// `N_X(Q)`, and equal stabilizers of `(Q, chi)` and `(Q, psi)` give the
/// condition for `(chi, psi)` with `psi = V^Q`.
pub fn mq_condition_check(x: &Subgroup, q: &Subgroup, v: &Rep, aut: &AutGroup) -> Result<ConditionReport> {
    const METHOD: &str = "fixed-point";
    let p_char = v.field().p();
    if v.group() != x || &aut.x != x {
        return Err(Error::Precondition("V and Aut(X) must belong to X".into()));
    }
    if !is_perfect(x) {
        return Ok(ConditionReport::refuted(METHOD, "X is not perfect".into()));
    }
    let n = normalizer(x, q)?;
    if core_p(&n, p_char)? != *q {
        return Ok(ConditionReport::refuted(METHOD, "Q is not radical".into()));
    }
    let space = fixed_space(v, q)?;
    if space.dim() == 0 {
        return Ok(ConditionReport::refuted(METHOD, "V^Q = 0".into()));
    }
    let m = fixed_point_module(v, q)?;
    if !meataxe::is_absolutely_irreducible(&m, 0)? {
        return Ok(ConditionReport::refuted(METHOD, "V^Q is not simple over N_X(Q)".into()));
    }
    let whole = aut.whole()?;
    let a_q = aut.stabilizer_of_subgroup(q)?.intersect(&whole);
    let a_q_chi = aut_stabilizer(aut, &a_q, x, v)?;
    let a_q_psi = aut_stabilizer(aut, &a_q, &n, &m)?;
    if a_q_chi != a_q_psi {
        return Ok(ConditionReport::refuted(
            METHOD,
            format!(
                "stabilizers of (Q, chi) and (Q, psi) differ: orders {} and {}",
                a_q_chi.order(),
                a_q_psi.order()
            ),
        ));
    }
    let z = center(x);
    let section = central_section(x, &z, Some(q))?;
    let a_chi = aut_stabilizer(aut, &whole, x, v)?;
    let base = inner_projrep(aut, x, &section, v)?;
    let reps = normalized_section(&a_chi, base.group())?.reps;
    let p = match extend_projective_with(&base, &a_chi, &reps, true) {
        Ok(p) => p,
        Err(e) => return Ok(ConditionReport::not_established(METHOD, format!("P: {e}"))),
    };
    let f = v.field();
    let restricted = p.restrict(&a_q_chi)?;
    // invariance of V^Q
    for (&a, mat) in a_q_chi.elements().iter().zip(restricted.table()) {
        for b in space.basis() {
            if !space.contains(f, &mat.mul_vec(f, b)) {
                return Ok(ConditionReport::not_established(
                    METHOD,
                    format!("P({a}) does not preserve V^Q"),
                ));
            }
        }
    }
    let sub = restricted.sub(&space)?;
    let qrep = ProjRep::from_table(&a_q_chi, f, sub.table().to_vec())?;
    if qrep.cocycle() != restricted.cocycle() {
        return Err(Error::Consistency("sub-representation changed the cocycle".into()));
    }
    let nreps: Vec<Elt> = section.iter().copied().filter(|&r| n.contains(r)).collect();
    let w = inner_projrep(aut, &n, &nreps, &m)?;
    if !same_on(&qrep, &w) || !same_on(&p, &base) {
        return Err(Error::Consistency("restriction to inner automorphisms differs".into()));
    }
    Ok(ConditionReport {
        outcome: Outcome::Certified,
        method: METHOD,
        certificate: Some(ConditionCertificate {
            aut: aut.clone(),
            section,
            p,
            q: qrep,
            common: a_q_chi,
        }),
    })
}

/// Condition check for a weight pair `(chi, (Q, psi))` with `Y = N_X(Q)`:
/// the fixed-point criterion when it applies to `psi`, otherwise the
/// extension method.
pub fn condition_for_pair(
    x: &Subgroup,
    q: &Subgroup,
    chi: &Rep,
    psi: &Rep,
    aut: &AutGroup,
) -> Result<ConditionReport> {
    let y = normalizer(x, q)?;
    if psi.group() != &y {
        return Err(Error::Precondition("psi is not a module of N_X(Q)".into()));
    }
    if is_perfect(x) && q.is_p_group(chi.field().p()) {
        let m = fixed_point_module(chi, q)?;
        if m.dim() == psi.dim() && meataxe::is_isomorphic(&m, psi)? {
            let r = mq_condition_check(x, q, chi, aut)?;
            if r.outcome.is_certified() {
                return Ok(r);
            }
        }
    }
    condition_generic(x, &y, chi, psi, aut, Some(q))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Clause {
    pub passed: bool,
    pub witness: Option<String>,
}

impl Clause {
    fn pass() -> Self {
        Clause {
            passed: true,
            witness: None,
        }
    }

    fn fail(w: String) -> Self {
        Clause {
            passed: false,
            witness: Some(w),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PairOutcome {
    pub chi: usize,
    pub weight: usize,
    pub method: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IawReport {
    pub bijective: Clause,
    pub equivariant: Clause,
    pub partition: Clause,
    pub condition: Vec<PairOutcome>,
    pub condition_certified: bool,
}

impl IawReport {
    pub fn passed(&self) -> bool {
        self.bijective.passed && self.equivariant.passed && self.partition.passed && self.condition_certified
    }
}

/// Checks bijectivity, equivariance under `auts`, the central-character
/// partition, and (if `aut` is given) the condition for every pair.
pub fn iaw_check(
    ibr: &IbrSet,
    alp: &AlpSet,
    omega: &OmegaBijection,
    auts: &[Automorphism],
    aut: Option<&AutGroup>,
) -> Result<IawReport> {
    let n = ibr.modules.len();
    let m = alp.weights.len();
    let mut left = vec![false; n];
    let mut right = vec![false; m];
    let mut bijective = Clause::pass();
    for &(c, w) in &omega.pairs {
        if c >= n || w >= m || std::mem::replace(&mut left[c], true) || std::mem::replace(&mut right[w], true) {
            bijective = Clause::fail(format!("pair ({c}, {w}) repeats or is out of range"));
            break;
        }
    }
    if bijective.passed && (left.contains(&false) || right.contains(&false)) {
        bijective = Clause::fail(format!("{} pairs for {n} characters and {m} weights", omega.pairs.len()));
    }
    let mut equivariant = Clause::pass();
    if bijective.passed {
        'outer: for (k, tau) in auts.iter().enumerate() {
            let pi = ibr_permutation(ibr, tau)?;
            let pw = weight_permutation(alp, tau)?;
            for &(c, w) in &omega.pairs {
                if omega.weight_of(pi[c]) != Some(pw[w]) {
                    equivariant = Clause::fail(format!(
                        "automorphism {k}: Omega(chi_{c}^tau) = w_{} but Omega(chi_{c})^tau = w_{}",
                        omega.weight_of(pi[c]).unwrap_or(usize::MAX),
                        pw[w]
                    ));
                    break 'outer;
                }
            }
        }
    } else {
        equivariant = Clause::fail("not a bijection".into());
    }
    let partition = match omega
        .pairs
        .iter()
        .find(|&&(c, w)| c < n && w < m && ibr.central[c] != alp.weights[w].central)
    {
        Some(&(c, w)) => Clause::fail(format!(
            "chi_{c} lies over nu_{} but weight {w} over nu_{}",
            ibr.central[c], alp.weights[w].central
        )),
        None => Clause::pass(),
    };
    let mut condition = Vec::new();
    if let Some(aut) = aut {
        for &(c, w) in &omega.pairs {
            let wt = &alp.weights[w];
            let r = condition_for_pair(&ibr.group, &wt.q, &ibr.modules[c], &wt.module, aut)?;
            condition.push(PairOutcome {
                chi: c,
                weight: w,
                method: r.method.into(),
                outcome: r.outcome,
            });
        }
    }
    let condition_certified = aut.is_none() || condition.iter().all(|c| c.outcome.is_certified());
    Ok(IawReport {
        bijective,
        equivariant,
        partition,
        condition,
        condition_certified,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LemmaClauses {
    /// `P_chi` restricted to `X` is the linear representation `chi`
    pub linear_on_x: bool,
    /// `Q_psi` restricted to `Y` is `psi`
    pub linear_on_y: bool,
    /// `alpha(t, x) = alpha(t x t^-1, t)`
    pub symmetry: bool,
    /// the cocycle of `Q_psi` is that of `P_chi` on `N_G(Y)`
    pub restriction: bool,
    pub witness: Option<String>,
}

impl LemmaClauses {
    pub fn all(&self) -> bool {
        self.linear_on_x && self.linear_on_y && self.symmetry && self.restriction
    }
}

#[derive(Clone, Debug)]
pub struct CentralLift {
    pub p_chi: ProjRep,
    pub q_psi: ProjRep,
    pub clauses: LemmaClauses,
}

/// `P_chi(c r(a)) = mu(c) P(a)` on `g1` and the same for `Q` on `n1`, where
/// `r` extends the certificate's section over `C_G(X)` and `mu` extends the
/// central character of `chi` on `Z(X)`.
pub fn lift_with_center(
    g1: &Subgroup,
    n1: &Subgroup,
    x: &Subgroup,
    y: &Subgroup,
    chi: &Rep,
    psi: &Rep,
    cert: &ConditionCertificate,
) -> Result<CentralLift> {
    let aut = &cert.aut;
    let f = chi.field();
    let t = g1.parent().table()?;
    let z = center(x);
    let c = centralizer(g1, x)?;
    let nu = |e: Elt| -> Result<u64> {
        let s = chi.image(e)?.as_scalar().ok_or_else(|| {
            Error::Precondition(format!("{e} does not act as a scalar"))
        })?;
        Ok(f.log(s).expect("nonzero"))
    };
    let m = f.order() - 1;
    let mut mu = vec![u64::MAX; t.len()];
    for coset in left_cosets(&c, &z)? {
        let c0 = coset[0];
        for &e in &coset {
            mu[e] = nu(t.mul(t.inv(c0), e))?;
        }
    }
    for &ce in c.elements() {
        for &ze in z.elements() {
            if mu[t.mul(ce, ze)] != (mu[ce] + nu(ze)?) % m.max(1) {
                return Err(Error::Consistency("mu(cz) != mu(c) nu(z)".into()));
            }
        }
    }
    let mut pi = vec![0; t.len()];
    let mut r: BTreeMap<Elt, Elt> = BTreeMap::new();
    for &s in &cert.section {
        r.insert(aut.conj_element(s)?, s);
    }
    for &g in g1.elements() {
        pi[g] = aut.conj_element(g)?;
        r.entry(pi[g]).or_insert(g);
    }
    let build = |h: &Subgroup, base: &ProjRep| -> Result<ProjRep> {
        let table = h
            .elements()
            .iter()
            .map(|&g| {
                if !base.group().contains(pi[g]) {
                    return Err(Error::Precondition(format!(
                        "conjugation by {g} lies outside the certificate's group"
                    )));
                }
                let cc = t.mul(g, t.inv(r[&pi[g]]));
                Ok(base.at(pi[g]).scale(f, f.exp(mu[cc])))
            })
            .collect::<Result<Vec<_>>>()?;
        ProjRep::from_table(h, f, table)
    };
    let p_chi = build(g1, &cert.p)?;
    let q_psi = build(n1, &cert.q)?;
    let mut witness = None;
    let linear_on_x = x.elements().iter().all(|&e| {
        let ok = p_chi.at(e) == chi.image(e).unwrap();
        if !ok {
            witness.get_or_insert(format!("P_chi({e}) differs from chi"));
        }
        ok
    });
    let linear_on_y = y.elements().iter().all(|&e| {
        let ok = q_psi.at(e) == psi.image(e).unwrap();
        if !ok {
            witness.get_or_insert(format!("Q_psi({e}) differs from psi"));
        }
        ok
    });
    let alpha = p_chi.cocycle();
    let symmetry = n1.elements().iter().all(|&s| {
        x.elements().iter().all(|&e| {
            let ok = alpha.get(s, e) == alpha.get(t.conj(s, e), s);
            if !ok {
                witness.get_or_insert(format!("alpha({s}, {e}) != alpha({}, {s})", t.conj(s, e)));
            }
            ok
        })
    });
    let restriction = *q_psi.cocycle() == alpha.restrict(n1)?;
    if !restriction {
        witness.get_or_insert("cocycle of Q_psi is not the restriction".into());
    }
    Ok(CentralLift {
        p_chi,
        q_psi,
        clauses: LemmaClauses {
            linear_on_x,
            linear_on_y,
            symmetry,
            restriction,
            witness,
        },
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TripleReport {
    pub hypotheses: Vec<(String, bool)>,
    pub applicable: bool,
    pub condition: Outcome,
    pub lemma: Option<LemmaClauses>,
    /// `R(xt) = R(x)R(t)` and `R(tx) = R(t)R(x)`
    pub r_identities: bool,
    /// the same for `S`
    pub s_identities: bool,
    pub cocycles_agree: bool,
    pub count_g: usize,
    pub count_n: usize,
    pub equal: bool,
}

/// Elements of `h` under whose conjugation the module `rep` of the normal
/// subgroup `k` keeps its isomorphism type.
fn inertia(h: &Subgroup, k: &Subgroup, rep: &Rep) -> Result<Subgroup> {
    let t = h.parent().table()?;
    let tr = trace_vector(rep);
    let keep: Vec<Elt> = h
        .elements()
        .iter()
        .copied()
        .filter(|&g| {
            k.elements().iter().enumerate().all(|(i, &e)| {
                k.position(t.conj(g, e)).is_some_and(|j| tr[j] == tr[i])
            })
        })
        .collect();
    Subgroup::from_elements(h.parent(), keep)
}

/// The counting conclusion for `(G, X, chi)` and `(N_G(Y), Y, psi)`, with
/// the hypotheses verified and the projective representations `R`, `S`
/// built and checked.
pub fn triple_equality_check(
    g: &Subgroup,
    x: &Subgroup,
    y: &Subgroup,
    chi: &Rep,
    psi: &Rep,
    q: Option<&Subgroup>,
    seed: u64,
) -> Result<TripleReport> {
    if !x.is_subgroup_of(g) || !x.is_normal_in(g) {
        return Err(Error::NotNormal("X is not normal in G".into()));
    }
    let z = center(x);
    if !z.is_subgroup_of(y) || !y.is_subgroup_of(x) {
        return Err(Error::Precondition("need Z(X) <= Y <= X".into()));
    }
    let t = g.parent().table()?;
    let xp = derived(x);
    let yp = y.intersect(&xp);
    let ng_y = normalizer(g, y)?;
    let nx_y = normalizer(x, y)?;
    let g_chi = inertia(g, x, chi)?;
    let n_psi = inertia(&ng_y, y, psi)?;
    let n_chi = inertia(&ng_y, x, chi)?;
    let mut hyps = vec![
        ("X = [X,X] Z".to_string(), xp.join(&z) == *x),
        ("Z <= Z(G)".to_string(), z.is_subgroup_of(&center(g))),
        ("N_X(Y)_psi = Y".to_string(), inertia(&nx_y, y, psi)? == *y),
        ("N_G(Y)_chi = N_G(Y)_psi".to_string(), n_chi == n_psi),
        ("G_chi = X N_G(Y)_psi".to_string(), x.join(&n_psi) == g_chi),
    ];
    let count_g = restrict_and_count(g, x, chi, seed)?;
    let count_n = restrict_and_count(&ng_y, y, psi, seed)?;
    let mut report = TripleReport {
        hypotheses: Vec::new(),
        applicable: false,
        condition: Outcome::NotEstablished("hypotheses (i), (ii) fail".into()),
        lemma: None,
        r_identities: false,
        s_identities: false,
        cocycles_agree: false,
        count_g,
        count_n,
        equal: count_g == count_n,
    };
    if !hyps.iter().all(|h| h.1) {
        report.hypotheses = hyps;
        return Ok(report);
    }
    let aut = if xp.order() <= crate::auts::BRUTE_FORCE_CAP {
        AutGroup::full(&xp)?
    } else {
        AutGroup::from_conjugation(&xp, g)?
    };
    let chi_p = chi.restrict(&xp)?;
    let psi_p = psi.restrict(&yp)?;
    let cond = match q {
        Some(q) if normalizer(&xp, q)? == yp => condition_for_pair(&xp, q, &chi_p, &psi_p, &aut)?,
        _ => coho_condition_check(&xp, &yp, &chi_p, &psi_p, &aut)?,
    };
    hyps.push(("condition on (X', Y')".into(), cond.outcome.is_certified()));
    report.condition = cond.outcome.clone();
    report.applicable = hyps.iter().all(|h| h.1);
    report.hypotheses = hyps;
    let Some(cert) = cond.certificate else {
        return Ok(report);
    };
    let lift = lift_with_center(&g_chi, &n_psi, x, y, chi, psi, &cert)?;
    report.lemma = Some(lift.clauses.clone());
    let f = chi.field();
    let trans = normalized_section(&n_psi, y)?.reps;
    let sec_x = normalized_section(&g_chi, x)?;
    let mut t_of_coset = vec![usize::MAX; sec_x.reps.len()];
    for (i, &s) in trans.iter().enumerate() {
        t_of_coset[sec_x.coset_of[s]] = i;
    }
    if t_of_coset.contains(&usize::MAX) {
        return Err(Error::Consistency("transversal of N_G(Y)/Y is not one of G/X".into()));
    }
    let (pc, qc) = (&lift.p_chi, &lift.q_psi);
    let r_of = |e: Elt| {
        let s = trans[t_of_coset[sec_x.coset_of[e]]];
        pc.at(t.mul(e, t.inv(s))).mul(f, pc.at(s))
    };
    let sec_y = normalized_section(&n_psi, y)?;
    let s_of = |e: Elt| {
        let s = trans[sec_y.coset_of[e]];
        qc.at(t.mul(e, t.inv(s))).mul(f, qc.at(s))
    };
    report.r_identities = trans.iter().all(|&s| {
        x.elements().iter().all(|&e| {
            r_of(t.mul(e, s)) == r_of(e).mul(f, &r_of(s)) && r_of(t.mul(s, e)) == r_of(s).mul(f, &r_of(e))
        })
    });
    report.s_identities = trans.iter().all(|&s| {
        y.elements().iter().all(|&e| {
            s_of(t.mul(e, s)) == s_of(e).mul(f, &s_of(s)) && s_of(t.mul(s, e)) == s_of(s).mul(f, &s_of(e))
        })
    });
    let r = ProjRep::from_table(&g_chi, f, g_chi.elements().iter().map(|&e| r_of(e)).collect())?;
    let s = ProjRep::from_table(&n_psi, f, n_psi.elements().iter().map(|&e| s_of(e)).collect())?;
    report.cocycles_agree = *s.cocycle() == r.cocycle().restrict(&n_psi)?;
    Ok(report)
}

/// `Omega^n` on `Shat^n`, restricted to labels with `Z'` in the kernel.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PowerBijection {
    pub n: usize,
    /// tuples of IBr indices and weight indices of `Shat`
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub bijective: bool,
    pub partition_preserved: bool,
}

/// Product bijection, filtered by a central subgroup `Z'` of `Shat^n` given
/// as tuples of elements of `Z(Shat)`.
pub fn omega_power_and_deflate(
    ibr: &IbrSet,
    alp: &AlpSet,
    omega: &OmegaBijection,
    n: usize,
    zprime: &[Vec<Elt>],
) -> Result<PowerBijection> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let f = &ibr.field;
    let z = &ibr.center;
    for tuple in zprime {
        if tuple.len() != n || tuple.iter().any(|&e| !z.contains(e)) {
            return Err(Error::Precondition("Z' must consist of n-tuples in Z(Shat)".into()));
        }
    }
    let m = f.order() - 1;
    let exp_of = |nu: usize, e: Elt| -> u64 {
        f.log(ibr.nus[nu][z.position(e).unwrap()]).expect("nonzero")
    };
    let trivial_on = |nus: &[usize]| {
        zprime.iter().all(|tuple| {
            tuple
                .iter()
                .zip(nus)
                .map(|(&e, &nu)| exp_of(nu, e))
                .sum::<u64>()
                % m.max(1)
                == 0
        })
    };
    let k = omega.pairs.len();
    let total = k.checked_pow(n as u32).filter(|&t| t <= 1 << 20).ok_or(Error::CapExceeded {
        what: "product bijection size",
        value: u64::MAX,
        cap: 1 << 20,
    })?;
    let mut pairs = Vec::new();
    let mut partition_preserved = true;
    for idx in 0..total {
        let mut r = idx;
        let mut cs = vec![0; n];
        let mut ws = vec![0; n];
        for i in (0..n).rev() {
            let (c, w) = omega.pairs[r % k];
            cs[i] = c;
            ws[i] = w;
            r /= k;
        }
        let cn: Vec<usize> = cs.iter().map(|&c| ibr.central[c]).collect();
        let wn: Vec<usize> = ws.iter().map(|&w| alp.weights[w].central).collect();
        let (ct, wt) = (trivial_on(&cn), trivial_on(&wn));
        if ct != wt || cn != wn {
            partition_preserved = false;
        }
        if ct {
            pairs.push((cs, ws));
        }
    }
    let mut lefts: Vec<&Vec<usize>> = pairs.iter().map(|p| &p.0).collect();
    let mut rights: Vec<&Vec<usize>> = pairs.iter().map(|p| &p.1).collect();
    lefts.sort();
    lefts.dedup();
    rights.sort();
    rights.dedup();
    let bijective = lefts.len() == pairs.len() && rights.len() == pairs.len();
    Ok(PowerBijection {
        n,
        pairs,
        bijective,
        partition_preserved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auts::brute_force_automorphisms;
    use crate::library;
    use crate::subgroup::sylow;

    fn whole(g: &crate::PermutationGroup) -> Subgroup {
        Subgroup::whole(g).unwrap()
    }

    #[test]
    fn radical_subgroups() {
        let s3 = whole(&library::symmetric(3));
        let r = radical_p_subgroups(&s3, 3).unwrap();
        assert_eq!(r.iter().map(|q| q.order()).collect::<Vec<_>>(), vec![3]);
        let sl = whole(&library::sl2(3));
        let r = radical_p_subgroups(&sl, 3).unwrap();
        assert_eq!(r.iter().map(|q| q.order()).collect::<Vec<_>>(), vec![1, 3]);
        let c5 = whole(&library::cyclic(5));
        assert_eq!(radical_p_subgroups(&c5, 5).unwrap().len(), 1);
    }

    #[test]
    fn small_weight_counts() {
        let s3 = whole(&library::symmetric(3));
        let a = weights(&s3, 3, 0).unwrap();
        assert_eq!(a.weights.len(), 2);
        assert!(a.weights.iter().all(|w| w.q.order() == 3));
        let sl = whole(&library::sl2(3));
        let a = weights(&sl, 3, 0).unwrap();
        let at: Vec<u64> = a.weights.iter().map(|w| w.q.order()).collect();
        assert_eq!(at, vec![1, 3, 3]);
        for (g, p, n) in [(library::symmetric(3), 3, 2), (library::sl2(3), 3, 3), (library::cyclic(6), 2, 3)] {
            let r = awc_check(&whole(&g), p, 0).unwrap();
            assert_eq!((r.ibr_count, r.alp_count), (n, n));
            assert!(r.equal && r.per_nu_equal);
        }
        // p does not divide |G|
        let r = awc_check(&s3, 7, 0).unwrap();
        assert_eq!(r.radicals.len(), 1);
        assert_eq!(r.alp_count, 3);
    }

    #[test]
    fn weights_are_aut_stable() {
        let sl = whole(&library::sl2(3));
        let f = splitting_field(&sl, 3).unwrap();
        let i = ibr_over(&sl, 3, &f, 0).unwrap();
        let a = weights_over(&sl, 3, &f, 0).unwrap();
        for tau in brute_force_automorphisms(&sl).unwrap().iter().take(24) {
            let mut pw = weight_permutation(&a, tau).unwrap();
            pw.sort_unstable();
            assert_eq!(pw, (0..a.weights.len()).collect::<Vec<_>>());
            let mut pi = ibr_permutation(&i, tau).unwrap();
            pi.sort_unstable();
            assert_eq!(pi, (0..i.modules.len()).collect::<Vec<_>>());
        }
        // inner automorphisms act trivially
        let tau = Automorphism::conjugation(&sl, sl.gens()[1]).unwrap();
        assert_eq!(weight_permutation(&a, &tau).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn condition_trivial_cases() {
        let x = whole(&library::alternating(5));
        let f = splitting_field(&x, 2).unwrap();
        let mods = simple_modules_over(&x, &f, 0).unwrap();
        let aut = AutGroup::full(&x).unwrap();
        let four = mods.iter().find(|m| m.dim() == 4).unwrap();
        let r = coho_condition_check(&x, &x, four, four, &aut).unwrap();
        assert!(r.outcome.is_certified());
        let c = r.certificate.unwrap();
        assert_eq!(c.p.cocycle(), c.q.cocycle());
        // trivial module: linear, zero cocycles
        let r = coho_condition_check(&x, &x, &mods[0], &mods[0], &aut).unwrap();
        assert!(r.certificate.unwrap().p.is_linear());
    }

    #[test]
    fn fixed_point_criterion_on_a5() {
        let x = whole(&library::alternating(5));
        let f = splitting_field(&x, 2).unwrap();
        let mods = simple_modules_over(&x, &f, 0).unwrap();
        let aut = AutGroup::full(&x).unwrap();
        let q = sylow(&x, 2).unwrap();
        let four = mods.iter().find(|m| m.dim() == 4).unwrap();
        assert_eq!(fixed_space(four, &q).unwrap().dim(), 1);
        let r = mq_condition_check(&x, &q, four, &aut).unwrap();
        assert_eq!(r.outcome, Outcome::Certified);
        let c = r.certificate.unwrap();
        assert_eq!(c.p.restrict(&c.common).unwrap().cocycle(), c.q.cocycle());
        let r = mq_condition_check(&x, &q, &mods[0], &aut).unwrap();
        assert!(r.outcome.is_certified());
        // S5 swaps the 2-dimensional modules, so only inner automorphisms remain
        let two = mods.iter().find(|m| m.dim() == 2).unwrap();
        let r = mq_condition_check(&x, &q, two, &aut).unwrap();
        assert!(r.outcome.is_certified());
        assert_eq!(r.certificate.unwrap().common.order(), 12);
    }

    #[test]
    fn fixed_point_criterion_on_sl25() {
        let x = whole(&library::sl2(5));
        let f = Field::prime(5).unwrap();
        let mods = simple_modules_over(&x, &f, 0).unwrap();
        let aut = AutGroup::full(&x).unwrap();
        let q = sylow(&x, 5).unwrap();
        let natural = mods.iter().find(|m| m.dim() == 2).unwrap();
        let r = mq_condition_check(&x, &q, natural, &aut).unwrap();
        assert_eq!(r.outcome, Outcome::Certified);
    }

    #[test]
    fn s5_a5_triple() {
        let g = library::symmetric(5);
        let s5 = whole(&g);
        let x = derived(&s5);
        let f = splitting_field(&s5, 2).unwrap();
        let chi = simple_modules_over(&x, &f, 0)
            .unwrap()
            .into_iter()
            .find(|m| m.dim() == 4)
            .unwrap();
        let q = sylow(&x, 2).unwrap();
        let psi = fixed_point_module(&chi, &q).unwrap();
        let y = psi.group().clone();
        assert_eq!(y.order(), 12);
        let r = triple_equality_check(&s5, &x, &y, &chi, &psi, Some(&q), 0).unwrap();
        assert!(r.applicable, "{:?}", r.hypotheses);
        assert!(r.lemma.as_ref().unwrap().all(), "{:?}", r.lemma);
        assert!(r.r_identities && r.s_identities && r.cocycles_agree);
        assert!(r.equal);
        assert_eq!(r.count_g, 1);
    }

    #[test]
    fn triple_trivial_case() {
        let x = whole(&library::alternating(5));
        let f = splitting_field(&x, 2).unwrap();
        let chi = simple_modules_over(&x, &f, 0).unwrap().pop().unwrap();
        let r = triple_equality_check(&x, &x, &x, &chi, &chi, None, 0).unwrap();
        assert!(r.applicable);
        assert_eq!((r.count_g, r.count_n), (1, 1));
    }

    #[test]
    fn iaw_on_sl23_by_partition() {
        let sl = whole(&library::sl2(3));
        let f = splitting_field(&sl, 3).unwrap();
        let i = ibr_over(&sl, 3, &f, 0).unwrap();
        let a = weights_over(&sl, 3, &f, 0).unwrap();
        let aut = AutGroup::full(&sl).unwrap();
        let gens: Vec<Automorphism> = aut
            .group
            .table()
            .unwrap()
            .gens()
            .iter()
            .map(|&e| aut.automorphism(e).unwrap())
            .collect();
        let omega = omega_by_partition(&i, &a).unwrap();
        let r = iaw_check(&i, &a, &omega, &gens, None).unwrap();
        assert!(r.bijective.passed && r.partition.passed);
        let power = omega_power_and_deflate(&i, &a, &omega, 2, &[]).unwrap();
        assert_eq!(power.pairs.len(), 9);
        assert!(power.bijective && power.partition_preserved);
        let one = omega_power_and_deflate(&i, &a, &omega, 1, &[]).unwrap();
        assert_eq!(one.pairs.len(), omega.pairs.len());
    }
}
