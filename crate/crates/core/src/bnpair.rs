//! `SL(2, p)` in its defining characteristic: Borel, torus and unipotent
//! subgroups, admissible pairs, the heads of `F[G/U]`, and the weight
//! bijection read off from `U`-fixed points.

use crate::arith;
use crate::awc::{ibr_over, trace_vector, weights_over, AlpSet, IbrSet, OmegaBijection};
use crate::error::{Error, Result};
use crate::field::{Field, F};
use crate::group::{Elt, PermutationGroup};
use crate::library::{gl2_perm, plane_points, sl2};
use crate::meataxe::is_isomorphic;
use crate::modrep::{brauer_count, chop, fixed_point_module, fixed_space};
use crate::rep::Rep;
use crate::subgroup::{conjugating_element, core_p, normalizer, Subgroup};
use serde::Serialize;

pub const P_CAP: u64 = 13;

#[derive(Clone, Debug)]
pub struct Sl2Data {
    pub p: u64,
    pub group: PermutationGroup,
    pub g: Subgroup,
    pub b: Subgroup,
    pub t: Subgroup,
    pub u: Subgroup,
    /// `a` with `T = <diag(a, a^-1)>`
    pub root: u64,
}

impl Sl2Data {
    /// Diagonal entry `a` of an upper triangular element, read from its
    /// action on `e1`.
    pub fn diagonal(&self, b: Elt) -> Result<u64> {
        let pts = plane_points(self.p);
        let e1 = pts.iter().position(|&v| v == (1, 0)).unwrap();
        let (a, c) = pts[self.group.table()?.perm(b).apply(e1)];
        if c != 0 {
            return Err(Error::Precondition(format!("{b} does not fix the line of e1")));
        }
        Ok(a)
    }

    /// `lambda(b) = a(b)^lambda` on `B`.
    pub fn lambda_at(&self, lambda: u64, b: Elt) -> Result<u64> {
        Ok(arith::pow_mod(self.diagonal(b)?, lambda, self.p))
    }
}

pub fn sl2_data(p: u64) -> Result<Sl2Data> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > P_CAP {
        return Err(Error::CapExceeded {
            what: "SL(2,p) prime",
            value: p,
            cap: P_CAP,
        });
    }
    let group = sl2(p);
    let g = Subgroup::whole(&group)?;
    let tab = group.table()?;
    let elt = |m: [[u64; 2]; 2]| tab.index_of(&gl2_perm(p, m)).expect("element of SL(2,p)");
    let u = Subgroup::generated(&group, &[elt([[1, 1], [0, 1]])])?;
    let root = (1..p).find(|&a| arith::mult_order(a, p) == p - 1).unwrap_or(1);
    let ainv = arith::inv_mod(root, p).expect("unit");
    let t = Subgroup::generated(&group, &[elt([[root, 0], [0, ainv]])])?;
    let b = u.join(&t);
    let d = Sl2Data {
        p,
        group,
        g,
        b,
        t,
        u,
        root,
    };
    let checks = [
        (d.g.order() == p * (p - 1) * (p + 1), "|G| = p(p-1)(p+1)"),
        (d.u.order() == p, "|U| = p"),
        (d.t.order() == p - 1, "|T| = p-1"),
        (d.b.order() == p * (p - 1) && d.u.is_normal_in(&d.b), "B = U x| T"),
        (normalizer(&d.g, &d.u)? == d.b, "N_G(U) = B"),
        (core_p(&d.b, p)? == d.u, "O_p(B) = U"),
    ];
    for (ok, what) in checks {
        if !ok {
            return Err(Error::Consistency(format!("SL(2,{p}): {what} fails")));
        }
    }
    Ok(d)
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Delta {
    Empty,
    Pi,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdmissiblePair {
    pub delta: Delta,
    /// `lambda(diag(a, a^-1)) = a^lambda`, taken mod `p - 1`
    pub lambda: u64,
}

/// `(lambda, {})` for every character of `T`, then `(1, Pi)`.
pub fn admissible_pairs(d: &Sl2Data) -> Vec<AdmissiblePair> {
    let mut out: Vec<AdmissiblePair> = (0..d.t.order().max(1))
        .map(|lambda| AdmissiblePair {
            lambda,
            delta: Delta::Empty,
        })
        .collect();
    out.push(AdmissiblePair {
        lambda: 0,
        delta: Delta::Pi,
    });
    out
}

/// The field used for every module here: `GF(p)` realizes all characters
/// of `T` and splits `SL(2, p)`.
pub fn field(d: &Sl2Data) -> Result<Field> {
    Field::prime(d.p)
}

/// `lambda` as a module of `B`, through `B/U = T`.
pub fn lambda_module(d: &Sl2Data, f: &Field, lambda: u64) -> Result<Rep> {
    let scalars = d
        .b
        .gens()
        .iter()
        .map(|&s| Ok(f.from_int(d.lambda_at(lambda, s)? as i64)))
        .collect::<Result<Vec<_>>>()?;
    Rep::linear(&d.b, f, &scalars)
}

#[derive(Clone, Debug)]
pub struct Heads {
    pub field: Field,
    pub perm_module_dim: usize,
    pub heads: Vec<(AdmissiblePair, Rep)>,
}

/// Distinct composition factors of `F[G/U]`, each labelled by its
/// admissible pair: the factor of dimension `p` is `M(1, Pi)`, and any
/// other is `M(lambda, {})` where `T` acts on its `U`-fixed line by `lambda`.
pub fn perm_module_heads(d: &Sl2Data, seed: u64) -> Result<Heads> {
    let f = field(d)?;
    let y = Rep::on_cosets(&d.g, &d.u, &f)?;
    let factors = chop(&y, seed)?;
    let mut heads = Vec::new();
    for (m, _) in factors {
        let pair = if m.dim() as u64 == d.p {
            AdmissiblePair {
                lambda: 0,
                delta: Delta::Pi,
            }
        } else {
            let line = fixed_point_module(&m, &d.u)?;
            if line.dim() != 1 {
                return Err(Error::Consistency(format!(
                    "U-fixed points of a {}-dimensional factor have dimension {}",
                    m.dim(),
                    line.dim()
                )));
            }
            let on_t = line.restrict(&d.t)?;
            let s = on_t.image(d.t.gens().first().copied().unwrap_or(0))?.get(0, 0);
            let lambda = (0..d.t.order().max(1))
                .find(|&l| f.from_int(arith::pow_mod(d.root, l, d.p) as i64) == s)
                .ok_or_else(|| Error::Consistency("T-scalar is not a power of the root".into()))?;
            AdmissiblePair {
                lambda,
                delta: Delta::Empty,
            }
        };
        if heads.iter().any(|(q, _)| *q == pair) {
            return Err(Error::Consistency(format!("two factors labelled {pair:?}")));
        }
        heads.push((pair, m));
    }
    heads.sort_by_key(|h| h.0);
    if heads.iter().map(|h| h.0).collect::<Vec<_>>() != admissible_pairs(d) {
        return Err(Error::Consistency("heads do not cover the admissible pairs".into()));
    }
    Ok(Heads {
        field: f,
        perm_module_dim: y.dim(),
        heads,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GreenRow {
    pub pair: AdmissiblePair,
    pub head_dim: usize,
    pub fixed_dim: usize,
    pub ibr_index: usize,
    pub weight_index: usize,
    pub radical_order: u64,
    /// `M_L(lambda, Delta) = M_G(lambda, Delta)^{U_Delta}` as `N_G(U_Delta)`-modules
    pub fixed_point_identity: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GreenReport {
    pub p: u64,
    pub group_order: u64,
    pub field_order: u64,
    pub perm_module_dim: usize,
    pub admissible_pairs: usize,
    pub ibr_count: usize,
    pub weight_count: usize,
    pub steinberg_dim: usize,
    pub rows: Vec<GreenRow>,
    pub bijective: bool,
    pub identities_hold: bool,
}

impl GreenReport {
    pub fn passed(&self) -> bool {
        self.bijective
            && self.identities_hold
            && self.admissible_pairs == self.ibr_count
            && self.ibr_count == self.weight_count
            && self.steinberg_dim as u64 == self.p
    }
}

#[derive(Clone, Debug)]
pub struct GreenCheck {
    pub report: GreenReport,
    pub ibr: IbrSet,
    pub alp: AlpSet,
    pub omega: OmegaBijection,
}

fn position_by_traces(mods: &[Rep], m: &Rep) -> Result<usize> {
    let tr = trace_vector(m);
    let hits: Vec<usize> = (0..mods.len()).filter(|&i| trace_vector(&mods[i]) == tr).collect();
    match hits[..] {
        [i] => Ok(i),
        _ => Err(Error::Consistency(format!("{} matches for a module by traces", hits.len()))),
    }
}

/// Pairs each head with its weight and checks the fixed-point identity;
/// the result is `Omega` between `IBr(G)` and `Alp(G)` over `GF(p)`.
pub fn green_fixed_point_check(d: &Sl2Data, seed: u64) -> Result<GreenCheck> {
    let heads = perm_module_heads(d, seed)?;
    let f = &heads.field;
    let ibr = ibr_over(&d.g, d.p, f, seed)?;
    let alp = weights_over(&d.g, d.p, f, seed)?;
    let tab = d.group.table()?;
    let mut rows = Vec::new();
    for (pair, m) in &heads.heads {
        let ibr_index = position_by_traces(&ibr.modules, m)?;
        let (row_q, target) = match pair.delta {
            Delta::Empty => (d.u.clone(), lambda_module(d, f, pair.lambda)?),
            Delta::Pi => (Subgroup::trivial(&d.group)?, m.clone()),
        };
        let fixed = fixed_point_module(m, &row_q)?;
        let fixed_point_identity = fixed.group() == target.group() && is_isomorphic(&fixed, &target)?;
        let (ri, radical) = alp
            .radicals
            .iter()
            .enumerate()
            .find(|(_, r)| r.q.order() == row_q.order())
            .ok_or_else(|| Error::Consistency("U_Delta is not radical".into()))?;
        let c = conjugating_element(&d.g, &row_q, &radical.q)
            .ok_or_else(|| Error::Consistency("radical class of U_Delta not found".into()))?;
        let ci = tab.inv(c);
        // the weight side moved to the listed representative
        let n = &radical.normalizer;
        let trace_target = trace_vector(&target);
        let moved: Vec<F> = n
            .elements()
            .iter()
            .map(|&y| trace_target[target.group().position(tab.mul(tab.mul(ci, y), c)).unwrap()])
            .collect();
        let weight_index = alp
            .weights
            .iter()
            .position(|w| w.radical == ri && trace_vector(&w.module) == moved)
            .ok_or_else(|| Error::Consistency(format!("no weight for {pair:?}")))?;
        rows.push(GreenRow {
            pair: *pair,
            head_dim: m.dim(),
            fixed_dim: fixed_space(m, &row_q)?.dim(),
            ibr_index,
            weight_index,
            radical_order: row_q.order(),
            fixed_point_identity,
        });
    }
    let mut left: Vec<usize> = rows.iter().map(|r| r.ibr_index).collect();
    let mut right: Vec<usize> = rows.iter().map(|r| r.weight_index).collect();
    left.sort_unstable();
    left.dedup();
    right.sort_unstable();
    right.dedup();
    let bijective = left.len() == ibr.modules.len() && right.len() == alp.weights.len() && left.len() == rows.len();
    let mut pairs: Vec<(usize, usize)> = rows.iter().map(|r| (r.ibr_index, r.weight_index)).collect();
    pairs.sort_unstable();
    let report = GreenReport {
        p: d.p,
        group_order: d.g.order(),
        field_order: f.order(),
        perm_module_dim: heads.perm_module_dim,
        admissible_pairs: admissible_pairs(d).len(),
        ibr_count: brauer_count(&d.g, d.p)?,
        weight_count: alp.weights.len(),
        steinberg_dim: heads
            .heads
            .iter()
            .find(|h| h.0.delta == Delta::Pi)
            .map_or(0, |h| h.1.dim()),
        identities_hold: rows.iter().all(|r| r.fixed_point_identity),
        rows,
        bijective,
    };
    Ok(GreenCheck {
        report,
        ibr,
        alp,
        omega: OmegaBijection { pairs },
    })
}
