//! Subgroups as element sets of an enumerated parent, and the subgroup
//! calculus built on them: normalizers, centralizers, centers, derived
//! subgroups, Sylow subgroups, `O_p`, and conjugacy classes of p-subgroups.

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elt, PermutationGroup};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

#[derive(Clone)]
pub struct Subgroup {
    parent: PermutationGroup,
    gens: Vec<Elt>,
    elems: Arc<Vec<Elt>>,
    mask: Arc<Vec<bool>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.gens)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    /// The subgroup generated by the given elements of `parent`.
    pub fn generated(parent: &PermutationGroup, gens: &[Elt]) -> Result<Self> {
        let t = parent.table()?;
        let n = t.len();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut list = vec![0];
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &s in gens {
                let y = t.mul(s, x);
                if !mask[y] {
                    mask[y] = true;
                    list.push(y);
                }
            }
            k += 1;
        }
        list.sort_unstable();
        let mut uniq: Vec<Elt> = Vec::with_capacity(gens.len());
        for &g in gens {
            if g != 0 && !uniq.contains(&g) {
                uniq.push(g);
            }
        }
        Ok(Subgroup {
            parent: parent.clone(),
            gens: uniq,
            elems: Arc::new(list),
            mask: Arc::new(mask),
        })
    }

    /// Wraps a closed element set; picks a small generating set greedily.
    pub fn from_elements(parent: &PermutationGroup, mut elems: Vec<Elt>) -> Result<Self> {
        let t = parent.table()?;
        elems.sort_unstable();
        elems.dedup();
        let mut mask = vec![false; t.len()];
        for &e in &elems {
            mask[e] = true;
        }
        let mut gens = Vec::new();
        let mut cur = Subgroup::generated(parent, &[])?;
        for &e in &elems {
            if !cur.contains(e) {
                gens.push(e);
                cur = Subgroup::generated(parent, &gens)?;
            }
        }
        if cur.order() != elems.len() as u64 {
            return Err(Error::NotSubgroup("element set is not closed".into()));
        }
        Ok(Subgroup {
            parent: parent.clone(),
            gens,
            elems: Arc::new(elems),
            mask: Arc::new(mask),
        })
    }

    /// Same subgroup with a greedily chosen generating set, taking elements
    /// of largest order first.
    pub fn with_few_gens(&self) -> Result<Self> {
        let t = self.parent.table()?;
        let mut by_order = self.elems.to_vec();
        by_order.sort_by_key(|&e| (std::cmp::Reverse(t.element_order(e)), e));
        let mut gens = Vec::new();
        let mut cur = Subgroup::generated(&self.parent, &[])?;
        for e in by_order {
            if cur.order() == self.order() {
                break;
            }
            if !cur.contains(e) {
                gens.push(e);
                cur = Subgroup::generated(&self.parent, &gens)?;
            }
        }
        Ok(cur)
    }

    pub fn whole(parent: &PermutationGroup) -> Result<Self> {
        let gens = parent.table()?.gens().to_vec();
        Self::generated(parent, &gens)
    }

    pub fn trivial(parent: &PermutationGroup) -> Result<Self> {
        Self::generated(parent, &[])
    }

    pub fn parent(&self) -> &PermutationGroup {
        &self.parent
    }

    pub fn gens(&self) -> &[Elt] {
        &self.gens
    }

    pub fn elements(&self) -> &[Elt] {
        &self.elems
    }

    pub fn order(&self) -> u64 {
        self.elems.len() as u64
    }

    #[inline]
    pub fn contains(&self, e: Elt) -> bool {
        self.mask[e]
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.gens.iter().all(|&g| other.contains(g))
    }

    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        let t = self.parent.table().expect("enumerated");
        self.is_subgroup_of(other)
            && other
                .gens
                .iter()
                .all(|&k| self.gens.iter().all(|&h| self.contains(t.conj(k, h))))
    }

    pub fn conjugate(&self, g: Elt) -> Subgroup {
        let t = self.parent.table().expect("enumerated");
        let gens: Vec<Elt> = self.gens.iter().map(|&h| t.conj(g, h)).collect();
        let mut elems: Vec<Elt> = self.elems.iter().map(|&h| t.conj(g, h)).collect();
        elems.sort_unstable();
        let mut mask = vec![false; t.len()];
        for &e in &elems {
            mask[e] = true;
        }
        Subgroup {
            parent: self.parent.clone(),
            gens,
            elems: Arc::new(elems),
            mask: Arc::new(mask),
        }
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let elems: Vec<Elt> = self
            .elems
            .iter()
            .copied()
            .filter(|&e| other.contains(e))
            .collect();
        Subgroup::from_elements(&self.parent, elems).expect("intersection is a subgroup")
    }

    /// The subgroup generated by two subgroups.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Subgroup::generated(&self.parent, &gens).expect("enumerated")
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        arith::p_part(self.order(), p) == self.order()
    }

    /// A standalone permutation group with the same elements. Element `i` of
    /// the result is element `self.elements()[i]` of the parent, because both
    /// tables are sorted by the same order.
    pub fn to_group(&self) -> Result<PermutationGroup> {
        let t = self.parent.table()?;
        let gens = self.gens.iter().map(|&g| t.perm(g).clone()).collect();
        PermutationGroup::new(self.parent.degree(), gens, None)
    }

    /// Position of a parent element inside `elements()`.
    pub fn position(&self, e: Elt) -> Option<usize> {
        self.elems.binary_search(&e).ok()
    }

    /// Re-expresses this subgroup inside `group`, where `group` is
    /// `ambient.to_group()` and `self` lies in `ambient`.
    pub fn relative_to(&self, ambient: &Subgroup, group: &PermutationGroup) -> Result<Subgroup> {
        let gens: Vec<Elt> = self
            .gens
            .iter()
            .map(|&g| {
                ambient
                    .position(g)
                    .ok_or_else(|| Error::NotSubgroup("not inside the ambient subgroup".into()))
            })
            .collect::<Result<_>>()?;
        Subgroup::generated(group, &gens)
    }

    /// Breadth-first spanning tree over `elements()` positions: triples
    /// `(pos, parent_pos, k)` with `elements()[pos] = gens()[k] * elements()[parent_pos]`,
    /// starting from the identity (which has `k = usize::MAX`).
    pub fn word_tree(&self) -> Vec<(usize, usize, usize)> {
        let t = self.parent.table().expect("enumerated");
        let n = self.elems.len();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut out = vec![(0, 0, usize::MAX)];
        let mut k = 0;
        while k < out.len() {
            let x = self.elems[out[k].0];
            for (j, &s) in self.gens.iter().enumerate() {
                let y = self.position(t.mul(s, x)).expect("closed");
                if !seen[y] {
                    seen[y] = true;
                    out.push((y, out[k].0, j));
                }
            }
            k += 1;
        }
        out
    }

    /// Lifts a subgroup of `self.to_group()` back into the parent.
    pub fn lift(&self, inner: &Subgroup) -> Result<Subgroup> {
        let gens: Vec<Elt> = inner.gens().iter().map(|&g| self.elems[g]).collect();
        Subgroup::generated(&self.parent, &gens)
    }
}

/// Which subgroup `stabilizer_calculus` computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Calculus {
    Normalizer,
    Centralizer,
    Center,
    Derived,
}

pub fn stabilizer_calculus(g: &Subgroup, h: &Subgroup, kind: Calculus) -> Result<Subgroup> {
    match kind {
        Calculus::Normalizer => normalizer_strict(g, h),
        Calculus::Centralizer => {
            check_inside(h, g)?;
            centralizer(g, h)
        }
        Calculus::Center => Ok(center(g)),
        Calculus::Derived => Ok(derived(g)),
    }
}

fn check_inside(h: &Subgroup, g: &Subgroup) -> Result<()> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H is not contained in G".into()));
    }
    Ok(())
}

/// `N_G(H)`; `H` must be contained in the same parent, not necessarily in `G`.
pub fn normalizer(g: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    let t = g.parent.table()?;
    let elems: Vec<Elt> = g
        .elements()
        .iter()
        .copied()
        .filter(|&x| h.gens().iter().all(|&y| h.contains(t.conj(x, y))))
        .collect();
    Subgroup::from_elements(&g.parent, elems)
}

pub fn normalizer_strict(g: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    check_inside(h, g)?;
    normalizer(g, h)
}

/// `C_G(H)`.
pub fn centralizer(g: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    let t = g.parent.table()?;
    let elems: Vec<Elt> = g
        .elements()
        .iter()
        .copied()
        .filter(|&x| h.gens().iter().all(|&y| t.mul(x, y) == t.mul(y, x)))
        .collect();
    Subgroup::from_elements(&g.parent, elems)
}

pub fn center(g: &Subgroup) -> Subgroup {
    centralizer(g, g).expect("enumerated")
}

/// Smallest normal subgroup of `g` containing the given elements.
pub fn normal_closure(g: &Subgroup, elems: &[Elt]) -> Subgroup {
    let t = g.parent.table().expect("enumerated");
    let mut gens: Vec<Elt> = elems.to_vec();
    loop {
        let h = Subgroup::generated(&g.parent, &gens).expect("enumerated");
        let mut grew = false;
        for &k in g.gens() {
            for &x in h.gens().to_vec().iter() {
                let y = t.conj(k, x);
                if !h.contains(y) {
                    gens.push(y);
                    grew = true;
                }
            }
        }
        if !grew {
            return h;
        }
    }
}

pub fn derived(g: &Subgroup) -> Subgroup {
    let t = g.parent.table().expect("enumerated");
    let mut comms = Vec::new();
    for &a in g.gens() {
        for &b in g.gens() {
            let c = t.commutator(a, b);
            if c != 0 {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

pub fn is_perfect(g: &Subgroup) -> bool {
    derived(g).order() == g.order()
}

/// A Sylow p-subgroup, built by extending inside normalizers.
pub fn sylow(g: &Subgroup, p: u64) -> Result<Subgroup> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let t = g.parent.table()?;
    let target = arith::p_part(g.order(), p);
    let mut s = Subgroup::trivial(&g.parent)?;
    while s.order() < target {
        let n = normalizer(g, &s)?;
        let x = n
            .elements()
            .iter()
            .copied()
            .find(|&x| {
                !s.contains(x)
                    && arith::p_part(t.element_order(x), p) == t.element_order(x)
                    && s.contains(t.pow(x, p))
            })
            .ok_or_else(|| Error::Consistency("no p-element extends a non-Sylow p-subgroup".into()))?;
        let mut gens = s.gens().to_vec();
        gens.push(x);
        s = Subgroup::generated(&g.parent, &gens)?;
    }
    Ok(s)
}

/// `O_p(G)`: the core of a Sylow p-subgroup.
pub fn core_p(g: &Subgroup, p: u64) -> Result<Subgroup> {
    let s = sylow(g, p)?;
    let mut core: Vec<Elt> = s.elements().to_vec();
    for &x in g.elements() {
        let c = s.conjugate(x);
        core.retain(|&e| c.contains(e));
        if core.len() == 1 {
            break;
        }
    }
    Subgroup::from_elements(&g.parent, core)
}

/// Canonical key of the conjugacy class of `h` under `g`: the least sorted
/// element list among its conjugates, and a conjugating element reaching it.
pub fn canonical_conjugate(g: &Subgroup, h: &Subgroup) -> (Vec<Elt>, Elt) {
    let mut best: Option<(Vec<Elt>, Elt)> = None;
    let mut seen: BTreeSet<Vec<Elt>> = BTreeSet::new();
    for &x in g.elements() {
        let c = h.conjugate(x);
        let key = c.elements().to_vec();
        if !seen.insert(key.clone()) {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, x));
        }
    }
    best.expect("nonempty group")
}

/// An element `x` of `g` with `x a x^-1 = b`, if any.
pub fn conjugating_element(g: &Subgroup, a: &Subgroup, b: &Subgroup) -> Option<Elt> {
    if a.order() != b.order() {
        return None;
    }
    g.elements()
        .iter()
        .copied()
        .find(|&x| a.conjugate(x).elements() == b.elements())
}

/// One representative per `g`-conjugacy class of p-subgroups of `g`,
/// including the trivial subgroup; each representative is the canonical
/// conjugate, sorted by (order, elements).
pub fn p_subgroup_classes(g: &Subgroup, p: u64) -> Result<Vec<Subgroup>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let t = g.parent.table()?;
    let mut reps: Vec<Subgroup> = vec![Subgroup::trivial(&g.parent)?];
    let mut keys: BTreeSet<Vec<Elt>> = BTreeSet::new();
    keys.insert(vec![0]);
    let mut layer = vec![reps[0].clone()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for h in &layer {
            let n = normalizer(g, h)?;
            for &x in n.elements() {
                if h.contains(x) {
                    continue;
                }
                let ox = t.element_order(x);
                if arith::p_part(ox, p) != ox || !h.contains(t.pow(x, p)) {
                    continue;
                }
                let mut gens = h.gens().to_vec();
                gens.push(x);
                let k = Subgroup::generated(&g.parent, &gens)?;
                let (key, c) = canonical_conjugate(g, &k);
                if keys.insert(key) {
                    let rep = k.conjugate(c);
                    next.push(rep.clone());
                    reps.push(rep);
                }
            }
        }
        layer = next;
    }
    reps.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    Ok(reps)
}

/// Left cosets `xH` of `h` in `g`, each as a sorted element list, ordered by
/// least element. The trivial coset comes first.
pub fn left_cosets(g: &Subgroup, h: &Subgroup) -> Result<Vec<Vec<Elt>>> {
    check_inside(h, g)?;
    let t = g.parent.table()?;
    let mut assigned = vec![false; t.len()];
    let mut cosets = Vec::new();
    for &x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut c: Vec<Elt> = h.elements().iter().map(|&y| t.mul(x, y)).collect();
        c.sort_unstable();
        for &e in &c {
            assigned[e] = true;
        }
        cosets.push(c);
    }
    Ok(cosets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn s3_calculus() {
        let g = library::symmetric(3);
        let whole = Subgroup::whole(&g).unwrap();
        assert_eq!(center(&whole).order(), 1);
        let d = derived(&whole);
        assert_eq!(d.order(), 3);
        assert!(d.is_normal_in(&whole));
        let n = normalizer(&whole, &d).unwrap();
        assert_eq!(n.order(), 6);
        assert_eq!(core_p(&whole, 3).unwrap().order(), 3);
        assert_eq!(core_p(&whole, 2).unwrap().order(), 1);
    }

    #[test]
    fn p_subgroups_of_s3() {
        let g = library::symmetric(3);
        let whole = Subgroup::whole(&g).unwrap();
        let orders3: Vec<u64> = p_subgroup_classes(&whole, 3).unwrap().iter().map(|h| h.order()).collect();
        assert_eq!(orders3, vec![1, 3]);
        let orders2: Vec<u64> = p_subgroup_classes(&whole, 2).unwrap().iter().map(|h| h.order()).collect();
        assert_eq!(orders2, vec![1, 2]);
        let c5 = Subgroup::whole(&library::cyclic(5)).unwrap();
        assert_eq!(p_subgroup_classes(&c5, 3).unwrap().len(), 1);
    }

    #[test]
    fn derived_is_rejected_outside() {
        let g = library::symmetric(4);
        let whole = Subgroup::whole(&g).unwrap();
        let a4 = derived(&whole);
        let v4 = derived(&a4);
        assert_eq!(a4.order(), 12);
        assert_eq!(v4.order(), 4);
        assert!(normalizer_strict(&v4, &a4).is_err());
    }
}
