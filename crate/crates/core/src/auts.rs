//! Automorphisms of a subgroup, stored as maps on element positions, and
//! automorphism groups realized as permutation groups on those positions.

use crate::classes::classes_of;
use crate::error::{Error, Result};
use crate::group::{Elt, PermutationGroup};
use crate::perm::Perm;
use crate::rep::Rep;
use crate::subgroup::Subgroup;

/// Largest group for which every automorphism is searched for.
pub const BRUTE_FORCE_CAP: u64 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    group: Subgroup,
    /// position -> position in `group.elements()`
    map: Vec<usize>,
}

impl Automorphism {
    pub fn identity(group: &Subgroup) -> Self {
        Automorphism {
            group: group.clone(),
            map: (0..group.elements().len()).collect(),
        }
    }

    /// Extends generator images along the spanning tree and checks the
    /// result is a bijective homomorphism.
    pub fn from_generator_images(group: &Subgroup, images: &[Elt]) -> Result<Self> {
        if images.len() != group.gens().len() {
            return Err(Error::NotAutomorphism("one image per generator is required".into()));
        }
        let t = group.parent().table()?;
        let mut imgpos = Vec::with_capacity(images.len());
        for &e in images {
            imgpos.push(group.position(e).ok_or_else(|| {
                Error::NotAutomorphism(format!("image {e} lies outside the group"))
            })?);
        }
        let el = group.elements();
        let n = el.len();
        let mut map = vec![usize::MAX; n];
        for (pos, parent, k) in group.word_tree() {
            map[pos] = if k == usize::MAX {
                0
            } else {
                group
                    .position(t.mul(el[imgpos[k]], el[map[parent]]))
                    .expect("closed")
            };
        }
        let a = Automorphism {
            group: group.clone(),
            map,
        };
        a.check()?;
        Ok(a)
    }

    /// `x -> g x g^-1` for `g` in the parent normalizing the group.
    pub fn conjugation(group: &Subgroup, g: Elt) -> Result<Self> {
        let t = group.parent().table()?;
        let el = group.elements();
        let gi = t.inv(g);
        let map = el
            .iter()
            .map(|&x| {
                group
                    .position(t.mul(t.mul(g, x), gi))
                    .ok_or_else(|| Error::NotAutomorphism(format!("{g} does not normalize")))
            })
            .collect::<Result<_>>()?;
        Ok(Automorphism {
            group: group.clone(),
            map,
        })
    }

    fn check(&self) -> Result<()> {
        let t = self.group.parent().table()?;
        let el = self.group.elements();
        let mut seen = vec![false; el.len()];
        for &m in &self.map {
            if std::mem::replace(&mut seen[m], true) {
                return Err(Error::NotAutomorphism("map is not injective".into()));
            }
        }
        for &s in self.group.gens() {
            let si = self.group.position(s).unwrap();
            for (x, &e) in el.iter().enumerate() {
                let sx = self.group.position(t.mul(s, e)).unwrap();
                if self.map[sx] != self.group.position(t.mul(el[self.map[si]], el[self.map[x]])).unwrap()
                {
                    return Err(Error::NotAutomorphism(format!(
                        "not multiplicative at ({s}, {e})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, e: Elt) -> Elt {
        let el = self.group.elements();
        el[self.map[self.group.position(e).expect("element of the group")]]
    }

    /// `self o other`
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            group: self.group.clone(),
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Automorphism {
            group: self.group.clone(),
            map: inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn image_of(&self, h: &Subgroup) -> Result<Subgroup> {
        let el = h.elements().iter().map(|&e| self.apply(e)).collect();
        Subgroup::from_elements(h.parent(), el)
    }

    pub fn to_perm(&self) -> Perm {
        Perm::from_images(self.map.iter().map(|&i| i as u32).collect()).expect("bijection")
    }

    pub fn from_perm(group: &Subgroup, p: &Perm) -> Automorphism {
        Automorphism {
            group: group.clone(),
            map: p.images().iter().map(|&i| i as usize).collect(),
        }
    }
}

/// `rho^tau = rho o tau^-1`, a module for the same group.
pub fn twist_rep(rho: &Rep, tau: &Automorphism) -> Result<Rep> {
    if rho.group() != tau.group() {
        return Err(Error::Precondition("automorphism of a different group".into()));
    }
    let inv = tau.inverse();
    let gens = rho
        .group()
        .gens()
        .iter()
        .map(|&s| rho.image(inv.apply(s)).cloned())
        .collect::<Result<_>>()?;
    Ok(rho.with_group(rho.group(), gens))
}

/// A group of automorphisms of `x`, acting on positions of `x.elements()`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub x: Subgroup,
    pub group: PermutationGroup,
}

impl AutGroup {
    /// Group generated by the given automorphisms together with all inner ones.
    pub fn generated(x: &Subgroup, extra: &[Automorphism]) -> Result<Self> {
        let degree = x.elements().len().max(1);
        let mut gens: Vec<Perm> = Vec::new();
        let push = |p: Perm, gens: &mut Vec<Perm>| -> Result<()> {
            if p.is_identity() {
                return Ok(());
            }
            let cur = PermutationGroup::new(degree, gens.clone(), None)?;
            if !cur.contains(&p) {
                gens.push(p);
            }
            Ok(())
        };
        for &s in x.gens() {
            push(Automorphism::conjugation(x, s)?.to_perm(), &mut gens)?;
        }
        for a in extra {
            push(a.to_perm(), &mut gens)?;
        }
        Ok(AutGroup {
            x: x.clone(),
            group: PermutationGroup::new(degree, gens, None)?,
        })
    }

    /// Automorphisms induced by conjugation from `g`, which normalizes `x`.
    pub fn from_conjugation(x: &Subgroup, g: &Subgroup) -> Result<Self> {
        let extra = g
            .gens()
            .iter()
            .map(|&s| Automorphism::conjugation(x, s))
            .collect::<Result<Vec<_>>>()?;
        Self::generated(x, &extra)
    }

    /// The full automorphism group, by search over generator images.
    pub fn full(x: &Subgroup) -> Result<Self> {
        Self::generated(x, &brute_force_automorphisms(x)?)
    }

    pub fn whole(&self) -> Result<Subgroup> {
        Subgroup::whole(&self.group)
    }

    /// Automorphism represented by an element of `group`.
    pub fn automorphism(&self, e: Elt) -> Result<Automorphism> {
        Ok(Automorphism::from_perm(&self.x, self.group.table()?.perm(e)))
    }

    pub fn element_of(&self, a: &Automorphism) -> Result<Elt> {
        let t = self.group.table()?;
        t.index_of(&a.to_perm())
            .ok_or_else(|| Error::NotAutomorphism("not in this automorphism group".into()))
    }

    /// `ad_g` as an element of the group, for `g` normalizing `x`.
    pub fn conj_element(&self, g: Elt) -> Result<Elt> {
        self.element_of(&Automorphism::conjugation(&self.x, g)?)
    }

    /// The subgroup of inner automorphisms coming from `h <= N(x)`.
    pub fn inner_from(&self, h: &Subgroup) -> Result<Subgroup> {
        let gens = h
            .gens()
            .iter()
            .map(|&s| self.conj_element(s))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::generated(&self.group, &gens)
    }

    /// Elements stabilizing the subgroup `y` of `x` setwise.
    pub fn stabilizer_of_subgroup(&self, y: &Subgroup) -> Result<Subgroup> {
        let t = self.group.table()?;
        let keep: Vec<Elt> = t
            .elements()
            .filter(|&e| {
                let p = t.perm(e);
                y.elements()
                    .iter()
                    .all(|&u| y.contains(self.x.elements()[p.apply(self.x.position(u).unwrap())]))
            })
            .collect();
        Subgroup::from_elements(&self.group, keep)
    }
}

/// Every automorphism of a group of order at most `BRUTE_FORCE_CAP`:
/// images of a generating set are searched among elements with matching
/// order and class size.
pub fn brute_force_automorphisms(x: &Subgroup) -> Result<Vec<Automorphism>> {
    if x.order() > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "automorphism search",
            value: x.order(),
            cap: BRUTE_FORCE_CAP,
        });
    }
    let x = &x.with_few_gens()?;
    let t = x.parent().table()?;
    let classes = classes_of(x)?;
    let mut size = vec![0u64; t.len()];
    for c in &classes {
        for &e in &c.elements {
            size[e] = c.size;
        }
    }
    let print = |e: Elt| (t.element_order(e), size[e]);
    let gens = x.gens().to_vec();
    let candidates: Vec<Vec<Elt>> = gens
        .iter()
        .map(|&s| {
            x.elements()
                .iter()
                .copied()
                .filter(|&e| print(e) == print(s))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<Elt> = choice
            .iter()
            .zip(&candidates)
            .map(|(&i, c)| c[i])
            .collect();
        if let Ok(a) = Automorphism::from_generator_images(x, &imgs) {
            out.push(a);
        }
        let mut k = 0;
        loop {
            if k == gens.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    fn whole(g: &PermutationGroup) -> Subgroup {
        Subgroup::whole(g).unwrap()
    }

    #[test]
    fn automorphism_group_orders() {
        for (g, n) in [
            (library::symmetric(3), 6),
            (library::cyclic(6), 2),
            (library::alternating(4), 24),
            (library::quaternion(), 24),
            (library::alternating(5), 120),
            (library::sl2(3), 24),
        ] {
            let x = whole(&g);
            let all = brute_force_automorphisms(&x).unwrap();
            assert_eq!(all.len(), n);
            assert_eq!(AutGroup::full(&x).unwrap().group.order(), n as u64);
        }
    }

    #[test]
    fn composition_and_inverse() {
        let x = whole(&library::symmetric(4));
        let a = Automorphism::conjugation(&x, x.gens()[0]).unwrap();
        let b = Automorphism::conjugation(&x, x.gens()[1]).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        let t = x.parent().table().unwrap();
        let ab = Automorphism::conjugation(&x, t.mul(x.gens()[0], x.gens()[1])).unwrap();
        assert_eq!(a.compose(&b), ab);
    }

    #[test]
    fn rejects_non_automorphisms() {
        let x = whole(&library::cyclic(4));
        let g = x.gens()[0];
        let t = x.parent().table().unwrap();
        assert!(Automorphism::from_generator_images(&x, &[t.mul(g, g)]).is_err());
        assert!(Automorphism::from_generator_images(&x, &[t.inv(g)]).is_ok());
    }

    #[test]
    fn s5_on_a5() {
        let g = library::symmetric(5);
        let s5 = whole(&g);
        let a5 = crate::subgroup::derived(&s5);
        let aut = AutGroup::from_conjugation(&a5, &s5).unwrap();
        assert_eq!(aut.group.order(), 120);
        assert_eq!(aut.inner_from(&a5).unwrap().order(), 60);
    }
}
