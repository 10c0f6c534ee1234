//! Quotient groups via the action on cosets, and normalized sections.

use crate::error::{Error, Result};
use crate::group::{Elt, PermutationGroup};
use crate::perm::Perm;
use crate::subgroup::{left_cosets, Subgroup};

/// `K/N` realized as a permutation group on the cosets of `N`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: PermutationGroup,
    pub source: Subgroup,
    pub kernel: Subgroup,
    /// Parent element -> quotient element (`usize::MAX` outside `source`).
    pub projection: Vec<Elt>,
    /// Cosets of the kernel, ordered by least element.
    pub cosets: Vec<Vec<Elt>>,
}

pub fn quotient_group(k: &Subgroup, n: &Subgroup) -> Result<Quotient> {
    if !n.is_subgroup_of(k) {
        return Err(Error::NotSubgroup("N is not contained in G".into()));
    }
    if !n.is_normal_in(k) {
        return Err(Error::NotNormal("coset action would not be a quotient".into()));
    }
    let parent = k.parent();
    let t = parent.table()?;
    let cosets = left_cosets(k, n)?;
    let mut label = vec![usize::MAX; t.len()];
    for (i, c) in cosets.iter().enumerate() {
        for &e in c {
            label[e] = i;
        }
    }
    let degree = cosets.len();
    let action = |x: Elt| -> Perm {
        let imgs: Vec<u32> = cosets
            .iter()
            .map(|c| label[t.mul(x, c[0])] as u32)
            .collect();
        Perm::from_images(imgs).expect("coset action is a permutation")
    };
    let gens: Vec<Perm> = k
        .gens()
        .iter()
        .map(|&x| action(x))
        .filter(|p| !p.is_identity())
        .collect();
    let group = PermutationGroup::new(degree, gens, None)?;
    let qt = group.table()?;
    if qt.len() != cosets.len() {
        return Err(Error::Consistency("coset action has wrong order".into()));
    }
    let mut projection = vec![usize::MAX; t.len()];
    for c in &cosets {
        let q = qt.index_of(&action(c[0])).expect("image lies in the quotient");
        for &e in c {
            projection[e] = q;
        }
    }
    Ok(Quotient {
        group,
        source: k.clone(),
        kernel: n.clone(),
        projection,
        cosets,
    })
}

impl Quotient {
    /// Normalized section: each quotient element maps to the least element
    /// of its coset; the identity maps to the identity.
    pub fn section(&self) -> Vec<Elt> {
        let mut s = vec![0; self.cosets.len()];
        for c in &self.cosets {
            s[self.projection[c[0]]] = c[0];
        }
        s
    }

    /// Another normalized section using the greatest coset element.
    pub fn alternate_section(&self) -> Vec<Elt> {
        let mut s = vec![0; self.cosets.len()];
        for c in &self.cosets {
            let q = self.projection[c[0]];
            s[q] = if q == 0 { 0 } else { *c.last().unwrap() };
        }
        s
    }

    /// Elements of the source mapping to quotient element `q`.
    pub fn fibre(&self, q: Elt) -> &[Elt] {
        self.cosets
            .iter()
            .find(|c| self.projection[c[0]] == q)
            .map(|c| c.as_slice())
            .expect("every quotient element has a fibre")
    }

    /// Kernel of the projection, recomputed from the map.
    pub fn projection_kernel(&self) -> Vec<Elt> {
        self.source
            .elements()
            .iter()
            .copied()
            .filter(|&e| self.projection[e] == 0)
            .collect()
    }
}

/// A normalized section `s: G/H -> G` over left cosets `xH`.
#[derive(Debug, Clone)]
pub struct GroupSection {
    pub subgroup: Subgroup,
    /// Coset label of each parent element (`usize::MAX` outside the group).
    pub coset_of: Vec<usize>,
    /// Representative of each coset; label 0 is the trivial coset.
    pub reps: Vec<Elt>,
}

pub fn normalized_section(g: &Subgroup, h: &Subgroup) -> Result<GroupSection> {
    let cosets = left_cosets(g, h)?;
    let n = g.parent().table()?.len();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::with_capacity(cosets.len());
    for (i, c) in cosets.iter().enumerate() {
        for &e in c {
            coset_of[e] = i;
        }
        reps.push(c[0]);
    }
    Ok(GroupSection {
        subgroup: h.clone(),
        coset_of,
        reps,
    })
}

impl GroupSection {
    pub fn rep_of(&self, x: Elt) -> Elt {
        self.reps[self.coset_of[x]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::subgroup::derived;

    #[test]
    fn s3_mod_a3() {
        let g = library::symmetric(3);
        let whole = Subgroup::whole(&g).unwrap();
        let a3 = derived(&whole);
        let q = quotient_group(&whole, &a3).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.projection_kernel(), a3.elements().to_vec());
        let s = normalized_section(&whole, &a3).unwrap();
        assert_eq!(s.reps.len(), 2);
        assert_eq!(s.reps[0], 0);
        let t = g.table().unwrap();
        // least transposition
        assert_eq!(t.element_order(s.reps[1]), 2);
        for x in t.elements() {
            assert_eq!(s.coset_of[t.mul(s.rep_of(x), 0)], s.coset_of[x]);
        }
    }

    #[test]
    fn extreme_quotients() {
        let g = library::symmetric(3);
        let whole = Subgroup::whole(&g).unwrap();
        let one = Subgroup::trivial(&g).unwrap();
        assert_eq!(quotient_group(&whole, &one).unwrap().group.order(), 6);
        assert_eq!(quotient_group(&whole, &whole).unwrap().group.order(), 1);
        let t = Subgroup::generated(&g, &[1]).unwrap();
        if !t.is_normal_in(&whole) {
            assert!(matches!(quotient_group(&whole, &t), Err(Error::NotNormal(_))));
        }
    }
}
