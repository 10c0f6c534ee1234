//! Conjugacy classes by orbit enumeration.

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elt, PermutationGroup};
use crate::subgroup::Subgroup;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Least element of the class in the canonical element order.
    pub representative: Elt,
    pub size: u64,
    pub element_order: u64,
    #[serde(skip)]
    pub elements: Vec<Elt>,
}

/// Classes of a subgroup `g` (conjugation by `g`), ordered by representative.
pub fn classes_of(g: &Subgroup) -> Result<Vec<ConjugacyClass>> {
    let t = g.parent().table()?;
    let mut done = vec![false; t.len()];
    let mut out = Vec::new();
    for &x in g.elements() {
        if done[x] {
            continue;
        }
        let mut orbit = vec![x];
        done[x] = true;
        let mut k = 0;
        while k < orbit.len() {
            let y = orbit[k];
            for &s in g.gens() {
                let z = t.conj(s, y);
                if !done[z] {
                    done[z] = true;
                    orbit.push(z);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        out.push(ConjugacyClass {
            representative: orbit[0],
            size: orbit.len() as u64,
            element_order: t.element_order(orbit[0]),
            elements: orbit,
        });
    }
    Ok(out)
}

pub fn conjugacy_classes(g: &PermutationGroup) -> Result<Vec<ConjugacyClass>> {
    classes_of(&Subgroup::whole(g)?)
}

/// Classes whose elements have order coprime to `p`.
pub fn p_regular_classes(g: &PermutationGroup, p: u64) -> Result<Vec<ConjugacyClass>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(conjugacy_classes(g)?
        .into_iter()
        .filter(|c| c.element_order % p != 0)
        .collect())
}

/// Class index of every element.
pub fn class_map(g: &PermutationGroup, classes: &[ConjugacyClass]) -> Result<Vec<usize>> {
    let t = g.table()?;
    let mut map = vec![usize::MAX; t.len()];
    for (i, c) in classes.iter().enumerate() {
        for &e in &c.elements {
            map[e] = i;
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn s3_classes() {
        let g = library::symmetric(3);
        let cl = conjugacy_classes(&g).unwrap();
        let sizes: Vec<u64> = cl.iter().map(|c| c.size).collect();
        assert_eq!(sizes.iter().sum::<u64>(), 6);
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        assert_eq!(cl[0].representative, 0);
        assert_eq!(p_regular_classes(&g, 3).unwrap().len(), 2);
        assert_eq!(p_regular_classes(&g, 5).unwrap().len(), 3);
        assert!(p_regular_classes(&g, 4).is_err());
    }

    #[test]
    fn trivial_group_has_one_class() {
        let g = PermutationGroup::trivial();
        assert_eq!(conjugacy_classes(&g).unwrap().len(), 1);
    }
}
