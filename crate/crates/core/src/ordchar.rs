//! Ordinary character tables by Dixon-Schneider over `GF(l)`, where
//! `l = 1 mod exponent(G)` and `l > 2|G|`. Values stay modular.

use crate::arith;
use crate::classes::{class_map, conjugacy_classes, ConjugacyClass};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::PermutationGroup;
use crate::matrix::{Mat, Subspace};
use serde::Serialize;

/// Upper bound for the prime `l`.
pub const ELL_BOUND: u64 = 10_000_000;
const ROOT_SEED: u64 = 0x6473;

#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    #[serde(skip)]
    pub group: PermutationGroup,
    pub classes: Vec<ConjugacyClass>,
    pub ell: u64,
    /// ascending
    pub degrees: Vec<u64>,
    /// `values[i][j]` is the i-th character at class j, mod `ell`
    pub values: Vec<Vec<u64>>,
}

/// Smallest prime `l = 1 mod e` with `l > lower`.
pub fn choose_ell(e: u64, lower: u64) -> Result<u64> {
    let mut l = (lower / e) * e + 1;
    if l <= lower {
        l += e;
    }
    while l < ELL_BOUND {
        if arith::is_prime(l) {
            return Ok(l);
        }
        l += e;
    }
    Err(Error::NoSuitablePrime(ELL_BOUND))
}

pub fn character_table(g: &PermutationGroup) -> Result<CharacterTable> {
    let t = g.table()?;
    let order = g.order();
    let classes = conjugacy_classes(g)?;
    let r = classes.len();
    let cmap = class_map(g, &classes)?;
    let ell = choose_ell(g.exponent()?, 2 * order)?;
    let f = Field::prime(ell)?;
    let reps: Vec<usize> = classes.iter().map(|c| c.representative).collect();
    let inv_class: Vec<usize> = reps.iter().map(|&z| cmap[t.inv(z)]).collect();

    let class_matrix = |j: usize| -> Mat {
        let mut m = Mat::zeros(r, r);
        for (l, &z) in reps.iter().enumerate() {
            for &x in &classes[j].elements {
                let k = cmap[t.mul(t.inv(x), z)];
                m.set(k, l, m.get(k, l) + 1);
            }
        }
        m
    };

    let mut spaces: Vec<Subspace> = vec![{
        let mut s = Subspace::new(r);
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            s.insert(&f, e);
        }
        s
    }];
    for j in 1..r {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m = class_matrix(j);
        let mut next = Vec::new();
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
                continue;
            }
            let d = s.dim();
            let cols: Vec<Vec<u32>> = s
                .basis()
                .iter()
                .map(|w| {
                    s.coords(&f, &m.mul_vec(&f, w))
                        .ok_or_else(|| Error::Refinement("class matrix leaves a subspace".into()))
                })
                .collect::<Result<_>>()?;
            let restricted = Mat::from_cols(d, &cols);
            let eig = restricted.charpoly(&f).roots(&f, ROOT_SEED);
            let w = s.as_columns();
            let mut total = 0;
            for lambda in eig {
                let shifted = restricted.sub(&f, &Mat::scalar(d, lambda));
                let vs: Vec<Vec<u32>> = shifted
                    .nullspace(&f)
                    .iter()
                    .map(|c| w.mul_vec(&f, c))
                    .collect();
                total += vs.len();
                next.push(Subspace::spanned_by(&f, r, &vs));
            }
            if total != d {
                return Err(Error::Refinement(format!(
                    "class matrix {j} is not diagonalizable on a {d}-dimensional space"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::Refinement("common eigenspaces did not split".into()));
    }
    let mut rows: Vec<(u64, Vec<u64>)> = Vec::with_capacity(r);
    for s in &spaces {
        let w = &s.basis()[0];
        let scale = f.inv(w[0]).map_err(|_| Error::Refinement("zero at identity class".into()))?;
        let omega: Vec<u32> = w.iter().map(|&x| f.mul(x, scale)).collect();
        // sum omega_l omega_l* / |C_l| = |G| / chi(1)^2
        let mut sum = 0;
        for l in 0..r {
            let term = f.mul(omega[l], omega[inv_class[l]]);
            sum = f.add(sum, f.div(term, (classes[l].size % ell) as u32)?);
        }
        let d2 = f.div((order % ell) as u32, sum)? as u64;
        let d = arith::isqrt(d2);
        if d * d != d2 || d == 0 {
            return Err(Error::Consistency(format!("degree square {d2} is not a square")));
        }
        let values = (0..r)
            .map(|l| {
                let v = f.mul(omega[l], (d % ell) as u32);
                Ok(f.div(v, (classes[l].size % ell) as u32)? as u64)
            })
            .collect::<Result<Vec<u64>>>()?;
        rows.push((d, values));
    }
    rows.sort();
    let degrees = rows.iter().map(|x| x.0).collect::<Vec<_>>();
    let total: u64 = degrees.iter().map(|d| d * d).sum();
    if total != order {
        return Err(Error::Consistency(format!(
            "sum of squared degrees {total} differs from |G| = {order}"
        )));
    }
    Ok(CharacterTable {
        group: g.clone(),
        classes,
        ell,
        degrees,
        values: rows.into_iter().map(|x| x.1).collect(),
    })
}

impl CharacterTable {
    /// `sum_l |C_l| chi_i(l) chi_j(l^-1)` mod `ell`, which is `|G|` or 0.
    pub fn inner_product_times_order(&self, i: usize, j: usize) -> Result<u64> {
        let t = self.group.table()?;
        let cmap = class_map(&self.group, &self.classes)?;
        let ell = self.ell;
        let mut s = 0u64;
        for (l, c) in self.classes.iter().enumerate() {
            let inv = cmap[t.inv(c.representative)];
            s = (s + c.size % ell * self.values[i][l] % ell * self.values[j][inv]) % ell;
        }
        Ok(s)
    }
}

/// Number of irreducible characters whose degree has full p-part, and
/// their degrees.
pub fn defect_zero_count(g: &PermutationGroup, p: u64) -> Result<(usize, Vec<u64>)> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let table = character_table(g)?;
    let full = arith::p_part(g.order(), p);
    let ds: Vec<u64> = table
        .degrees
        .iter()
        .copied()
        .filter(|&d| arith::p_part(d, p) == full)
        .collect();
    Ok((ds.len(), ds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn small_tables() {
        assert_eq!(character_table(&library::symmetric(3)).unwrap().degrees, vec![1, 1, 2]);
        assert_eq!(character_table(&library::cyclic(4)).unwrap().degrees, vec![1; 4]);
        assert_eq!(
            character_table(&library::sl2(3)).unwrap().degrees,
            vec![1, 1, 1, 2, 2, 2, 3]
        );
        assert_eq!(
            character_table(&library::alternating(5)).unwrap().degrees,
            vec![1, 3, 3, 4, 5]
        );
    }

    #[test]
    fn orthogonality() {
        let t = character_table(&library::symmetric(4)).unwrap();
        let n = t.degrees.len();
        for i in 0..n {
            for j in 0..n {
                let v = t.inner_product_times_order(i, j).unwrap();
                assert_eq!(v, if i == j { 24 % t.ell } else { 0 });
            }
        }
    }

    #[test]
    fn defect_zero() {
        assert_eq!(defect_zero_count(&library::symmetric(3), 3).unwrap().0, 0);
        assert_eq!(defect_zero_count(&library::cyclic(2), 3).unwrap().0, 2);
        assert_eq!(defect_zero_count(&library::sl2(3), 3).unwrap(), (1, vec![3]));
        assert!(defect_zero_count(&library::cyclic(2), 4).is_err());
    }

    #[test]
    fn ell_choice() {
        assert_eq!(choose_ell(6, 12).unwrap(), 13);
        assert_eq!(choose_ell(60, 240).unwrap(), 241);
    }
}
