//! Matrix representations of (sub)groups over finite fields.

use crate::error::{Error, Result};
use crate::field::{Field, F};
use crate::group::Elt;
use crate::matrix::{Mat, Subspace};
use crate::quotient::Quotient;
use crate::subgroup::{left_cosets, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// A homomorphism from `group` to `GL(dim, field)`, given on `group.gens()`.
#[derive(Clone)]
pub struct Rep {
    group: Subgroup,
    field: Field,
    dim: usize,
    gens: Vec<Mat>,
    images: Arc<OnceLock<Vec<Mat>>>,
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Rep(dim {}, {:?}, group order {})",
            self.dim,
            self.field,
            self.group.order()
        )
    }
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.field == other.field && self.gens == other.gens
    }
}

impl Rep {
    /// Checks shapes and invertibility; the homomorphism property is checked
    /// separately by `verify`.
    pub fn new(group: &Subgroup, field: &Field, dim: usize, gens: Vec<Mat>) -> Result<Self> {
        if gens.len() != group.gens().len() {
            return Err(Error::Dimension(format!(
                "{} generator images for {} generators",
                gens.len(),
                group.gens().len()
            )));
        }
        for m in &gens {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension(format!(
                    "{}x{} image in dimension {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.data().iter().any(|&a| !field.is_valid(a as u64)) {
                return Err(Error::InvalidField("matrix entry outside the field".into()));
            }
            if !m.is_invertible(field) {
                return Err(Error::Singular("generator image is not invertible".into()));
            }
        }
        Ok(Self::new_unchecked(group, field, dim, gens))
    }

    pub(crate) fn new_unchecked(group: &Subgroup, field: &Field, dim: usize, gens: Vec<Mat>) -> Self {
        Rep {
            group: group.clone(),
            field: field.clone(),
            dim,
            gens,
            images: Arc::new(OnceLock::new()),
        }
    }

    pub fn trivial(group: &Subgroup, field: &Field) -> Self {
        let gens = vec![Mat::identity(1); group.gens().len()];
        Self::new_unchecked(group, field, 1, gens)
    }

    /// One-dimensional representation from generator scalars.
    pub fn linear(group: &Subgroup, field: &Field, scalars: &[F]) -> Result<Self> {
        let gens = scalars.iter().map(|&c| Mat::scalar(1, c)).collect();
        Self::new(group, field, 1, gens)
    }

    /// Permutation module on the left cosets of `k` in `group`.
    pub fn on_cosets(group: &Subgroup, k: &Subgroup, field: &Field) -> Result<Self> {
        let t = group.parent().table()?;
        let cosets = left_cosets(group, k)?;
        let mut label = vec![usize::MAX; t.len()];
        for (i, c) in cosets.iter().enumerate() {
            for &e in c {
                label[e] = i;
            }
        }
        let gens = group
            .gens()
            .iter()
            .map(|&g| {
                let imgs: Vec<u32> = cosets.iter().map(|c| label[t.mul(g, c[0])] as u32).collect();
                Mat::permutation(&imgs)
            })
            .collect();
        Ok(Self::new_unchecked(group, field, cosets.len(), gens))
    }

    pub fn regular(group: &Subgroup, field: &Field) -> Result<Self> {
        let trivial = Subgroup::trivial(group.parent())?;
        Self::on_cosets(group, &trivial, field)
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

    pub fn gens(&self) -> &[Mat] {
        &self.gens
    }

    /// Images of every element, indexed by position in `group.elements()`.
    pub fn images(&self) -> &[Mat] {
        self.images.get_or_init(|| {
            let n = self.group.elements().len();
            let mut out = vec![Mat::zeros(0, 0); n];
            for (pos, parent, k) in self.group.word_tree() {
                out[pos] = if k == usize::MAX {
                    Mat::identity(self.dim)
                } else {
                    self.gens[k].mul(&self.field, &out[parent])
                };
            }
            out
        })
    }

    /// Image of a parent element lying in the group.
    pub fn image(&self, e: Elt) -> Result<&Mat> {
        let pos = self
            .group
            .position(e)
            .ok_or_else(|| Error::NotSubgroup("element outside the represented group".into()))?;
        Ok(&self.images()[pos])
    }

    /// Checks `rho(s) rho(x) = rho(s x)` for every generator `s` and every
    /// element `x` when the group is small, otherwise on `samples` random
    /// pairs. Images are built along a spanning tree, so this is exactly the
    /// homomorphism property.
    pub fn verify(&self, samples: usize, seed: u64) -> Result<()> {
        let t = self.group.parent().table()?;
        let el = self.group.elements();
        let imgs = self.images();
        let f = &self.field;
        let check = |k: usize, x: usize| -> Result<()> {
            let s = self.group.gens()[k];
            let y = self.group.position(t.mul(s, el[x])).unwrap();
            if self.gens[k].mul(f, &imgs[x]) != imgs[y] {
                return Err(Error::Consistency(format!(
                    "rho(s)rho(x) != rho(sx) at s = {s}, x = {}",
                    el[x]
                )));
            }
            Ok(())
        };
        let n = el.len();
        let r = self.gens.len();
        if r * n <= samples {
            for k in 0..r {
                for x in 0..n {
                    check(k, x)?;
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                check(rng.gen_range(0..r), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Restriction to a subgroup of the represented group.
    pub fn restrict(&self, h: &Subgroup) -> Result<Rep> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup("restriction to a non-subgroup".into()));
        }
        let gens = h
            .gens()
            .iter()
            .map(|&g| self.image(g).cloned())
            .collect::<Result<_>>()?;
        Ok(Self::new_unchecked(h, &self.field, self.dim, gens))
    }

    /// Inflation from `q.group` to `q.source` along the projection.
    pub fn inflate(&self, q: &Quotient) -> Result<Rep> {
        if self.group.parent().same_as(&q.group) && self.group.order() == q.group.order() {
            let gens = q
                .source
                .gens()
                .iter()
                .map(|&g| self.image(q.projection[g]).cloned())
                .collect::<Result<_>>()?;
            Ok(Self::new_unchecked(&q.source, &self.field, self.dim, gens))
        } else {
            Err(Error::Precondition("representation is not of the quotient group".into()))
        }
    }

    /// Action on a stable subspace, in its basis.
    pub fn sub(&self, s: &Subspace) -> Result<Rep> {
        let f = &self.field;
        let gens = self
            .gens
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
            .collect::<Result<_>>()?;
        Ok(Self::new_unchecked(&self.group, f, s.dim(), gens))
    }

    /// Action on the quotient by a stable subspace, in the basis of standard
    /// vectors at non-pivot positions.
    pub fn quotient(&self, s: &Subspace) -> Result<Rep> {
        let f = &self.field;
        let n = self.dim;
        let mut is_pivot = vec![false; n];
        for &p in s.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let cols: Vec<Vec<F>> = free
                    .iter()
                    .map(|&c| {
                        let mut v = g.col(c);
                        s.reduce(f, &mut v);
                        free.iter().map(|&i| v[i]).collect()
                    })
                    .collect();
                Mat::from_cols(free.len(), &cols)
            })
            .collect();
        Ok(Self::new_unchecked(&self.group, f, free.len(), gens))
    }

    /// Conjugate representation `J rho J^-1`.
    pub fn conjugate_by(&self, j: &Mat) -> Result<Rep> {
        let f = &self.field;
        let ji = j.inverse(f)?;
        let gens = self.gens.iter().map(|g| j.mul(f, g).mul(f, &ji)).collect();
        Ok(Self::new_unchecked(&self.group, f, self.dim, gens))
    }

    /// Same matrices on a different (equal-order) carrier, e.g. after
    /// re-expressing the group; `gens` of the new carrier must correspond.
    pub fn with_group(&self, group: &Subgroup, gens: Vec<Mat>) -> Rep {
        Self::new_unchecked(group, &self.field, self.dim, gens)
    }

    /// Traces at the given elements.
    pub fn traces(&self, elems: &[Elt]) -> Result<Vec<F>> {
        elems
            .iter()
            .map(|&e| Ok(self.image(e)?.trace(&self.field)))
            .collect()
    }

    /// Tensor product.
    pub fn tensor(&self, other: &Rep) -> Result<Rep> {
        if self.group != other.group || self.field != other.field {
            return Err(Error::Precondition("tensor of representations of different groups".into()));
        }
        let f = &self.field;
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a.kron(f, b))
            .collect();
        Ok(Self::new_unchecked(&self.group, f, self.dim * other.dim, gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::matrix::spin;

    #[test]
    fn regular_rep_is_a_homomorphism() {
        let g = library::symmetric(3);
        let x = Subgroup::whole(&g).unwrap();
        let f = Field::prime(3).unwrap();
        let r = Rep::regular(&x, &f).unwrap();
        assert_eq!(r.dim(), 6);
        r.verify(1000, 1).unwrap();
        assert!(r.image(0).unwrap().is_identity());
    }

    #[test]
    fn sub_and_quotient_dimensions() {
        let g = library::symmetric(3);
        let x = Subgroup::whole(&g).unwrap();
        let f = Field::prime(3).unwrap();
        let r = Rep::regular(&x, &f).unwrap();
        let s = spin(&f, 6, r.gens(), &[vec![1; 6]]);
        assert_eq!(s.dim(), 1);
        let sub = r.sub(&s).unwrap();
        let quo = r.quotient(&s).unwrap();
        assert_eq!(sub.dim() + quo.dim(), 6);
        sub.verify(100, 2).unwrap();
        quo.verify(100, 3).unwrap();
        assert!(sub.gens().iter().all(|m| m.is_identity()));
    }

    #[test]
    fn bad_images_are_caught() {
        let g = library::cyclic(3);
        let x = Subgroup::whole(&g).unwrap();
        let f = Field::prime(5).unwrap();
        // 2 has order 4 mod 5, not dividing 3
        let r = Rep::linear(&x, &f, &[2]).unwrap();
        assert!(r.verify(100, 0).is_err());
        assert!(Rep::linear(&x, &f, &[0]).is_err());
    }
}
