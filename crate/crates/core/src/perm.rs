//! Permutations of `{0, .., n-1}`.
//!
//! Products compose as functions: `(a * b)(i) = a(b(i))`, so `b` is applied
//! first. Matrix representations follow the same convention, which keeps
//! `rho(a * b) = rho(a) rho(b)` for column-vector actions.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u32]>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::MalformedPermutation(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    n
                )));
            }
            if seen[x] {
                return Err(Error::MalformedPermutation(format!(
                    "image {} repeated",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    /// Builds a permutation from 1-based images as used in group files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(Error::MalformedPermutation("image 0 in 1-based list".into()));
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                let y = c[(i + 1) % c.len()];
                if x as usize >= degree || y as usize >= degree {
                    return Err(Error::MalformedPermutation("cycle point out of range".into()));
                }
                img[x as usize] = y;
            }
        }
        Self::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self * other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv.into_boxed_slice())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn order(&self) -> u64 {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = crate::arith::lcm(ord, len);
        }
        ord
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        let mut v = self.0.to_vec();
        v.extend(self.0.len() as u32..degree as u32);
        Perm(v.into_boxed_slice())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
