//! Permutation groups with an enumerated, canonically ordered element table.
//!
//! Elements are indexed by their position in the lexicographic order of
//! their image tuples. The identity is always index 0.

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::schreier::StabChain;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Largest group order accepted at load time (stabilizer chain only).
pub const ORDER_CAP: u64 = 100_000;
/// Largest group order for which elements are enumerated.
pub const ENUM_CAP: u64 = 10_000;
const MUL_TABLE_CAP: usize = 2048;

pub type Elt = usize;

pub struct ElementTable {
    perms: Vec<Perm>,
    index: HashMap<Perm, u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    mul: Option<Vec<u32>>,
    gens: Vec<Elt>,
    // breadth-first spanning tree: elements in discovery order, each with
    // (parent, generator position) such that elt = gens[pos] * parent
    bfs: Vec<(Elt, Elt, usize)>,
}

impl ElementTable {
    fn build(degree: usize, generators: &[Perm]) -> Self {
        let id = Perm::identity(degree);
        let mut found: HashMap<Perm, usize> = HashMap::new();
        let mut list = vec![id.clone()];
        found.insert(id, 0);
        let mut tree: Vec<(usize, usize, usize)> = vec![(0, 0, usize::MAX)];
        let mut k = 0;
        while k < list.len() {
            let x = list[k].clone();
            for (pos, s) in generators.iter().enumerate() {
                let y = s.compose(&x);
                if !found.contains_key(&y) {
                    found.insert(y.clone(), list.len());
                    tree.push((list.len(), k, pos));
                    list.push(y);
                }
            }
            k += 1;
        }
        // canonical order
        let mut order: Vec<usize> = (0..list.len()).collect();
        order.sort_by(|&a, &b| list[a].cmp(&list[b]));
        let mut rank = vec![0usize; list.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let perms: Vec<Perm> = order.iter().map(|&i| list[i].clone()).collect();
        let index: HashMap<Perm, u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let bfs = tree
            .iter()
            .map(|&(e, parent, pos)| (rank[e], rank[parent], pos))
            .collect();
        let inv = perms.iter().map(|p| index[&p.inverse()]).collect();
        let orders = perms.iter().map(|p| p.order() as u32).collect();
        let gens = generators.iter().map(|g| index[g] as usize).collect();
        let n = perms.len();
        let mul = if n <= MUL_TABLE_CAP {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = index[&perms[a].compose(&perms[b])];
                }
            }
            Some(t)
        } else {
            None
        };
        ElementTable {
            perms,
            index,
            inv,
            orders,
            mul,
            gens,
            bfs,
        }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        match &self.mul {
            Some(t) => t[a * self.perms.len() + b] as usize,
            None => self.index[&self.perms[a].compose(&self.perms[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: Elt) -> Elt {
        self.inv[a] as usize
    }

    /// `a b a^-1`
    #[inline]
    pub fn conj(&self, a: Elt, b: Elt) -> Elt {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn commutator(&self, a: Elt, b: Elt) -> Elt {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: Elt, mut e: u64) -> Elt {
        let mut r = 0;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn perm(&self, a: Elt) -> &Perm {
        &self.perms[a]
    }

    pub fn index_of(&self, p: &Perm) -> Option<Elt> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn element_order(&self, a: Elt) -> u64 {
        self.orders[a] as u64
    }

    pub fn gens(&self) -> &[Elt] {
        &self.gens
    }

    /// Spanning tree `(element, parent, generator position)` in breadth-first
    /// order starting at the identity, with `element = gens[pos] * parent`.
    pub fn bfs(&self) -> &[(Elt, Elt, usize)] {
        &self.bfs
    }

    pub fn elements(&self) -> std::ops::Range<Elt> {
        0..self.perms.len()
    }
}

struct Inner {
    name: Option<String>,
    degree: usize,
    generators: Vec<Perm>,
    order: u64,
    chain: StabChain,
    table: OnceLock<Option<ElementTable>>,
}

#[derive(Clone)]
pub struct PermutationGroup(Arc<Inner>);

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("name", &self.0.name)
            .field("degree", &self.0.degree)
            .field("order", &self.0.order)
            .field("generators", &self.0.generators)
            .finish()
    }
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Perm>, name: Option<String>) -> Result<Self> {
        Self::with_cap(degree, generators, name, ORDER_CAP)
    }

    pub fn with_cap(
        degree: usize,
        generators: Vec<Perm>,
        name: Option<String>,
        cap: u64,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::MalformedPermutation("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::MalformedPermutation(format!(
                    "generator of degree {} in group of degree {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order();
        if order > cap as u128 {
            return Err(Error::CapExceeded {
                what: "group order",
                value: order.min(u64::MAX as u128) as u64,
                cap,
            });
        }
        Ok(PermutationGroup(Arc::new(Inner {
            name,
            degree,
            generators,
            order: order as u64,
            chain,
            table: OnceLock::new(),
        })))
    }

    pub fn trivial() -> Self {
        Self::new(1, Vec::new(), Some("1".into())).expect("trivial group")
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn with_name(&self, name: &str) -> Self {
        
        Self::new(self.0.degree, self.0.generators.clone(), Some(name.to_string()))
            .expect("same group")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.generators
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.0.chain.contains(p)
    }

    pub fn same_as(&self, other: &PermutationGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.degree() == other.degree()
                && self.order() == other.order()
                && other.generators().iter().all(|g| self.contains(g)))
    }

    /// The enumerated element table.
    pub fn table(&self) -> Result<&ElementTable> {
        let t = self.0.table.get_or_init(|| {
            if self.0.order > ENUM_CAP {
                None
            } else {
                Some(ElementTable::build(self.0.degree, &self.0.generators))
            }
        });
        t.as_ref().ok_or(Error::CapExceeded {
            what: "element enumeration",
            value: self.0.order,
            cap: ENUM_CAP,
        })
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .all(|a| g.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> Result<u64> {
        let t = self.table()?;
        Ok(t.elements().fold(1, |e, a| arith::lcm(e, t.element_order(a))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermutationGroup {
        PermutationGroup::new(
            3,
            vec![
                Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
                Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn element_table_is_canonical() {
        let g = s3();
        let t = g.table().unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.perm(0).is_identity());
        for a in 1..t.len() {
            assert!(t.perm(a - 1) < t.perm(a));
        }
        for a in t.elements() {
            assert_eq!(t.mul(a, t.inv(a)), 0);
        }
        for &(e, parent, pos) in t.bfs() {
            if pos != usize::MAX {
                assert_eq!(e, t.mul(t.gens()[pos], parent));
            }
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        let n = 9;
        let t = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
        let c: Vec<u32> = (0..n as u32).collect();
        let c = Perm::from_cycles(n, &[&c]).unwrap();
        let err = PermutationGroup::new(n, vec![t, c], None).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn exponent_of_s3() {
        assert_eq!(s3().exponent().unwrap(), 6);
        assert!(!s3().is_abelian());
    }
}
