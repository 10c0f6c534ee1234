//! Deterministic Schreier-Sims: base and strong generating set, group order
//! and membership testing without enumerating elements.

use crate::perm::Perm;

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    orbit: Vec<usize>,
    // transversal[b] maps the base point to b
    transversal: Vec<Option<Perm>>,
}

#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            if g.is_identity() {
                continue;
            }
            if chain.base().iter().all(|&b| g.apply(b) == b) {
                let b = first_moved(g).expect("non-identity");
                chain.levels.push(Level {
                    base: b,
                    orbit: Vec::new(),
                    transversal: Vec::new(),
                });
            }
            chain.strong.push(g.clone());
        }
        for i in 0..chain.levels.len() {
            chain.rebuild_level(i);
        }
        chain.complete();
        chain
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, _) = self.sift(g, 0);
        h.is_identity()
    }

    fn level_gens(&self, i: usize) -> Vec<&Perm> {
        let base: Vec<usize> = self.levels[..i].iter().map(|l| l.base).collect();
        self.strong
            .iter()
            .filter(|s| base.iter().all(|&b| s.apply(b) == b))
            .collect()
    }

    fn rebuild_level(&mut self, i: usize) {
        let gens: Vec<Perm> = self.level_gens(i).into_iter().cloned().collect();
        let b = self.levels[i].base;
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[b] = Some(Perm::identity(self.degree));
        let mut orbit = vec![b];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            let ux = transversal[x].clone().unwrap();
            for s in &gens {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(s.compose(&ux));
                    orbit.push(y);
                }
            }
            k += 1;
        }
        let level = &mut self.levels[i];
        level.orbit = orbit;
        level.transversal = transversal;
    }

    /// Strips `g` through the levels starting at `from`; returns the residue
    /// and the level at which stripping stopped (`levels.len()` if it passed).
    fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for i in from..self.levels.len() {
            let level = &self.levels[i];
            let y = h.apply(level.base);
            match &level.transversal[y] {
                None => return (h, i),
                Some(u) => h = u.inverse().compose(&h),
            }
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let lvl = i - 1;
            let gens: Vec<Perm> = self.level_gens(lvl).into_iter().cloned().collect();
            let orbit = self.levels[lvl].orbit.clone();
            for &x in &orbit {
                let ux = self.levels[lvl].transversal[x].clone().unwrap();
                for s in &gens {
                    let y = s.apply(x);
                    let uy = self.levels[lvl].transversal[y].as_ref().unwrap();
                    let schreier = uy.inverse().compose(&s.compose(&ux));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift(&schreier, lvl + 1);
                    if h.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let b = first_moved(&h).expect("non-identity residue");
                        self.levels.push(Level {
                            base: b,
                            orbit: Vec::new(),
                            transversal: Vec::new(),
                        });
                    }
                    self.strong.push(h);
                    for l in lvl + 1..=j {
                        self.rebuild_level(l);
                    }
                    i = j + 1;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }
}

fn first_moved(g: &Perm) -> Option<usize> {
    (0..g.degree()).find(|&i| g.apply(i) != i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[u32]) -> Perm {
        Perm::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let t = cyc(n, &[0, 1]);
            let c: Vec<u32> = (0..n as u32).collect();
            let chain = StabChain::new(n, &[t, cyc(n, &c)]);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), fact);
        }
    }

    #[test]
    fn membership() {
        // A4 on 4 points
        let chain = StabChain::new(4, &[cyc(4, &[0, 1, 2]), cyc(4, &[1, 2, 3])]);
        assert_eq!(chain.order(), 12);
        assert!(chain.contains(&Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()));
        assert!(!chain.contains(&cyc(4, &[0, 1])));
    }

    #[test]
    fn trivial_group() {
        let chain = StabChain::new(3, &[Perm::identity(3)]);
        assert_eq!(chain.order(), 1);
        assert!(chain.contains(&Perm::identity(3)));
    }
}
