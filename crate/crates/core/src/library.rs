//! Named small groups and product constructions.

use crate::error::Result;
use crate::group::PermutationGroup;
use crate::perm::Perm;

fn cycle(n: usize, pts: &[u32]) -> Perm {
    Perm::from_cycles(n, &[pts]).expect("valid cycle")
}

pub fn cyclic(n: usize) -> PermutationGroup {
    if n == 1 {
        return PermutationGroup::trivial().with_name("C1");
    }
    let pts: Vec<u32> = (0..n as u32).collect();
    PermutationGroup::new(n, vec![cycle(n, &pts)], Some(format!("C{n}"))).expect("cyclic")
}

pub fn symmetric(n: usize) -> PermutationGroup {
    if n == 1 {
        return PermutationGroup::trivial().with_name("S1");
    }
    let pts: Vec<u32> = (0..n as u32).collect();
    let gens = if n == 2 {
        vec![cycle(2, &[0, 1])]
    } else {
        vec![cycle(n, &[0, 1]), cycle(n, &pts)]
    };
    PermutationGroup::new(n, gens, Some(format!("S{n}"))).expect("symmetric")
}

pub fn alternating(n: usize) -> PermutationGroup {
    assert!(n >= 3);
    let gens = (0..n - 2)
        .map(|i| cycle(n, &[i as u32, i as u32 + 1, i as u32 + 2]))
        .collect();
    PermutationGroup::new(n, gens, Some(format!("A{n}"))).expect("alternating")
}

/// Dihedral group of the given order (symmetries of a regular order/2-gon).
pub fn dihedral(order: usize) -> PermutationGroup {
    let n = order / 2;
    let pts: Vec<u32> = (0..n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermutationGroup::new(
        n,
        vec![cycle(n, &pts), Perm::from_images(refl).unwrap()],
        Some(format!("D{order}")),
    )
    .expect("dihedral")
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion() -> PermutationGroup {
    let i = Perm::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]).unwrap();
    let j = Perm::from_cycles(8, &[&[0, 4, 2, 6], &[1, 7, 3, 5]]).unwrap();
    PermutationGroup::new(8, vec![i, j], Some("Q8".into())).expect("quaternion")
}

/// Nonzero vectors of `F_p^2`, in the order used for `gl2_perm`.
pub fn plane_points(p: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for a in 0..p {
        for b in 0..p {
            if (a, b) != (0, 0) {
                v.push((a, b));
            }
        }
    }
    v
}

/// The permutation of nonzero column vectors induced by a 2x2 matrix
/// `[[a, b], [c, d]]` over `F_p`.
pub fn gl2_perm(p: u64, m: [[u64; 2]; 2]) -> Perm {
    let pts = plane_points(p);
    let index = |(x, y): (u64, u64)| pts.iter().position(|&q| q == (x, y)).unwrap() as u32;
    let imgs = pts
        .iter()
        .map(|&(x, y)| {
            index((
                (m[0][0] * x + m[0][1] * y) % p,
                (m[1][0] * x + m[1][1] * y) % p,
            ))
        })
        .collect();
    Perm::from_images(imgs).expect("invertible matrix")
}

/// `SL(2, p)` acting on the nonzero vectors of `F_p^2`.
pub fn sl2(p: u64) -> PermutationGroup {
    let gens = vec![gl2_perm(p, [[1, 1], [0, 1]]), gl2_perm(p, [[0, 1], [p - 1, 0]])];
    PermutationGroup::new((p * p - 1) as usize, gens, Some(format!("SL(2,{p})"))).expect("SL2")
}

/// `SL(2, p).2`: matrices of determinant +-1, on nonzero vectors.
pub fn sl2_ext(p: u64) -> PermutationGroup {
    let gens = vec![
        gl2_perm(p, [[1, 1], [0, 1]]),
        gl2_perm(p, [[0, 1], [p - 1, 0]]),
        gl2_perm(p, [[p - 1, 0], [0, 1]]),
    ];
    PermutationGroup::new((p * p - 1) as usize, gens, Some(format!("SL(2,{p}).2"))).expect("SL2.2")
}

/// Direct product acting on the disjoint union of the two domains.
pub fn direct_product(a: &PermutationGroup, b: &PermutationGroup) -> Result<PermutationGroup> {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(g.extend(da + db));
    }
    for g in b.generators() {
        let mut imgs: Vec<u32> = (0..da as u32).collect();
        imgs.extend(g.images().iter().map(|&x| x + da as u32));
        gens.push(Perm::from_images(imgs)?);
    }
    let name = match (a.name(), b.name()) {
        (Some(x), Some(y)) => Some(format!("{x}x{y}")),
        _ => None,
    };
    PermutationGroup::new(da + db, gens, name)
}

/// `n`-fold direct power.
pub fn direct_power(a: &PermutationGroup, n: usize) -> Result<PermutationGroup> {
    let mut g = a.clone();
    for _ in 1..n {
        g = direct_product(&g, a)?;
    }
    Ok(g)
}

/// `A wr S_n` acting imprimitively on `n` blocks of `A`'s domain; point
/// `(i, x)` is `i * deg(A) + x`. The block permutation `sigma` moves point
/// `(i, x)` to `(sigma(i), x)`; base element `(a_1, .., a_n)` moves `(i, x)`
/// to `(i, a_i(x))`.
pub fn wreath_product(a: &PermutationGroup, n: usize) -> Result<PermutationGroup> {
    let d = a.degree();
    let deg = d * n;
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut imgs: Vec<u32> = (0..deg as u32).collect();
        for x in 0..d {
            imgs[x] = g.apply(x) as u32;
        }
        gens.push(Perm::from_images(imgs)?);
    }
    let block_perm = |sigma: &[usize]| -> Result<Perm> {
        let mut imgs = vec![0u32; deg];
        for i in 0..n {
            for x in 0..d {
                imgs[i * d + x] = (sigma[i] * d + x) as u32;
            }
        }
        Perm::from_images(imgs)
    };
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(block_perm(&swap)?);
    }
    if n >= 3 {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(block_perm(&rot)?);
    }
    let name = a.name().map(|x| format!("{x}wrS{n}"));
    PermutationGroup::new(deg, gens, name)
}

/// Looks up a builtin group by name (case-insensitive).
pub fn by_name(name: &str) -> Option<PermutationGroup> {
    let lower = name.to_ascii_lowercase();
    let g = match lower.as_str() {
        "q8" => quaternion(),
        "c2xc2" | "v4" => direct_product(&cyclic(2), &cyclic(2)).ok()?.with_name("C2xC2"),
        _ => {
            if let Some(rest) = lower.strip_prefix("sl(2,") {
                let p: u64 = rest.trim_end_matches(')').parse().ok()?;
                if !crate::arith::is_prime(p) || p > 13 {
                    return None;
                }
                return Some(sl2(p));
            }
            let (head, tail) = lower.split_at(1);
            let n: usize = tail.parse().ok()?;
            match head {
                "c" if n >= 1 => cyclic(n),
                "s" if (1..=8).contains(&n) => symmetric(n),
                "a" if (3..=8).contains(&n) => alternating(n),
                "d" if n >= 4 && n.is_multiple_of(2) => dihedral(n),
                _ => return None,
            }
        }
    };
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(6).order(), 6);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(dihedral(8).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(sl2(2).order(), 6);
        assert_eq!(sl2(3).order(), 24);
        assert_eq!(sl2(5).order(), 120);
        assert_eq!(sl2(7).order(), 336);
        assert_eq!(sl2_ext(5).order(), 240);
        assert_eq!(wreath_product(&cyclic(2), 3).unwrap().order(), 48);
        assert_eq!(direct_power(&cyclic(3), 2).unwrap().order(), 9);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let g = quaternion();
        let t = g.table().unwrap();
        let inv = t.elements().filter(|&a| t.element_order(a) == 2).count();
        assert_eq!(inv, 1);
        assert!(!g.is_abelian());
    }

    #[test]
    fn sl2_3_by_element_enumeration() {
        // SL(2,3) as the permutation action on its own 24 elements
        let g = sl2(3);
        let t = g.table().unwrap();
        let regular: Vec<Perm> = g
            .generators()
            .iter()
            .map(|s| {
                let a = t.index_of(s).unwrap();
                Perm::from_images(t.elements().map(|x| t.mul(a, x) as u32).collect()).unwrap()
            })
            .collect();
        let r = PermutationGroup::new(24, regular, None).unwrap();
        assert_eq!(r.order(), 24);
    }

    #[test]
    fn lookup() {
        assert_eq!(by_name("S4").unwrap().order(), 24);
        assert_eq!(by_name("sl(2,5)").unwrap().order(), 120);
        assert_eq!(by_name("C2xC2").unwrap().order(), 4);
        assert!(by_name("X9").is_none());
    }
}
