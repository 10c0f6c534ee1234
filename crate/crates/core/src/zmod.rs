//! Linear algebra over `Z/m`, done one prime power at a time.
//!
//! Over `Z/p^e` every element is a unit times a power of `p`, so Smith
//! normal form works by choosing pivots of least valuation.

use crate::arith;

fn valuation(a: u64, p: u64, e: u32) -> u32 {
    if a == 0 {
        return e;
    }
    let mut v = 0;
    let mut a = a;
    while a.is_multiple_of(p) {
        a /= p;
        v += 1;
    }
    v
}

struct Local {
    p: u64,
    e: u32,
    q: u64,
}

impl Local {
    fn new(p: u64, e: u32) -> Self {
        Local {
            p,
            e,
            q: p.pow(e),
        }
    }

    fn unit_inv(&self, u: u64) -> u64 {
        arith::inv_mod(u % self.q, self.q).expect("unit")
    }

    /// Splits `a = p^v u`, returning `(v, u)`.
    fn split(&self, a: u64) -> (u32, u64) {
        let v = valuation(a, self.p, self.e);
        if v == self.e {
            (v, 0)
        } else {
            (v, a / self.p.pow(v))
        }
    }
}

/// Result of `P A Q = D` over `Z/p^e`.
struct Snf {
    /// valuations of the diagonal entries, one per pivot
    vals: Vec<u32>,
    q: Vec<Vec<u64>>,
    qinv: Vec<Vec<u64>>,
}

/// Smith normal form with column transforms tracked. Row operations are
/// applied to `rhs` as well when given.
fn local_snf(
    l: &Local,
    mut a: Vec<Vec<u64>>,
    ncols: usize,
    track: bool,
    mut rhs: Option<&mut Vec<u64>>,
) -> Snf {
    let m = l.q;
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x %= m;
        }
    }
    let ident = |n: usize| -> Vec<Vec<u64>> {
        (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect()
    };
    let (mut q, mut qinv) = if track {
        (ident(ncols), ident(ncols))
    } else {
        (Vec::new(), Vec::new())
    };
    let nrows = a.len();
    let mut vals = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // least valuation in the remaining block
        let mut best: Option<(u32, usize, usize)> = None;
        'scan: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let v = valuation(x, l.p, l.e);
                    if best.is_none_or(|b| v < b.0) {
                        best = Some((v, i, j));
                        if v == 0 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        let Some((v, pi, pj)) = best else { break };
        a.swap(t, pi);
        if let Some(r) = rhs.as_deref_mut() {
            r.swap(t, pi);
        }
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            if track {
                for row in q.iter_mut() {
                    row.swap(t, pj);
                }
                qinv.swap(t, pj);
            }
        }
        let (_, u) = l.split(a[t][t]);
        let ui = l.unit_inv(u);
        for x in a[t].iter_mut() {
            *x = *x * ui % m;
        }
        if let Some(r) = rhs.as_deref_mut() {
            r[t] = r[t] * ui % m;
        }
        let pv = l.p.pow(v);
        let pivot_row = a[t].clone();
        for i in t + 1..nrows {
            let x = a[i][t];
            if x == 0 {
                continue;
            }
            let c = x / pv;
            for (y, &z) in a[i].iter_mut().zip(&pivot_row) {
                *y = (*y + m - c * z % m) % m;
            }
            if let Some(r) = rhs.as_deref_mut() {
                r[i] = (r[i] + m - c * r[t] % m) % m;
            }
        }
        for j in t + 1..ncols {
            let x = a[t][j];
            if x == 0 {
                continue;
            }
            let c = x / pv;
            a[t][j] = 0;
            if track {
                // col_j -= c col_t ; inverse: row_t += c row_j
                for row in q.iter_mut() {
                    row[j] = (row[j] + m - c * row[t] % m) % m;
                }
                let rj = qinv[j].clone();
                for (y, &z) in qinv[t].iter_mut().zip(&rj) {
                    *y = (*y + c * z) % m;
                }
            }
        }
        vals.push(v);
        t += 1;
    }
    Snf { vals, q, qinv }
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], modulus: u64) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |s, (&a, &b)| (s + a * b % modulus) % modulus)
        })
        .collect()
}

fn crt_pair(a: u64, m: u64, b: u64, n: u64) -> u64 {
    // x = a mod m, x = b mod n, gcd(m, n) = 1
    if m == 1 {
        return b % n;
    }
    let inv = arith::inv_mod(m % n, n).unwrap_or(0);
    let k = ((b + n - a % n) % n) * inv % n;
    a + m * k
}

/// Solves `A x = b` over `Z/m`; rows of `a` have `ncols` entries.
pub fn solve(a: &[Vec<u64>], b: &[u64], ncols: usize, m: u64) -> Option<Vec<u64>> {
    let mut x = vec![0u64; ncols];
    let mut modulus = 1u64;
    for (p, e) in arith::factorize(m) {
        let l = Local::new(p, e);
        let mut rhs: Vec<u64> = b.iter().map(|&y| y % l.q).collect();
        let snf = local_snf(&l, a.to_vec(), ncols, true, Some(&mut rhs));
        let mut y = vec![0u64; ncols];
        for (i, &v) in snf.vals.iter().enumerate() {
            if v == l.e {
                if rhs[i] != 0 {
                    return None;
                }
                continue;
            }
            let pv = p.pow(v);
            if !rhs[i].is_multiple_of(pv) {
                return None;
            }
            y[i] = rhs[i] / pv;
        }
        if rhs[snf.vals.len()..].iter().any(|&r| r != 0) {
            return None;
        }
        let xl = mat_vec(&snf.q, &y, l.q);
        for (xi, &v) in x.iter_mut().zip(&xl) {
            *xi = crt_pair(*xi, modulus, v, l.q);
        }
        modulus *= l.q;
    }
    Some(x)
}

/// Invariant factors (ascending, each > 1) of `(Z/m)^n / span(rows)`.
pub fn cokernel_invariants(rows: &[Vec<u64>], n: usize, m: u64) -> Vec<u64> {
    let mut elementary = Vec::new();
    for (p, e) in arith::factorize(m) {
        let l = Local::new(p, e);
        let snf = local_snf(&l, rows.to_vec(), n, false, None);
        for &v in &snf.vals {
            if v > 0 {
                elementary.push((p, v));
            }
        }
        for _ in snf.vals.len()..n {
            elementary.push((p, e));
        }
    }
    invariant_factors(&elementary)
}

/// Invariant factors of `ker(C) / span(gens)` inside `(Z/m)^n`, where the
/// kernel is that of the linear forms `constraints` and every generator is
/// assumed to lie in the kernel.
pub fn subquotient_invariants(
    constraints: &[Vec<u64>],
    gens: &[Vec<u64>],
    n: usize,
    m: u64,
) -> Vec<u64> {
    let mut elementary = Vec::new();
    for (p, e) in arith::factorize(m) {
        let l = Local::new(p, e);
        let snf = local_snf(&l, constraints.to_vec(), n, true, None);
        // kernel coordinates: y = Qinv x; y_i in p^(e - v_i) Z/p^e
        let mut orders = vec![e; n];
        for (i, &v) in snf.vals.iter().enumerate() {
            orders[i] = v;
        }
        let mut rel: Vec<Vec<u64>> = Vec::new();
        for (i, &o) in orders.iter().enumerate() {
            if o < e {
                let mut r = vec![0u64; n];
                r[i] = p.pow(o) % l.q;
                rel.push(r);
            }
        }
        for g in gens {
            let gl: Vec<u64> = g.iter().map(|&x| x % l.q).collect();
            let y = mat_vec(&snf.qinv, &gl, l.q);
            let z: Vec<u64> = y
                .iter()
                .zip(&orders)
                .map(|(&yi, &o)| {
                    let shift = p.pow(e - o);
                    debug_assert_eq!(yi % shift, 0, "generator outside the kernel");
                    yi / shift
                })
                .collect();
            rel.push(z);
        }
        let s2 = local_snf(&l, rel, n, false, None);
        for &v in &s2.vals {
            if v > 0 {
                elementary.push((p, v));
            }
        }
        for _ in s2.vals.len()..n {
            elementary.push((p, e));
        }
    }
    invariant_factors(&elementary)
}

/// Combines elementary divisors `p^v` into ascending invariant factors.
pub fn invariant_factors(elementary: &[(u64, u32)]) -> Vec<u64> {
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &(p, v) in elementary {
        if v > 0 {
            by_prime.entry(p).or_default().push(v);
        }
    }
    let len = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for (p, mut vs) in by_prime {
        vs.sort_unstable_by(|a, b| b.cmp(a));
        for (i, v) in vs.into_iter().enumerate() {
            out[len - 1 - i] *= p.pow(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_of_diagonal() {
        // Z/12 ^ 2 / <(2, 0), (0, 3)> = Z/2 x Z/3 = Z/6
        let inv = cokernel_invariants(&[vec![2, 0], vec![0, 3]], 2, 12);
        assert_eq!(inv, vec![6]);
        let inv = cokernel_invariants(&[vec![2, 0]], 2, 4);
        assert_eq!(inv, vec![2, 4]);
    }

    #[test]
    fn solve_small_systems() {
        // 2x + 3y = 1 over Z/6
        let x = solve(&[vec![2, 3]], &[1], 2, 6).unwrap();
        assert_eq!((2 * x[0] + 3 * x[1]) % 6, 1);
        // 2x = 1 over Z/4 has no solution
        assert!(solve(&[vec![2]], &[1], 1, 4).is_none());
        // 2x = 2 over Z/4
        let x = solve(&[vec![2]], &[2], 1, 4).unwrap();
        assert_eq!(2 * x[0] % 4, 2);
    }

    #[test]
    fn subquotient_counts() {
        // ker of x + y = 0 in (Z/4)^2 is Z/4 spanned by (1, 3); mod <(2, 2)> gives Z/2
        let inv = subquotient_invariants(&[vec![1, 1]], &[vec![2, 2]], 2, 4);
        assert_eq!(inv, vec![2]);
        let inv = subquotient_invariants(&[vec![1, 1]], &[], 2, 4);
        assert_eq!(inv, vec![4]);
    }

    #[test]
    fn combines_primes() {
        assert_eq!(invariant_factors(&[(2, 1), (2, 2), (3, 1)]), vec![2, 12]);
    }
}
