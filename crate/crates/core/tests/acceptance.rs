//! Acceptance runner: one line per criterion, non-zero exit if any fails.

use alperin_core::arith::gcd;
use alperin_core::awc::{iaw_check, triple_equality_check};
use alperin_core::auts::{AutGroup, Automorphism};
use alperin_core::bnpair::{green_fixed_point_check, sl2_data};
use alperin_core::cocycle::{coboundary, cocycle_order, h2_group, verify_cocycle, Cocycle, Violation};
use alperin_core::field::Field;
use alperin_core::group::{Elt, PermutationGroup, ORDER_CAP};
use alperin_core::library;
use alperin_core::matrix::Mat;
use alperin_core::modrep::{fixed_point_module, simple_modules, simple_modules_over, splitting_field};
use alperin_core::projrep::{
    check_equivalence, equivalence, extend_projective, extend_projective_with, finite_order_bound,
    normalize_finite_order, wreath_tensor, ProjRep, WreathParts,
};
use alperin_core::quotient::normalized_section;
use alperin_core::report::{run_battery, BatteryConfig, BatteryReport};
use alperin_core::subgroup::{derived, sylow, Subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn whole(g: &PermutationGroup) -> Subgroup {
    Subgroup::whole(g).expect("enumerable")
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn default_battery() -> std::result::Result<BatteryReport, String> {
    let dir = data_dir().join("battery");
    let text = ok(std::fs::read_to_string(dir.join("default.json")))?;
    let cfg = ok(BatteryConfig::parse(&text))?;
    Ok(run_battery(&cfg, &dir, ORDER_CAP))
}

fn battery_counts() -> Check {
    let r = default_battery()?;
    ensure!(r.entries.len() >= 20, "only {} battery entries", r.entries.len());
    for e in &r.entries {
        let rep = e
            .report
            .as_ref()
            .ok_or_else(|| format!("{} p={}: {:?}", e.group, e.prime, e.error))?;
        ensure!(rep.equal, "{} p={}: |IBr| {} != |Alp| {}", e.group, e.prime, rep.counts.ibr, rep.counts.alp);
        ensure!(rep.per_nu_equal, "{} p={}: counts differ on a central character", e.group, e.prime);
    }
    Ok(())
}

/// Order of `H^2(A, Z/m)` for `A = prod Z/n_i` from universal coefficients:
/// `H_1 = A`, `H_2 = prod_{i<j} Z/gcd(n_i, n_j)`.
fn h2_abelian_oracle(ns: &[u64], m: u64) -> u64 {
    let mut order: u64 = ns.iter().map(|&n| gcd(n, m)).product();
    for i in 0..ns.len() {
        for j in i + 1..ns.len() {
            order *= gcd(gcd(ns[i], ns[j]), m);
        }
    }
    order
}

fn cocycle_algebra() -> Check {
    // cocycles built from coboundaries and from a projective rep verify
    let s3 = whole(&library::symmetric(3));
    let f: Vec<u64> = vec![0, 3, 1, 4, 1, 5];
    ok(verify_cocycle(&ok(coboundary(&s3, 6, &f))?).map_err(|v| format!("{v:?}")))?;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s4 = whole(&library::symmetric(4));
    let n = s4.elements().len();
    for _ in 0..100 {
        let m = rng.gen_range(2..13u64);
        let mut a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        let mut b: Vec<u64> = (0..n).map(|_| rng.gen_range(0..m)).collect();
        a[0] = 0;
        b[0] = 0;
        let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % m).collect();
        let lhs = ok(coboundary(&s4, m, &sum))?;
        let rhs = ok(ok(coboundary(&s4, m, &a))?.add(&ok(coboundary(&s4, m, &b))?))?;
        ensure!(lhs == rhs, "coboundary is not additive for m={m}");
    }

    for n in 1..=12usize {
        let c = whole(&library::cyclic(n));
        for m in 1..=12u64 {
            let h = ok(h2_group(&c, m))?;
            let order: u64 = h.iter().product();
            let expect = h2_abelian_oracle(&[n as u64], m);
            ensure!(order == expect, "|H^2(C{n}, Z/{m})| = {order}, expected {expect}");
        }
    }
    let v4 = whole(&ok(library::direct_product(&library::cyclic(2), &library::cyclic(2)))?);
    let h = ok(h2_group(&v4, 2))?;
    ensure!(!h.is_empty(), "H^2(C2 x C2, Z/2) came out trivial");
    let order: u64 = h.iter().product();
    ensure!(order == h2_abelian_oracle(&[2, 2], 2), "|H^2(C2 x C2, Z/2)| = {order}");
    Ok(())
}

/// Extends `v` from `x` to `g` twice with different transversals and checks
/// restriction, equivalence and the finite-order normalization.
fn check_extension(v: &ProjRep, x: &Subgroup, g: &Subgroup) -> Check {
    let ext = ok(extend_projective(v, g))?;
    ok(ext.verify())?;
    for &e in x.elements() {
        ensure!(ext.at(e) == v.at(e), "extension changes the value at element {e}");
    }
    let sec = ok(normalized_section(g, x))?;
    let alt: Vec<Elt> = (0..sec.reps.len())
        .map(|c| {
            if c == 0 {
                0
            } else {
                *g.elements().iter().rev().find(|&&e| sec.coset_of[e] == c).unwrap()
            }
        })
        .collect();
    let ext2 = ok(extend_projective_with(v, g, &alt, true))?;
    let eq = ok(equivalence(&ext, &ext2))?.ok_or("extensions over two transversals are not equivalent")?;
    ensure!(ok(check_equivalence(&ext, &ext2, &eq.j))?, "equivalence witness does not check");
    let n = ok(finite_order_bound(&ext, x))?;
    let nf = ok(normalize_finite_order(&ext, x, n))?;
    ok(nf.verify())?;
    let ord = cocycle_order(nf.cocycle());
    ensure!(n % ord == 0, "normalized cocycle order {ord} does not divide {n}");
    Ok(())
}

fn extension_suite() -> Check {
    let s5 = whole(&library::symmetric(5));
    let a5 = derived(&s5);
    let v4 = ok(simple_modules(&a5, 2, 0))?
        .into_iter()
        .find(|m| m.dim() == 4)
        .ok_or("no 4-dimensional module for A5 in characteristic 2")?;
    check_extension(&ProjRep::from_rep(&v4), &a5, &s5)?;

    let g = whole(&library::sl2_ext(5));
    let x = derived(&g);
    ensure!(x.order() == 120, "derived subgroup of SL(2,5).2 has order {}", x.order());
    let f = ok(splitting_field(&x, 5))?;
    let nat = ok(simple_modules_over(&x, &f, 0))?
        .into_iter()
        .find(|m| m.dim() == 2)
        .ok_or("no 2-dimensional module for SL(2,5)")?;
    check_extension(&ProjRep::from_rep(&nat), &x, &g)
}

/// `alpha_n(a sigma, a' sigma') = sum_i alpha(a_i, a'_{sigma^-1(i)})`,
/// computed from the block decomposition directly.
fn wreath_oracle(alpha: &Cocycle, parts: &WreathParts, e: Elt, e2: Elt) -> u64 {
    let (a, sigma) = &parts.parts[e];
    let a2 = &parts.parts[e2].0;
    (0..sigma.len())
        .map(|i| {
            let j = sigma.iter().position(|&s| s == i).unwrap();
            alpha.get(a[i], a2[j])
        })
        .sum::<u64>()
        % alpha.modulus()
}

fn check_wreath(p1: &ProjRep, n: usize) -> Check {
    let (p, parts) = ok(wreath_tensor(p1, n))?;
    ensure!(p.dim() == p1.dim().pow(n as u32), "wreath tensor has dimension {}", p.dim());
    let el = p.group().elements().to_vec();
    for &e in &el {
        for &e2 in &el {
            ensure!(
                p.cocycle().get(e, e2) == wreath_oracle(p1.cocycle(), &parts, e, e2),
                "cocycle differs from the product formula at ({e}, {e2}), n = {n}"
            );
        }
    }
    Ok(())
}

fn pauli() -> std::result::Result<ProjRep, String> {
    let g = ok(library::direct_product(&library::cyclic(2), &library::cyclic(2)))?;
    let x = whole(&g);
    let f = Field::prime(5).unwrap();
    let a = ok(Mat::from_rows(vec![vec![1, 0], vec![0, 4]]))?;
    let b = ok(Mat::from_rows(vec![vec![0, 1], vec![1, 0]]))?;
    let t = ok(g.table())?;
    let table: Vec<Mat> = x
        .elements()
        .iter()
        .map(|&e| {
            let p = t.perm(e);
            let mut m = Mat::identity(2);
            if p.apply(0) != 0 {
                m = m.mul(&f, &a);
            }
            if p.apply(2) != 2 {
                m = m.mul(&f, &b);
            }
            m
        })
        .collect();
    ok(ProjRep::from_table(&x, &f, table))
}

fn wreath_suite() -> Check {
    let c2 = whole(&library::cyclic(2));
    let f3 = Field::prime(3).unwrap();
    let sign = ok(ProjRep::from_table(&c2, &f3, vec![Mat::identity(1), Mat::scalar(1, 2)]))?;
    let v = pauli()?;
    ensure!(!v.is_linear(), "Pauli representation came out linear");
    let s3 = whole(&library::symmetric(3));
    let f7 = Field::prime(7).unwrap();
    let two = ok(simple_modules_over(&s3, &f7, 0))?
        .into_iter()
        .find(|m| m.dim() == 2)
        .ok_or("no 2-dimensional module for S3")?;
    let s3p = ok(ProjRep::from_rep(&two).scaled(&[0, 1, 2, 3, 4, 5]))?;
    for p1 in [&sign, &v, &s3p] {
        for n in [2, 3] {
            check_wreath(p1, n)?;
        }
    }
    Ok(())
}

fn triple_instance() -> Check {
    let s5 = whole(&library::symmetric(5));
    let x = derived(&s5);
    let f = ok(splitting_field(&s5, 2))?;
    let chi = ok(simple_modules_over(&x, &f, 0))?
        .into_iter()
        .find(|m| m.dim() == 4)
        .ok_or("no 4-dimensional module for A5")?;
    let q = ok(sylow(&x, 2))?;
    let psi = ok(fixed_point_module(&chi, &q))?;
    let y = psi.group().clone();
    let r = ok(triple_equality_check(&s5, &x, &y, &chi, &psi, Some(&q), 0))?;
    ensure!(r.applicable, "hypotheses fail: {:?}", r.hypotheses);
    let lemma = r.lemma.as_ref().ok_or("no lift constructed")?;
    ensure!(lemma.all(), "lift clauses: {lemma:?}");
    ensure!(r.r_identities && r.s_identities, "R/S identities fail");
    ensure!(r.cocycles_agree, "cocycles disagree on the common subgroup");
    ensure!(r.equal, "counts differ: {} vs {}", r.count_g, r.count_n);
    Ok(())
}

fn sl2_fixed_points() -> Check {
    for p in [2, 3, 5, 7] {
        let d = ok(sl2_data(p))?;
        let c = ok(green_fixed_point_check(&d, 0))?;
        ensure!(c.report.passed(), "p = {p}: {:?}", c.report);
        ensure!(c.report.admissible_pairs == c.report.ibr_count, "p = {p}: pair count");
    }
    Ok(())
}

fn battery_determinism() -> Check {
    let a = ok(serde_json::to_string(&default_battery()?))?;
    let b = ok(serde_json::to_string(&default_battery()?))?;
    ensure!(a == b, "battery reports differ between runs");
    Ok(())
}

fn negative_controls() -> Check {
    let d = ok(sl2_data(3))?;
    let c = ok(green_fixed_point_check(&d, 0))?;
    let aut = ok(AutGroup::full(&d.g))?;
    let gens: Vec<Automorphism> = ok(aut.group.table())?
        .gens()
        .iter()
        .map(|&e| aut.automorphism(e))
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut bad = c.omega.clone();
    let k = bad.pairs.len();
    let (i, j) = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .find(|&(i, j)| c.ibr.central[bad.pairs[i].0] != c.ibr.central[bad.pairs[j].0])
        .ok_or("no two central characters to swap across")?;
    let w = bad.pairs[i].1;
    bad.pairs[i].1 = bad.pairs[j].1;
    bad.pairs[j].1 = w;
    let r = ok(iaw_check(&c.ibr, &c.alp, &bad, &gens, None))?;
    ensure!(!r.partition.passed, "corrupted bijection passes the block clause");
    ensure!(r.partition.witness.is_some(), "block clause failed without a witness");

    let s3 = whole(&library::symmetric(3));
    let n = s3.elements().len();
    let mut t = vec![0; n * n];
    t[1] = 1; // alpha(1, g) = 1
    let alpha = ok(Cocycle::from_table(&s3, 2, t))?;
    ensure!(
        matches!(verify_cocycle(&alpha), Err(Violation::Normalization { .. })),
        "non-normalized table passes"
    );
    let mut t = vec![0; n * n];
    t[n + 1] = 1;
    let beta = ok(Cocycle::from_table(&s3, 2, t))?;
    match verify_cocycle(&beta) {
        Err(Violation::Identity { g1, g2, g3 }) => {
            let tab = ok(s3.parent().table())?;
            let pos = |e: Elt| s3.position(e).unwrap();
            let lhs = (beta.get(g1, g2) + beta.get(tab.mul(g1, g2), g3)) % 2;
            let rhs = (beta.get(g2, g3) + beta.get(g1, tab.mul(g2, g3))) % 2;
            ensure!(lhs != rhs, "reported triple ({}, {}, {}) satisfies the identity", pos(g1), pos(g2), pos(g3));
        }
        other => return Err(format!("corrupted cocycle gives {other:?}")),
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("battery counts agree per central character", battery_counts),
        ("cocycle algebra and H^2 orders", cocycle_algebra),
        ("projective extension suite", extension_suite),
        ("wreath product cocycle formula", wreath_suite),
        ("S5/A5 triple with lifted representations", triple_instance),
        ("SL(2,p) fixed-point bijection for p = 2, 3, 5, 7", sl2_fixed_points),
        ("battery output is reproducible", battery_determinism),
        ("negative controls are rejected", negative_controls),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(()) => println!("PASS criterion {}: {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
