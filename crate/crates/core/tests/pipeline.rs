use alperin_core::awc::awc_check;
use alperin_core::io::{group_to_json, parse_group, parse_rep, ProjRepFile, RepFile};
use alperin_core::library;
use alperin_core::modrep::simple_modules;
use alperin_core::ordchar::defect_zero_count;
use alperin_core::projrep::{extend_projective, ProjRep};
use alperin_core::subgroup::{derived, Subgroup};
use std::path::PathBuf;

fn group_file(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/groups").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn data_groups_match_the_library() {
    for (file, g) in [
        ("s5.json", library::symmetric(5)),
        ("a5.json", library::alternating(5)),
        ("q8.json", library::quaternion()),
        ("sl2_5.json", library::sl2(5)),
    ] {
        let parsed = parse_group(&group_file(file)).unwrap();
        assert_eq!(parsed.order(), g.order(), "{file}");
        assert!(parse_group(&group_to_json(&parsed)).unwrap().same_as(&parsed));
    }
}

#[test]
fn counts_from_a_group_file() {
    let g = parse_group(&group_file("a5.json")).unwrap();
    let x = Subgroup::whole(&g).unwrap();
    for (p, ibr) in [(2, 4), (3, 4), (5, 3)] {
        let r = awc_check(&x, p, 0).unwrap();
        assert_eq!(r.ibr_count, ibr, "p = {p}");
        assert!(r.equal && r.per_nu_equal, "p = {p}");
    }
    // defect zero characters are counted by weights with trivial radical
    let r = awc_check(&x, 5, 0).unwrap();
    let trivial = r.radicals.iter().find(|s| s.order == 1).map_or(0, |s| s.weights);
    assert_eq!(trivial, defect_zero_count(&g, 5).unwrap().0);
}

#[test]
fn extension_survives_the_file_formats() {
    let s5 = Subgroup::whole(&parse_group(&group_file("s5.json")).unwrap()).unwrap();
    let a5 = derived(&s5);
    let v4 = simple_modules(&a5, 2, 0).unwrap().into_iter().find(|m| m.dim() == 4).unwrap();
    let v4 = parse_rep(&serde_json::to_string(&RepFile::from_rep(&v4)).unwrap(), &a5).unwrap();
    let ext = extend_projective(&ProjRep::from_rep(&v4), &s5).unwrap();
    let text = serde_json::to_string(&ProjRepFile::from_projrep(&ext)).unwrap();
    let back: ProjRepFile = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_projrep(&s5).unwrap(), ext);
}
