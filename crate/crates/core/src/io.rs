//! JSON file formats: groups, matrix representations, cocycle dumps and
//! projective representations, plus report digests.

use crate::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::field::{Field, F};
use crate::group::{PermutationGroup, ORDER_CAP};
use crate::matrix::Mat;
use crate::perm::Perm;
use crate::projrep::{modulus, ProjRep};
use crate::rep::Rep;
use crate::subgroup::Subgroup;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Schema tag carried by every report.
pub const SCHEMA: &str = "alperin-report/1";

fn format_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

/// Permutation group with 1-based generator images.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn from_group(g: &PermutationGroup) -> Self {
        GroupFile {
            name: g.name().map(str::to_string),
            degree: g.degree(),
            generators: g.generators().iter().map(Perm::one_based).collect(),
        }
    }

    pub fn to_group(&self, cap: u64) -> Result<PermutationGroup> {
        let gens = self
            .generators
            .iter()
            .map(|imgs| {
                if imgs.len() != self.degree {
                    return Err(Error::MalformedPermutation(format!(
                        "generator has {} images, degree is {}",
                        imgs.len(),
                        self.degree
                    )));
                }
                Perm::from_one_based(imgs)
            })
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::with_cap(self.degree, gens, self.name.clone(), cap)
    }
}

pub fn parse_group(text: &str) -> Result<PermutationGroup> {
    parse_group_with_cap(text, ORDER_CAP)
}

pub fn parse_group_with_cap(text: &str, cap: u64) -> Result<PermutationGroup> {
    serde_json::from_str::<GroupFile>(text).map_err(format_err)?.to_group(cap)
}

/// Pretty JSON with one generator per line.
pub fn group_to_json(g: &PermutationGroup) -> String {
    let file = GroupFile::from_group(g);
    let mut out = String::from("{\n");
    if let Some(n) = &file.name {
        out += &format!("  \"name\": {},\n", serde_json::to_string(n).expect("string"));
    }
    out += &format!("  \"degree\": {},\n  \"generators\": [", file.degree);
    let gens: Vec<String> = file
        .generators
        .iter()
        .map(|v| format!("\n    {}", serde_json::to_string(v).expect("list")))
        .collect();
    out += &gens.join(",");
    out += if gens.is_empty() { "]\n}" } else { "\n  ]\n}" };
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    /// defining polynomial, constant term first
    pub poly: Vec<u32>,
}

impl FieldSpec {
    pub fn from_field(f: &Field) -> Self {
        FieldSpec {
            p: f.p(),
            k: f.k(),
            poly: f.poly().to_vec(),
        }
    }

    /// Only the canonical defining polynomial of `GF(p^k)` is accepted.
    pub fn to_field(&self) -> Result<Field> {
        let f = Field::new(self.p, self.k)?;
        if f.poly() != self.poly.as_slice() {
            return Err(Error::Format(format!(
                "defining polynomial {:?} is not the canonical one {:?}",
                self.poly,
                f.poly()
            )));
        }
        Ok(f)
    }
}

fn mat_rows(m: &Mat) -> Vec<Vec<F>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

fn mat_from_rows(rows: &[Vec<F>], dim: usize) -> Result<Mat> {
    if rows.len() != dim {
        return Err(Error::Dimension(format!("{} rows in dimension {dim}", rows.len())));
    }
    Mat::from_rows(rows.to_vec())
}

/// Generator images of a representation, row-major, entries encoded in
/// the polynomial basis.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RepFile {
    pub field: FieldSpec,
    pub dimension: usize,
    pub generators_images: Vec<Vec<Vec<F>>>,
}

impl RepFile {
    pub fn from_rep(r: &Rep) -> Self {
        RepFile {
            field: FieldSpec::from_field(r.field()),
            dimension: r.dim(),
            generators_images: r.gens().iter().map(mat_rows).collect(),
        }
    }

    /// Images are matched to `group.gens()` in order, and the relations are
    /// checked on every element.
    pub fn to_rep(&self, group: &Subgroup) -> Result<Rep> {
        let f = self.field.to_field()?;
        let gens = self
            .generators_images
            .iter()
            .map(|m| mat_from_rows(m, self.dimension))
            .collect::<Result<Vec<_>>>()?;
        let r = Rep::new(group, &f, self.dimension, gens)?;
        r.verify(usize::MAX, 0)?;
        Ok(r)
    }
}

pub fn parse_rep(text: &str, group: &Subgroup) -> Result<Rep> {
    serde_json::from_str::<RepFile>(text).map_err(format_err)?.to_rep(group)
}

/// Exponent table of a cocycle, rows and columns in element order.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CocycleDump {
    pub modulus: u64,
    pub order: usize,
    pub table: Vec<Vec<u64>>,
}

impl CocycleDump {
    pub fn from_cocycle(c: &Cocycle) -> Self {
        let n = c.group().elements().len();
        CocycleDump {
            modulus: c.modulus(),
            order: n,
            table: c.table().chunks(n.max(1)).map(<[u64]>::to_vec).collect(),
        }
    }

    pub fn to_cocycle(&self, group: &Subgroup) -> Result<Cocycle> {
        if self.order != group.elements().len() || self.table.iter().any(|r| r.len() != self.order) {
            return Err(Error::Dimension("cocycle table does not match the group order".into()));
        }
        Cocycle::from_table(group, self.modulus, self.table.concat())
    }
}

/// Generator images plus the cocycle, which together determine every value.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProjRepFile {
    pub field: FieldSpec,
    pub dimension: usize,
    pub generators_images: Vec<Vec<Vec<F>>>,
    pub cocycle: CocycleDump,
}

impl ProjRepFile {
    pub fn from_projrep(p: &ProjRep) -> Self {
        ProjRepFile {
            field: FieldSpec::from_field(p.field()),
            dimension: p.dim(),
            generators_images: p.gen_images().iter().map(mat_rows).collect(),
            cocycle: CocycleDump::from_cocycle(p.cocycle()),
        }
    }

    /// Rebuilds `P(s h) = w^{-alpha(s, h)} P(s) P(h)` along the word tree
    /// and checks the result has the stated cocycle.
    pub fn to_projrep(&self, group: &Subgroup) -> Result<ProjRep> {
        let f = self.field.to_field()?;
        if self.cocycle.modulus != modulus(&f) {
            return Err(Error::Format("cocycle modulus differs from q - 1".into()));
        }
        let alpha = self.cocycle.to_cocycle(group)?;
        let gens = self
            .generators_images
            .iter()
            .map(|m| mat_from_rows(m, self.dimension))
            .collect::<Result<Vec<_>>>()?;
        if gens.len() != group.gens().len() {
            return Err(Error::Dimension("one image per generator is required".into()));
        }
        let el = group.elements();
        let m = modulus(&f);
        let mut table = vec![Mat::identity(self.dimension); el.len()];
        for (pos, parent, k) in group.word_tree() {
            if k == usize::MAX {
                continue;
            }
            let s = group.position(group.gens()[k]).unwrap();
            let c = f.exp((m - alpha.at(s, parent) % m) % m);
            table[pos] = gens[k].mul(&f, &table[parent]).scale(&f, c);
        }
        let p = ProjRep::from_table(group, &f, table)?;
        if *p.cocycle() != alpha {
            return Err(Error::NotProjective("images do not realize the stated cocycle".into()));
        }
        Ok(p)
    }
}

/// SHA-256 of the compact JSON encoding, in hex.
pub fn digest<T: Serialize + ?Sized>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("serializable");
    format!("{:x}", Sha256::digest(&bytes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::modrep::simple_modules;

    #[test]
    fn group_round_trip() {
        let g = library::symmetric(4);
        let back = parse_group(&group_to_json(&g)).unwrap();
        assert!(back.same_as(&g));
        let trivial = parse_group(r#"{"degree": 3, "generators": []}"#).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(parse_group(r#"{"degree": 3, "generators": [[1, 1, 2]]}"#).is_err());
        assert!(parse_group(r#"{"degree": 3, "generators": [[2, 1]]}"#).is_err());
    }

    #[test]
    fn rep_round_trip() {
        let g = Subgroup::whole(&library::alternating(5)).unwrap();
        for r in simple_modules(&g, 2, 0).unwrap() {
            let text = serde_json::to_string(&RepFile::from_rep(&r)).unwrap();
            let back = parse_rep(&text, &g).unwrap();
            assert_eq!(back.gens(), r.gens());
        }
        let bad = r#"{"field": {"p": 2, "k": 1, "poly": [1, 1]}, "dimension": 1, "generators_images": [[[1]], [[0]]]}"#;
        assert!(parse_rep(bad, &g).is_err());
    }

    #[test]
    fn projrep_round_trip() {
        let g = Subgroup::whole(&library::quaternion()).unwrap();
        let f = Field::prime(3).unwrap();
        let r = crate::modrep::simple_modules_over(&g, &f, 0)
            .unwrap()
            .into_iter()
            .find(|m| m.dim() == 2)
            .unwrap();
        let p = ProjRep::from_rep(&r).scaled(&(0..8).map(|i| i % 2).collect::<Vec<_>>()).unwrap();
        let file = ProjRepFile::from_projrep(&p);
        let back = file.to_projrep(&g).unwrap();
        assert_eq!(back, p);
        let mut wrong = file.clone();
        wrong.cocycle.table[1][1] = (wrong.cocycle.table[1][1] + 1) % 2;
        assert!(wrong.to_projrep(&g).is_err());
    }

    #[test]
    fn digests_are_stable() {
        assert_eq!(digest(&[1, 2, 3]), digest(&vec![1u8, 2, 3]));
        assert_eq!(digest("x").len(), 64);
    }
}
