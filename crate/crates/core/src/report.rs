//! Report envelopes and the regression battery.

use crate::arith;
use crate::awc::{awc_report, ibr_over, weights_over, AwcReport, NuCount, RadicalSummary};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::io::{digest, parse_group_with_cap, SCHEMA};
use crate::library;
use crate::modrep::splitting_field;
use crate::subgroup::Subgroup;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Certificate {
    pub kind: String,
    pub witness_digest: String,
}

impl Certificate {
    pub fn of<T: Serialize + ?Sized>(kind: &str, witness: &T) -> Self {
        Certificate {
            kind: kind.into(),
            witness_digest: digest(witness),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub command: String,
    pub inputs: serde_json::Value,
    pub status: Status,
    pub result: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, inputs: serde_json::Value, status: Status, result: T) -> Self {
        Envelope {
            schema: SCHEMA,
            command: command.into(),
            inputs,
            status,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counts {
    pub ibr: usize,
    pub alp: usize,
}

/// `awc check` result: the two counts, their refinement by central
/// character, and digests of both label lists.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AwcOutput {
    pub group_order: u64,
    pub prime: u64,
    pub field_order: u64,
    pub counts: Counts,
    pub equal: bool,
    pub per_nu: Vec<NuCount>,
    pub per_nu_equal: bool,
    pub radicals: Vec<RadicalSummary>,
    pub certificates: Vec<Certificate>,
}

impl AwcOutput {
    pub fn passed(&self) -> bool {
        self.equal && self.per_nu_equal
    }
}

pub fn awc_output(g: &Subgroup, p: u64, seed: u64) -> Result<AwcOutput> {
    let f = splitting_field(g, p)?;
    let ibr = ibr_over(g, p, &f, seed)?;
    let alp = weights_over(g, p, &f, seed)?;
    let r: AwcReport = awc_report(&ibr, &alp)?;
    let ibr_labels: Vec<(usize, usize)> = ibr.modules.iter().map(|m| m.dim()).zip(ibr.central.iter().copied()).collect();
    let weight_labels: Vec<(u64, u64, usize, usize)> = alp
        .weights
        .iter()
        .map(|w| (w.q.order(), w.normalizer.order(), w.module.dim(), w.central))
        .collect();
    Ok(AwcOutput {
        group_order: r.group_order,
        prime: p,
        field_order: r.field_order,
        counts: Counts {
            ibr: r.ibr_count,
            alp: r.alp_count,
        },
        equal: r.equal,
        per_nu: r.per_nu,
        per_nu_equal: r.per_nu_equal,
        radicals: r.radicals,
        certificates: vec![
            Certificate::of("ibr-labels", &ibr_labels),
            Certificate::of("weight-labels", &weight_labels),
        ],
    })
}

/// A library name such as `S5` or `SL(2,5)`, or a path to a group file
/// (relative paths are taken from `base`).
pub fn resolve_group(spec: &str, base: &Path, cap: u64) -> Result<PermutationGroup> {
    if let Some(g) = library::by_name(spec) {
        if g.order() > cap {
            return Err(Error::CapExceeded {
                what: "group order",
                value: g.order(),
                cap,
            });
        }
        return Ok(g);
    }
    let path = base.join(spec);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    parse_group_with_cap(&text, cap)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BatteryJob {
    pub group: String,
    /// every prime divisor of the order when absent
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BatteryConfig {
    #[serde(default)]
    pub seed: u64,
    pub battery: Vec<BatteryJob>,
}

impl BatteryConfig {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BatteryEntry {
    pub group: String,
    pub prime: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<AwcOutput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BatteryReport {
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<BatteryEntry>,
}

/// Runs `awc_output` over every (group, prime) job in parallel; entries
/// come back in configuration order.
pub fn run_battery(cfg: &BatteryConfig, base: &Path, cap: u64) -> BatteryReport {
    let jobs: Vec<(String, std::result::Result<(PermutationGroup, u64), String>)> = cfg
        .battery
        .iter()
        .flat_map(|job| match resolve_group(&job.group, base, cap) {
            Err(e) => vec![(job.group.clone(), Err(e.to_string()))],
            Ok(g) => {
                let primes = match job.prime {
                    Some(p) => vec![p],
                    None => arith::prime_divisors(g.order()),
                };
                primes.into_iter().map(|p| (job.group.clone(), Ok((g.clone(), p)))).collect()
            }
        })
        .collect();
    let entries: Vec<BatteryEntry> = jobs
        .into_par_iter()
        .map(|(name, job)| {
            let (g, p) = match job {
                Ok(x) => x,
                Err(e) => {
                    return BatteryEntry {
                        group: name,
                        prime: 0,
                        status: Status::Fail,
                        report: None,
                        error: Some(e),
                    }
                }
            };
            match Subgroup::whole(&g).and_then(|s| awc_output(&s, p, cfg.seed)) {
                Ok(r) => BatteryEntry {
                    group: name,
                    prime: p,
                    status: Status::from_bool(r.passed()),
                    report: Some(r),
                    error: None,
                },
                Err(e) => BatteryEntry {
                    group: name,
                    prime: p,
                    status: Status::Fail,
                    report: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    let passed = entries.iter().filter(|e| e.status == Status::Pass).count();
    BatteryReport {
        seed: cfg.seed,
        passed,
        failed: entries.len() - passed,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ORDER_CAP;

    #[test]
    fn small_battery() {
        let cfg = BatteryConfig::parse(r#"{"seed": 3, "battery": [{"group": "S3"}, {"group": "C6", "prime": 3}, {"group": "nope"}]}"#)
            .unwrap();
        let r = run_battery(&cfg, Path::new("."), ORDER_CAP);
        assert_eq!(r.entries.len(), 4);
        assert_eq!((r.passed, r.failed), (3, 1));
        assert_eq!(r.entries[0].prime, 2);
        assert!(r.entries[3].error.is_some());
    }

    #[test]
    fn envelope_carries_schema() {
        let out = awc_output(&Subgroup::whole(&library::symmetric(3)).unwrap(), 3, 0).unwrap();
        let e = Envelope::new("awc check", serde_json::json!({"prime": 3}), Status::from_bool(out.passed()), out);
        let v: serde_json::Value = serde_json::from_str(&e.to_json()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["result"]["counts"]["ibr"], 2);
        assert_eq!(v["status"], "pass");
    }
}
