use alperin_core::auts::{AutGroup, Automorphism};
use alperin_core::awc::{
    condition_for_pair, coho_condition_check, ibr_over, iaw_check, triple_equality_check, weights_over,
    Outcome,
};
use alperin_core::bnpair::{green_fixed_point_check, sl2_data};
use alperin_core::cocycle::{cocycle_order, h2_group};
use alperin_core::group::{PermutationGroup, ORDER_CAP};
use alperin_core::io::{parse_rep, CocycleDump, ProjRepFile};
use alperin_core::modrep::{splitting_field, CHOP_CAP};
use alperin_core::ordchar::character_table;
use alperin_core::perm::Perm;
use alperin_core::projrep::{extend_projective, normalize_minimal, ProjRep};
use alperin_core::report::{awc_output, resolve_group, run_battery, BatteryConfig, Certificate, Envelope, Status};
use alperin_core::subgroup::Subgroup;
use alperin_core::{arith, cocycle::H2_CAP};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Environment variable overriding resource caps, e.g.
/// `group_order=200000,dimension=1000,h2_order=48`.
const CAPS_VAR: &str = "ALPERIN_CAPS";

#[derive(Parser)]
#[command(name = "alperin", version, about = "Weight counts, cocycles and projective representations of small finite groups")]
struct Cli {
    /// Emit the JSON report instead of the text rendering
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized module algorithms [default: 0, or the
    /// battery configuration's seed]
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Brauer characters against weights
    #[command(subcommand)]
    Awc(AwcCmd),
    /// Simple modules in characteristic p
    Ibr(GroupPrime),
    /// Ordinary character degrees and class sizes
    Chartable {
        #[arg(long)]
        group: String,
    },
    /// Invariant factors of H^2(G, Z/m)
    H2 {
        #[arg(long)]
        group: String,
        #[arg(long)]
        modulus: u64,
    },
    /// Extend a projective representation from a normal subgroup
    #[command(subcommand)]
    Projrep(ProjrepCmd),
    /// Cohomological condition on a pair of modules
    #[command(subcommand)]
    Coho(CohoCmd),
    /// Count comparison for a triple G, X, Y
    #[command(subcommand)]
    Triple(TripleCmd),
    /// Fixed-point bijection for SL(2, p)
    #[command(subcommand)]
    Bnpair(BnpairCmd),
    /// Run the regression battery from a configuration file
    Battery {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Args)]
struct GroupPrime {
    /// Group file, or a library name such as S5 or SL(2,5)
    #[arg(long)]
    group: String,
    #[arg(long)]
    prime: u64,
}

#[derive(Subcommand)]
enum AwcCmd {
    /// Compare |IBr(G)| with |Alp(G)|, also per central character
    Check(GroupPrime),
    /// List the weights
    Weights(GroupPrime),
    /// Check a weight bijection matched within central-character blocks
    Iaw(GroupPrime),
}

#[derive(Subcommand)]
enum ProjrepCmd {
    /// Extend a module of a perfect normal subgroup to a projective representation
    Extend {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        normal: PathBuf,
        /// Also rescale to a cocycle of least order
        #[arg(long)]
        normalize_order: bool,
    },
}

#[derive(Subcommand)]
enum CohoCmd {
    /// Check the cohomological condition for (chi, psi)
    Check {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: PathBuf,
        /// Index into IBr(X)
        #[arg(long)]
        chi: usize,
        /// Index into IBr(Y)
        #[arg(long)]
        psi: usize,
        #[arg(long)]
        prime: u64,
        /// Automorphisms of X as images of its generators; searched when absent
        #[arg(long)]
        aut: Option<PathBuf>,
        /// Radical subgroup with Y = N_X(Q), enabling the fixed-point criterion
        #[arg(long)]
        q: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TripleCmd {
    /// Compare |IBr(G|chi)| with |IBr(N_G(Y)|psi)|
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        psi: usize,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        q: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BnpairCmd {
    /// Admissible pairs, heads of F[G/U] and the weight bijection for SL(2,p)
    Sl2 {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Clone, Copy, Debug)]
struct Caps {
    group_order: u64,
    dimension: usize,
    h2_order: u64,
}

impl Caps {
    fn from_env() -> Result<Self> {
        let mut caps = Caps {
            group_order: ORDER_CAP,
            dimension: CHOP_CAP,
            h2_order: H2_CAP,
        };
        let Ok(spec) = std::env::var(CAPS_VAR) else {
            return Ok(caps);
        };
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| anyhow!("{CAPS_VAR}: expected key=value, got {item:?}"))?;
            let value: u64 = value.trim().parse().with_context(|| format!("{CAPS_VAR}: {item:?}"))?;
            match key.trim() {
                "group_order" => caps.group_order = value,
                "dimension" => caps.dimension = value as usize,
                "h2_order" => caps.h2_order = value,
                other => bail!("{CAPS_VAR}: unknown cap {other:?}"),
            }
        }
        Ok(caps)
    }
}

struct Ctx {
    seed: u64,
    caps: Caps,
}

impl Ctx {
    fn group(&self, spec: &str) -> Result<PermutationGroup> {
        Ok(resolve_group(spec, Path::new("."), self.caps.group_order)?)
    }

    fn whole(&self, spec: &str) -> Result<Subgroup> {
        Ok(Subgroup::whole(&self.group(spec)?)?)
    }
}

/// A subgroup of `parent` given by a group file on the same points.
fn subgroup_from_file(parent: &Subgroup, path: &Path) -> Result<Subgroup> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    let g = alperin_core::io::parse_group(&text)?;
    let t = parent.parent().table()?;
    let gens = g
        .generators()
        .iter()
        .map(|p| {
            t.index_of(p)
                .filter(|&e| parent.contains(e))
                .ok_or_else(|| anyhow!("{}: generator {:?} is not in the group", path.display(), p.one_based()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subgroup::generated(parent.parent(), &gens)?)
}

fn automorphisms_from_file(x: &Subgroup, path: &Path) -> Result<Vec<Automorphism>> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    let lists: Vec<Vec<Vec<usize>>> = serde_json::from_str(&text).with_context(|| path.display().to_string())?;
    let t = x.parent().table()?;
    lists
        .iter()
        .map(|imgs| {
            let elts = imgs
                .iter()
                .map(|p| {
                    t.index_of(&Perm::from_one_based(p)?)
                        .ok_or_else(|| anyhow!("automorphism image {p:?} is not in X"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Automorphism::from_generator_images(x, &elts)?)
        })
        .collect()
}

fn aut_group(x: &Subgroup, path: Option<&Path>) -> Result<AutGroup> {
    Ok(match path {
        Some(p) => AutGroup::generated(x, &automorphisms_from_file(x, p)?)?,
        None => AutGroup::full(x)?,
    })
}

fn check_prime(p: u64) -> Result<()> {
    if !arith::is_prime(p) {
        bail!("{p} is not prime");
    }
    Ok(())
}

fn outcome_status(o: &Outcome) -> Status {
    Status::from_bool(o.is_certified())
}

fn emit<T: Serialize>(json_mode: bool, env: &Envelope<T>) -> ExitCode {
    let text = env.to_json();
    let body = if json_mode {
        text
    } else {
        let v: Value = serde_json::from_str(&text).expect("own output");
        let mut lines = Vec::new();
        render(&v, "", &mut lines);
        lines.join("\n")
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = writeln!(std::io::stdout().lock(), "{body}");
    match env.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
    }
}

/// Flattened `path: value` lines; long arrays are elided.
fn render(v: &Value, path: &str, out: &mut Vec<String>) {
    const LONG: usize = 12;
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                render(x, &join(k), out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().take(LONG).map(scalar).collect();
            let more = if a.len() > LONG { format!(" ... ({} items)", a.len()) } else { String::new() };
            out.push(format!("{path}: [{}]{more}", items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate().take(4 * LONG) {
                render(x, &format!("{path}[{i}]"), out);
            }
            if a.len() > 4 * LONG {
                out.push(format!("{path}: ... ({} items)", a.len()));
            }
        }
        _ => out.push(format!("{path}: {}", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{} items]", a.len()),
        other => other.to_string(),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Ctx {
        seed: cli.seed.unwrap_or(0),
        caps: Caps::from_env()?,
    };
    let json_mode = cli.json;
    let seed = ctx.seed;
    Ok(match cli.command {
        Command::Awc(AwcCmd::Check(a)) => {
            check_prime(a.prime)?;
            let g = ctx.whole(&a.group)?;
            let out = awc_output(&g, a.prime, seed)?;
            let inputs = json!({"group": a.group, "prime": a.prime, "seed": seed});
            emit(json_mode, &Envelope::new("awc check", inputs, Status::from_bool(out.passed()), out))
        }
        Command::Awc(AwcCmd::Weights(a)) => {
            check_prime(a.prime)?;
            let g = ctx.whole(&a.group)?;
            let f = splitting_field(&g, a.prime)?;
            let alp = weights_over(&g, a.prime, &f, seed)?;
            let weights: Vec<Value> = alp
                .weights
                .iter()
                .map(|w| {
                    json!({
                        "radical": w.radical,
                        "radical_order": w.q.order(),
                        "radical_generators": generators(&w.q),
                        "normalizer_order": w.normalizer.order(),
                        "dimension": w.module.dim(),
                        "central": w.central,
                    })
                })
                .collect();
            let result = json!({
                "field_order": f.order(),
                "count": weights.len(),
                "weights": weights,
                "certificates": [Certificate::of("weights", &weights)],
            });
            let inputs = json!({"group": a.group, "prime": a.prime, "seed": seed});
            emit(json_mode, &Envelope::new("awc weights", inputs, Status::Pass, result))
        }
        Command::Awc(AwcCmd::Iaw(a)) => {
            check_prime(a.prime)?;
            let g = ctx.whole(&a.group)?;
            let f = splitting_field(&g, a.prime)?;
            let ibr = ibr_over(&g, a.prime, &f, seed)?;
            let alp = weights_over(&g, a.prime, &f, seed)?;
            let omega = alperin_core::awc::omega_by_partition(&ibr, &alp)?;
            let aut = AutGroup::full(&g)?;
            let gens: Vec<Automorphism> = aut
                .group
                .table()?
                .gens()
                .iter()
                .map(|&e| aut.automorphism(e))
                .collect::<alperin_core::error::Result<_>>()?;
            let r = iaw_check(&ibr, &alp, &omega, &gens, Some(&aut))?;
            let inputs = json!({"group": a.group, "prime": a.prime, "seed": seed});
            let result = json!({"omega": omega, "report": r});
            emit(json_mode, &Envelope::new("awc iaw", inputs, Status::from_bool(r.passed()), result))
        }
        Command::Ibr(a) => {
            check_prime(a.prime)?;
            let g = ctx.whole(&a.group)?;
            let ibr = alperin_core::awc::ibr(&g, a.prime, seed)?;
            let modules: Vec<Value> = ibr
                .modules
                .iter()
                .zip(&ibr.central)
                .enumerate()
                .map(|(i, (m, c))| json!({"index": i, "dimension": m.dim(), "central": c}))
                .collect();
            let result = json!({
                "field_order": ibr.field.order(),
                "brauer_count": alperin_core::modrep::brauer_count(&g, a.prime)?,
                "center_order": ibr.center.order(),
                "modules": modules,
            });
            let inputs = json!({"group": a.group, "prime": a.prime, "seed": seed});
            let ok = result["brauer_count"] == modules.len();
            emit(json_mode, &Envelope::new("ibr", inputs, Status::from_bool(ok), result))
        }
        Command::Chartable { group } => {
            let g = ctx.group(&group)?;
            let ct = character_table(&g)?;
            let sum: u64 = ct.degrees.iter().map(|d| d * d).sum();
            let result = json!({
                "order": g.order(),
                "degrees": ct.degrees,
                "class_sizes": ct.classes.iter().map(|c| c.size).collect::<Vec<_>>(),
                "class_orders": ct.classes.iter().map(|c| c.element_order).collect::<Vec<_>>(),
                "sum_of_squares": sum,
            });
            let inputs = json!({"group": group});
            emit(json_mode, &Envelope::new("chartable", inputs, Status::from_bool(sum == g.order()), result))
        }
        Command::H2 { group, modulus } => {
            let g = ctx.whole(&group)?;
            if g.order() > ctx.caps.h2_order {
                bail!("group order {} exceeds the H^2 cap {}", g.order(), ctx.caps.h2_order);
            }
            let inv = h2_group(&g, modulus)?;
            let order: u64 = inv.iter().product();
            let result = json!({"invariants": inv, "order": order});
            let inputs = json!({"group": group, "modulus": modulus});
            emit(json_mode, &Envelope::new("h2", inputs, Status::Pass, result))
        }
        Command::Projrep(ProjrepCmd::Extend {
            rep,
            group,
            normal,
            normalize_order,
        }) => {
            let g = ctx.whole(&group)?;
            let x = subgroup_from_file(&g, &normal)?;
            let text = std::fs::read_to_string(&rep).with_context(|| rep.display().to_string())?;
            let v = parse_rep(&text, &x)?;
            if v.dim() > ctx.caps.dimension {
                bail!("dimension {} exceeds the cap {}", v.dim(), ctx.caps.dimension);
            }
            let mut p = extend_projective(&ProjRep::from_rep(&v), &g)?;
            let mut n = None;
            if normalize_order {
                let (q, k) = normalize_minimal(&p, &x)?;
                p = q;
                n = Some(k);
            }
            let restricts = x.elements().iter().all(|&e| p.at(e) == v.image(e).expect("element of X"));
            let order = cocycle_order(p.cocycle());
            let file = ProjRepFile::from_projrep(&p);
            let result = json!({
                "restricts_to_input": restricts,
                "cocycle_order": order,
                "normalizing_exponent": n,
                "projective_representation": file,
                "certificates": [Certificate::of("cocycle", &CocycleDump::from_cocycle(p.cocycle()))],
            });
            let inputs = json!({"rep": rep, "group": group, "normal": normal, "normalize_order": normalize_order});
            emit(json_mode, &Envelope::new("projrep extend", inputs, Status::from_bool(restricts), result))
        }
        Command::Coho(CohoCmd::Check {
            x,
            y,
            chi,
            psi,
            prime,
            aut,
            q,
        }) => {
            check_prime(prime)?;
            let xg = ctx.whole(&x)?;
            let yg = subgroup_from_file(&xg, &y)?;
            let f = splitting_field(&xg, prime)?;
            let chis = alperin_core::modrep::simple_modules_over(&xg, &f, seed)?;
            let psis = alperin_core::modrep::simple_modules_over(&yg, &f, seed)?;
            let chi_m = chis.get(chi).ok_or_else(|| anyhow!("chi index {chi} out of range ({})", chis.len()))?;
            let psi_m = psis.get(psi).ok_or_else(|| anyhow!("psi index {psi} out of range ({})", psis.len()))?;
            let autg = aut_group(&xg, aut.as_deref())?;
            let r = match q {
                Some(qp) => condition_for_pair(&xg, &subgroup_from_file(&xg, &qp)?, chi_m, psi_m, &autg)?,
                None => coho_condition_check(&xg, &yg, chi_m, psi_m, &autg)?,
            };
            let certificates: Vec<Certificate> = r
                .certificate
                .iter()
                .flat_map(|c| {
                    [
                        Certificate::of("P", &ProjRepFile::from_projrep(&c.p)),
                        Certificate::of("Q", &ProjRepFile::from_projrep(&c.q)),
                    ]
                })
                .collect();
            let result = json!({
                "method": r.method,
                "outcome": r.outcome,
                "aut_order": autg.group.order(),
                "stabilizer_orders": r.certificate.as_ref().map(|c| [c.p.group().order(), c.q.group().order(), c.common.order()]),
                "certificates": certificates,
            });
            let inputs = json!({"x": x, "y": y, "chi": chi, "psi": psi, "prime": prime, "seed": seed});
            emit(json_mode, &Envelope::new("coho check", inputs, outcome_status(&r.outcome), result))
        }
        Command::Triple(TripleCmd::Check {
            group,
            x,
            y,
            chi,
            psi,
            prime,
            q,
        }) => {
            check_prime(prime)?;
            let g = ctx.whole(&group)?;
            let xg = subgroup_from_file(&g, &x)?;
            let yg = subgroup_from_file(&g, &y)?;
            let f = splitting_field(&g, prime)?;
            let chis = alperin_core::modrep::simple_modules_over(&xg, &f, seed)?;
            let psis = alperin_core::modrep::simple_modules_over(&yg, &f, seed)?;
            let chi_m = chis.get(chi).ok_or_else(|| anyhow!("chi index {chi} out of range ({})", chis.len()))?;
            let psi_m = psis.get(psi).ok_or_else(|| anyhow!("psi index {psi} out of range ({})", psis.len()))?;
            let qg = q.map(|p| subgroup_from_file(&g, &p)).transpose()?;
            let r = triple_equality_check(&g, &xg, &yg, chi_m, psi_m, qg.as_ref(), seed)?;
            let ok = r.equal && (!r.applicable || (r.r_identities && r.s_identities && r.cocycles_agree));
            let inputs = json!({"group": group, "x": x, "y": y, "chi": chi, "psi": psi, "prime": prime, "seed": seed});
            emit(json_mode, &Envelope::new("triple check", inputs, Status::from_bool(ok), r))
        }
        Command::Bnpair(BnpairCmd::Sl2 { p }) => {
            let d = sl2_data(p)?;
            let c = green_fixed_point_check(&d, seed)?;
            let status = Status::from_bool(c.report.passed());
            let result = json!({"report": c.report, "omega": c.omega});
            emit(json_mode, &Envelope::new("bnpair sl2", json!({"p": p, "seed": seed}), status, result))
        }
        Command::Battery { config } => {
            let text = std::fs::read_to_string(&config).with_context(|| config.display().to_string())?;
            let mut cfg = BatteryConfig::parse(&text)?;
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            let base = config.parent().unwrap_or(Path::new("."));
            let r = run_battery(&cfg, base, ctx.caps.group_order);
            let status = Status::from_bool(r.failed == 0);
            let inputs = json!({"config": config, "seed": cfg.seed});
            emit(json_mode, &Envelope::new("battery", inputs, status, r))
        }
    })
}

fn generators(h: &Subgroup) -> Vec<Vec<usize>> {
    let t = h.parent().table().expect("enumerated");
    h.gens().iter().map(|&e| t.perm(e).one_based()).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
