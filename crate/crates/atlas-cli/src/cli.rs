//! Command line driver: verbs `order`, `base`, `fpr`, `qhat`, `classes`,
//! `weylchar`, `witness`, `verify`, plus the `datagen` maintenance verb.

use crate::manifest::{load_group, run_manifest};
use crate::report::json_str;
use basesize::{
    conjugate_intersection_witness, greedy_base, minimal_base_size_exact, q_montecarlo,
    qhat_from_inventory, qhat_from_table, BaseCertificate, ExactBaseResult, SearchBudget,
    WitnessOutcome,
};
use group_analysis::{
    class_inventory, export_csv, fpr_by_fixes, fpr_by_fusion, parse_csv, InventoryBudget,
};
use num_rational::BigRational;
use num_traits::One;
use perm_core::{coset_action, Error, GroupHandle, Result};
use std::path::{Path, PathBuf};

pub struct GlobalOpts {
    pub seed: u64,
    pub budget: Option<u64>,
    pub format: Format,
    pub verify_cert: Option<PathBuf>,
}

#[derive(PartialEq, Eq, Clone, Copy)]
pub enum Format {
    Text,
    Json,
}

const DEFAULT_INDEX_BUDGET: usize = 1_000_000;

pub fn run(args: &[String]) -> Result<i32> {
    let (verb, rest) = match args.split_first() {
        Some(x) => x,
        None => return usage(),
    };
    let mut positional: Vec<String> = Vec::new();
    let mut opts = GlobalOpts {
        seed: 20260808,
        budget: None,
        format: Format::Text,
        verify_cert: None,
    };
    let mut flags: Vec<(String, Option<String>)> = Vec::new();
    let mut it = rest.iter().peekable();
    while let Some(a) = it.next() {
        if let Some(name) = a.strip_prefix("--") {
            let takes_value = matches!(
                name,
                "seed" | "budget" | "format" | "verify" | "subgroup" | "c" | "k" | "table"
                    | "degree" | "out"
            );
            let value = if takes_value {
                Some(
                    it.next()
                        .ok_or_else(|| Error::Input(format!("--{name} needs a value")))?
                        .clone(),
                )
            } else {
                None
            };
            match (name, &value) {
                ("seed", Some(v)) => {
                    opts.seed = v.parse().map_err(|_| Error::Input("bad --seed".into()))?
                }
                ("budget", Some(v)) => {
                    opts.budget =
                        Some(v.parse().map_err(|_| Error::Input("bad --budget".into()))?)
                }
                ("format", Some(v)) => {
                    opts.format = match v.as_str() {
                        "text" => Format::Text,
                        "json" => Format::Json,
                        _ => return Err(Error::Input("format must be text or json".into())),
                    }
                }
                ("verify", Some(v)) => opts.verify_cert = Some(PathBuf::from(v)),
                _ => flags.push((name.to_string(), value)),
            }
        } else {
            positional.push(a.clone());
        }
    }
    let flag = |n: &str| -> Option<String> {
        flags
            .iter()
            .find(|(name, _)| name == n)
            .and_then(|(_, v)| v.clone())
    };
    let has_flag = |n: &str| flags.iter().any(|(name, _)| name == n);

    match verb.as_str() {
        "order" => {
            let g = load(&positional, 0, opts.seed)?;
            emit_kv(&opts, &[("group", g.name()), ("degree", &g.degree().to_string()), ("order", &g.order().to_string())]);
            Ok(0)
        }
        "base" => cmd_base(&positional, &opts, &flag, has_flag("exact"), has_flag("greedy")),
        "fpr" => cmd_fpr(&positional, &opts),
        "qhat" => cmd_qhat(&positional, &opts, &flag),
        "classes" => {
            let g = load(&positional, 0, opts.seed)?;
            let mut budget = InventoryBudget::default();
            if let Some(b) = opts.budget {
                budget.max_samples = b as usize;
            }
            let inv = class_inventory(&g, has_flag("prime-only"), budget, opts.seed)?;
            match opts.format {
                Format::Text => {
                    println!("group: {} (order {})", g.name(), g.order());
                    println!("complete: {} ({})", inv.complete, inv.method);
                    print!("{}", export_csv(&inv));
                }
                Format::Json => {
                    println!("{{");
                    println!("  \"group\": {},", json_str(g.name()));
                    println!("  \"complete\": {},", inv.complete);
                    println!("  \"classes_csv\": {}", json_str(&export_csv(&inv)));
                    println!("}}");
                }
            }
            Ok(0)
        }
        "weylchar" => {
            let path = positional
                .first()
                .ok_or_else(|| Error::Input("weylchar needs a query file".into()))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
            let qf = weylchar::parse_query(&text)?;
            let ans = weylchar::run_query(&qf)?;
            match opts.format {
                Format::Text => {
                    println!("{}", ans.description);
                    println!("polynomial: {}", ans.polynomial);
                    println!("coefficients: {}", ans.polynomial.to_coeff_list());
                    if let Some(v) = &ans.value_at_q {
                        println!("value: {v}");
                    }
                }
                Format::Json => {
                    println!("{{");
                    println!("  \"description\": {},", json_str(&ans.description));
                    println!("  \"polynomial\": {},", json_str(&ans.polynomial.to_string()));
                    println!(
                        "  \"coefficients\": [{}],",
                        ans.polynomial.to_coeff_list()
                    );
                    match &ans.value_at_q {
                        Some(v) => println!("  \"value\": \"{v}\""),
                        None => println!("  \"value\": null"),
                    }
                    println!("}}");
                }
            }
            Ok(0)
        }
        "witness" => {
            let g = load(&positional, 0, opts.seed)?;
            let h = load(&positional, 1, opts.seed)?;
            let k: usize = flag("k")
                .ok_or_else(|| Error::Input("witness needs --k".into()))?
                .parse()
                .map_err(|_| Error::Input("bad --k".into()))?;
            let trials = opts.budget.unwrap_or(100_000);
            match conjugate_intersection_witness(&g, &h, k, trials, DEFAULT_INDEX_BUDGET, opts.seed)? {
                WitnessOutcome::Found(w) => {
                    emit_kv(
                        &opts,
                        &[
                            ("outcome", "found"),
                            ("k", &k.to_string()),
                            ("intersection_order", &w.intersection_order.to_string()),
                            ("coset_points", &format!("{:?}", w.points)),
                            (
                                "conjugators",
                                &w.conjugators
                                    .iter()
                                    .map(|c| c.to_string())
                                    .collect::<Vec<_>>()
                                    .join(" ; "),
                            ),
                        ],
                    );
                    Ok(0)
                }
                WitnessOutcome::NotFound { trials } => {
                    emit_kv(
                        &opts,
                        &[
                            ("outcome", "not-found"),
                            ("k", &k.to_string()),
                            ("trials", &trials.to_string()),
                            ("note", "evidence only, not a lower-bound certificate"),
                        ],
                    );
                    Ok(0)
                }
            }
        }
        "verify" => {
            let path = positional
                .first()
                .ok_or_else(|| Error::Input("verify needs a manifest path".into()))?;
            let doc = run_manifest(Path::new(path), opts.seed, DEFAULT_INDEX_BUDGET)?;
            let timestamp = now_utc_string();
            match opts.format {
                Format::Text => print!("{}", doc.to_text(&timestamp)),
                Format::Json => print!("{}", doc.to_json(&timestamp)),
            }
            Ok(if doc.any_certified_failure() { 1 } else { 0 })
        }
        "datagen" => {
            let out = positional
                .first()
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("data"));
            let small_only = has_flag("small-only");
            crate::datagen::write::run(&out, opts.seed, !small_only);
            Ok(0)
        }
        _ => usage(),
    }
}

fn usage() -> Result<i32> {
    eprintln!(
        "usage: atlas <verb> [args] [--seed N] [--budget N] [--format text|json]
verbs:
  order <group.grp>
  base <group.grp> [--subgroup <h.grp>] (--exact | --greedy | --probe <c> <trials>) [--verify <cert>] [--out <cert-file>]
  fpr <group.grp> [<subgroup.grp>]
  qhat <group.grp> --c <c> | qhat --table <t.csv> --c <c> [--degree N]
  classes <group.grp> [--prime-only]
  weylchar <query.wq>
  witness <group.grp> <subgroup.grp> --k <k>
  verify <manifest.cases>
  datagen [dir] [--small-only]"
    );
    Ok(2)
}

fn load(positional: &[String], idx: usize, seed: u64) -> Result<GroupHandle> {
    let path = positional
        .get(idx)
        .ok_or_else(|| Error::Input("missing group file argument".into()))?;
    load_group(Path::new(path), seed)
}

fn emit_kv(opts: &GlobalOpts, pairs: &[(&str, &str)]) {
    match opts.format {
        Format::Text => {
            for (k, v) in pairs {
                println!("{k}: {v}");
            }
        }
        Format::Json => {
            println!("{{");
            for (i, (k, v)) in pairs.iter().enumerate() {
                let comma = if i + 1 < pairs.len() { "," } else { "" };
                println!("  {}: {}{comma}", json_str(k), json_str(v));
            }
            println!("}}");
        }
    }
}

fn cmd_base(
    positional: &[String],
    opts: &GlobalOpts,
    flag: &dyn Fn(&str) -> Option<String>,
    exact: bool,
    greedy: bool,
) -> Result<i32> {
    let group = load(positional, 0, opts.seed)?;
    let action = match flag("subgroup") {
        None => group,
        Some(sub) => {
            let subgroup = load_group(Path::new(&sub), opts.seed)?;
            let act = coset_action(&group, &subgroup, DEFAULT_INDEX_BUDGET, opts.seed)?;
            act.quotient_group
        }
    };
    // re-verification of a shipped certificate
    if let Some(cert_path) = &opts.verify_cert {
        let text = std::fs::read_to_string(cert_path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", cert_path.display())))?;
        let cert = BaseCertificate::parse_text(&text)?;
        return match cert.verify(&action, opts.seed) {
            Ok(()) => {
                emit_kv(opts, &[("certificate", "valid"), ("size", &cert.size().to_string())]);
                Ok(0)
            }
            Err(e) => {
                emit_kv(opts, &[("certificate", "INVALID"), ("reason", &e.to_string())]);
                Ok(1)
            }
        };
    }
    if greedy {
        let cert = greedy_base(&action, opts.seed)?;
        emit_kv(
            opts,
            &[
                ("method", "greedy"),
                ("upper_bound", &cert.size().to_string()),
                ("points", &format!("{:?}", cert.points)),
            ],
        );
        maybe_write_cert(flag, &cert, &action)?;
        return Ok(0);
    }
    if let Some(c) = probe_args(positional) {
        let (c, trials) = c;
        let mc = q_montecarlo(&action, c, trials, opts.seed)?;
        let found = mc.base_example.is_some();
        emit_kv(
            opts,
            &[
                ("method", "probe"),
                ("c", &c.to_string()),
                ("trials", &mc.trials.to_string()),
                ("non_base", &mc.non_base.to_string()),
                ("estimate", &format!("{:.6}", mc.estimate)),
                (
                    "interval95",
                    &format!("[{:.6}, {:.6}]", mc.interval.0, mc.interval.1),
                ),
                ("base_found", &found.to_string()),
                (
                    "base_example",
                    &mc.base_example
                        .map(|b| format!("{b:?}"))
                        .unwrap_or_else(|| "-".into()),
                ),
            ],
        );
        return Ok(0);
    }
    if !exact {
        return Err(Error::Input(
            "base needs one of --exact, --greedy, --probe <c> <trials>".into(),
        ));
    }
    let budget = SearchBudget {
        max_nodes: opts.budget.unwrap_or(SearchBudget::default().max_nodes),
    };
    match minimal_base_size_exact(&action, budget, opts.seed)? {
        ExactBaseResult::Exact { base_size, witness, lower } => {
            emit_kv(
                opts,
                &[
                    ("method", "exact"),
                    ("base_size", &base_size.to_string()),
                    ("witness", &format!("{:?}", witness.points)),
                    ("lower_bound_method", &lower.method),
                    ("tuples_examined", &lower.tuples_examined.to_string()),
                    ("verdict", &lower.verdict),
                ],
            );
            maybe_write_cert(flag, &witness, &action)?;
            Ok(0)
        }
        ExactBaseResult::Interval { lower_bound, upper_bound, .. } => {
            emit_kv(
                opts,
                &[
                    ("method", "exact"),
                    ("status", "budget-exhausted"),
                    ("interval", &format!("[{lower_bound}, {upper_bound}]")),
                ],
            );
            Ok(1)
        }
    }
}

fn maybe_write_cert(
    flag: &dyn Fn(&str) -> Option<String>,
    cert: &BaseCertificate,
    action: &GroupHandle,
) -> Result<()> {
    if let Some(out) = flag("out") {
        std::fs::write(&out, cert.to_text(action.name(), action.degree()))
            .map_err(|e| Error::Input(format!("cannot write {out}: {e}")))?;
    }
    Ok(())
}

fn probe_args(positional: &[String]) -> Option<(usize, u64)> {
    // `base g.grp --probe c trials`: probe flag has no value; c and trials
    // arrive as positionals 1 and 2
    let c = positional.get(1)?.parse().ok()?;
    let trials = positional.get(2)?.parse().ok()?;
    Some((c, trials))
}

fn cmd_fpr(positional: &[String], opts: &GlobalOpts) -> Result<i32> {
    let group = load(positional, 0, opts.seed)?;
    let subgroup = match positional.get(1) {
        Some(p) => load_group(Path::new(p), opts.seed)?,
        None => group.pointwise_stabilizer(&[0], opts.seed)?,
    };
    // the designated action: cosets of the subgroup (natural when the
    // subgroup is a point stabilizer)
    let act = coset_action(&group, &subgroup, DEFAULT_INDEX_BUDGET, opts.seed)?;
    let quotient = &act.quotient_group;
    let g_inv = class_inventory(&group, true, InventoryBudget::default(), opts.seed)?;
    let h_inv = class_inventory(&subgroup, true, InventoryBudget::default(), opts.seed)?;
    let mut rows = Vec::new();
    let mut seen: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    let mut all_equal = true;
    for rec in &g_inv.records {
        let pos = seen.entry(rec.element_order).or_insert(0);
        let label = rec.label(*pos);
        *pos += 1;
        // move the representative into the coset action through the pairing
        let paired_image = quotient_image(&subgroup, &act.point_to_coset, &rec.representative)?;
        let by_fixes = fpr_by_fixes(&paired_image);
        let by_fusion = fpr_by_fusion(&group, &h_inv, &rec.representative, opts.seed)?;
        if by_fixes != by_fusion {
            all_equal = false;
        }
        rows.push((label, by_fixes, by_fusion));
    }
    match opts.format {
        Format::Text => {
            println!(
                "fpr for {} on cosets of {} (degree {})",
                group.name(),
                subgroup.name(),
                quotient.degree()
            );
            println!("class  fpr_by_fixes  fpr_by_fusion");
            for (label, fx, fu) in &rows {
                println!("{label:<6} {fx:<13} {fu}");
            }
            println!("pipelines agree: {all_equal}");
        }
        Format::Json => {
            println!("{{");
            println!("  \"group\": {},", json_str(group.name()));
            println!("  \"rows\": [");
            for (i, (label, fx, fu)) in rows.iter().enumerate() {
                let comma = if i + 1 < rows.len() { "," } else { "" };
                println!(
                    "    {{\"class\": {}, \"by_fixes\": {}, \"by_fusion\": {}}}{comma}",
                    json_str(label),
                    json_str(&fx.to_string()),
                    json_str(&fu.to_string())
                );
            }
            println!("  ],");
            println!("  \"agree\": {all_equal}");
            println!("}}");
        }
    }
    Ok(if all_equal { 0 } else { 1 })
}

/// The image of a group element in the coset action, via canonical coset
/// representatives.
fn quotient_image(
    subgroup: &GroupHandle,
    reps: &[perm_core::Permutation],
    x: &perm_core::Permutation,
) -> Result<perm_core::Permutation> {
    let index: std::collections::HashMap<Vec<u32>, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, r)| (r.images().to_vec(), i as u32))
        .collect();
    let images: Vec<u32> = reps
        .iter()
        .map(|r| {
            let canon = perm_core::canonical_coset_rep(subgroup.chain(), &r.then(x));
            index
                .get(canon.images())
                .copied()
                .ok_or_else(|| Error::Internal("coset image not found".into()))
        })
        .collect::<Result<_>>()?;
    perm_core::Permutation::from_images(images)
}

fn cmd_qhat(
    positional: &[String],
    opts: &GlobalOpts,
    flag: &dyn Fn(&str) -> Option<String>,
) -> Result<i32> {
    let c: usize = flag("c")
        .ok_or_else(|| Error::Input("qhat needs --c".into()))?
        .parse()
        .map_err(|_| Error::Input("bad --c".into()))?;
    let ledger = match flag("table") {
        Some(table_path) => {
            let text = std::fs::read_to_string(&table_path)
                .map_err(|e| Error::Input(format!("cannot read {table_path}: {e}")))?;
            let table = parse_csv(&text)?;
            let degree = match flag("degree") {
                Some(d) => Some(d.parse().map_err(|_| Error::Input("bad --degree".into()))?),
                None => None,
            };
            qhat_from_table(&table, c, degree)?
        }
        None => {
            let g = load(positional, 0, opts.seed)?;
            let inv = class_inventory(&g, true, InventoryBudget::default(), opts.seed)?;
            qhat_from_inventory(&inv, c)?
        }
    };
    match opts.format {
        Format::Text => {
            print!("{}", ledger.to_report());
            print!("{}", ledger.to_csv());
        }
        Format::Json => {
            println!("{{");
            println!("  \"c\": {c},");
            println!("  \"total\": {},", json_str(&ledger.total.to_string()));
            println!("  \"certified\": {},", ledger.certified);
            println!("  \"below_one\": {},", ledger.total < BigRational::one());
            println!("  \"csv\": {}", json_str(&ledger.to_csv()));
            println!("}}");
        }
    }
    Ok(0)
}

fn now_utc_string() -> String {
    match std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH) {
        Ok(d) => format!("unix {}", d.as_secs()),
        Err(_) => "unknown".into(),
    }
}
