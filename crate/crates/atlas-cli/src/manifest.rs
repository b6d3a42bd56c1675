//! Case manifests: one verification claim per line,
//! `case_id | group | subgroup | claim | value | mode | budget`.

use crate::report::{CaseReport, ReportDocument, Verdict};
use basesize::{
    minimal_base_size_exact, q_montecarlo, qhat_from_inventory, qhat_from_table, ExactBaseResult,
    SearchBudget,
};
use group_analysis::{class_inventory, is_prime, parse_csv, InventoryBudget};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use perm_core::{coset_action, load_group_str, Error, GroupHandle, Result};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Clone, Debug, PartialEq)]
pub enum Claim {
    BaseSizeEq(usize),
    BaseSizeLe(usize),
    BaseSizeGe(usize),
    QhatLessThanOne { c: usize },
    ChiPolynomial(String),
    IrCount { r: u64, count: BigUint },
}

#[derive(Clone, Debug)]
pub struct CaseManifestEntry {
    pub case_id: String,
    pub group_file: String,
    pub subgroup_file: Option<String>,
    pub claim: Claim,
    pub mode: Mode,
    pub budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Certified,
    Evidence,
}

impl Mode {
    fn as_str(&self) -> &'static str {
        match self {
            Mode::Certified => "certified",
            Mode::Evidence => "evidence",
        }
    }
}

pub fn parse_manifest(text: &str) -> Result<Vec<CaseManifestEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 7 {
            return Err(Error::Parse {
                line: idx + 1,
                msg: format!("expected 7 fields separated by |, found {}", fields.len()),
            });
        }
        let parse_usize = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("bad integer `{s}`"),
            })
        };
        let claim = match fields[3] {
            "base_size =" => Claim::BaseSizeEq(parse_usize(fields[4])?),
            "base_size <=" => Claim::BaseSizeLe(parse_usize(fields[4])?),
            "base_size >=" => Claim::BaseSizeGe(parse_usize(fields[4])?),
            "qhat_less_than_1" => Claim::QhatLessThanOne {
                c: parse_usize(fields[4])?,
            },
            "chi_polynomial" => Claim::ChiPolynomial(fields[4].to_string()),
            "i_r_count" => {
                let (r, count) = fields[4].split_once(':').ok_or(Error::Parse {
                    line: idx + 1,
                    msg: "i_r_count value must be r:count".into(),
                })?;
                Claim::IrCount {
                    r: r.trim().parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("bad prime `{r}`"),
                    })?,
                    count: count.trim().parse().map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("bad count `{count}`"),
                    })?,
                }
            }
            other => {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("unknown claim `{other}`"),
                })
            }
        };
        let mode = match fields[5] {
            "certified" => Mode::Certified,
            "evidence" => Mode::Evidence,
            other => {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("unknown mode `{other}`"),
                })
            }
        };
        entries.push(CaseManifestEntry {
            case_id: fields[0].to_string(),
            group_file: fields[1].to_string(),
            subgroup_file: match fields[2] {
                "natural" | "-" | "" => None,
                other => Some(other.to_string()),
            },
            claim,
            mode,
            budget: match fields[6] {
                "-" | "" => None,
                s => Some(s.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("bad budget `{s}`"),
                })?),
            },
        });
    }
    Ok(entries)
}

/// Resolves a manifest-relative path against the manifest directory, then
/// the data root above it.
fn resolve(base: &Path, rel: &str) -> PathBuf {
    let direct = base.join(rel);
    if direct.exists() {
        return direct;
    }
    match base.parent() {
        Some(parent) => {
            let up = parent.join(rel);
            if up.exists() {
                up
            } else {
                direct
            }
        }
        None => direct,
    }
}

/// Verifies the expected orders in `checks.tsv` for every group file an
/// entry mentions, before any case runs.
fn verify_data(base: &Path, entries: &[CaseManifestEntry], seed: u64) -> Result<Vec<String>> {
    let checks_path = resolve(base, "checks.tsv");
    let mut lines = Vec::new();
    if !checks_path.exists() {
        return Ok(vec!["no checks.tsv found; order verification skipped".into()]);
    }
    let checks = std::fs::read_to_string(&checks_path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", checks_path.display())))?;
    let mut expected = std::collections::HashMap::new();
    for line in checks.lines() {
        if let Some((file, order)) = line.split_once('\t') {
            expected.insert(file.trim().to_string(), order.trim().to_string());
        }
    }
    let mut mentioned: Vec<&String> = Vec::new();
    for e in entries {
        if e.group_file.ends_with(".grp") {
            mentioned.push(&e.group_file);
        }
        if let Some(s) = &e.subgroup_file {
            mentioned.push(s);
        }
    }
    mentioned.sort();
    mentioned.dedup();
    for file in mentioned {
        let Some(want) = expected.get(file) else {
            lines.push(format!("{file}: no expected order on file"));
            continue;
        };
        let g = load_group(&resolve(base, file), seed)?;
        if g.order().to_string() != *want {
            return Err(Error::Input(format!(
                "data verification failed: {file} has order {}, expected {want}",
                g.order()
            )));
        }
        lines.push(format!("{file}: order {want} verified"));
    }
    Ok(lines)
}

pub fn load_group(path: &Path, seed: u64) -> Result<GroupHandle> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    load_group_str(&text, seed)
}

/// Runs every entry of a manifest and assembles the report.
pub fn run_manifest(path: &Path, seed: u64, index_budget: usize) -> Result<ReportDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let entries = parse_manifest(&text)?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let mut doc = ReportDocument::new(&path.display().to_string(), seed);

    match verify_data(&base, &entries, seed) {
        Ok(lines) => doc.cases.push(CaseReport {
            case_id: "data-verification".into(),
            claim: "orders match checks.tsv".into(),
            mode: "certified".into(),
            verdict: Verdict::Pass,
            detail: lines.join("\n"),
            artifacts: Vec::new(),
            seconds: 0.0,
        }),
        Err(e) => {
            doc.cases.push(CaseReport {
                case_id: "data-verification".into(),
                claim: "orders match checks.tsv".into(),
                mode: "certified".into(),
                verdict: Verdict::Fail,
                detail: e.to_string(),
                artifacts: Vec::new(),
                seconds: 0.0,
            });
            return Ok(doc);
        }
    }

    for entry in &entries {
        let t0 = Instant::now();
        let report = run_case(&base, entry, seed, index_budget);
        let (verdict, detail, artifacts) = match report {
            Ok(x) => x,
            Err(e) => (Verdict::Inconclusive, format!("error: {e}"), Vec::new()),
        };
        doc.cases.push(CaseReport {
            case_id: entry.case_id.clone(),
            claim: format!("{:?}", entry.claim),
            mode: entry.mode.as_str().into(),
            verdict,
            detail,
            artifacts,
            seconds: t0.elapsed().as_secs_f64(),
        });
    }
    Ok(doc)
}

type CaseOutcome = (Verdict, String, Vec<(String, String)>);

fn run_case(
    base: &Path,
    entry: &CaseManifestEntry,
    seed: u64,
    index_budget: usize,
) -> Result<CaseOutcome> {
    match &entry.claim {
        Claim::BaseSizeEq(v) | Claim::BaseSizeLe(v) | Claim::BaseSizeGe(v) => {
            let group = load_group(&resolve(base, &entry.group_file), seed)?;
            let action = match &entry.subgroup_file {
                None => group,
                Some(sub) => {
                    let subgroup = load_group(&resolve(base, sub), seed)?;
                    coset_action(&group, &subgroup, index_budget, seed)?.quotient_group
                }
            };
            match entry.mode {
                Mode::Certified => {
                    let budget = SearchBudget {
                        max_nodes: entry.budget.unwrap_or(SearchBudget::default().max_nodes),
                    };
                    match minimal_base_size_exact(&action, budget, seed)? {
                        ExactBaseResult::Exact { base_size, witness, lower } => {
                            let ok = match entry.claim {
                                Claim::BaseSizeEq(v) => base_size == v,
                                Claim::BaseSizeLe(v) => base_size <= v,
                                Claim::BaseSizeGe(v) => base_size >= v,
                                _ => unreachable!(),
                            };
                            let cert = witness.to_text(action.name(), action.degree());
                            let transcript = format!(
                                "c: {}\nmethod: {}\ntuples_examined: {}\norbit_reduction: {}\nverdict: {}\n",
                                lower.c,
                                lower.method,
                                lower.tuples_examined,
                                lower.orbit_reduction_used,
                                lower.verdict
                            );
                            Ok((
                                if ok { Verdict::Pass } else { Verdict::Fail },
                                format!("exact base size {base_size}"),
                                vec![
                                    ("base-certificate".into(), cert),
                                    ("lower-bound-transcript".into(), transcript),
                                ],
                            ))
                        }
                        ExactBaseResult::Interval { lower_bound, upper_bound, .. } => Ok((
                            Verdict::Inconclusive,
                            format!("budget exhausted: b in [{lower_bound}, {upper_bound}]"),
                            Vec::new(),
                        )),
                    }
                }
                Mode::Evidence => {
                    let trials = entry.budget.unwrap_or(1_000_000);
                    // upper evidence: find a base of the claimed size
                    let up = q_montecarlo(&action, *v, trials.min(100_000), seed)?;
                    let upper_found = up.base_example.is_some();
                    // lower evidence for equality claims: no smaller base in
                    // the full trial budget
                    let mut detail = format!(
                        "{} of {} random {v}-tuples were bases",
                        up.trials - up.non_base,
                        up.trials
                    );
                    let mut ok = upper_found;
                    if matches!(entry.claim, Claim::BaseSizeEq(_)) && *v > 1 {
                        let down = q_montecarlo(&action, v - 1, trials, seed ^ 1)?;
                        detail.push_str(&format!(
                            "; {} random {}-tuples, none a base: {}",
                            down.trials,
                            v - 1,
                            down.base_example.is_none()
                        ));
                        ok = ok && down.base_example.is_none();
                    }
                    detail.push_str("; evidence only, not a certificate");
                    Ok((
                        if ok { Verdict::Pass } else { Verdict::Inconclusive },
                        detail,
                        Vec::new(),
                    ))
                }
            }
        }
        Claim::QhatLessThanOne { c } => {
            let path = resolve(base, &entry.group_file);
            let ledger = if entry.group_file.ends_with(".csv") {
                let table = parse_csv(&std::fs::read_to_string(&path).map_err(|e| {
                    Error::Input(format!("cannot read {}: {e}", path.display()))
                })?)?;
                qhat_from_table(&table, *c, None)?
            } else {
                let group = load_group(&path, seed)?;
                let inv = class_inventory(&group, true, InventoryBudget::default(), seed)?;
                qhat_from_inventory(&inv, *c)?
            };
            let ok = ledger.total < BigRational::one();
            let certified_note = if ledger.certified {
                ""
            } else {
                " (uncertified imported data)"
            };
            Ok((
                if ok { Verdict::Pass } else { Verdict::Fail },
                format!("bound total {}{certified_note}", ledger.total),
                vec![("ledger".into(), ledger.to_report())],
            ))
        }
        Claim::ChiPolynomial(want) => {
            let path = resolve(base, &entry.group_file);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            let qf = weylchar::parse_query(&text)?;
            let ans = weylchar::run_query(&qf)?;
            let got = ans.polynomial.to_coeff_list();
            let ok = got == want.trim();
            Ok((
                if ok { Verdict::Pass } else { Verdict::Fail },
                format!("chi = {} (coefficients {got})", ans.polynomial),
                Vec::new(),
            ))
        }
        Claim::IrCount { r, count } => {
            if !is_prime(*r) {
                return Err(Error::Input(format!("{r} is not prime")));
            }
            if entry.group_file.ends_with(".csv") {
                let path = resolve(base, &entry.group_file);
                let table = parse_csv(&std::fs::read_to_string(&path).map_err(|e| {
                    Error::Input(format!("cannot read {}: {e}", path.display()))
                })?)?;
                let got = group_analysis::count_order_from_table(&table, *r)?;
                return Ok((
                    if &got == count { Verdict::Pass } else { Verdict::Fail },
                    format!("i_{r} = {got} from an imported table (uncertified)"),
                    Vec::new(),
                ));
            }
            let group = load_group(&resolve(base, &entry.group_file), seed)?;
            let mut budget = InventoryBudget::default();
            if let Some(b) = entry.budget {
                budget.max_samples = b as usize;
            }
            let inv = class_inventory(&group, false, budget, seed)?;
            let got = inv.count_elements_of_order(*r)?;
            Ok((
                if &got == count { Verdict::Pass } else { Verdict::Fail },
                format!("i_{r} = {got} over {} classes", inv.records.len()),
                vec![("class-table".into(), group_analysis::export_csv(&inv))],
            ))
        }
    }
}
