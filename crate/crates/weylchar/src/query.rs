//! Query files for the character evaluator.
//!
//! ```text
//! type: E6
//! kind: chi | index
//! J: a0,a1,a3,a4,a5,a6
//! w: identity | s1 s2 ...
//! parabolic: a2,a3,a4,a5
//! centralizer_pprime: 1,2,3      (optional, ascending coefficients)
//! q: 4                            (optional)
//! ```

use crate::charformula::{chi_semisimple, ChiResult, JNode, ParabolicCharQuery};
use crate::parabolic::parabolic_index_poly;
use crate::poly::IntPolynomial;
use crate::root_system::RootSystemData;
use num_bigint::BigInt;
use perm_core::{Error, Result};

pub enum QueryKind {
    Chi,
    Index,
}

pub struct QueryFile {
    pub kind: QueryKind,
    pub query: ParabolicCharQuery,
}

pub fn parse_query(text: &str) -> Result<QueryFile> {
    let mut type_label = None;
    let mut kind = QueryKind::Chi;
    let mut j_nodes = Vec::new();
    let mut w_word = Vec::new();
    let mut parabolic_subset = Vec::new();
    let mut centralizer = None;
    let mut q = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or(Error::Parse {
            line: idx + 1,
            msg: "expected `key: value`".into(),
        })?;
        let value = value.trim();
        match key.trim() {
            "type" => type_label = Some(value.to_string()),
            "kind" => {
                kind = match value {
                    "chi" => QueryKind::Chi,
                    "index" => QueryKind::Index,
                    other => {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("unknown kind `{other}`"),
                        })
                    }
                }
            }
            "J" => {
                for tok in value.split(',').filter(|t| !t.trim().is_empty()) {
                    j_nodes.push(JNode::parse(tok)?);
                }
            }
            "w" => {
                if value != "identity" && !value.is_empty() {
                    for tok in value.split_whitespace() {
                        let t = tok.trim_start_matches('s');
                        let k: usize = t.parse().map_err(|_| Error::Parse {
                            line: idx + 1,
                            msg: format!("bad reflection `{tok}`"),
                        })?;
                        if k == 0 {
                            return Err(Error::Parse {
                                line: idx + 1,
                                msg: "reflections are numbered from s1".into(),
                            });
                        }
                        w_word.push(k - 1);
                    }
                }
            }
            "parabolic" => {
                for tok in value.split(',').filter(|t| !t.trim().is_empty()) {
                    match JNode::parse(tok)? {
                        JNode::Simple(i) => parabolic_subset.push(i),
                        JNode::Highest => {
                            return Err(Error::Parse {
                                line: idx + 1,
                                msg: "the parabolic subset must lie in the simple roots".into(),
                            })
                        }
                    }
                }
            }
            "centralizer_pprime" => {
                centralizer = Some(IntPolynomial::parse_coeff_list(value)?);
            }
            "q" => {
                q = Some(value.parse::<BigInt>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("bad q `{value}`"),
                })?);
            }
            other => {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("unknown key `{other}`"),
                })
            }
        }
    }
    let type_label = type_label.ok_or(Error::Parse {
        line: 0,
        msg: "missing `type:`".into(),
    })?;
    Ok(QueryFile {
        kind,
        query: ParabolicCharQuery {
            type_label,
            j_nodes,
            w_word,
            parabolic_subset,
            centralizer_pprime_poly: centralizer,
            q,
        },
    })
}

pub struct QueryAnswer {
    pub polynomial: IntPolynomial,
    pub value_at_q: Option<BigInt>,
    pub description: String,
}

/// Runs a parsed query.
pub fn run_query(qf: &QueryFile) -> Result<QueryAnswer> {
    match qf.kind {
        QueryKind::Index => {
            let rs = RootSystemData::build(&qf.query.type_label)?;
            let poly = parabolic_index_poly(&rs, &qf.query.parabolic_subset)?;
            let value_at_q = qf.query.q.as_ref().map(|q| poly.eval(q));
            Ok(QueryAnswer {
                description: format!(
                    "parabolic index polynomial for {} with Levi nodes {:?}",
                    qf.query.type_label,
                    qf.query
                        .parabolic_subset
                        .iter()
                        .map(|i| format!("a{}", i + 1))
                        .collect::<Vec<_>>()
                ),
                polynomial: poly,
                value_at_q,
            })
        }
        QueryKind::Chi => {
            let ChiResult {
                polynomial,
                value_at_q,
                classes_meeting_coset,
            } = chi_semisimple(&qf.query)?;
            Ok(QueryAnswer {
                description: format!(
                    "semisimple character value for {} ({} Weyl classes meet the coset)",
                    qf.query.type_label, classes_meeting_coset
                ),
                polynomial,
                value_at_q,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_run_borel_index() {
        let qf = parse_query("type: A1\nkind: index\nparabolic:\n").unwrap();
        let ans = run_query(&qf).unwrap();
        assert_eq!(ans.polynomial.to_string(), "q + 1");
    }

    #[test]
    fn parse_chi_query() {
        let qf = parse_query(
            "type: A2\nkind: chi\nJ: a1\nw: identity\nparabolic: a2\nq: 3\n",
        )
        .unwrap();
        let ans = run_query(&qf).unwrap();
        assert_eq!(ans.value_at_q, Some(BigInt::from(5)));
    }

    #[test]
    fn bad_keys_are_rejected() {
        assert!(parse_query("type: A2\nwobble: 3\n").is_err());
        assert!(parse_query("kind: chi\n").is_err());
    }
}
