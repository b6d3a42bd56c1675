//! Base existence, greedy upper bounds, and exact minimal base size with
//! exhaustive lower-bound transcripts.

use crate::cert::{certify_base, BaseCertificate};
use crate::tree::PrefixTree;
use num_bigint::BigUint;
use num_traits::One;
use perm_core::{Error, GroupHandle, Result};

/// Record of an exhaustive search proving that no base of size `c` exists.
#[derive(Clone, Debug)]
pub struct LowerBoundTranscript {
    pub c: usize,
    /// `exhaustive-canonical` (orbit-collapsed tree) or `exhaustive-raw`
    pub method: String,
    pub tuples_examined: u64,
    pub orbit_reduction_used: bool,
    pub verdict: String,
}

/// Is the tuple a base? On success returns the certificate.
pub fn is_base(group: &GroupHandle, points: &[u32], seed: u64) -> Result<Option<BaseCertificate>> {
    for &p in points {
        if p as usize >= group.degree() {
            return Err(Error::Input(format!("point {p} out of range")));
        }
    }
    let stab = group.pointwise_stabilizer(points, seed)?;
    if stab.is_trivial() {
        Ok(Some(certify_base(group, points, seed)?))
    } else {
        Ok(None)
    }
}

/// Greedy base: repeatedly fix a point in a largest orbit of the running
/// stabilizer. Requires a faithful nontrivial action.
pub fn greedy_base(group: &GroupHandle, seed: u64) -> Result<BaseCertificate> {
    if group.is_trivial() {
        return Err(Error::Input("the trivial group has an empty base".into()));
    }
    let all: Vec<u32> = (0..group.degree() as u32).collect();
    let kernel = group.pointwise_stabilizer(&all, seed)?;
    if !kernel.is_trivial() {
        return Err(Error::Input(format!(
            "action is not faithful: kernel of order {}",
            kernel.order()
        )));
    }
    let mut tree = PrefixTree::new(group, seed);
    let mut node = tree.root();
    let mut points = Vec::new();
    while !tree.is_trivial(node) {
        let (rep, _) = tree
            .orbits(node, false)
            .into_iter()
            .max_by_key(|&(rep, size)| (size, std::cmp::Reverse(rep)))
            .expect("nontrivial stabilizer moves something");
        points.push(rep);
        node = tree.child(node, rep)?;
    }
    certify_base(group, &points, seed)
}

/// Node budget for exhaustive searches.
#[derive(Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 5_000_000 }
    }
}

enum Outcome {
    /// a base of this size was found
    Found(Vec<u32>),
    /// no base of size <= c exists; nodes examined
    None(u64),
    /// budget exhausted
    Out(u64),
}

/// DFS over the canonical tree for a prefix with trivial stabilizer within
/// `depth` more points. Prunes subtrees whose stabilizer order exceeds
/// degree^depth, which can never reach 1.
fn search_depth(
    tree: &mut PrefixTree,
    node: usize,
    depth: usize,
    nodes_left: &mut u64,
    examined: &mut u64,
) -> Result<Outcome> {
    if *nodes_left == 0 {
        return Ok(Outcome::Out(*examined));
    }
    *nodes_left -= 1;
    *examined += 1;
    if tree.is_trivial(node) {
        return Ok(Outcome::Found(tree.prefix(node).to_vec()));
    }
    if depth == 0 {
        return Ok(Outcome::None(*examined));
    }
    // order bound: each point divides the order by at most the degree
    let reachable = BigUint::from(tree.degree()).pow(depth as u32);
    if tree.order(node) > &reachable {
        return Ok(Outcome::None(*examined));
    }
    for (rep, _) in tree.orbits(node, false) {
        let child = tree.child(node, rep)?;
        match search_depth(tree, child, depth - 1, nodes_left, examined)? {
            Outcome::Found(p) => return Ok(Outcome::Found(p)),
            Outcome::Out(e) => return Ok(Outcome::Out(e)),
            Outcome::None(_) => {}
        }
    }
    Ok(Outcome::None(*examined))
}

/// Result of the exact minimal-base-size computation.
pub enum ExactBaseResult {
    Exact {
        base_size: usize,
        witness: BaseCertificate,
        lower: LowerBoundTranscript,
    },
    /// budget exhausted: only an interval is known
    Interval {
        lower_bound: usize,
        upper_bound: usize,
        witness: Option<BaseCertificate>,
        partial: Option<LowerBoundTranscript>,
    },
}

/// Exact minimal base size of a transitive group: a greedy witness seeds the
/// upper bound, then exhaustive canonical searches walk `c` downward until
/// no base of size `b - 1` exists.
pub fn minimal_base_size_exact(
    group: &GroupHandle,
    budget: SearchBudget,
    seed: u64,
) -> Result<ExactBaseResult> {
    if !group.is_transitive() {
        return Err(Error::Input(
            "exact base size requires a transitive action".into(),
        ));
    }
    if group.is_trivial() {
        return Err(Error::Input("the trivial group has an empty base".into()));
    }
    let greedy = greedy_base(group, seed)?;
    let mut best = greedy;
    let mut tree = PrefixTree::new(group, seed);
    let mut nodes_left = budget.max_nodes;
    loop {
        let c = best.size() - 1;
        let mut examined = 0u64;
        let root = tree.root();
        match search_depth(&mut tree, root, c, &mut nodes_left, &mut examined)? {
            Outcome::Found(points) => {
                // found a base of size <= c, tighten and keep going
                best = certify_base(group, &points, seed)?;
                if best.size() == 0 {
                    return Err(Error::Internal("empty base of a nontrivial group".into()));
                }
            }
            Outcome::None(examined) => {
                let lower = LowerBoundTranscript {
                    c,
                    method: "exhaustive-canonical".into(),
                    tuples_examined: examined,
                    orbit_reduction_used: true,
                    verdict: format!("no base of size {c} exists"),
                };
                return Ok(ExactBaseResult::Exact {
                    base_size: best.size(),
                    witness: best,
                    lower,
                });
            }
            Outcome::Out(examined) => {
                // counting bound: |G| <= degree^b
                let mut lo = 0usize;
                let mut pow = BigUint::one();
                while &pow < group.order() {
                    pow *= BigUint::from(group.degree());
                    lo += 1;
                }
                return Ok(ExactBaseResult::Interval {
                    lower_bound: lo,
                    upper_bound: best.size(),
                    witness: Some(best),
                    partial: Some(LowerBoundTranscript {
                        c,
                        method: "exhaustive-canonical".into(),
                        tuples_examined: examined,
                        orbit_reduction_used: true,
                        verdict: "budget exhausted; inexact".into(),
                    }),
                });
            }
        }
    }
}

/// Raw exhaustive check that no `c`-tuple over the full point set is a
/// base, with no orbit reduction. An independent oracle for the canonical
/// search on small groups.
pub fn no_base_of_size_raw(group: &GroupHandle, c: usize, seed: u64) -> Result<LowerBoundTranscript> {
    let n = group.degree();
    let total = (n as u64).checked_pow(c as u32).ok_or_else(|| {
        Error::Resource("raw enumeration overflow".into())
    })?;
    if total > 50_000_000 {
        return Err(Error::Resource(format!(
            "raw enumeration of {total} tuples is over budget"
        )));
    }
    let mut tuple = vec![0u32; c];
    let mut examined = 0u64;
    loop {
        examined += 1;
        let stab = group.pointwise_stabilizer(&tuple, seed)?;
        if stab.is_trivial() {
            return Err(Error::Input(format!(
                "tuple {tuple:?} is a base; no transcript exists"
            )));
        }
        // next tuple in lexicographic order
        let mut i = c;
        loop {
            if i == 0 {
                return Ok(LowerBoundTranscript {
                    c,
                    method: "exhaustive-raw".into(),
                    tuples_examined: examined,
                    orbit_reduction_used: false,
                    verdict: format!("no base of size {c} exists"),
                });
            }
            i -= 1;
            if tuple[i] + 1 < n as u32 {
                tuple[i] += 1;
                for t in tuple.iter_mut().skip(i + 1) {
                    *t = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use perm_core::{load_group_str, Permutation};

    fn handle(degree: usize, name: &str, gens: Vec<Permutation>) -> GroupHandle {
        GroupHandle::new(degree, name, gens, 0).unwrap()
    }

    #[test]
    fn greedy_on_cyclic_and_symmetric() {
        let c6 = handle(
            6,
            "C6",
            vec![Permutation::from_cycles(6, &[(0..6).collect()]).unwrap()],
        );
        assert_eq!(greedy_base(&c6, 0).unwrap().size(), 1);
        let s5 = load_group_str("degree: 5\nname: S5\n1 0 2 3 4\n1 2 3 4 0\n", 0).unwrap();
        assert_eq!(greedy_base(&s5, 0).unwrap().size(), 4);
    }

    #[test]
    fn greedy_rejects_trivial_group() {
        let g = handle(3, "triv", vec![Permutation::identity(3)]);
        assert!(greedy_base(&g, 0).is_err());
    }

    #[test]
    fn exact_base_size_of_s4_natural() {
        let s4 = load_group_str("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 0).unwrap();
        match minimal_base_size_exact(&s4, SearchBudget::default(), 0).unwrap() {
            ExactBaseResult::Exact { base_size, witness, lower } => {
                assert_eq!(base_size, 3);
                witness.verify(&s4, 1).unwrap();
                assert_eq!(lower.c, 2);
                assert!(lower.orbit_reduction_used);
            }
            _ => panic!("expected exact result"),
        }
    }

    #[test]
    fn exact_matches_raw_oracle_on_small_groups() {
        for (text, b) in [
            ("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 3usize),
            ("degree: 4\nname: A4\n1 2 0 3\n0 2 3 1\n", 2),
            ("degree: 5\nname: C5\n1 2 3 4 0\n", 1),
            ("degree: 6\nname: D6\n1 2 3 4 5 0\n0 5 4 3 2 1\n", 2),
        ] {
            let g = load_group_str(text, 0).unwrap();
            match minimal_base_size_exact(&g, SearchBudget::default(), 0).unwrap() {
                ExactBaseResult::Exact { base_size, lower, .. } => {
                    assert_eq!(base_size, b, "{}", g.name());
                    if b > 1 {
                        let raw = no_base_of_size_raw(&g, b - 1, 0).unwrap();
                        assert_eq!(raw.verdict, lower.verdict);
                    }
                }
                _ => panic!("expected exact"),
            }
        }
    }

    #[test]
    fn exhausted_budget_returns_an_interval() {
        let s6 = load_group_str("degree: 6\nname: S6\n1 0 2 3 4 5\n1 2 3 4 5 0\n", 0).unwrap();
        match minimal_base_size_exact(&s6, SearchBudget { max_nodes: 2 }, 0).unwrap() {
            ExactBaseResult::Interval { lower_bound, upper_bound, witness, partial } => {
                assert!(lower_bound <= upper_bound);
                assert_eq!(upper_bound, 5); // the greedy witness
                assert!(witness.is_some());
                assert!(partial.unwrap().verdict.contains("inexact"));
            }
            ExactBaseResult::Exact { .. } => panic!("two nodes cannot finish S6"),
        }
    }

    #[test]
    fn is_base_examples() {
        let s4 = load_group_str("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 0).unwrap();
        // all points of a faithful action form a base
        assert!(is_base(&s4, &[0, 1, 2, 3], 0).unwrap().is_some());
        // empty tuple of a nontrivial group is not
        assert!(is_base(&s4, &[], 0).unwrap().is_none());
        assert!(is_base(&s4, &[0, 1], 0).unwrap().is_none());
        assert!(is_base(&s4, &[9], 0).is_err());
    }
}
