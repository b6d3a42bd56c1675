//! The non-base probability Q(G,c): exact by orbit-collapsed counting, and
//! Monte Carlo with a Wilson interval. Tuples are ordered with repetition
//! (independent uniform points).

use crate::tree::PrefixTree;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use perm_core::{Error, GroupHandle, Result, RngState};
use std::collections::HashMap;

/// Exact probability that a uniformly random `c`-tuple of points fails to
/// be a base. Counts over the canonical tree: fixed points of a running
/// stabilizer contribute a self-loop, other orbits descend.
pub fn q_exact(group: &GroupHandle, c: usize, budget: u64, seed: u64) -> Result<BigRational> {
    let n = group.degree();
    let total = BigUint::from(n).pow(c as u32);
    if total > BigUint::from(budget) {
        return Err(Error::Resource(format!(
            "{n}^{c} tuples exceed the exact enumeration budget {budget}; use Monte Carlo"
        )));
    }
    let mut tree = PrefixTree::new(group, seed);
    let mut memo: HashMap<(usize, usize), BigUint> = HashMap::new();
    let root = tree.root();
    let non_base = count_non_base(&mut tree, root, c, &mut memo)?;
    Ok(BigRational::new(BigInt::from(non_base), BigInt::from(total)))
}

/// Number of `remaining`-tuples extending this node's prefix class whose
/// full stabilizer stays nontrivial.
fn count_non_base(
    tree: &mut PrefixTree,
    node: usize,
    remaining: usize,
    memo: &mut HashMap<(usize, usize), BigUint>,
) -> Result<BigUint> {
    if tree.is_trivial(node) {
        return Ok(BigUint::zero());
    }
    if remaining == 0 {
        return Ok(BigUint::one());
    }
    if let Some(v) = memo.get(&(node, remaining)) {
        return Ok(v.clone());
    }
    // fixed points self-loop; moved orbits descend
    let mut acc = BigUint::from(tree.fixed_count(node)) * count_non_base(tree, node, remaining - 1, memo)?;
    for (rep, size) in tree.orbits(node, false) {
        let child = tree.child(node, rep)?;
        acc += BigUint::from(size) * count_non_base(tree, child, remaining - 1, memo)?;
    }
    memo.insert((node, remaining), acc.clone());
    Ok(acc)
}

/// Monte Carlo estimate of Q(G,c) with a 95% Wilson interval.
pub struct MonteCarloEstimate {
    pub trials: u64,
    pub non_base: u64,
    pub estimate: f64,
    pub interval: (f64, f64),
    /// one sampled tuple that was a base, if any trial produced one
    pub base_example: Option<Vec<u32>>,
}

pub fn q_montecarlo(
    group: &GroupHandle,
    c: usize,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::Input("at least one trial is required".into()));
    }
    let n = group.degree() as u64;
    let mut tree = PrefixTree::new(group, seed);
    let mut rng = RngState::from_seed(seed);
    let mut non_base = 0u64;
    let mut base_example = None;
    let mut tuple = vec![0u32; c];
    for _ in 0..trials {
        for t in tuple.iter_mut() {
            *t = rng.below(n) as u32;
        }
        let ord = tree.tuple_stabilizer_order(&tuple)?;
        if ord.is_one() {
            if base_example.is_none() {
                base_example = Some(tuple.clone());
            }
        } else {
            non_base += 1;
        }
    }
    let (estimate, interval) = wilson(non_base, trials);
    Ok(MonteCarloEstimate {
        trials,
        non_base,
        estimate,
        interval,
        base_example,
    })
}

/// 95% Wilson score interval for a binomial proportion.
pub fn wilson(successes: u64, trials: u64) -> (f64, (f64, f64)) {
    let z = 1.959963984540054_f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    (p, ((center - half).max(0.0), (center + half).min(1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use perm_core::load_group_str;

    fn s3() -> GroupHandle {
        load_group_str("degree: 3\nname: S3\n1 0 2\n1 2 0\n", 0).unwrap()
    }

    /// brute-force oracle: enumerate all tuples and test stabilizers by
    /// filtering the element list
    fn q_brute(group: &GroupHandle, c: usize) -> BigRational {
        let n = group.degree();
        let elements = group_analysis::all_elements(group, 100_000).unwrap();
        let mut non_base = 0u64;
        let total = (n as u64).pow(c as u32);
        for code in 0..total {
            let mut tuple = Vec::with_capacity(c);
            let mut x = code;
            for _ in 0..c {
                tuple.push((x % n as u64) as u32);
                x /= n as u64;
            }
            let stab = elements
                .iter()
                .filter(|e| tuple.iter().all(|&p| e.apply(p) == p))
                .count();
            if stab > 1 {
                non_base += 1;
            }
        }
        BigRational::new(BigInt::from(non_base), BigInt::from(total))
    }

    #[test]
    fn trivial_group_never_fails() {
        let g = GroupHandle::trivial(4, "1").unwrap();
        for c in 0..4 {
            assert_eq!(q_exact(&g, c, 1_000_000_000, 0).unwrap(), BigRational::zero());
        }
    }

    #[test]
    fn s3_exact_values() {
        let g = s3();
        // every point stabilizer is nontrivial
        assert_eq!(q_exact(&g, 1, 1_000_000_000, 0).unwrap(), BigRational::one());
        // 3 of 27 triples are constant; all others are bases
        assert_eq!(
            q_exact(&g, 3, 1_000_000_000, 0).unwrap(),
            BigRational::new(1.into(), 9.into())
        );
        for c in 0..=4 {
            assert_eq!(q_exact(&g, c, 1_000_000_000, 0).unwrap(), q_brute(&g, c), "c={c}");
        }
    }

    #[test]
    fn exact_matches_brute_force_on_an_assortment() {
        for text in [
            "degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n",
            "degree: 4\nname: A4\n1 2 0 3\n0 2 3 1\n",
            "degree: 6\nname: D6\n1 2 3 4 5 0\n0 5 4 3 2 1\n",
            "degree: 5\nname: C5\n1 2 3 4 0\n",
        ] {
            let g = load_group_str(text, 0).unwrap();
            for c in 1..=3 {
                assert_eq!(
                    q_exact(&g, c, 1_000_000_000, 0).unwrap(),
                    q_brute(&g, c),
                    "{} c={c}",
                    g.name()
                );
            }
        }
    }

    #[test]
    fn exact_budget_is_enforced() {
        let g = s3();
        assert!(matches!(
            q_exact(&g, 30, 1_000_000_000, 0),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn monte_carlo_brackets_the_exact_value() {
        let g = s3();
        let mc = q_montecarlo(&g, 3, 100_000, 42).unwrap();
        let exact = 1.0 / 9.0;
        assert!(mc.interval.0 <= exact && exact <= mc.interval.1);
        assert!(mc.base_example.is_some());
        // determinism
        let mc2 = q_montecarlo(&g, 3, 100_000, 42).unwrap();
        assert_eq!(mc.non_base, mc2.non_base);
        // trivial group: estimate 0
        let t = GroupHandle::trivial(3, "1").unwrap();
        let mc = q_montecarlo(&t, 2, 100, 0).unwrap();
        assert_eq!(mc.non_base, 0);
        assert_eq!(mc.estimate, 0.0);
    }
}
