//! Conjugate-intersection witnesses: tuples of group elements whose
//! conjugates of a subgroup intersect trivially, found through the coset
//! action and verified independently in a paired representation.

use crate::tree::PrefixTree;
use num_bigint::BigUint;
use num_traits::One;
use perm_core::{
    coset_action, CosetActionResult, Error, GroupHandle, Permutation, Result, RngState,
    StabilizerChain,
};

/// Elements x_1, ..., x_{k-1} with H meet H^{x_1} meet ... trivial (the
/// subgroup itself is the k-th term), plus the verified intersection order.
pub struct IntersectionWitness {
    pub conjugators: Vec<Permutation>,
    pub intersection_order: BigUint,
    /// the coset points realizing the witness (point 0 is the subgroup)
    pub points: Vec<u32>,
}

pub enum WitnessOutcome {
    Found(IntersectionWitness),
    /// evidence only, never a lower-bound certificate
    NotFound { trials: u64 },
}

/// Extends each generator to act on original points plus coset points, so
/// pointwise stabilizers of coset points are computed inside the original
/// representation: an independent route to the intersection order.
fn paired_action(group: &GroupHandle, act: &CosetActionResult) -> Result<GroupHandle> {
    let n = group.degree();
    let quotient = &act.quotient_group;
    let m = quotient.degree();
    let gens: Vec<Permutation> = group
        .generators()
        .iter()
        .zip(quotient.generators())
        .map(|(g, q)| {
            let mut images: Vec<u32> = g.images().to_vec();
            images.extend(q.images().iter().map(|&i| i + n as u32));
            Permutation::from_images(images)
        })
        .collect::<Result<_>>()?;
    GroupHandle::new(n + m, &format!("{}_paired", group.name()), gens, 7)
}

/// Intersection order of the subgroup conjugates named by coset `points`,
/// computed in the paired representation (the group side of the pointwise
/// stabilizer of the coset points).
fn intersection_order_paired(
    paired: &GroupHandle,
    n: usize,
    points: &[u32],
    seed: u64,
) -> Result<BigUint> {
    let shifted: Vec<u32> = std::iter::once(0u32)
        .chain(points.iter().copied())
        .map(|p| p + n as u32)
        .collect();
    let chain = StabilizerChain::build_with_base_hint(
        paired.degree(),
        paired.generators(),
        &shifted,
        seed,
    )?;
    Ok(chain.level_order(shifted.len()))
}

/// Searches random conjugator tuples for a trivial k-fold intersection of
/// conjugates of `subgroup`. Success is verified exactly two ways; failure
/// after the trial budget is reported as evidence only.
pub fn conjugate_intersection_witness(
    group: &GroupHandle,
    subgroup: &GroupHandle,
    k: usize,
    trials: u64,
    index_budget: usize,
    seed: u64,
) -> Result<WitnessOutcome> {
    if trials == 0 {
        return Err(Error::Input("trial budget must be positive".into()));
    }
    if k == 0 {
        return Err(Error::Input("k must be positive".into()));
    }
    let act = coset_action(group, subgroup, index_budget, seed)?;
    if !act.faithful {
        return Err(Error::Input(
            "the subgroup contains a nontrivial normal subgroup of the group; \
             no intersection of its conjugates can be trivial"
                .into(),
        ));
    }
    let quotient = &act.quotient_group;
    let m = quotient.degree();
    let mut tree = PrefixTree::new(quotient, seed);
    let mut rng = RngState::from_seed(seed ^ 0x57495421);
    let mut tuple = vec![0u32; k];
    for _ in 0..trials {
        // the first point stays 0: the subgroup itself is the first term
        for t in tuple.iter_mut().skip(1) {
            *t = rng.below(m as u64) as u32;
        }
        let ord = tree.tuple_stabilizer_order(&tuple)?;
        if ord.is_one() {
            let points: Vec<u32> = tuple[1..].to_vec();
            let conjugators: Vec<Permutation> = points
                .iter()
                .map(|&p| act.point_to_coset[p as usize].clone())
                .collect();
            // independent verification in the paired representation
            let paired = paired_action(group, &act)?;
            let paired_ord = intersection_order_paired(&paired, group.degree(), &points, seed)?;
            if !paired_ord.is_one() {
                return Err(Error::Internal(format!(
                    "witness failed re-verification: intersection order {paired_ord}"
                )));
            }
            return Ok(WitnessOutcome::Found(IntersectionWitness {
                conjugators,
                intersection_order: paired_ord,
                points,
            }));
        }
    }
    Ok(WitnessOutcome::NotFound { trials })
}

/// A base of the coset action, as a witness: the points other than 0 name
/// the conjugators. The converse direction is the identity on data.
pub fn base_to_witness(
    group: &GroupHandle,
    subgroup: &GroupHandle,
    base_points: &[u32],
    index_budget: usize,
    seed: u64,
) -> Result<IntersectionWitness> {
    let act = coset_action(group, subgroup, index_budget, seed)?;
    let mut points: Vec<u32> = base_points.to_vec();
    points.retain(|&p| p != 0);
    let conjugators: Vec<Permutation> = points
        .iter()
        .map(|&p| act.point_to_coset[p as usize].clone())
        .collect();
    let paired = paired_action(group, &act)?;
    let ord = intersection_order_paired(&paired, group.degree(), &points, seed)?;
    Ok(IntersectionWitness {
        conjugators,
        intersection_order: ord,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use perm_core::load_group_str;

    #[test]
    fn all_points_of_a_faithful_transitive_action_witness() {
        // k = |Omega| always succeeds: all points form a base
        let g = load_group_str("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 0).unwrap();
        let h = g.pointwise_stabilizer(&[0], 0).unwrap();
        match conjugate_intersection_witness(&g, &h, 4, 50, 1000, 3).unwrap() {
            WitnessOutcome::Found(w) => {
                assert!(w.intersection_order.is_one());
                assert_eq!(w.conjugators.len(), 3);
                // direct check: the conjugates intersect trivially
                for x in &w.conjugators {
                    assert!(g.contains(x).unwrap());
                }
            }
            WitnessOutcome::NotFound { .. } => panic!("expected a witness"),
        }
    }

    #[test]
    fn impossible_k_reports_not_found() {
        // S4 / S3: base size of the natural action is 3, so k = 2 (one
        // conjugator beyond H) can never be trivial
        let g = load_group_str("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 0).unwrap();
        let h = g.pointwise_stabilizer(&[0], 0).unwrap();
        match conjugate_intersection_witness(&g, &h, 2, 200, 1000, 4).unwrap() {
            WitnessOutcome::NotFound { trials } => assert_eq!(trials, 200),
            WitnessOutcome::Found(_) => panic!("no 2-fold witness exists for S4/S3"),
        }
    }
}
