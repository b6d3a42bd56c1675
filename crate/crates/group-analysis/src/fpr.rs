//! Fixed point ratios, computed two independent ways: by counting fixed
//! points in the action, and by fusing subgroup classes into group classes.

use crate::backtrack::conjugating_element;
use crate::classes::{class_size, ClassInventory};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use perm_core::{Error, GroupHandle, Permutation, Result};

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Fixed-point route: the fraction of points of the action fixed by `x`.
pub fn fpr_by_fixes(x: &Permutation) -> BigRational {
    ratio(
        BigUint::from(x.fixed_point_count()),
        BigUint::from(x.degree()),
    )
}

/// How the prime-order classes of a subgroup fuse into group classes.
pub struct FusionMap {
    /// (subgroup record index, group record index)
    pub assignments: Vec<(usize, usize)>,
    /// per group record index: the summed subgroup class sizes landing in it,
    /// i.e. the intersection of the group class with the subgroup
    pub intersection_sizes: Vec<BigUint>,
}

/// Classifies every prime-order class of `sub_inv` into the classes of
/// `group_inv` by conjugacy tests in the big group.
pub fn fuse_classes(
    group: &GroupHandle,
    group_inv: &ClassInventory,
    sub_inv: &ClassInventory,
    seed: u64,
) -> Result<FusionMap> {
    let mut assignments = Vec::new();
    let mut intersection_sizes = vec![BigUint::zero(); group_inv.records.len()];
    for (si, srec) in sub_inv.records.iter().enumerate() {
        if !crate::classes::is_prime(srec.element_order) {
            continue;
        }
        let mut target = None;
        for (gi, grec) in group_inv.records.iter().enumerate() {
            if grec.element_order != srec.element_order
                || grec.representative.cycle_type() != srec.representative.cycle_type()
            {
                continue;
            }
            if conjugating_element(
                group.chain(),
                group.generators(),
                &srec.representative,
                &grec.representative,
                seed,
            )?
            .is_some()
            {
                target = Some(gi);
                break;
            }
        }
        let gi = target.ok_or_else(|| {
            Error::Internal(format!(
                "subgroup class of order {} does not fuse into any group class",
                srec.element_order
            ))
        })?;
        intersection_sizes[gi] += &srec.class_size;
        assignments.push((si, gi));
    }
    Ok(FusionMap {
        assignments,
        intersection_sizes,
    })
}

/// Fusion route for the fixed point ratio: |x^G meet H| / |x^G|, computed by
/// classifying the prime-order classes of H into G-classes and summing the
/// sizes that land in the class of `x`.
pub fn fpr_by_fusion(
    group: &GroupHandle,
    sub_inv: &ClassInventory,
    x: &Permutation,
    seed: u64,
) -> Result<BigRational> {
    if x.is_identity() {
        return Ok(BigRational::one());
    }
    if !crate::classes::is_prime(x.order()) {
        return Err(Error::Input(format!(
            "the fusion route counts prime-order classes; element has order {}",
            x.order()
        )));
    }
    let xg = class_size(group, x, seed)?;
    let mut intersection = BigUint::zero();
    for srec in &sub_inv.records {
        if srec.element_order != x.order()
            || srec.representative.cycle_type() != x.cycle_type()
        {
            continue;
        }
        if conjugating_element(
            group.chain(),
            group.generators(),
            &srec.representative,
            x,
            seed,
        )?
        .is_some()
        {
            intersection += &srec.class_size;
        }
    }
    Ok(ratio(intersection, xg))
}
