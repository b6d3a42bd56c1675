use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::perm::Permutation;
use num_bigint::BigUint;
use std::collections::HashMap;

/// The action of a group on the right cosets of a subgroup.
pub struct CosetActionResult {
    /// The image of the acting group on coset points (point 0 is the coset of
    /// the subgroup itself). Not assumed faithful.
    pub quotient_group: GroupHandle,
    pub index: BigUint,
    /// Canonical coset representatives, indexed by quotient point.
    pub point_to_coset: Vec<Permutation>,
    /// True iff the quotient has the same order as the acting group.
    pub faithful: bool,
}

/// Canonical representative of the coset `H*g`: the element `h*g` whose image
/// tuple of the chain's base points is lexicographically least. Determined by
/// walking the chain and picking, per level, the orbit point with least image.
pub fn canonical_coset_rep(h_chain: &StabilizerChain, g: &Permutation) -> Permutation {
    let mut cur = g.clone();
    for level in h_chain.levels() {
        let mut best_point = level.beta;
        let mut best_image = cur.apply(level.beta);
        for &p in level.orbit() {
            let img = cur.apply(p);
            if img < best_image {
                best_image = img;
                best_point = p;
            }
        }
        if best_point != level.beta {
            cur = level.representative(best_point).unwrap().then(&cur);
        }
    }
    cur
}

/// Builds the transitive action of `group` on the cosets of `subgroup`.
///
/// The subgroup is given by generators claimed to lie in `group`; the claim
/// is verified by sifting. Fails with a resource error when the index
/// exceeds `index_budget`.
pub fn coset_action(
    group: &GroupHandle,
    subgroup: &GroupHandle,
    index_budget: usize,
    seed: u64,
) -> Result<CosetActionResult> {
    if group.degree() != subgroup.degree() {
        return Err(Error::Input(format!(
            "degree mismatch: {} vs {}",
            group.degree(),
            subgroup.degree()
        )));
    }
    for gen in subgroup.generators() {
        if !group.contains(gen)? {
            return Err(Error::Input(format!(
                "subgroup generator {gen} is not an element of {}",
                group.name()
            )));
        }
    }
    let index = group.order() / subgroup.order();
    if index > BigUint::from(index_budget) {
        return Err(Error::Resource(format!(
            "index {index} exceeds budget {index_budget}"
        )));
    }
    let index_usize: usize = index.to_string().parse().unwrap();

    let h_chain = subgroup.chain();
    let mut reps: Vec<Permutation> = Vec::with_capacity(index_usize);
    let mut by_key: HashMap<Vec<u32>, usize> = HashMap::with_capacity(index_usize * 2);
    let e = canonical_coset_rep(h_chain, &Permutation::identity(group.degree()));
    by_key.insert(e.images().to_vec(), 0);
    reps.push(e);

    let gens = group.generators();
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        for (gi, s) in gens.iter().enumerate() {
            let c = canonical_coset_rep(h_chain, &r.then(s));
            let next = match by_key.get(c.images()) {
                Some(&i) => i,
                None => {
                    let i = reps.len();
                    by_key.insert(c.images().to_vec(), i);
                    reps.push(c);
                    i
                }
            };
            images[gi].push(next as u32);
        }
        head += 1;
    }
    if reps.len() != index_usize {
        return Err(Error::Internal(format!(
            "coset enumeration found {} cosets, expected {index_usize}",
            reps.len()
        )));
    }

    let quotient_degree = reps.len();
    let mut quotient_gens = Vec::with_capacity(gens.len());
    for imgs in images {
        quotient_gens.push(Permutation::from_images(imgs)?);
    }
    let name = format!("{}_on_cosets_of_{}", group.name(), subgroup.name());
    let quotient_group = GroupHandle::new(quotient_degree, &name, quotient_gens, seed)?;
    let faithful = quotient_group.order() == group.order();
    Ok(CosetActionResult {
        quotient_group,
        index,
        point_to_coset: reps,
        faithful,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::load_group_str;

    fn s4() -> GroupHandle {
        load_group_str("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 0).unwrap()
    }

    #[test]
    fn s4_on_cosets_of_point_stabilizer_is_natural() {
        let g = s4();
        let h = g.pointwise_stabilizer(&[0], 0).unwrap();
        let act = coset_action(&g, &h, 1_000_000, 0).unwrap();
        assert_eq!(act.index, BigUint::from(4u32));
        assert_eq!(act.quotient_group.degree(), 4);
        assert!(act.faithful);
        assert!(act.quotient_group.is_transitive());
        // stabilizer of point 0 has the order of H
        let stab0 = act.quotient_group.pointwise_stabilizer(&[0], 0).unwrap();
        assert_eq!(stab0.order(), h.order());
    }

    #[test]
    fn non_subgroup_is_rejected() {
        let g = load_group_str("degree: 4\nname: A4\n1 2 0 3\n0 2 3 1\n", 0).unwrap();
        let h = load_group_str("degree: 4\nname: C2\n1 0 2 3\n", 0).unwrap();
        assert!(coset_action(&g, &h, 1_000_000, 0).is_err());
    }

    #[test]
    fn unfaithful_action_is_reported() {
        // S4 on cosets of A4: degree 2, kernel A4
        let g = s4();
        let h = load_group_str("degree: 4\nname: A4\n1 2 0 3\n0 2 3 1\n", 0).unwrap();
        let act = coset_action(&g, &h, 1_000_000, 0).unwrap();
        assert_eq!(act.index, BigUint::from(2u32));
        assert!(!act.faithful);
        assert_eq!(act.quotient_group.order(), &BigUint::from(2u32));
    }

    #[test]
    fn index_budget_is_enforced() {
        let g = s4();
        let h = GroupHandle::trivial(4, "1").unwrap();
        assert!(matches!(
            coset_action(&g, &h, 10, 0),
            Err(Error::Resource(_))
        ));
    }
}
