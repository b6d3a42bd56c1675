//! Conjugacy class inventories with certified completeness.

use crate::backtrack::{centralizer_generators, conjugating_element_adapted, search_chain_for};
use num_bigint::BigUint;
use num_traits::Zero;
#[cfg(test)]
use num_traits::One;
use perm_core::{Error, GroupHandle, Permutation, Result, RngState, StabilizerChain};
use std::collections::HashMap;

/// One conjugacy class: representative, exact size and centralizer order,
/// and the fixed point count of the class in the group's action.
#[derive(Clone)]
pub struct ConjClassRecord {
    pub representative: Permutation,
    pub element_order: u64,
    pub class_size: BigUint,
    pub centralizer_order: BigUint,
    pub fixed_point_count: usize,
}

impl ConjClassRecord {
    /// Short label like `3b`: element order plus position among classes of
    /// the same order.
    pub fn label(&self, position: usize) -> String {
        format!("{}{}", self.element_order, (b'a' + position as u8) as char)
    }
}

/// A list of pairwise non-conjugate classes. When `complete` holds, the
/// class sizes of a full enumeration sum to the group order exactly.
#[derive(Clone)]
pub struct ClassInventory {
    pub group_order: BigUint,
    pub degree: usize,
    pub records: Vec<ConjClassRecord>,
    pub complete: bool,
    pub method: String,
}

impl ClassInventory {
    /// Records of prime element order only.
    pub fn prime_order_records(&self) -> Vec<&ConjClassRecord> {
        self.records.iter().filter(|r| is_prime(r.element_order)).collect()
    }

    /// Number of elements of order exactly `r`, requiring completeness.
    pub fn count_elements_of_order(&self, r: u64) -> Result<BigUint> {
        if !self.complete {
            return Err(Error::State(
                "element counts require a complete inventory".into(),
            ));
        }
        let mut total = BigUint::zero();
        for rec in &self.records {
            if rec.element_order == r {
                total += &rec.class_size;
            }
        }
        Ok(total)
    }

    /// Sum of class_size * fixed_point_count over all classes; equals
    /// |G| * (number of orbits) by the orbit-counting identity.
    pub fn burnside_sum(&self) -> Result<BigUint> {
        if !self.complete {
            return Err(Error::State("orbit counting requires a complete inventory".into()));
        }
        let mut total = BigUint::zero();
        for rec in &self.records {
            total += &rec.class_size * BigUint::from(rec.fixed_point_count);
        }
        Ok(total)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Budgets for class enumeration.
#[derive(Clone, Copy)]
pub struct InventoryBudget {
    pub max_group_order: u64,
    pub max_degree: usize,
    pub max_samples: usize,
}

impl Default for InventoryBudget {
    fn default() -> Self {
        InventoryBudget {
            max_group_order: 1_000_000_000_000,
            max_degree: 2000,
            max_samples: 400_000,
        }
    }
}

/// Enumerates the conjugacy classes of `group`.
///
/// Random elements are sampled and closed under power maps; each candidate
/// is classified against the known records by invariants and a backtrack
/// conjugacy test, and new records get exact class sizes from a centralizer
/// search. The run is complete when the class sizes sum to the group order.
/// With `prime_only`, the certified full inventory is filtered to classes of
/// prime element order.
pub fn class_inventory(
    group: &GroupHandle,
    prime_only: bool,
    budget: InventoryBudget,
    seed: u64,
) -> Result<ClassInventory> {
    let order = group.order().clone();
    if order > BigUint::from(budget.max_group_order) || group.degree() > budget.max_degree {
        return Err(Error::Resource(format!(
            "group of order {order} on {} points exceeds the class enumeration budget; \
             import an external class table instead",
            group.degree()
        )));
    }
    let degree = group.degree();
    let chain = group.chain();
    let gens = group.generators();
    let gen_invs: Vec<Permutation> = gens.iter().map(|g| g.inverse()).collect();

    // Small classes are enumerated outright by a conjugation orbit walk;
    // membership then costs a hash lookup, which matters for classes like
    // fixed-point-free involutions whose backtrack searches branch heavily.
    // Large classes have small centralizers and fast backtracks instead.
    const ORBIT_CAP: usize = 100_000;
    enum Members {
        /// sorted double hashes of every class element
        Enumerated(Vec<u128>),
        /// chain adapted to the representative, for backtrack tests
        Backtrack(StabilizerChain),
    }
    let hash2 = |p: &Permutation| -> u128 {
        let mut a = 0xcbf29ce484222325u64;
        let mut b = 0x9e3779b97f4a7c15u64;
        for &i in p.images() {
            a = (a ^ i as u64).wrapping_mul(0x100000001b3);
            b = (b ^ i as u64).wrapping_mul(0xff51afd7ed558ccd);
            b = b.rotate_left(23);
        }
        (a as u128) << 64 | b as u128
    };
    // conjugation orbit of z, or None if it exceeds the cap
    let enumerate_class = |z: &Permutation| -> Option<Vec<u128>> {
        let mut hashes: Vec<u128> = vec![hash2(z)];
        let mut set: std::collections::HashSet<u128> = hashes.iter().copied().collect();
        let mut queue: Vec<Permutation> = vec![z.clone()];
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head].clone();
            head += 1;
            for (g, gi) in gens.iter().zip(&gen_invs) {
                let c = gi.then(&e).then(g);
                let h = hash2(&c);
                if set.insert(h) {
                    if set.len() > ORBIT_CAP {
                        return None;
                    }
                    hashes.push(h);
                    queue.push(c);
                }
            }
        }
        hashes.sort_unstable();
        Some(hashes)
    };

    let mut records: Vec<ConjClassRecord> = Vec::new();
    let mut members: Vec<Members> = Vec::new();
    let mut by_invariant: HashMap<(u64, Vec<usize>), Vec<usize>> = HashMap::new();
    let mut sum = BigUint::zero();
    let mut rng = RngState::from_seed(seed ^ 0x434c415353);

    let mut classify_queue: Vec<Permutation> = vec![Permutation::identity(degree)];
    for g in gens {
        classify_queue.push(g.clone());
    }
    let mut samples = 0usize;
    loop {
        while let Some(z) = classify_queue.pop() {
            let inv_key = (z.order(), z.cycle_type());
            let bucket = by_invariant.entry(inv_key.clone()).or_default();
            let mut found = false;
            let zh = hash2(&z);
            for &ri in bucket.iter() {
                let hit = match &members[ri] {
                    Members::Enumerated(hashes) => hashes.binary_search(&zh).is_ok(),
                    Members::Backtrack(sc) => {
                        conjugating_element_adapted(sc, &records[ri].representative, &z)?
                            .is_some()
                    }
                };
                if hit {
                    found = true;
                    break;
                }
            }
            if found {
                continue;
            }
            // new class
            let (class_size, member_data) = match enumerate_class(&z) {
                Some(hashes) => (BigUint::from(hashes.len()), Members::Enumerated(hashes)),
                None => {
                    let c_gens = centralizer_generators(chain, gens, &z, seed)?;
                    let c_chain = StabilizerChain::build(degree, &c_gens, seed)?;
                    (
                        &order / c_chain.order(),
                        Members::Backtrack(search_chain_for(chain, gens, &z, seed)?),
                    )
                }
            };
            let centralizer_order = &order / &class_size;
            if &centralizer_order * &class_size != order {
                return Err(Error::Internal(
                    "class size does not divide the group order".into(),
                ));
            }
            sum += &class_size;
            let rec = ConjClassRecord {
                element_order: z.order(),
                class_size,
                centralizer_order,
                fixed_point_count: z.fixed_point_count(),
                representative: z.clone(),
            };
            bucket.push(records.len());
            members.push(member_data);
            records.push(rec);
            if sum > order {
                return Err(Error::Internal(
                    "class sizes exceed the group order; a class was undercounted".into(),
                ));
            }
            // powers of a new representative reach the power-map closure
            let ord = z.order();
            for k in 2..ord {
                classify_queue.push(z.pow(k));
            }
        }
        if sum == order {
            break;
        }
        if samples >= budget.max_samples {
            return Err(Error::Resource(format!(
                "class discovery did not complete within {} samples (found {} classes covering {sum} of {order})",
                budget.max_samples,
                records.len()
            )));
        }
        samples += 1;
        classify_queue.push(chain.random_element(&mut rng));
    }

    records.sort_by(|a, b| {
        (a.element_order, &a.class_size, a.representative.images())
            .cmp(&(b.element_order, &b.class_size, b.representative.images()))
    });
    let method = format!("random sampling with power closure, {samples} samples, certified by class size sum");
    let records = if prime_only {
        records
            .into_iter()
            .filter(|r| is_prime(r.element_order))
            .collect()
    } else {
        records
    };
    Ok(ClassInventory {
        group_order: order,
        degree,
        records,
        complete: true,
        method,
    })
}

/// Exact size of the conjugacy class of `x` via a centralizer search.
pub fn class_size(group: &GroupHandle, x: &Permutation, seed: u64) -> Result<BigUint> {
    if !group.contains(x)? {
        return Err(Error::Input("element is not in the group".into()));
    }
    let c_gens = centralizer_generators(group.chain(), group.generators(), x, seed)?;
    let c_chain = StabilizerChain::build(group.degree(), &c_gens, seed)?;
    Ok(group.order() / c_chain.order())
}

/// Brute-force enumeration of every element of a small group, the test
/// oracle for the randomized inventory path.
pub fn all_elements(group: &GroupHandle, limit: usize) -> Result<Vec<Permutation>> {
    if group.order() > &BigUint::from(limit) {
        return Err(Error::Resource(format!(
            "group order {} exceeds the brute force limit {limit}",
            group.order()
        )));
    }
    let mut out = vec![Permutation::identity(group.degree())];
    let mut seen: std::collections::HashSet<Vec<u32>> =
        out.iter().map(|p| p.images().to_vec()).collect();
    let mut head = 0;
    while head < out.len() {
        let e = out[head].clone();
        head += 1;
        for g in group.generators() {
            let f = e.then(g);
            if seen.insert(f.images().to_vec()) {
                out.push(f);
            }
        }
    }
    Ok(out)
}
