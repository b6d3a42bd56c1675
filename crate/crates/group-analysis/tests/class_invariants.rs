//! Inventory invariants across a spread of groups, checked against brute
//! force where the order permits.

use group_analysis::{
    all_elements, class_inventory, conjugating_element, fpr_by_fixes, fpr_by_fusion,
    InventoryBudget,
};
use num_bigint::BigUint;
use perm_core::{GroupHandle, Permutation, RngState};

fn handle(degree: usize, name: &str, cycles: &[&[Vec<u32>]]) -> GroupHandle {
    let gens: Vec<Permutation> = cycles
        .iter()
        .map(|c| Permutation::from_cycles(degree, c).unwrap())
        .collect();
    GroupHandle::new(degree, name, gens, 0).unwrap()
}

fn test_groups() -> Vec<GroupHandle> {
    vec![
        handle(5, "S5", &[&[vec![0, 1]], &[vec![0, 1, 2, 3, 4]]]),
        handle(6, "A6", &[&[vec![0, 1, 2]], &[vec![1, 2, 3, 4, 5]]]),
        handle(7, "D7", &[&[vec![0, 1, 2, 3, 4, 5, 6]], &[vec![1, 6], vec![2, 5], vec![3, 4]]]),
        handle(8, "C8", &[&[vec![0, 1, 2, 3, 4, 5, 6, 7]]]),
    ]
}

#[test]
fn orbit_stabilizer_identity_and_completeness() {
    for g in test_groups() {
        let inv = class_inventory(&g, false, InventoryBudget::default(), 11).unwrap();
        assert!(inv.complete);
        let total: BigUint = inv.records.iter().map(|r| r.class_size.clone()).sum();
        assert_eq!(&total, g.order(), "{}", g.name());
        for rec in &inv.records {
            assert_eq!(&rec.class_size * &rec.centralizer_order, *g.order());
            assert_eq!(rec.representative.order(), rec.element_order);
            assert!(rec.fixed_point_count <= g.degree());
        }
    }
}

#[test]
fn inventory_matches_brute_force_class_count() {
    for g in test_groups() {
        let inv = class_inventory(&g, false, InventoryBudget::default(), 5).unwrap();
        let elements = all_elements(&g, 100_000).unwrap();
        // count classes by brute conjugation
        let mut assigned = vec![false; elements.len()];
        let mut brute_classes = 0;
        for i in 0..elements.len() {
            if assigned[i] {
                continue;
            }
            brute_classes += 1;
            for (j, e) in elements.iter().enumerate() {
                if !assigned[j]
                    && elements
                        .iter()
                        .any(|t| &t.inverse().then(&elements[i]).then(t) == e)
                {
                    assigned[j] = true;
                }
            }
        }
        assert_eq!(inv.records.len(), brute_classes, "{}", g.name());
    }
}

#[test]
fn conjugacy_decisions_match_brute_force() {
    let mut rng = RngState::from_seed(2);
    for g in test_groups() {
        let elements = all_elements(&g, 100_000).unwrap();
        for _ in 0..25 {
            let x = g.chain().random_element(&mut rng);
            let y = g.chain().random_element(&mut rng);
            let truth = elements.iter().any(|t| t.inverse().then(&x).then(t) == y);
            let found = conjugating_element(g.chain(), g.generators(), &x, &y, 0).unwrap();
            assert_eq!(found.is_some(), truth, "{}", g.name());
            if let Some(t) = found {
                assert_eq!(t.inverse().then(&x).then(&t), y);
                assert!(g.contains(&t).unwrap());
            }
        }
    }
}

#[test]
fn fpr_pipelines_agree_on_point_stabilizer_pairs() {
    for g in test_groups() {
        if !g.is_transitive() {
            continue;
        }
        let h = g.pointwise_stabilizer(&[0], 3).unwrap();
        let g_inv = class_inventory(&g, true, InventoryBudget::default(), 7).unwrap();
        let h_inv = class_inventory(&h, true, InventoryBudget::default(), 8).unwrap();
        for rec in &g_inv.records {
            let fixes = fpr_by_fixes(&rec.representative);
            let fusion = fpr_by_fusion(&g, &h_inv, &rec.representative, 9).unwrap();
            assert_eq!(fixes, fusion, "{} order {}", g.name(), rec.element_order);
        }
    }
}
