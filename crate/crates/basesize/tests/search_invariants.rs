//! Cross-route invariants for the base machinery: canonical-tree stabilizer
//! orders against direct chains, certificate soundness, probability law
//! smoke tests, and the witness-base duality on the wreath example.

use basesize::{
    base_to_witness, conjugate_intersection_witness, minimal_base_size_exact, q_exact,
    qhat_from_inventory, ExactBaseResult, PrefixTree, SearchBudget, WitnessOutcome,
};
use group_analysis::{class_inventory, InventoryBudget};
use num_rational::BigRational;
use num_traits::One;
use perm_core::{coset_action, GroupHandle, Permutation, RngState};

fn s8() -> GroupHandle {
    GroupHandle::new(
        8,
        "S8",
        vec![
            Permutation::from_cycles(8, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(8, &[(0..8).collect()]).unwrap(),
        ],
        0,
    )
    .unwrap()
}

fn s4_wr_s2() -> GroupHandle {
    GroupHandle::new(
        8,
        "S4wrS2",
        vec![
            Permutation::from_cycles(8, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(8, &[vec![0, 1, 2, 3]]).unwrap(),
            Permutation::from_cycles(8, &[vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]).unwrap(),
        ],
        0,
    )
    .unwrap()
}

#[test]
fn canonical_tree_matches_direct_stabilizers_on_random_tuples() {
    let g = s8();
    let mut tree = PrefixTree::new(&g, 1);
    let mut rng = RngState::from_seed(33);
    for len in 0..=4usize {
        for _ in 0..10 {
            let tuple: Vec<u32> = (0..len).map(|_| rng.below(8) as u32).collect();
            let via_tree = tree.tuple_stabilizer_order(&tuple).unwrap();
            let direct = g.pointwise_stabilizer(&tuple, 2).unwrap();
            assert_eq!(&via_tree, direct.order(), "tuple {tuple:?}");
        }
    }
}

#[test]
fn probability_laws_on_the_wreath_action() {
    let g = s8();
    let h = s4_wr_s2();
    let action = coset_action(&g, &h, 1_000_000, 0).unwrap().quotient_group;
    let inv = class_inventory(&action, true, InventoryBudget::default(), 0).unwrap();
    let b = match minimal_base_size_exact(&action, SearchBudget::default(), 0).unwrap() {
        ExactBaseResult::Exact { base_size, .. } => base_size,
        _ => panic!("expected exact"),
    };
    assert_eq!(b, 5);
    let mut prev: Option<BigRational> = None;
    for c in 1..=5usize {
        let q = q_exact(&action, c, 1_000_000_000, 0).unwrap();
        let qhat = qhat_from_inventory(&inv, c).unwrap().total;
        assert!(q <= qhat, "c = {c}");
        assert_eq!(b <= c, q < BigRational::one(), "c = {c}");
        if let Some(p) = prev {
            assert!(q <= p);
        }
        prev = Some(q);
    }
}

#[test]
fn witness_base_duality_on_the_wreath_example() {
    let g = s8();
    let h = s4_wr_s2();
    // a size-5 base of the coset action yields 4 conjugators with trivial
    // 5-fold intersection
    let action = coset_action(&g, &h, 1_000_000, 0).unwrap().quotient_group;
    let witness_cert = match minimal_base_size_exact(&action, SearchBudget::default(), 0).unwrap() {
        ExactBaseResult::Exact { witness, .. } => witness,
        _ => panic!(),
    };
    let w = base_to_witness(&g, &h, &witness_cert.points, 1_000_000, 0).unwrap();
    assert!(w.intersection_order.is_one());
    assert_eq!(w.conjugators.len() + 1, 5);

    // and conversely, a found witness's points (plus 0) are a base
    match conjugate_intersection_witness(&g, &h, 5, 100_000, 1_000_000, 0).unwrap() {
        WitnessOutcome::Found(w) => {
            let mut points = vec![0u32];
            points.extend(&w.points);
            assert!(basesize::is_base(&action, &points, 0).unwrap().is_some());
        }
        WitnessOutcome::NotFound { .. } => panic!("expected a witness"),
    }
}

#[test]
fn certificates_survive_serialization_and_reject_tampering() {
    let g = s8();
    let cert = basesize::certify_base(&g, &[0, 1, 2, 3, 4, 5, 6], 0).unwrap();
    let text = cert.to_text(g.name(), g.degree());
    let back = basesize::BaseCertificate::parse_text(&text).unwrap();
    back.verify(&g, 9).unwrap();
    let mut bad = back.clone();
    // repeating a point makes the stored trace wrong from the second entry
    bad.points[0] = bad.points[1];
    assert!(bad.verify(&g, 9).is_err());
    let mut bad = back.clone();
    bad.stabilizer_order_trace[0] = num_bigint::BigUint::from(11u32);
    assert!(bad.verify(&g, 9).is_err());
}
