//! Chain invariants on a spread of groups: the order-orbit identity, sift
//! soundness against brute force, and coset action re-derivation.

use num_bigint::BigUint;
use num_traits::One;
use perm_core::{coset_action, GroupHandle, Permutation, RngState, StabilizerChain};

fn groups() -> Vec<(usize, &'static str, Vec<Permutation>)> {
    vec![
        (
            5,
            "S5",
            vec![
                Permutation::from_cycles(5, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
            ],
        ),
        (
            7,
            "F21",
            vec![
                Permutation::from_cycles(7, &[vec![0, 1, 2, 3, 4, 5, 6]]).unwrap(),
                Permutation::from_images(vec![0, 2, 4, 6, 1, 3, 5]).unwrap(),
            ],
        ),
        (
            8,
            "PGL2(7)",
            vec![
                Permutation::from_images(vec![1, 2, 3, 4, 5, 6, 0, 7]).unwrap(),
                Permutation::from_images(vec![3, 6, 2, 5, 1, 4, 0, 7]).unwrap(),
                Permutation::from_images(vec![7, 6, 3, 2, 5, 4, 1, 0]).unwrap(),
            ],
        ),
        (
            6,
            "A6",
            vec![
                Permutation::from_cycles(6, &[vec![0, 1, 2]]).unwrap(),
                Permutation::from_cycles(6, &[vec![1, 2, 3, 4, 5]]).unwrap(),
            ],
        ),
    ]
}

fn brute_force_elements(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(degree)];
    let mut head = 0;
    while head < out.len() {
        let e = out[head].clone();
        head += 1;
        for g in gens {
            let f = e.then(g);
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out
}

#[test]
fn order_equals_product_of_orbit_lengths() {
    for (degree, name, gens) in groups() {
        let chain = StabilizerChain::build(degree, &gens, 3).unwrap();
        let mut prod = BigUint::one();
        for level in chain.levels() {
            prod *= BigUint::from(level.orbit().len());
        }
        assert_eq!(&prod, chain.order(), "{name}");
        assert!(chain.verify_schreier_closure(), "{name}");
    }
}

#[test]
fn sift_soundness_against_brute_force() {
    let mut rng = RngState::from_seed(17);
    for (degree, name, gens) in groups() {
        let chain = StabilizerChain::build(degree, &gens, 5).unwrap();
        let elements = brute_force_elements(degree, &gens);
        assert_eq!(
            BigUint::from(elements.len()),
            chain.order().clone(),
            "{name}"
        );
        // 1000 random words in the generators are members
        for _ in 0..1000 {
            let mut w = Permutation::identity(degree);
            for _ in 0..8 {
                w = w.then(&gens[rng.below(gens.len() as u64) as usize]);
            }
            assert!(chain.contains(&w).unwrap(), "{name}");
        }
        // 1000 random permutations of the degree: membership decisions match
        // the brute-force element list
        for _ in 0..1000 {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in (1..degree).rev() {
                let j = rng.below(i as u64 + 1) as usize;
                images.swap(i, j);
            }
            let p = Permutation::from_images(images).unwrap();
            let truth = elements.contains(&p);
            assert_eq!(chain.contains(&p).unwrap(), truth, "{name}");
        }
    }
}

#[test]
fn coset_action_rederivation_gives_an_equivalent_action() {
    // re-deriving the coset action of the quotient on its own point-0
    // stabilizer yields a same-degree, same-order action
    let (degree, _, gens) = groups().swap_remove(0);
    let g = GroupHandle::new(degree, "S5", gens, 0).unwrap();
    let h = g.pointwise_stabilizer(&[0], 0).unwrap();
    let act = coset_action(&g, &h, 1_000_000, 0).unwrap();
    let q = &act.quotient_group;
    let stab0 = q.pointwise_stabilizer(&[0], 0).unwrap();
    let act2 = coset_action(q, &stab0, 1_000_000, 0).unwrap();
    assert_eq!(act2.quotient_group.degree(), q.degree());
    assert_eq!(act2.quotient_group.order(), q.order());
    assert_eq!(act.index, act2.index);
}

#[test]
fn group_files_round_trip_exactly() {
    for (degree, name, gens) in groups() {
        let g = GroupHandle::new(degree, name, gens, 0).unwrap();
        let text = g.to_file_string();
        let back = perm_core::load_group_str(&text, 1).unwrap();
        assert_eq!(back.to_file_string(), text);
        assert_eq!(back.order(), g.order());
    }
}
