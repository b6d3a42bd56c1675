//! Mathieu group generators on 24, 23, 22, 12 and 11 points.
//!
//! M24 is generated by Mobius maps over PG(1,23) together with the cubing
//! map, all verified to preserve the Golay code, with the group order
//! certified by a stabilizer chain. M23 and M22 are point stabilizers;
//! M12 and M11 come from the classical transitive-extension generators.

use super::golay::GolayCode;
use perm_core::{Permutation, StabilizerChain};

const P: u32 = 23;
const INF: u32 = 23; // index of the point at infinity

fn inv_mod23(x: u32) -> u32 {
    // 23 is prime; x^21 = x^-1
    let mut acc = 1u64;
    let mut b = x as u64;
    let mut e = 21;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % 23;
        }
        b = b * b % 23;
        e >>= 1;
    }
    acc as u32
}

fn is_residue(x: u32) -> bool {
    (1..P).any(|y| y * y % P == x)
}

fn map_to_perm(f: impl Fn(u32) -> u32) -> Permutation {
    let images: Vec<u32> = (0..24).map(f).collect();
    Permutation::from_images(images).expect("map is not a bijection")
}

/// M24 acting on {0..22} = F_23 and 23 = infinity.
pub fn m24_generators(code: &GolayCode) -> Vec<Permutation> {
    let alpha = map_to_perm(|x| if x == INF { INF } else { (x + 1) % P });
    let beta = map_to_perm(|x| if x == INF { INF } else { 2 * x % P });
    let gamma = map_to_perm(|x| match x {
        0 => INF,
        INF => 0,
        _ => (P - inv_mod23(x)) % P,
    });
    // the cubing map: x -> x^3/9 on residues, x -> 9x^3 on non-residues
    let mut delta = None;
    'scale: for c in 1..P {
        if !is_residue(c) {
            continue;
        }
        let f = |x: u32| -> u32 {
            if x == 0 || x == INF {
                return x;
            }
            let x3 = (x * x % P) * x % P;
            if is_residue(x) {
                x3 * inv_mod23(c) % P
            } else {
                c * x3 % P
            }
        };
        let images: Vec<u32> = (0..24).map(f).collect();
        if let Ok(p) = Permutation::from_images(images) {
            let mut imgs = [0u32; 24];
            imgs.copy_from_slice(p.images());
            if code.preserved_by(&imgs) {
                delta = Some(p);
                break 'scale;
            }
        }
    }
    let delta = delta.expect("no cubing map preserves the Golay code");

    let gens = vec![alpha, beta, gamma, delta];
    for g in &gens {
        let mut imgs = [0u32; 24];
        imgs.copy_from_slice(g.images());
        assert!(code.preserved_by(&imgs), "generator does not preserve the code");
    }
    gens
}

pub const M24_ORDER: u64 = 244_823_040;
pub const M23_ORDER: u64 = 10_200_960;
pub const M22_ORDER: u64 = 443_520;
pub const M12_ORDER: u64 = 95_040;
pub const M11_ORDER: u64 = 7_920;

/// Restricts permutations fixing the last `drop` points of their domain to
/// the leading points.
pub fn restrict(perms: &[Permutation], new_degree: usize) -> Vec<Permutation> {
    perms
        .iter()
        .map(|g| {
            for p in new_degree..g.degree() {
                assert_eq!(g.apply(p as u32), p as u32, "point {p} is not fixed");
            }
            Permutation::from_images(g.images()[..new_degree].to_vec()).unwrap()
        })
        .collect()
}

/// Generators of the stabilizer in `gens` of the points `fixed`, via a chain
/// with prescribed base prefix.
pub fn stabilizer_generators(
    degree: usize,
    gens: &[Permutation],
    fixed: &[u32],
    seed: u64,
) -> Vec<Permutation> {
    let chain = StabilizerChain::build_with_base_hint(degree, gens, fixed, seed).unwrap();
    chain.level_generators(fixed.len())
}

/// Classical M12 generators on 12 points (M11 is the first two).
pub fn m12_generators() -> Vec<Permutation> {
    let a = Permutation::from_cycles(12, &[(0..11).collect()]).unwrap();
    let b = Permutation::from_cycles(12, &[vec![2, 6, 10, 7], vec![3, 9, 4, 5]]).unwrap();
    let c = Permutation::from_cycles(
        12,
        &[
            vec![0, 11],
            vec![1, 10],
            vec![2, 5],
            vec![3, 7],
            vec![4, 8],
            vec![6, 9],
        ],
    )
    .unwrap();
    vec![a, b, c]
}

pub fn m11_generators() -> Vec<Permutation> {
    let g12 = m12_generators();
    restrict(&g12[..2], 11)
}
