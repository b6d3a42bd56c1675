//! Seed generators for the small-degree corpus and the named subgroup pairs.

use super::linear;
use perm_core::{Permutation, StabilizerChain};

pub fn cyclic(n: usize) -> Vec<Permutation> {
    vec![Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap()]
}

pub fn symmetric(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    vec![
        Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
        Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap(),
    ]
}

pub fn alternating(n: usize) -> Vec<Permutation> {
    if n < 3 {
        return Vec::new();
    }
    let three = Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap();
    let rest = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap()
    } else {
        Permutation::from_cycles(n, &[(1..n as u32).collect()]).unwrap()
    };
    vec![three, rest]
}

pub fn dihedral(n: usize) -> Vec<Permutation> {
    let mut refl: Vec<u32> = (0..n as u32).collect();
    for i in 0..n {
        refl[i] = ((n - i) % n) as u32;
    }
    vec![
        Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap(),
        Permutation::from_images(refl).unwrap(),
    ]
}

/// Frobenius group on F_p: x -> x+1 and x -> m*x.
pub fn affine_frobenius(p: u32, m: u32) -> Vec<Permutation> {
    let shift: Vec<u32> = (0..p).map(|x| (x + 1) % p).collect();
    let mul: Vec<u32> = (0..p).map(|x| m * x % p).collect();
    vec![
        Permutation::from_images(shift).unwrap(),
        Permutation::from_images(mul).unwrap(),
    ]
}

/// PGL2(p) or PSL2(p) on the projective line {0..p-1, infinity = p}.
/// `mul` should be a square mod p for PSL, a non-square for PGL.
pub fn projective_line_group(p: u32, mul: u32) -> Vec<Permutation> {
    let inf = p;
    let pow = |mut b: u64, mut e: u32| -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        acc
    };
    let shift: Vec<u32> = (0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect();
    let scale: Vec<u32> = (0..=p)
        .map(|x| if x == inf { inf } else { mul * x % p })
        .collect();
    let neg_inv: Vec<u32> = (0..=p)
        .map(|x| {
            if x == inf {
                0
            } else if x == 0 {
                inf
            } else {
                ((p as u64 - pow(x as u64, p - 2)) % p as u64) as u32
            }
        })
        .collect();
    vec![
        Permutation::from_images(shift).unwrap(),
        Permutation::from_images(scale).unwrap(),
        Permutation::from_images(neg_inv).unwrap(),
    ]
}

/// Action of a group on the k-subsets of its points (subsets ordered
/// lexicographically as sorted tuples).
pub fn action_on_subsets(gens: &[Permutation], k: usize) -> Vec<Permutation> {
    let n = gens[0].degree();
    let mut subsets: Vec<Vec<u32>> = Vec::new();
    let mut cur: Vec<u32> = (0..k as u32).collect();
    loop {
        subsets.push(cur.clone());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if cur[i] < (n - k + i) as u32 {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return gens
                    .iter()
                    .map(|g| {
                        let images: Vec<u32> = subsets
                            .iter()
                            .map(|s| {
                                let mut t: Vec<u32> = s.iter().map(|&p| g.apply(p)).collect();
                                t.sort_unstable();
                                subsets.iter().position(|x| *x == t).unwrap() as u32
                            })
                            .collect();
                        Permutation::from_images(images).unwrap()
                    })
                    .collect();
            }
        }
    }
}

/// Left-regular representation of a group of order <= 5040.
pub fn regular_representation(gens: &[Permutation], seed: u64) -> Vec<Permutation> {
    let degree = gens[0].degree();
    let chain = StabilizerChain::build(degree, gens, seed).unwrap();
    let order: usize = chain.order().to_string().parse().unwrap();
    assert!(order <= 5040);
    // enumerate elements by closure
    let mut elements = vec![Permutation::identity(degree)];
    let mut head = 0;
    while head < elements.len() {
        let e = elements[head].clone();
        head += 1;
        for g in gens {
            let f = e.then(g);
            if !elements.contains(&f) {
                elements.push(f);
            }
        }
    }
    assert_eq!(elements.len(), order);
    elements.sort();
    gens.iter()
        .map(|g| {
            let images: Vec<u32> = elements
                .iter()
                .map(|e| {
                    let f = g.then(e);
                    elements.iter().position(|x| *x == f).unwrap() as u32
                })
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

/// Affine group AGL1(8) = 2^3:7 on F_8, optionally extended by Frobenius.
pub fn agl1_8(with_frobenius: bool) -> Vec<Permutation> {
    // F_8 = F_2[t]/(t^3 + t + 1), elements as bit vectors 0..7
    let mul_t = |x: u32| -> u32 {
        let y = x << 1;
        if y & 8 != 0 {
            (y ^ 0b1011) & 7
        } else {
            y
        }
    };
    let add1: Vec<u32> = (0..8).map(|x| x ^ 1).collect();
    let scale: Vec<u32> = (0..8).map(mul_t).collect();
    let mut gens = vec![
        Permutation::from_images(add1).unwrap(),
        Permutation::from_images(scale).unwrap(),
    ];
    if with_frobenius {
        let mut sq = [0u32; 8];
        for (x, s) in sq.iter_mut().enumerate() {
            // square by polynomial multiplication, reduced by t^3 = t + 1
            let x = x as u32;
            let mut prod = 0u32;
            for i in 0..3 {
                for j in 0..3 {
                    if x >> i & 1 == 1 && x >> j & 1 == 1 {
                        prod ^= 1 << (i + j);
                    }
                }
            }
            for bit in (3..5).rev() {
                if prod >> bit & 1 == 1 {
                    prod ^= 0b1011 << (bit - 3);
                }
            }
            *s = prod & 7;
        }
        gens.push(Permutation::from_images(sq.to_vec()).unwrap());
    }
    gens
}

/// AGL3(2) = 2^3:L3(2) on the 8 points of affine F_2^3.
pub fn agl3_2() -> Vec<Permutation> {
    let mats = linear::sl_generators(3, 2);
    let mut gens = Vec::new();
    for m in &mats {
        let images: Vec<u32> = (0..8u32)
            .map(|x| {
                let v = [x & 1, x >> 1 & 1, x >> 2 & 1];
                let w = m.apply(&v);
                w[0] | w[1] << 1 | w[2] << 2
            })
            .collect();
        gens.push(Permutation::from_images(images).unwrap());
    }
    gens.push(Permutation::from_images((0..8u32).map(|x| x ^ 1).collect()).unwrap());
    gens
}

/// Quaternion group in its regular representation on 8 points.
pub fn quaternion_8() -> Vec<Permutation> {
    vec![
        Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap(),
        Permutation::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 7, 3, 5]]).unwrap(),
    ]
}

/// S4 x S2-shaped wreath product S4 wr S2 inside S8: the stabilizer of the
/// partition {{0..3}, {4..7}}.
pub fn s4_wr_s2() -> Vec<Permutation> {
    vec![
        Permutation::from_cycles(8, &[vec![0, 1]]).unwrap(),
        Permutation::from_cycles(8, &[vec![0, 1, 2, 3]]).unwrap(),
        Permutation::from_cycles(8, &[vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]).unwrap(),
    ]
}

/// PGL2(5) inside S6, acting on the projective line {0..4, 5 = infinity}.
pub fn pgl25_in_s6() -> Vec<Permutation> {
    projective_line_group(5, 2)
}
