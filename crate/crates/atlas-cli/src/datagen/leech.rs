//! Co3 acting 2-transitively on 276 points, built inside the Leech lattice.
//!
//! Fix the type-3 vector v = (5, 1^23). Its stabilizer in Aut(Lambda) is Co3,
//! and the 276 unordered pairs {w, v-w} of type-2 vectors summing to v carry
//! the 2-transitive degree-276 action with point stabilizer McL.2.
//!
//! The permutations of the 24 coordinates fixing coordinate 0 that preserve
//! the Golay code form an M23 inside the stabilizer; one further stabilizing
//! element is found by a birthday search over random words in Aut(Lambda)
//! generators, and M23-maximality in Co3 makes the pair generate the whole
//! group. The chain order check at the end certifies the construction.

use super::golay::GolayCode;
use perm_core::{Permutation, RngState, StabilizerChain};
use std::collections::HashMap;

pub const CO3_ORDER: u64 = 495_766_656_000;
pub const MCL2_ORDER: u64 = 1_796_256_000;

type Vec24 = [i32; 24];

/// Leech lattice membership (coordinates scaled by sqrt 8).
fn in_leech(code: &GolayCode, x: &Vec24) -> bool {
    let parity = x[0] & 1;
    if x.iter().any(|&c| (c & 1) != parity) {
        return false;
    }
    let sum: i32 = x.iter().sum();
    let want = if parity == 0 { 0 } else { 4 };
    if sum.rem_euclid(8) != want {
        return false;
    }
    let target = if parity == 0 { 2 } else { 3 };
    let mut mask = 0u32;
    for (i, &c) in x.iter().enumerate() {
        if c.rem_euclid(4) == target {
            mask |= 1 << i;
        }
    }
    code.word_set.contains(&mask)
}

fn norm(x: &Vec24) -> i64 {
    x.iter().map(|&c| (c as i64) * (c as i64)).sum()
}

/// All 196560 type-2 vectors, by shape.
fn type2_vectors(code: &GolayCode) -> Vec<Vec24> {
    let mut out = Vec::with_capacity(196_560);
    // (+-4, +-4, 0^22)
    for i in 0..24 {
        for j in (i + 1)..24 {
            for si in [4i32, -4] {
                for sj in [4i32, -4] {
                    let mut x = [0i32; 24];
                    x[i] = si;
                    x[j] = sj;
                    out.push(x);
                }
            }
        }
    }
    // (+-2)^8 on an octad, evenly many minus signs
    for &oct in &code.octads {
        let coords: Vec<usize> = (0..24).filter(|&i| oct >> i & 1 == 1).collect();
        for signs in 0u32..256 {
            if signs.count_ones() % 2 != 0 {
                continue;
            }
            let mut x = [0i32; 24];
            for (k, &c) in coords.iter().enumerate() {
                x[c] = if signs >> k & 1 == 1 { -2 } else { 2 };
            }
            out.push(x);
        }
    }
    // (+-1)^23 with a single +-3, signs -1 exactly on a Golay word
    for &w in &code.words {
        for j in 0..24 {
            let mut x = [0i32; 24];
            for (i, xi) in x.iter_mut().enumerate() {
                *xi = if w >> i & 1 == 1 { -1 } else { 1 };
            }
            x[j] = if w >> j & 1 == 1 { 3 } else { -3 };
            out.push(x);
        }
    }
    assert_eq!(out.len(), 196_560);
    debug_assert!(out.iter().all(|x| norm(x) == 32 && in_leech(code, x)));
    out
}

/// An operation on lattice vectors: a coordinate permutation, a sign change
/// on a Golay word, or the tetrad map of a fixed sextet (subtract half the
/// tetrad sum on each tetrad, then flip the signs of the first tetrad).
#[derive(Clone)]
enum Op {
    Perm(Vec<u32>),
    Sign(u32),
    Tetrad { sextet: [[usize; 4]; 6], flip_first: bool, flip_before: bool },
}

impl Op {
    fn apply(&self, x: &Vec24) -> Vec24 {
        match self {
            Op::Perm(images) => {
                let mut y = [0i32; 24];
                for i in 0..24 {
                    y[images[i] as usize] = x[i];
                }
                y
            }
            Op::Sign(mask) => {
                let mut y = *x;
                for (i, yi) in y.iter_mut().enumerate() {
                    if mask >> i & 1 == 1 {
                        *yi = -*yi;
                    }
                }
                y
            }
            Op::Tetrad { sextet, flip_first, flip_before } => {
                let mut y = *x;
                if *flip_before && *flip_first {
                    for &c in &sextet[0] {
                        y[c] = -y[c];
                    }
                }
                let mut z = y;
                for tetrad in sextet {
                    let s: i32 = tetrad.iter().map(|&c| y[c]).sum();
                    assert!(s % 2 == 0, "tetrad sum must be even on lattice vectors");
                    for &c in tetrad {
                        z[c] = y[c] - s / 2;
                    }
                }
                if !*flip_before && *flip_first {
                    for &c in &sextet[0] {
                        z[c] = -z[c];
                    }
                }
                z
            }
        }
    }

    fn inverse(&self) -> Op {
        match self {
            Op::Perm(images) => {
                let mut inv = vec![0u32; 24];
                for (i, &p) in images.iter().enumerate() {
                    inv[p as usize] = i as u32;
                }
                Op::Perm(inv)
            }
            Op::Sign(mask) => Op::Sign(*mask),
            Op::Tetrad { sextet, flip_first, flip_before } => Op::Tetrad {
                sextet: *sextet,
                flip_first: *flip_first,
                flip_before: !*flip_before,
            },
        }
    }
}

fn apply_word(ops: &[Op], word: &[usize], x: &Vec24) -> Vec24 {
    let mut cur = *x;
    for &k in word {
        cur = ops[k].apply(&cur);
    }
    cur
}

/// The sextet refining the tetrad formed by the first four points of the
/// first octad.
fn standard_sextet(code: &GolayCode) -> [[usize; 4]; 6] {
    let oct = code.octads[0];
    let pts: Vec<u32> = (0..24).filter(|&i| oct >> i & 1 == 1).collect();
    let t1 = [pts[0], pts[1], pts[2], pts[3]];
    let mut sextet: Vec<[usize; 4]> = vec![[t1[0] as usize, t1[1] as usize, t1[2] as usize, t1[3] as usize]];
    let mut assigned = 0u32;
    for &p in &t1 {
        assigned |= 1 << p;
    }
    for p in 0..24u32 {
        if assigned >> p & 1 == 1 {
            continue;
        }
        let oct = code.octad_through(&[t1[0], t1[1], t1[2], t1[3], p]);
        let tetrad: Vec<usize> = (0..24)
            .filter(|&i| oct >> i & 1 == 1 && !t1.contains(&(i as u32)))
            .collect();
        assert_eq!(tetrad.len(), 4);
        for &c in &tetrad {
            assigned |= 1 << c;
        }
        sextet.push([tetrad[0], tetrad[1], tetrad[2], tetrad[3]]);
    }
    assert_eq!(sextet.len(), 6);
    sextet.try_into().unwrap()
}

/// Generators of a group of Leech lattice automorphisms large enough to
/// realize Co3 = Stab(v): the Golay-preserving coordinate permutations and
/// sign changes, plus the tetrad map. Each candidate tetrad-map variant is
/// validated on all type-2 vectors before being accepted.
fn aut_lambda_ops(code: &GolayCode, m24: &[Permutation], type2: &[Vec24]) -> Vec<Op> {
    let mut ops: Vec<Op> = Vec::new();
    for g in m24 {
        ops.push(Op::Perm(g.images().to_vec()));
        ops.push(Op::Perm(g.images().to_vec()).inverse());
    }
    ops.push(Op::Sign(code.octads[0]));
    ops.push(Op::Sign(code.octads[1]));
    let sextet = standard_sextet(code);
    let mut tetrad_op = None;
    for flip_first in [true, false] {
        for flip_before in [false, true] {
            let cand = Op::Tetrad { sextet, flip_first, flip_before };
            if type2.iter().all(|x| {
                let y = cand.apply(x);
                norm(&y) == 32 && in_leech(code, &y)
            }) {
                tetrad_op = Some(cand);
                break;
            }
        }
        if tetrad_op.is_some() {
            break;
        }
    }
    let t = tetrad_op.expect("no tetrad map variant preserves the lattice");
    ops.push(t.inverse());
    ops.push(t);
    ops
}

/// The 276 pairs {w, v-w}, keyed by both members.
struct PairSpace {
    reps: Vec<Vec24>,
    index: HashMap<Vec24, usize>,
}

fn pair_space(code: &GolayCode, v: &Vec24) -> PairSpace {
    let mut reps = Vec::new();
    let mut index = HashMap::new();
    for w in type2_vectors(code) {
        let mut rest = [0i32; 24];
        for i in 0..24 {
            rest[i] = v[i] - w[i];
        }
        if norm(&rest) != 32 {
            continue;
        }
        debug_assert!(in_leech(code, &rest));
        if index.contains_key(&w) {
            continue;
        }
        let id = reps.len();
        reps.push(w.min(rest));
        index.insert(w, id);
        index.insert(rest, id);
    }
    assert_eq!(reps.len(), 276, "expected 276 type-2 summand pairs");
    PairSpace { reps, index }
}

/// Converts a word fixing v into its permutation of the 276 pairs.
fn word_to_pair_perm(ops: &[Op], word: &[usize], space: &PairSpace) -> Permutation {
    let images: Vec<u32> = space
        .reps
        .iter()
        .map(|w| {
            let y = apply_word(ops, word, w);
            space.index[&y] as u32
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

pub struct Co3Data {
    pub generators: Vec<Permutation>,
}

/// Builds Co3 on 276 points. `m24` must be Golay-preserving generators of
/// M24 in the coordinate action.
pub fn co3_on_276(code: &GolayCode, m24: &[Permutation], seed: u64) -> Co3Data {
    let v: Vec24 = {
        let mut v = [1i32; 24];
        v[0] = 5;
        v
    };
    assert!(in_leech(code, &v) && norm(&v) == 48);
    let space = pair_space(code, &v);
    let type2 = type2_vectors(code);
    let ops = aut_lambda_ops(code, m24, &type2);

    // M23: coordinate permutations fixing coordinate 0
    let m23_coord = super::mathieu::stabilizer_generators(24, m24, &[0], seed);
    let m23_chain = StabilizerChain::build_with_base_hint(24, m24, &[0], seed).unwrap();
    assert_eq!(m23_chain.level_order(1).to_string(), "10200960");
    let m23_pair_gens: Vec<Permutation> = m23_coord
        .iter()
        .map(|g| {
            let word_ops = [Op::Perm(g.images().to_vec())];
            let images: Vec<u32> = space
                .reps
                .iter()
                .map(|w| space.index[&word_ops[0].apply(w)] as u32)
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();
    let m23_on_pairs = StabilizerChain::build(276, &m23_pair_gens, seed).unwrap();
    assert_eq!(m23_on_pairs.order().to_string(), "10200960");

    // birthday search for one further element of Stab(v)
    let mut rng = RngState::from_seed(seed ^ 0xC03C03);
    let mut seen: HashMap<Vec24, Vec<usize>> = HashMap::new();
    let mut extra: Option<Permutation> = None;
    'search: for _ in 0..200_000 {
        let len = 16 + rng.below(16) as usize;
        let word: Vec<usize> = (0..len).map(|_| rng.below(ops.len() as u64) as usize).collect();
        let image = apply_word(&ops, &word, &v);
        if let Some(prev) = seen.get(&image) {
            // h = word then prev^-1 fixes v
            let mut h_word = word.clone();
            let inv_ops: Vec<Op> = ops.iter().map(Op::inverse).collect();
            let mut full_ops = ops.clone();
            let base = full_ops.len();
            full_ops.extend(inv_ops);
            for &k in prev.iter().rev() {
                h_word.push(base + k);
            }
            debug_assert_eq!(apply_word(&full_ops, &h_word, &v), v);
            let h = word_to_pair_perm(&full_ops, &h_word, &space);
            if !m23_on_pairs.contains(&h).unwrap() {
                extra = Some(h);
                break 'search;
            }
        } else {
            seen.insert(image, word);
        }
    }
    let extra = extra.expect("birthday search failed to find a stabilizing element");

    let mut generators = m23_pair_gens;
    generators.push(extra);
    let chain = StabilizerChain::build(276, &generators, seed).unwrap();
    assert_eq!(chain.order().to_string(), CO3_ORDER.to_string());
    Co3Data { generators }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leech_membership_basics() {
        let code = GolayCode::build();
        let mut x = [0i32; 24];
        x[0] = 4;
        x[1] = 4;
        assert!(in_leech(&code, &x));
        x[1] = 2;
        assert!(!in_leech(&code, &x));
        let mut odd = [1i32; 24];
        odd[0] = -3;
        assert!(in_leech(&code, &odd));
        assert!(!in_leech(&code, &[1i32; 24]));
    }

    #[test]
    fn type2_count() {
        let code = GolayCode::build();
        assert_eq!(type2_vectors(&code).len(), 196_560);
    }
}
