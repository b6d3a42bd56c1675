//! The binary Golay code, built from the length-23 quadratic residue code
//! and certified by its weight distribution.

use std::collections::HashSet;

/// Codewords of the extended [24,12,8] Golay code as 24-bit masks
/// (bit i = coordinate i; coordinates 0..22 are residues mod 23, 23 is the
/// extension coordinate).
pub struct GolayCode {
    pub words: Vec<u32>,
    pub word_set: HashSet<u32>,
    pub octads: Vec<u32>,
}

const P: u32 = 23;

fn residues_mod_23() -> Vec<u32> {
    let mut set = HashSet::new();
    for x in 1..P {
        set.insert((x * x) % P);
    }
    let mut v: Vec<u32> = set.into_iter().collect();
    v.sort_unstable();
    v
}

fn rotate23(mask: u32, k: u32) -> u32 {
    let mut out = 0u32;
    for i in 0..P {
        if mask >> i & 1 == 1 {
            out |= 1 << ((i + k) % P);
        }
    }
    out
}

/// GF(2) row reduction; returns an independent basis.
fn gf2_basis(rows: &[u32]) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for &row in rows {
        let mut r = row;
        for &b in &basis {
            let pivot = 1u32 << (31 - b.leading_zeros());
            if r & pivot != 0 {
                r ^= b;
            }
        }
        if r != 0 {
            basis.push(r);
        }
    }
    basis
}

fn span(basis: &[u32]) -> Vec<u32> {
    let mut words = Vec::with_capacity(1 << basis.len());
    for mask in 0u32..(1 << basis.len()) {
        let mut w = 0u32;
        for (i, &b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w ^= b;
            }
        }
        words.push(w);
    }
    words
}

impl GolayCode {
    /// Builds the code and asserts the Golay weight distribution
    /// (759 octads, 2576 dodecads).
    pub fn build() -> GolayCode {
        let q = residues_mod_23();
        let theta_q: u32 = q.iter().map(|&r| 1u32 << r).sum();
        let all23: u32 = (1 << P) - 1;
        // candidate cyclic generators; the weight check below picks the right one
        let candidates = [theta_q, theta_q ^ all23 ^ 1, theta_q | 1];
        for cand in candidates {
            let shifts: Vec<u32> = (0..P).map(|k| rotate23(cand, k)).collect();
            let mut basis = gf2_basis(&shifts);
            if basis.len() == 11 {
                basis.push(all23);
            }
            if basis.len() != 12 {
                continue;
            }
            let extended: Vec<u32> = span(&basis)
                .into_iter()
                .map(|w| {
                    let parity = (w.count_ones() & 1) as u32;
                    w | (parity << 23)
                })
                .collect();
            let octads: Vec<u32> = extended.iter().copied().filter(|w| w.count_ones() == 8).collect();
            let dodecads = extended.iter().filter(|w| w.count_ones() == 12).count();
            if extended.len() == 4096 && octads.len() == 759 && dodecads == 2576 {
                let word_set = extended.iter().copied().collect();
                return GolayCode {
                    words: extended,
                    word_set,
                    octads,
                };
            }
        }
        panic!("quadratic residue construction failed to produce the Golay code");
    }

    /// Does the coordinate permutation (given by images) preserve the code?
    pub fn preserved_by(&self, images: &[u32; 24]) -> bool {
        // checking a spanning set suffices; take the octads to be thorough
        self.octads.iter().all(|&w| {
            let mut out = 0u32;
            for i in 0..24 {
                if w >> i & 1 == 1 {
                    out |= 1 << images[i];
                }
            }
            self.word_set.contains(&out)
        })
    }

    /// The unique octad containing the five given coordinates.
    pub fn octad_through(&self, points: &[u32; 5]) -> u32 {
        let mask: u32 = points.iter().map(|&p| 1u32 << p).sum();
        let mut found = None;
        for &o in &self.octads {
            if o & mask == mask {
                assert!(found.is_none(), "five points in two octads");
                found = Some(o);
            }
        }
        found.expect("five points lie in a unique octad")
    }
}
